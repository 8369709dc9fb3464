//! Verdicts with witnesses: semidirect-structure reports, quotients,
//! central-extension certificates, explicit basis-map equality, and
//! fingerprint comparison. Reports are certificates: every true claim
//! carries the data to re-check it, every false claim a counterexample.

use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{IdentityCheck, NLieAlgebra, Splitting};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rational::{format_rational, Rational};
use crate::subspace::Subspace;
use crate::tensor::{sorted_subsets, AntisymTensor};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Claim {
    pub name: String,
    pub verdict: bool,
    pub witness: Value,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StructureReport {
    pub subject: String,
    pub claims: Vec<Claim>,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.verdict)
    }

    pub fn claim(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &str, verdict: bool, witness: Value) {
        self.claims.push(Claim {
            name: name.to_string(),
            verdict,
            witness,
        });
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "report: {}", self.subject)?;
        let width = self.claims.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.claims {
            writeln!(
                f,
                "  {:width$}  {}  {}",
                c.name,
                if c.verdict { "true " } else { "false" },
                c.witness
            )?;
        }
        Ok(())
    }
}

fn subspace_witness(s: &Subspace) -> Value {
    let basis: Vec<Vec<String>> = s
        .basis()
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect();
    json!({ "ambient_dim": s.ambient_dim(), "basis": basis })
}

fn vector_witness(v: &[Rational]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| Value::String(format_rational(x)))
            .collect(),
    )
}

/// Semidirect-structure check for a splitting of a Filippov algebra:
/// i0 spans a subalgebra, i1 an ideal, and every bracket with two or more
/// i1 arguments vanishes (so the ideal is abelian in the FA sense).
pub fn semidirect_report_fa(alg: &NLieAlgebra, s: &Splitting) -> StructureReport {
    assert_eq!(s.dim(), alg.dim());
    let mut report = StructureReport {
        subject: format!(
            "semidirect structure for i0 = {:?}, i1 = {:?}",
            s.i0(),
            s.i1()
        ),
        claims: Vec::new(),
    };

    let sub_counterexample = sorted_subsets(s.i0(), alg.arity()).into_iter().find_map(|t| {
        s.i1()
            .iter()
            .find(|&&u| !alg.structure_constant(&t, u).is_zero())
            .map(|&u| (t, u))
    });
    match sub_counterexample {
        None => report.push("i0-subalgebra", true, json!({ "i0": s.i0() })),
        Some((t, u)) => report.push(
            "i0-subalgebra",
            false,
            json!({ "bracket": t, "escapes_to": u }),
        ),
    }

    let ideal_counterexample = alg.tensor().entries().find_map(|(lower, upper, _)| {
        let touches = lower.iter().any(|&l| s.in_i1(l));
        (touches && !s.in_i1(upper)).then(|| (lower.to_vec(), upper))
    });
    match ideal_counterexample {
        None => report.push("i1-ideal", true, json!({ "i1": s.i1() })),
        Some((lower, upper)) => report.push(
            "i1-ideal",
            false,
            json!({ "bracket": lower, "escapes_to": upper }),
        ),
    }

    let abelian_counterexample = alg.tensor().entries().find_map(|(lower, upper, _)| {
        let count = lower.iter().filter(|&&l| s.in_i1(l)).count();
        (count >= 2).then(|| (lower.to_vec(), upper))
    });
    match abelian_counterexample {
        None => report.push("i1-abelian", true, json!({ "i1": s.i1() })),
        Some((lower, upper)) => report.push(
            "i1-abelian",
            false,
            json!({ "bracket": lower, "target": upper }),
        ),
    }

    let all = report.all_hold();
    report.push("semidirect", all, json!({}));
    report
}

/// Quotient by a verified ideal, on the lexicographic coordinate complement
/// of the ideal's pivot columns. Brackets are computed on the complement
/// representatives and reduced modulo the ideal.
pub fn quotient_lie(lie: &LieAlgebra, ideal: &Subspace) -> Result<LieAlgebra> {
    if ideal.ambient_dim() != lie.dim() {
        return Err(Error::DimensionMismatch {
            expected: lie.dim(),
            got: ideal.ambient_dim(),
        });
    }
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); lie.dim()];
        v[i] = num::One::one();
        v
    };
    for j in 0..lie.dim() {
        for v in ideal.basis() {
            if !ideal.contains(&lie.bracket_vec(&unit(j), v)) {
                return Err(Error::NotAnIdeal);
            }
        }
    }
    let complement: Vec<usize> = (0..lie.dim())
        .filter(|i| ideal.pivots().binary_search(i).is_err())
        .collect();
    let q_dim = complement.len();
    let mut c = AntisymTensor::new(2, q_dim);
    for a in 0..q_dim {
        for b in a + 1..q_dim {
            let w = lie.bracket_vec(&unit(complement[a]), &unit(complement[b]));
            let reduced = ideal.reduce(&w);
            for (k, &coord) in complement.iter().enumerate() {
                if !reduced[coord].is_zero() {
                    c.insert(&[a + 1, b + 1], k + 1, reduced[coord].clone())?;
                }
            }
        }
    }
    let out = LieAlgebra::from_tensor(c, IdentityCheck::Unverified);
    out.verified().map_err(|_| {
        Error::InvalidInput(
            "quotient constants violate the Jacobi identity; the input was not a Lie algebra"
                .to_string(),
        )
    })
}

/// True when `s` lies inside the center of `lie`.
pub fn is_central_subspace(lie: &LieAlgebra, s: &Subspace) -> bool {
    s.ambient_dim() == lie.dim() && lie.center().contains_subspace(s)
}

/// Outcome of an explicit structure-constant comparison under a basis map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatchResult {
    pub matches: bool,
    /// First failing basis pair (1-based) with the two images.
    pub first_mismatch: Option<(usize, usize, Vec<Rational>, Vec<Rational>)>,
}

/// Checks that the linear map with matrix `basis_map` (columns = images of
/// a's basis in b's coordinates) carries a's brackets onto b's exactly.
pub fn match_structure_constants(
    a: &LieAlgebra,
    b: &LieAlgebra,
    basis_map: &Matrix,
) -> Result<MatchResult> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    if basis_map.rows() != b.dim() || basis_map.cols() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            got: basis_map.rows().max(basis_map.cols()),
        });
    }
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); a.dim()];
        v[i] = num::One::one();
        v
    };
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            let mapped_bracket = basis_map.mul_vec(&a.bracket_vec(&unit(i), &unit(j)))?;
            let bracket_of_mapped = b.bracket_vec(&basis_map.column(i), &basis_map.column(j));
            if mapped_bracket != bracket_of_mapped {
                return Ok(MatchResult {
                    matches: false,
                    first_mismatch: Some((i + 1, j + 1, mapped_bracket, bracket_of_mapped)),
                });
            }
        }
    }
    Ok(MatchResult {
        matches: true,
        first_mismatch: None,
    })
}

/// Certifies that `big` is a central extension of `target` by `ideal`: the
/// ideal must be central, and `basis_map` must carry the quotient onto the
/// target exactly.
pub fn certify_central_extension(
    big: &LieAlgebra,
    ideal: &Subspace,
    target: &LieAlgebra,
    basis_map: &Matrix,
) -> Result<StructureReport> {
    let mut report = StructureReport {
        subject: format!(
            "central extension: dim {} over dim {} by ideal of dim {}",
            big.dim(),
            target.dim(),
            ideal.dim()
        ),
        claims: Vec::new(),
    };
    let central = is_central_subspace(big, ideal);
    report.push("ideal-central", central, subspace_witness(ideal));
    if !central {
        report.push("central-extension-certified", false, json!({}));
        return Ok(report);
    }

    let quotient = quotient_lie(big, ideal)?;
    let dim_ok = quotient.dim() == target.dim();
    report.push(
        "quotient-dim-matches",
        dim_ok,
        json!({ "quotient_dim": quotient.dim(), "target_dim": target.dim() }),
    );
    if !dim_ok {
        report.push("central-extension-certified", false, json!({}));
        return Ok(report);
    }
    if basis_map.rows() != target.dim() || basis_map.cols() != quotient.dim() {
        return Err(Error::DimensionMismatch {
            expected: target.dim(),
            got: basis_map.rows().max(basis_map.cols()),
        });
    }

    let invertible = basis_map.inverse().is_ok();
    report.push("basis-map-invertible", invertible, json!({}));

    let matched = match_structure_constants(&quotient, target, basis_map)?;
    match matched.first_mismatch {
        None => report.push("structure-constants-match", matched.matches, json!({})),
        Some((i, j, expected, got)) => report.push(
            "structure-constants-match",
            false,
            json!({
                "pair": [i, j],
                "mapped_bracket": vector_witness(&expected),
                "bracket_of_images": vector_witness(&got),
            }),
        ),
    }

    let all = report.all_hold();
    report.push("central-extension-certified", all, json!({}));
    Ok(report)
}

/// Side-by-side fingerprints; distinct fingerprints certify non-isomorphism,
/// equal ones decide nothing.
pub fn compare_report(a: &LieAlgebra, b: &LieAlgebra) -> StructureReport {
    let fa = a.fingerprint();
    let fb = b.fingerprint();
    let equal = fa == fb;
    let mut report = StructureReport {
        subject: if equal {
            "fingerprint-equal (isomorphism not decided)".to_string()
        } else {
            "fingerprint-distinct (not isomorphic)".to_string()
        },
        claims: Vec::new(),
    };
    report.push(
        "fingerprints-equal",
        equal,
        json!({
            "left": serde_json::to_value(&fa).expect("serializable"),
            "right": serde_json::to_value(&fb).expect("serializable"),
        }),
    );
    report
}
