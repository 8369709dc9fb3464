//! JSON exchange formats. Output is canonical: sorted lower tuples, reduced
//! fractions, entries in lexicographic order, fields in fixed order, UTF-8
//! with a trailing newline. Canonical files round-trip byte for byte.

use serde::{Deserialize, Serialize};

use crate::algebra::{NLieAlgebra, Splitting};
use crate::error::{Error, Result};
use crate::induced::InducedLie;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::subspace::Subspace;

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct EntryFile {
    pub lower: Vec<usize>,
    pub upper: usize,
    pub value: String,
}

/// The algebra file: { "arity": n, "dim": d, "entries": [...] }. Lower
/// tuples need not be sorted on input; they are canonicalized with their
/// permutation sign on load. Lie algebras use the same format with arity 2.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct AlgebraFile {
    pub arity: usize,
    pub dim: usize,
    pub entries: Vec<EntryFile>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct SubspaceFile {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct SplittingFile {
    pub i0: Vec<usize>,
    pub i1: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct InducedFile {
    pub lie: AlgebraFile,
    pub source_arity: usize,
    pub source_dim: usize,
    pub basis_words: Vec<Vec<usize>>,
    pub ad_map: Vec<Vec<String>>,
    pub kernel: SubspaceFile,
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn algebra_to_file(alg: &NLieAlgebra) -> AlgebraFile {
    AlgebraFile {
        arity: alg.arity(),
        dim: alg.dim(),
        entries: alg
            .tensor()
            .entries()
            .map(|(lower, upper, value)| EntryFile {
                lower: lower.to_vec(),
                upper,
                value: format_rational(value),
            })
            .collect(),
    }
}

pub fn algebra_from_file(file: &AlgebraFile) -> Result<NLieAlgebra> {
    let entries: Result<Vec<(Vec<usize>, usize, Rational)>> = file
        .entries
        .iter()
        .map(|e| Ok((e.lower.clone(), e.upper, parse_rational(&e.value)?)))
        .collect();
    NLieAlgebra::new_unchecked(file.arity, file.dim, entries?)
}

pub fn algebra_to_json(alg: &NLieAlgebra) -> String {
    to_pretty_json(&algebra_to_file(alg))
}

pub fn algebra_from_json(s: &str) -> Result<NLieAlgebra> {
    algebra_from_file(&serde_json::from_str(s)?)
}

pub fn lie_to_json(lie: &LieAlgebra) -> String {
    algebra_to_json(&lie.to_filippov())
}

pub fn lie_from_json(s: &str) -> Result<LieAlgebra> {
    LieAlgebra::from_filippov(&algebra_from_json(s)?)
}

pub fn subspace_to_file(s: &Subspace) -> SubspaceFile {
    SubspaceFile {
        ambient_dim: s.ambient_dim(),
        basis: s
            .basis()
            .iter()
            .map(|row| row.iter().map(format_rational).collect())
            .collect(),
    }
}

pub fn subspace_from_file(file: &SubspaceFile) -> Result<Subspace> {
    let mut vectors = Vec::with_capacity(file.basis.len());
    for row in &file.basis {
        if row.len() != file.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: file.ambient_dim,
                got: row.len(),
            });
        }
        let v: Result<Vec<Rational>> = row.iter().map(|x| parse_rational(x)).collect();
        vectors.push(v?);
    }
    Ok(Subspace::from_vectors(file.ambient_dim, vectors))
}

pub fn splitting_to_file(s: &Splitting) -> SplittingFile {
    SplittingFile {
        i0: s.i0().to_vec(),
        i1: s.i1().to_vec(),
    }
}

pub fn splitting_from_file(dim: usize, file: &SplittingFile) -> Result<Splitting> {
    Splitting::from_parts(dim, file.i0.clone(), file.i1.clone())
}

pub fn matrix_to_file(m: &Matrix) -> MatrixFile {
    MatrixFile {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|r| m.row(r).iter().map(format_rational).collect())
            .collect(),
    }
}

pub fn matrix_from_file(file: &MatrixFile) -> Result<Matrix> {
    if file.entries.len() != file.rows {
        return Err(Error::DimensionMismatch {
            expected: file.rows,
            got: file.entries.len(),
        });
    }
    let mut rows = Vec::with_capacity(file.rows);
    for row in &file.entries {
        if row.len() != file.cols {
            return Err(Error::DimensionMismatch {
                expected: file.cols,
                got: row.len(),
            });
        }
        let parsed: Result<Vec<Rational>> = row.iter().map(|x| parse_rational(x)).collect();
        rows.push(parsed?);
    }
    Matrix::from_rows(rows)
}

pub fn matrix_from_json(s: &str) -> Result<Matrix> {
    matrix_from_file(&serde_json::from_str(s)?)
}

pub fn induced_to_file(il: &InducedLie) -> InducedFile {
    InducedFile {
        lie: algebra_to_file(&il.lie.to_filippov()),
        source_arity: il.source_arity,
        source_dim: il.source_dim,
        basis_words: il.basis_words.clone(),
        ad_map: il
            .ad_map
            .iter()
            .map(|row| row.iter().map(format_rational).collect())
            .collect(),
        kernel: subspace_to_file(&il.kernel),
    }
}

pub fn induced_from_file(file: &InducedFile) -> Result<InducedLie> {
    if file.lie.arity != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: file.lie.arity,
        });
    }
    if file.source_arity < 2 {
        return Err(Error::InvalidInput(
            "source arity must be at least 2".to_string(),
        ));
    }
    let lie = LieAlgebra::from_filippov(&algebra_from_file(&file.lie)?)?;

    // the bookkeeping must be internally consistent with the wedge space
    let words = crate::tensor::index_tuples(file.source_dim, file.source_arity - 1);
    if file.basis_words.len() != lie.dim() {
        return Err(Error::DimensionMismatch {
            expected: lie.dim(),
            got: file.basis_words.len(),
        });
    }
    for word in &file.basis_words {
        if !words.contains(word) {
            return Err(Error::InvalidInput(format!(
                "{word:?} is not a wedge word of the source algebra"
            )));
        }
    }
    if file.ad_map.len() != words.len() {
        return Err(Error::DimensionMismatch {
            expected: words.len(),
            got: file.ad_map.len(),
        });
    }
    let mut ad_map = Vec::with_capacity(file.ad_map.len());
    for row in &file.ad_map {
        if row.len() != lie.dim() {
            return Err(Error::DimensionMismatch {
                expected: lie.dim(),
                got: row.len(),
            });
        }
        let parsed: Result<Vec<Rational>> = row.iter().map(|x| parse_rational(x)).collect();
        ad_map.push(parsed?);
    }
    let kernel = subspace_from_file(&file.kernel)?;
    if kernel.ambient_dim() != words.len() || lie.dim() + kernel.dim() != words.len() {
        return Err(Error::InvalidInput(
            "kernel dimensions are inconsistent with the wedge space".to_string(),
        ));
    }
    Ok(InducedLie {
        lie,
        source_arity: file.source_arity,
        source_dim: file.source_dim,
        basis_words: file.basis_words.clone(),
        ad_map,
        kernel,
    })
}

pub fn induced_to_json(il: &InducedLie) -> String {
    to_pretty_json(&induced_to_file(il))
}

pub fn induced_from_json(s: &str) -> Result<InducedLie> {
    induced_from_file(&serde_json::from_str(s)?)
}

/// Lie-algebra input that may be either a plain arity-2 algebra file or a
/// full induced-algebra file.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum LieInput {
    Induced(InducedFile),
    Plain(AlgebraFile),
}

/// Loads a Lie algebra from either accepted shape.
pub fn lie_from_json_flexible(s: &str) -> Result<(LieAlgebra, Option<InducedLie>)> {
    match serde_json::from_str::<LieInput>(s)? {
        LieInput::Induced(f) => {
            let il = induced_from_file(&f)?;
            Ok((il.lie.clone(), Some(il)))
        }
        LieInput::Plain(f) => {
            if f.arity != 2 {
                return Err(Error::ArityMismatch {
                    expected: 2,
                    got: f.arity,
                });
            }
            Ok((LieAlgebra::from_filippov(&algebra_from_file(&f)?)?, None))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contraction::contract_fa;
    use crate::induced::induce;

    #[test]
    fn algebra_round_trip_is_bit_exact() {
        let a4 = NLieAlgebra::simple(3);
        let json = algebra_to_json(&a4);
        let back = algebra_from_json(&json).unwrap();
        assert_eq!(back, a4);
        assert_eq!(algebra_to_json(&back), json);
        assert!(json.ends_with('\n'));
    }

    #[test]
    fn unsorted_input_is_canonicalized_with_sign() {
        let json = r#"{ "arity": 3, "dim": 4, "entries": [
            { "lower": [2, 1, 3], "upper": 4, "value": "1" }
        ] }"#;
        let alg = algebra_from_json(json).unwrap();
        assert_eq!(
            alg.structure_constant(&[1, 2, 3], 4),
            crate::rational::rat_int(-1)
        );
        let out = algebra_to_json(&alg);
        assert!(out.contains("\"value\": \"-1\""));
    }

    #[test]
    fn values_accept_fractions_and_reject_garbage() {
        let json = r#"{ "arity": 2, "dim": 2, "entries": [
            { "lower": [1, 2], "upper": 1, "value": "2/4" }
        ] }"#;
        let alg = algebra_from_json(json).unwrap();
        assert_eq!(
            alg.structure_constant(&[1, 2], 1),
            crate::rational::rat(1, 2)
        );
        let bad = r#"{ "arity": 2, "dim": 2, "entries": [
            { "lower": [1, 2], "upper": 1, "value": "x" }
        ] }"#;
        assert!(algebra_from_json(bad).is_err());
    }

    #[test]
    fn induced_round_trip() {
        let alg = contract_fa(
            &NLieAlgebra::simple(3),
            &Splitting::new(4, [1, 2]).unwrap(),
        )
        .unwrap();
        let il = induce(&alg).unwrap();
        let json = induced_to_json(&il);
        let back = induced_from_json(&json).unwrap();
        assert_eq!(back, il);
        assert_eq!(induced_to_json(&back), json);
    }

    #[test]
    fn flexible_lie_loading() {
        let il = induce(&NLieAlgebra::simple(3)).unwrap();
        let (lie, from_induced) = lie_from_json_flexible(&induced_to_json(&il)).unwrap();
        assert_eq!(lie, il.lie);
        assert!(from_induced.is_some());
        let (lie2, plain) = lie_from_json_flexible(&lie_to_json(&il.lie)).unwrap();
        assert_eq!(lie2, il.lie);
        assert!(plain.is_none());
        assert_eq!(lie_from_json(&lie_to_json(&il.lie)).unwrap(), il.lie);
    }

    #[test]
    fn tampered_induced_files_are_rejected() {
        let il = induce(&NLieAlgebra::simple(3)).unwrap();
        let mut f = induced_to_file(&il);
        f.basis_words[0] = vec![1, 9];
        assert!(induced_from_file(&f).is_err());

        let mut f = induced_to_file(&il);
        f.ad_map.pop();
        assert!(induced_from_file(&f).is_err());

        let mut f = induced_to_file(&il);
        f.kernel.ambient_dim = 3;
        assert!(induced_from_file(&f).is_err());

        let mut f = induced_to_file(&il);
        f.basis_words.pop();
        assert!(induced_from_file(&f).is_err());
    }

    #[test]
    fn splitting_and_matrix_round_trips() {
        let s = Splitting::new(4, [1, 2]).unwrap();
        let f = splitting_to_file(&s);
        assert_eq!(splitting_from_file(4, &f).unwrap(), s);

        let m = Matrix::identity(3);
        let back = matrix_from_file(&matrix_to_file(&m)).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn subspace_round_trip_is_canonical() {
        let s = crate::fundamental::ker_ad(
            &contract_fa(
                &NLieAlgebra::simple(3),
                &Splitting::new(4, [1, 2]).unwrap(),
            )
            .unwrap(),
        );
        let back = subspace_from_file(&subspace_to_file(&s)).unwrap();
        assert_eq!(back, s);
    }
}
