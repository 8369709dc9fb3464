//! n-Lie algebras presented by structure constants: bracket evaluation,
//! Filippov-identity verification, the simple Euclidean family, basis
//! changes, and subalgebra/ideal predicates on basis splittings.
//!
//! Index conventions follow the structure-constant picture throughout:
//! basis indices are 1-based, [X_{l1},...,X_{ln}] = f_{l1...ln}^k X_k, and
//! for arity 2 the Filippov identity is the Jacobi identity.

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{format_rational, Rational};
use crate::tensor::{index_tuples, sorted_subsets, AntisymTensor};

/// Whether the defining identity (FI, or JI at arity 2) has been checked.
/// This is a cache: values are immutable, so it can never go stale.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityCheck {
    Verified,
    Unverified,
}

/// An n-Lie (Filippov) algebra given by its structure-constant tensor.
#[derive(Clone, Debug)]
pub struct NLieAlgebra {
    arity: usize,
    dim: usize,
    f: AntisymTensor,
    fi_status: IdentityCheck,
}

/// Equality compares the algebraic data only, never the verification cache.
impl PartialEq for NLieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.dim == other.dim && self.f == other.f
    }
}

impl Eq for NLieAlgebra {}

/// One failing instance of the Filippov identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiViolation {
    /// Indices of the inner bracket arguments (length n).
    pub bracket_tuple: Vec<usize>,
    /// Indices of the acting derivation arguments (length n-1), or the
    /// fixed indices in the antisymmetrized form.
    pub derivation_tuple: Vec<usize>,
    /// Free upper index of the failing component.
    pub free_index: usize,
    /// Left-hand side minus right-hand side.
    pub residual: Rational,
}

impl fmt::Display for FiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bracket {:?}, derivation {:?}, free index {}: residual {}",
            self.bracket_tuple,
            self.derivation_tuple,
            self.free_index,
            format_rational(&self.residual)
        )
    }
}

/// Outcome of a Filippov/Jacobi identity check; empty violations = holds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiReport {
    pub violations: Vec<FiViolation>,
}

impl FiReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for FiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            write!(f, "identity holds")
        } else {
            writeln!(f, "{} violation(s):", self.violations.len())?;
            for v in &self.violations {
                writeln!(f,"  {v}")?;
            }
            Ok(())
        }
    }
}

/// Partition of the basis index set {1..dim} into a kept block i0 and a
/// rescaled block i1, both sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Splitting {
    dim: usize,
    i0: Vec<usize>,
    i1: Vec<usize>,
}

impl Splitting {
    /// Splitting with the given i0; i1 is the complement.
    pub fn new(dim: usize, i0: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut i0: Vec<usize> = i0.into_iter().collect();
        i0.sort_unstable();
        i0.dedup();
        for &i in &i0 {
            if i == 0 || i > dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
        }
        let i1 = (1..=dim).filter(|i| i0.binary_search(i).is_err()).collect();
        Ok(Splitting { dim, i0, i1 })
    }

    /// Validates an explicitly given partition.
    pub fn from_parts(dim: usize, i0: Vec<usize>, i1: Vec<usize>) -> Result<Self> {
        let s = Splitting::new(dim, i0.iter().copied())?;
        if s.i1 != i1 {
            return Err(Error::InvalidSplitting(format!(
                "i1 must be the sorted complement of i0 in 1..={dim}"
            )));
        }
        if s.i0 != i0 {
            return Err(Error::InvalidSplitting(
                "i0 must be sorted and duplicate-free".to_string(),
            ));
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn i0(&self) -> &[usize] {
        &self.i0
    }

    pub fn i1(&self) -> &[usize] {
        &self.i1
    }

    pub fn in_i1(&self, index: usize) -> bool {
        self.i1.binary_search(&index).is_ok()
    }
}

/// Exact determinant of a small square matrix, consumed row by row.
fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut result = Rational::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            result = -result;
        }
        let pivot = m[c][c].clone();
        let inv = pivot.clone().recip();
        result *= pivot;
        for r in c + 1..n {
            if !m[r][c].is_zero() {
                let factor = &m[r][c] * &inv;
                for j in c..n {
                    let delta = &factor * &m[c][j];
                    m[r][j] -= delta;
                }
            }
        }
    }
    result
}

/// Filippov identity in structure constants, checked over every strictly
/// increasing bracket tuple, derivation tuple, and free upper index.
/// Antisymmetry makes this exhaustive.
pub(crate) fn verify_fi_tensor(f: &AntisymTensor) -> FiReport {
    let n = f.arity();
    let d = f.dim();
    let mut violations = Vec::new();
    for bracket_tuple in index_tuples(d, n) {
        for derivation_tuple in index_tuples(d, n - 1) {
            for free in 1..=d {
                let mut residual = Rational::zero();
                // lhs: f_{k1..kn}^l f_{l1..l_{n-1} l}^free
                let mut outer = derivation_tuple.clone();
                outer.push(0);
                for l in 1..=d {
                    let a = f.get(&bracket_tuple, l);
                    if !a.is_zero() {
                        *outer.last_mut().unwrap() = l;
                        residual += a * f.get(&outer, free);
                    }
                }
                // rhs: sum over slots of the inner bracket
                for i in 0..n {
                    *outer.last_mut().unwrap() = bracket_tuple[i];
                    for l in 1..=d {
                        let b = f.get(&outer, l);
                        if !b.is_zero() {
                            let mut inner = bracket_tuple.clone();
                            inner[i] = l;
                            residual -= b * f.get(&inner, free);
                        }
                    }
                }
                if !residual.is_zero() {
                    violations.push(FiViolation {
                        bracket_tuple: bracket_tuple.clone(),
                        derivation_tuple: derivation_tuple.clone(),
                        free_index: free,
                        residual,
                    });
                }
            }
        }
    }
    FiReport { violations }
}

/// Equivalent antisymmetrized form of the identity:
/// f_{[k1..kn}^l f_{l1] l2..l_{n-1} l}^k = 0, with the bracket running over
/// the n+1 indices k1..kn, l1.
pub(crate) fn verify_fi_bracket_form_tensor(f: &AntisymTensor) -> FiReport {
    let n = f.arity();
    let d = f.dim();
    let mut violations = Vec::new();
    for block in index_tuples(d, n + 1) {
        for rest in index_tuples(d, n - 2) {
            for free in 1..=d {
                let mut residual = Rational::zero();
                for (j, &m) in block.iter().enumerate() {
                    // sign of moving the j-th element to the end of the block
                    let sign = if (n - j).is_multiple_of(2) { 1 } else { -1 };
                    let without: Vec<usize> = block
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != j)
                        .map(|(_, &x)| x)
                        .collect();
                    let mut second = Vec::with_capacity(n);
                    second.push(m);
                    second.extend_from_slice(&rest);
                    second.push(0);
                    let mut term = Rational::zero();
                    for l in 1..=d {
                        let a = f.get(&without, l);
                        if !a.is_zero() {
                            *second.last_mut().unwrap() = l;
                            term += a * f.get(&second, free);
                        }
                    }
                    if sign < 0 {
                        residual -= term;
                    } else {
                        residual += term;
                    }
                }
                if !residual.is_zero() {
                    violations.push(FiViolation {
                        bracket_tuple: block.clone(),
                        derivation_tuple: rest.clone(),
                        free_index: free,
                        residual,
                    });
                }
            }
        }
    }
    FiReport { violations }
}

impl NLieAlgebra {
    /// Algebra from raw entries; nothing is verified beyond canonical form.
    pub fn new_unchecked(
        arity: usize,
        dim: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, usize, Rational)>,
    ) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidInput(format!(
                "arity must be at least 2, got {arity}"
            )));
        }
        let mut f = AntisymTensor::new(arity, dim);
        for (lower, upper, value) in entries {
            f.insert(&lower, upper, value)?;
        }
        Ok(NLieAlgebra {
            arity,
            dim,
            f,
            fi_status: IdentityCheck::Unverified,
        })
    }

    pub(crate) fn from_tensor(f: AntisymTensor, fi_status: IdentityCheck) -> Self {
        NLieAlgebra {
            arity: f.arity(),
            dim: f.dim(),
            f,
            fi_status,
        }
    }

    /// The simple Euclidean n-Lie algebra of dimension n+1: structure
    /// constants are the Levi-Civita epsilon with the upper index lowered by
    /// the Euclidean metric. For n = 2 this is so(3).
    pub fn simple(n: usize) -> Self {
        assert!(n >= 2, "simple algebras need arity >= 2");
        let dim = n + 1;
        let mut f = AntisymTensor::new(n, dim);
        for lower in index_tuples(dim, n) {
            let upper = (1..=dim)
                .find(|k| !lower.contains(k))
                .expect("one index is always missing");
            let mut word = lower.clone();
            word.push(upper);
            let (_, sign) = crate::tensor::canonicalize_word(&word)
                .expect("distinct by construction");
            f.insert(&lower, upper, Rational::from_integer(i64::from(sign).into()))
                .expect("canonical entries");
        }
        NLieAlgebra::from_tensor(f, IdentityCheck::Verified)
    }

    /// The abelian algebra: empty tensor, identity trivially verified.
    pub fn abelian(arity: usize, dim: usize) -> Self {
        NLieAlgebra::from_tensor(AntisymTensor::new(arity, dim), IdentityCheck::Verified)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> &AntisymTensor {
        &self.f
    }

    pub fn structure_constant(&self, lower: &[usize], upper: usize) -> Rational {
        self.f.get(lower, upper)
    }

    pub fn is_fi_verified(&self) -> bool {
        self.fi_status == IdentityCheck::Verified
    }

    /// Multilinear fully antisymmetric bracket of arbitrary vectors.
    pub fn bracket(&self, args: &[Vec<Rational>]) -> Result<Vec<Rational>> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: args.len(),
            });
        }
        for a in args {
            if a.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: a.len(),
                });
            }
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (lower, upper, value) in self.f.entries() {
            // coefficient of this entry is the minor of the argument vectors
            // at the rows named by the (sorted) lower tuple
            let minor: Vec<Vec<Rational>> = lower
                .iter()
                .map(|&l| args.iter().map(|a| a[l - 1].clone()).collect())
                .collect();
            let coeff = det(minor);
            if !coeff.is_zero() {
                out[upper - 1] += value * coeff;
            }
        }
        Ok(out)
    }

    /// Exhaustive Filippov identity check (Jacobi identity at arity 2).
    /// Violations are listed in lexicographic (bracket, derivation, free
    /// index) order.
    pub fn verify_fi(&self) -> FiReport {
        verify_fi_tensor(&self.f)
    }

    /// The same identity in its antisymmetrized single-equation form; holds
    /// exactly when `verify_fi` does.
    pub fn verify_fi_bracket_form(&self) -> FiReport {
        verify_fi_bracket_form_tensor(&self.f)
    }

    /// Runs the FI check and upgrades the cache, or hands back the report.
    pub fn verified(self) -> std::result::Result<Self, FiReport> {
        if self.fi_status == IdentityCheck::Verified {
            return Ok(self);
        }
        let report = self.verify_fi();
        if report.holds() {
            Ok(NLieAlgebra {
                fi_status: IdentityCheck::Verified,
                ..self
            })
        } else {
            Err(report)
        }
    }

    /// Structure constants in the basis whose j-th vector is the j-th column
    /// of `p`: covariant in the n lower slots, contravariant in the upper.
    /// The identity status carries over since the FI is basis-independent.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.rows().max(p.cols()),
            });
        }
        let p_inv = p.inverse()?;
        let mut f = AntisymTensor::new(self.arity, self.dim);
        for lower in index_tuples(self.dim, self.arity) {
            let args: Vec<Vec<Rational>> = lower.iter().map(|&l| p.column(l - 1)).collect();
            let image = self.bracket(&args)?;
            let coords = p_inv.mul_vec(&image)?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    f.insert(&lower, k + 1, c)?;
                }
            }
        }
        Ok(NLieAlgebra::from_tensor(f, self.fi_status))
    }

    /// True when the span of the i0 coordinates closes under the bracket,
    /// i.e. f_{a1..an}^u = 0 for all a's in i0 and u in i1.
    pub fn is_subalgebra(&self, s: &Splitting) -> bool {
        assert_eq!(s.dim(), self.dim);
        for tuple in sorted_subsets(s.i0(), self.arity) {
            for &u in s.i1() {
                if !self.f.get(&tuple, u).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when every bracket with at least one argument in the i1 span
    /// lands in that span.
    pub fn is_ideal(&self, s: &Splitting) -> bool {
        assert_eq!(s.dim(), self.dim);
        for (lower, upper, _) in self.f.entries() {
            let touches_i1 = lower.iter().any(|&l| s.in_i1(l));
            if touches_i1 && !s.in_i1(upper) {
                return false;
            }
        }
        true
    }

    pub fn is_abelian(&self) -> bool {
        self.f.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn unit(dim: usize, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        v[i - 1] = rat_int(1);
        v
    }

    /// The four canonical entries of the simple 3-Lie algebra on dim 4.
    fn a4_entries() -> Vec<(Vec<usize>, usize, Rational)> {
        vec![
            (vec![1, 2, 3], 4, rat_int(1)),
            (vec![1, 2, 4], 3, rat_int(-1)),
            (vec![1, 3, 4], 2, rat_int(1)),
            (vec![2, 3, 4], 1, rat_int(-1)),
        ]
    }

    #[test]
    fn simple_matches_epsilon_expansion() {
        let a4 = NLieAlgebra::simple(3);
        for (lower, upper, value) in a4_entries() {
            assert_eq!(a4.structure_constant(&lower, upper), value);
        }
        assert_eq!(a4.tensor().num_entries(), 4);

        let a5 = NLieAlgebra::simple(4);
        assert_eq!(a5.dim(), 5);
        assert_eq!(a5.structure_constant(&[1, 2, 3, 4], 5), rat_int(1));

        // n = 2 gives so(3)
        let so3 = NLieAlgebra::simple(2);
        assert_eq!(so3.structure_constant(&[1, 2], 3), rat_int(1));
        assert_eq!(so3.structure_constant(&[2, 3], 1), rat_int(1));
        assert_eq!(so3.structure_constant(&[3, 1], 2), rat_int(1));
    }

    #[test]
    fn new_unchecked_canonicalizes_permuted_input() {
        let alg = NLieAlgebra::new_unchecked(3, 4, vec![(vec![2, 1, 3], 4, rat_int(1))]).unwrap();
        assert_eq!(alg.structure_constant(&[1, 2, 3], 4), rat_int(-1));
        assert!(!alg.is_fi_verified());
    }

    #[test]
    fn bracket_on_basis_vectors() {
        let a4 = NLieAlgebra::simple(3);
        let out = a4
            .bracket(&[unit(4, 1), unit(4, 2), unit(4, 3)])
            .unwrap();
        assert_eq!(out, unit(4, 4));
        let out = a4
            .bracket(&[unit(4, 1), unit(4, 2), unit(4, 4)])
            .unwrap();
        let mut expected = vec![Rational::zero(); 4];
        expected[2] = rat_int(-1);
        assert_eq!(out, expected);
        // repeated argument kills the bracket
        let out = a4
            .bracket(&[unit(4, 1), unit(4, 1), unit(4, 2)])
            .unwrap();
        assert!(out.iter().all(num::Zero::is_zero));
    }

    #[test]
    fn bracket_is_multilinear() {
        let a4 = NLieAlgebra::simple(3);
        let x: Vec<Rational> = vec![rat_int(1), rat(1, 2), rat_int(0), rat_int(2)];
        let y: Vec<Rational> = vec![rat_int(0), rat_int(1), rat_int(-1), rat_int(1)];
        let z: Vec<Rational> = vec![rat_int(3), rat_int(0), rat(2, 3), rat_int(0)];
        let w: Vec<Rational> = vec![rat_int(1), rat_int(1), rat_int(1), rat_int(1)];

        let sum: Vec<Rational> = z.iter().zip(&w).map(|(a, b)| a + b).collect();
        let lhs = a4.bracket(&[x.clone(), y.clone(), sum]).unwrap();
        let r1 = a4.bracket(&[x.clone(), y.clone(), z]).unwrap();
        let r2 = a4.bracket(&[x, y, w]).unwrap();
        let rhs: Vec<Rational> = r1.iter().zip(&r2).map(|(a, b)| a + b).collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fi_holds_for_simple_algebras() {
        for n in 2..=5 {
            let alg = NLieAlgebra::simple(n);
            assert!(alg.verify_fi().holds(), "FI failed for n = {n}");
            assert!(alg.verify_fi_bracket_form().holds());
        }
        assert!(NLieAlgebra::abelian(3, 5).verify_fi().holds());
    }

    #[test]
    fn sign_flips_of_epsilon_constants_stay_filippov() {
        // flipping f_{124}^3 gives the pseudoeuclidean variant (the metric
        // picks up a sign), so the identity still holds
        let mut entries = a4_entries();
        entries[1].2 = rat_int(1);
        let alg = NLieAlgebra::new_unchecked(3, 4, entries).unwrap();
        assert!(alg.verify_fi().holds());
        assert!(alg.verify_fi_bracket_form().holds());
    }

    #[test]
    fn fi_detects_a_structure_breaking_entry() {
        let mut entries = a4_entries();
        entries.push((vec![1, 3, 4], 3, rat_int(1)));
        let alg = NLieAlgebra::new_unchecked(3, 4, entries).unwrap();
        let report = alg.verify_fi();
        assert!(!report.holds());
        // both formulations agree on failure
        assert!(!alg.verify_fi_bracket_form().holds());
        assert!(alg.clone().verified().is_err());
        // violations are reported in lexicographic order
        let sorted = {
            let mut v: Vec<_> = report
                .violations
                .iter()
                .map(|x| (x.bracket_tuple.clone(), x.derivation_tuple.clone(), x.free_index))
                .collect();
            v.sort();
            v
        };
        let listed: Vec<_> = report
            .violations
            .iter()
            .map(|x| (x.bracket_tuple.clone(), x.derivation_tuple.clone(), x.free_index))
            .collect();
        assert_eq!(listed, sorted);
    }

    #[test]
    fn change_basis_identity_and_swap() {
        let a4 = NLieAlgebra::simple(3);
        assert_eq!(a4.change_basis(&Matrix::identity(4)).unwrap(), a4);

        // swap e3 and e4
        let mut p = Matrix::zero(4, 4);
        p.set(0, 0, rat_int(1));
        p.set(1, 1, rat_int(1));
        p.set(2, 3, rat_int(1));
        p.set(3, 2, rat_int(1));
        let swapped = a4.change_basis(&p).unwrap();
        assert_eq!(swapped.structure_constant(&[1, 2, 4], 3), rat_int(1));
        assert!(swapped.is_fi_verified());
    }

    #[test]
    fn change_basis_scaling() {
        let a4 = NLieAlgebra::simple(3);
        let mut p = Matrix::identity(4);
        p.set(3, 3, rat_int(2)); // e4' = 2 e4
        let scaled = a4.change_basis(&p).unwrap();
        assert_eq!(scaled.structure_constant(&[1, 2, 3], 4), rat(1, 2));
        assert_eq!(scaled.structure_constant(&[1, 2, 4], 3), rat_int(-2));
    }

    #[test]
    fn change_basis_rejects_singular() {
        let a4 = NLieAlgebra::simple(3);
        assert!(matches!(
            a4.change_basis(&Matrix::zero(4, 4)),
            Err(Error::SingularMatrix)
        ));
    }

    #[test]
    fn subalgebra_predicate_on_a4() {
        let a4 = NLieAlgebra::simple(3);
        assert!(a4.is_subalgebra(&Splitting::new(4, [4]).unwrap()));
        assert!(a4.is_subalgebra(&Splitting::new(4, [1, 2]).unwrap()));
        assert!(!a4.is_subalgebra(&Splitting::new(4, [1, 2, 3]).unwrap()));
    }

    #[test]
    fn ideal_predicate() {
        let a4 = NLieAlgebra::simple(3);
        // {3,4} is not an ideal of A4: [X1,X3,X4] = e2
        assert!(!a4.is_ideal(&Splitting::new(4, [1, 2]).unwrap()));
        // i1 = everything is always an ideal
        assert!(a4.is_ideal(&Splitting::new(4, []).unwrap()));
        assert!(NLieAlgebra::abelian(3, 4).is_ideal(&Splitting::new(4, [1]).unwrap()));
    }

    #[test]
    fn splitting_validation() {
        assert!(Splitting::new(4, [0]).is_err());
        assert!(Splitting::new(4, [5]).is_err());
        let s = Splitting::new(4, [2, 1]).unwrap();
        assert_eq!(s.i0(), &[1, 2]);
        assert_eq!(s.i1(), &[3, 4]);
        assert!(Splitting::from_parts(4, vec![1, 2], vec![3, 4]).is_ok());
        assert!(Splitting::from_parts(4, vec![1, 2], vec![4, 3]).is_err());
        assert!(Splitting::from_parts(4, vec![1, 2], vec![3]).is_err());
    }
}
