//! Ordinary Lie algebras by structure constants c_{ij}^k, plus the
//! isomorphism-invariant fingerprints used to tell contractions apart:
//! derived and lower central series, center, and the Killing form.

use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{verify_fi_tensor, FiReport, IdentityCheck, NLieAlgebra};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::Subspace;
use crate::tensor::AntisymTensor;

/// Lie algebra with bracket [e_i, e_j] = c_{ij}^k e_k, indices 1-based.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    c: AntisymTensor,
    ji_status: IdentityCheck,
}

/// Equality compares the structure constants only, not the cached status.
impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.c == other.c
    }
}

impl Eq for LieAlgebra {}

/// Deterministic tuple of isomorphism invariants; necessary but not
/// sufficient for isomorphism.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived: Vec<usize>,
    pub lower_central: Vec<usize>,
    pub center_dim: usize,
    pub killing_rank: usize,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim {}; derived {:?}; lower central {:?}; center {}; killing rank {}",
            self.dim, self.derived, self.lower_central, self.center_dim, self.killing_rank
        )
    }
}

impl LieAlgebra {
    pub fn new_unchecked(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut c = AntisymTensor::new(2, dim);
        for (i, j, k, v) in entries {
            c.insert(&[i, j], k, v)?;
        }
        Ok(LieAlgebra {
            dim,
            c,
            ji_status: IdentityCheck::Unverified,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: AntisymTensor::new(2, dim),
            ji_status: IdentityCheck::Verified,
        }
    }

    /// so(3) in the epsilon basis; the arity-2 member of the simple family.
    pub fn so3() -> Self {
        LieAlgebra::from_filippov(&NLieAlgebra::simple(2)).expect("arity 2")
    }

    pub(crate) fn from_tensor(c: AntisymTensor, ji_status: IdentityCheck) -> Self {
        debug_assert_eq!(c.arity(), 2);
        LieAlgebra {
            dim: c.dim(),
            c,
            ji_status,
        }
    }

    /// View an arity-2 Filippov algebra as a Lie algebra.
    pub fn from_filippov(alg: &NLieAlgebra) -> Result<Self> {
        if alg.arity() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                got: alg.arity(),
            });
        }
        let status = if alg.is_fi_verified() {
            IdentityCheck::Verified
        } else {
            IdentityCheck::Unverified
        };
        Ok(LieAlgebra::from_tensor(alg.tensor().clone(), status))
    }

    /// The same algebra as an arity-2 Filippov algebra, for the splitting
    /// predicates and the shared file format.
    pub fn to_filippov(&self) -> NLieAlgebra {
        let status = self.ji_status;
        NLieAlgebra::from_tensor(self.c.clone(), status)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tensor(&self) -> &AntisymTensor {
        &self.c
    }

    pub fn is_ji_verified(&self) -> bool {
        self.ji_status == IdentityCheck::Verified
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.c.get(&[i, j], k)
    }

    /// Exhaustive Jacobi identity check over strictly increasing triples;
    /// the arity-2 case of the Filippov identity.
    pub fn verify_ji(&self) -> FiReport {
        verify_fi_tensor(&self.c)
    }

    pub fn verified(self) -> std::result::Result<Self, FiReport> {
        if self.ji_status == IdentityCheck::Verified {
            return Ok(self);
        }
        let report = self.verify_ji();
        if report.holds() {
            Ok(LieAlgebra {
                ji_status: IdentityCheck::Verified,
                ..self
            })
        } else {
            Err(report)
        }
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vec(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![Rational::zero(); self.dim];
        for (lower, upper, v) in self.c.entries() {
            let (i, j) = (lower[0] - 1, lower[1] - 1);
            let minor = &x[i] * &y[j] - &x[j] * &y[i];
            if !minor.is_zero() {
                out[upper - 1] += v * minor;
            }
        }
        out
    }

    /// Adjoint matrix of the basis element e_{j+1} (0-based argument).
    pub fn ad_basis(&self, j: usize) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let v = self.structure_constant(j + 1, i + 1, k + 1);
                if !v.is_zero() {
                    m.set(k, i, v);
                }
            }
        }
        m
    }

    /// Center {x : [x, y] = 0 for all y}, via the kernel of the stacked
    /// adjoint map.
    pub fn center(&self) -> Subspace {
        let columns: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.ad_basis(j).flatten()).collect();
        Matrix::from_columns(self.dim * self.dim, &columns).kernel()
    }

    /// Span of [a, b] over basis pairs of two subspaces.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for u in a.basis() {
            for v in b.basis() {
                vectors.push(self.bracket_vec(u, v));
            }
        }
        Subspace::from_vectors(self.dim, vectors)
    }

    fn series(&self, lower_central: bool) -> Vec<usize> {
        let full = Subspace::full(self.dim);
        let mut current = full.clone();
        let mut dims = vec![self.dim];
        while *dims.last().unwrap() != 0 {
            let left = if lower_central { &full } else { &current };
            let next = self.bracket_subspaces(left, &current);
            let nd = next.dim();
            let stable = nd == *dims.last().unwrap();
            dims.push(nd);
            current = next;
            if stable {
                break;
            }
        }
        dims
    }

    /// Dims of g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ... until stable or zero.
    pub fn derived_series(&self) -> Vec<usize> {
        self.series(false)
    }

    /// Dims of g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ... until stable or zero.
    pub fn lower_central_series(&self) -> Vec<usize> {
        self.series(true)
    }

    /// Killing form K_{ij} = trace(ad e_i · ad e_j).
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|j| self.ad_basis(j)).collect();
        let mut k = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let mut t = Rational::zero();
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        let a = ads[i].get(r, c);
                        if !a.is_zero() {
                            t += a * ads[j].get(c, r);
                        }
                    }
                }
                k.set(i, j, t.clone());
                if i != j {
                    k.set(j, i, t);
                }
            }
        }
        k
    }

    pub fn killing_rank(&self) -> usize {
        self.killing_form().rank()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            dim: self.dim,
            derived: self.derived_series(),
            lower_central: self.lower_central_series(),
            center_dim: self.center().dim(),
            killing_rank: self.killing_rank(),
        }
    }

    /// Direct sum; the second block's basis sits after the first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let dim = self.dim + other.dim;
        let mut c = AntisymTensor::new(2, dim);
        for (lower, upper, v) in self.c.entries() {
            c.insert(lower, upper, v.clone()).expect("valid entries");
        }
        for (lower, upper, v) in other.c.entries() {
            let shifted: Vec<usize> = lower.iter().map(|&l| l + self.dim).collect();
            c.insert(&shifted, upper + self.dim, v.clone())
                .expect("valid entries");
        }
        let status = if self.is_ji_verified() && other.is_ji_verified() {
            IdentityCheck::Verified
        } else {
            IdentityCheck::Unverified
        };
        LieAlgebra::from_tensor(c, status)
    }
}
