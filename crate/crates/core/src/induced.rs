//! The Lie algebra of inner derivations of a Filippov algebra, built in a
//! deterministic ad-matrix basis.
//!
//! Wedge words are swept in lexicographic order and an ad matrix is kept
//! whenever it enlarges the span. Structure constants then come from exact
//! solves of matrix commutators against that basis; the labelled constants
//! one could read off the raw word indices are deliberately not used, since
//! the word-labelled ad's need not be independent once ad has a kernel.

use num::Zero;

use crate::algebra::NLieAlgebra;
use crate::error::{Error, Result};
use crate::fundamental::{ad_matrix_word, ker_ad, wedge_words};
use crate::lie::LieAlgebra;
use crate::rational::Rational;
use crate::subspace::{SpanSolver, Subspace};
use crate::tensor::AntisymTensor;

/// Lie algebra of inner derivations together with the basis bookkeeping:
/// which wedge words supply the basis, how every wedge word's ad decomposes
/// over it, and the kernel of ad.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InducedLie {
    pub lie: LieAlgebra,
    pub source_arity: usize,
    pub source_dim: usize,
    /// Wedge words whose ad matrices form the chosen basis, in the order
    /// they were kept (lexicographic over words).
    pub basis_words: Vec<Vec<usize>>,
    /// Row per wedge word (lexicographic), holding the exact coefficients of
    /// its ad matrix over the basis.
    pub ad_map: Vec<Vec<Rational>>,
    /// ker ad inside the wedge space.
    pub kernel: Subspace,
}

/// Builds Lie G for an FI-verified algebra.
pub fn induce(alg: &NLieAlgebra) -> Result<InducedLie> {
    if !alg.is_fi_verified() {
        return Err(Error::UnverifiedAlgebra);
    }
    let d = alg.dim();
    let words = wedge_words(alg);

    let mut solver = SpanSolver::new(d * d);
    let mut basis_words = Vec::new();
    let mut basis_matrices = Vec::new();
    let mut flats = Vec::with_capacity(words.len());
    for word in &words {
        let m = ad_matrix_word(alg, word);
        let flat = m.flatten();
        if solver.insert(&flat) {
            basis_words.push(word.clone());
            basis_matrices.push(m);
        }
        flats.push(flat);
    }

    let lie_dim = basis_words.len();
    let mut ad_map = Vec::with_capacity(words.len());
    for flat in &flats {
        let coeffs = solver.solve(flat).ok_or(Error::InternalSpanError)?;
        ad_map.push(coeffs);
    }

    let mut c = AntisymTensor::new(2, lie_dim);
    for i in 0..lie_dim {
        for j in i + 1..lie_dim {
            let comm = basis_matrices[i].commutator(&basis_matrices[j])?;
            // guaranteed in-span: [ad_X, ad_Y] = ad_{X·Y}
            let coeffs = solver
                .solve(&comm.flatten())
                .ok_or(Error::InternalSpanError)?;
            for (k, v) in coeffs.into_iter().enumerate() {
                if !v.is_zero() {
                    c.insert(&[i + 1, j + 1], k + 1, v)?;
                }
            }
        }
    }

    let lie = LieAlgebra::from_tensor(c, crate::algebra::IdentityCheck::Unverified)
        .verified()
        .map_err(|_| Error::InternalSpanError)?;

    let kernel = ker_ad(alg);
    debug_assert_eq!(lie.dim() + kernel.dim(), words.len());

    Ok(InducedLie {
        lie,
        source_arity: alg.arity(),
        source_dim: d,
        basis_words,
        ad_map,
        kernel,
    })
}
