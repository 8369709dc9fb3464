//! Fundamental objects: formal rational combinations of wedge words of
//! length n-1 acting on the algebra through the adjoint map, together with
//! their dot composition and the kernel of ad.

use std::collections::BTreeMap;
use std::fmt;

use num::{Signed, Zero};

use crate::algebra::NLieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{format_rational, Rational};
use crate::subspace::Subspace;
use crate::tensor::{canonicalize_word, index_tuples};

/// Formal sum of wedge words with rational coefficients. Words are stored
/// strictly increasing; a repeated index makes a word identically zero, so
/// such terms are dropped at insertion time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FundamentalObject {
    word_len: usize,
    dim: usize,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl FundamentalObject {
    pub fn zero(dim: usize, word_len: usize) -> Self {
        FundamentalObject {
            word_len,
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// A single wedge word with coefficient one.
    pub fn word(dim: usize, indices: &[usize]) -> Result<Self> {
        let mut x = FundamentalObject::zero(dim, indices.len());
        x.add_term(indices, Rational::from_integer(1.into()))?;
        Ok(x)
    }

    pub fn from_terms(
        dim: usize,
        word_len: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> Result<Self> {
        let mut x = FundamentalObject::zero(dim, word_len);
        for (word, coeff) in terms {
            x.add_term(&word, coeff)?;
        }
        Ok(x)
    }

    /// Accumulates coeff * word, canonicalizing with the permutation sign.
    pub fn add_term(&mut self, word: &[usize], coeff: Rational) -> Result<()> {
        if word.len() != self.word_len {
            return Err(Error::ArityMismatch {
                expected: self.word_len,
                got: word.len(),
            });
        }
        for &i in word {
            if i == 0 || i > self.dim {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: self.dim,
                });
            }
        }
        let Some((sorted, sign)) = canonicalize_word(word) else {
            return Ok(()); // repeated index: the word is zero
        };
        let signed = if sign < 0 { -coeff } else { coeff };
        if signed.is_zero() {
            return Ok(());
        }
        match self.terms.entry(sorted) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(signed);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += signed;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
        Ok(())
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FundamentalObject) -> Result<FundamentalObject> {
        let mut out = self.clone();
        for (word, coeff) in other.terms() {
            out.add_term(word, coeff.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> FundamentalObject {
        FundamentalObject {
            word_len: self.word_len,
            dim: self.dim,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// Terms in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }
}

impl fmt::Display for FundamentalObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let joined: Vec<String> = word.iter().map(ToString::to_string).collect();
            write!(f, "{}·({})", format_rational(&mag), joined.join("∧"))?;
        }
        Ok(())
    }
}

/// Wedge words indexing the fundamental objects of `alg`, lexicographic.
/// This ordering fixes every downstream matrix layout and basis choice.
pub fn wedge_words(alg: &NLieAlgebra) -> Vec<Vec<usize>> {
    index_tuples(alg.dim(), alg.arity() - 1)
}

/// Adjoint matrix of a single wedge word: column k holds the bracket of the
/// word's basis vectors with e_k.
pub(crate) fn ad_matrix_word(alg: &NLieAlgebra, word: &[usize]) -> Matrix {
    let d = alg.dim();
    let mut m = Matrix::zero(d, d);
    let mut lower = word.to_vec();
    lower.push(0);
    for k in 1..=d {
        *lower.last_mut().unwrap() = k;
        for l in 1..=d {
            let v = alg.structure_constant(&lower, l);
            if !v.is_zero() {
                m.set(l - 1, k - 1, v);
            }
        }
    }
    m
}

/// The endomorphism Z -> [X_1, ..., X_{n-1}, Z] for the formal sum `x`.
pub fn ad_matrix(alg: &NLieAlgebra, x: &FundamentalObject) -> Result<Matrix> {
    check_shape(alg, x)?;
    let d = alg.dim();
    let mut out = Matrix::zero(d, d);
    for (word, coeff) in x.terms() {
        let m = ad_matrix_word(alg, word);
        for r in 0..d {
            for c in 0..d {
                let v = m.get(r, c);
                if !v.is_zero() {
                    let acc = out.get(r, c) + coeff * v;
                    out.set(r, c, acc);
                }
            }
        }
    }
    Ok(out)
}

/// Dot composition: x·y = sum over slots of y with ad_x applied there,
/// extended bilinearly and canonicalized.
pub fn dot(
    alg: &NLieAlgebra,
    x: &FundamentalObject,
    y: &FundamentalObject,
) -> Result<FundamentalObject> {
    check_shape(alg, x)?;
    check_shape(alg, y)?;
    let d = alg.dim();
    let mut out = FundamentalObject::zero(d, alg.arity() - 1);
    for (xw, xc) in x.terms() {
        let mut lower = xw.to_vec();
        lower.push(0);
        for (yw, yc) in y.terms() {
            for slot in 0..yw.len() {
                *lower.last_mut().unwrap() = yw[slot];
                for l in 1..=d {
                    let c = alg.structure_constant(&lower, l);
                    if !c.is_zero() {
                        let mut word = yw.to_vec();
                        word[slot] = l;
                        out.add_term(&word, xc * yc * c)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Checks [ad_x, ad_y] = ad_{x·y} exactly; this is the Filippov identity in
/// endomorphism form, so the algebra must come in verified.
pub fn check_derivation_identity(
    alg: &NLieAlgebra,
    x: &FundamentalObject,
    y: &FundamentalObject,
) -> Result<bool> {
    if !alg.is_fi_verified() {
        return Err(Error::UnverifiedAlgebra);
    }
    let ax = ad_matrix(alg, x)?;
    let ay = ad_matrix(alg, y)?;
    let lhs = ax.commutator(&ay)?;
    let rhs = ad_matrix(alg, &dot(alg, x, y)?)?;
    Ok(lhs == rhs)
}

/// Kernel of ad as a subspace of the wedge space, with wedge words ordered
/// lexicographically.
pub fn ker_ad(alg: &NLieAlgebra) -> Subspace {
    let d = alg.dim();
    let words = wedge_words(alg);
    let columns: Vec<Vec<Rational>> = words
        .iter()
        .map(|w| ad_matrix_word(alg, w).flatten())
        .collect();
    Matrix::from_columns(d * d, &columns).kernel()
}

fn check_shape(alg: &NLieAlgebra, x: &FundamentalObject) -> Result<()> {
    if x.word_len() != alg.arity() - 1 {
        return Err(Error::ArityMismatch {
            expected: alg.arity() - 1,
            got: x.word_len(),
        });
    }
    if x.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            got: x.dim(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn word(dim: usize, idx: &[usize]) -> FundamentalObject {
        FundamentalObject::word(dim, idx).unwrap()
    }

    #[test]
    fn terms_canonicalize_and_cancel() {
        let mut x = FundamentalObject::zero(4, 2);
        x.add_term(&[2, 1], rat_int(1)).unwrap();
        assert_eq!(x.terms().next().unwrap(), (&[1, 2][..], &rat_int(-1)));
        x.add_term(&[1, 2], rat_int(1)).unwrap();
        assert!(x.is_zero());
        x.add_term(&[3, 3], rat_int(5)).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn ad_matrix_of_a4_word() {
        let a4 = NLieAlgebra::simple(3);
        let m = ad_matrix(&a4, &word(4, &[1, 2])).unwrap();
        // e3 -> e4, e4 -> -e3, e1 and e2 -> 0
        assert_eq!(*m.get(3, 2), rat_int(1));
        assert_eq!(*m.get(2, 3), rat_int(-1));
        assert_eq!(m.column(0), vec![Rational::zero(); 4]);
        assert_eq!(m.column(1), vec![Rational::zero(); 4]);
    }

    #[test]
    fn ad_matrix_of_abelian_is_zero() {
        let ab = NLieAlgebra::abelian(3, 4);
        assert!(ad_matrix(&ab, &word(4, &[1, 2])).unwrap().is_zero());
    }

    #[test]
    fn dot_examples_on_a4() {
        let a4 = NLieAlgebra::simple(3);
        // (e1^e2)·(e1^e3) = (e1, [e1,e2,e3]) = e1^e4
        let d = dot(&a4, &word(4, &[1, 2]), &word(4, &[1, 3])).unwrap();
        assert_eq!(d, word(4, &[1, 4]));
        // (e1^e2)·(e3^e4) = (e4,e4) + (e3,-e3) = 0
        let d = dot(&a4, &word(4, &[1, 2]), &word(4, &[3, 4])).unwrap();
        assert!(d.is_zero());
        // (e1^e2)·(e1^e2): both terms have repeated wedge indices
        let d = dot(&a4, &word(4, &[1, 2]), &word(4, &[1, 2])).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn derivation_identity_on_a4_pairs() {
        let a4 = NLieAlgebra::simple(3);
        let words = wedge_words(&a4);
        for wx in &words {
            for wy in &words {
                assert!(check_derivation_identity(
                    &a4,
                    &word(4, wx),
                    &word(4, wy)
                )
                .unwrap());
            }
        }
    }

    #[test]
    fn derivation_identity_requires_verified_algebra() {
        let raw =
            NLieAlgebra::new_unchecked(3, 4, vec![(vec![1, 2, 3], 4, rat_int(1))]).unwrap();
        let err = check_derivation_identity(&raw, &word(4, &[1, 2]), &word(4, &[1, 3]));
        assert!(matches!(err, Err(Error::UnverifiedAlgebra)));
    }

    #[test]
    fn ker_ad_of_simple_is_zero_and_abelian_is_full() {
        for n in 2..=4 {
            assert_eq!(ker_ad(&NLieAlgebra::simple(n)).dim(), 0);
        }
        let ab = NLieAlgebra::abelian(3, 4);
        assert_eq!(ker_ad(&ab).dim(), 6);
    }

    #[test]
    fn display_formats_signed_terms() {
        let mut x = FundamentalObject::zero(4, 2);
        x.add_term(&[1, 2], rat_int(1)).unwrap();
        x.add_term(&[3, 4], crate::rational::rat(-1, 2)).unwrap();
        assert_eq!(x.to_string(), "1·(1∧2) - 1/2·(3∧4)");
        assert_eq!(FundamentalObject::zero(4, 2).to_string(), "0");
    }
}
