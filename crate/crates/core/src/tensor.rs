//! Canonical sparse storage for fully antisymmetric structure-constant
//! tensors f_{l1...ln}^k. Lower tuples are stored strictly increasing and
//! 1-based; lookups with permuted tuples pick up the permutation sign, and
//! tuples with a repeated index read as zero.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AntisymTensor {
    arity: usize,
    dim: usize,
    entries: BTreeMap<(Vec<usize>, usize), Rational>,
}

/// Sorts a word ascending and reports the permutation sign; None when an
/// index repeats.
pub fn canonicalize_word(word: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut w = word.to_vec();
    let mut sign = 1i8;
    // insertion sort with swap counting; words are tiny
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            w.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((w, sign))
}

/// All strictly increasing tuples of the given length drawn from 1..=dim,
/// in lexicographic order.
pub fn index_tuples(dim: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    if len > dim {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=len).collect();
    loop {
        out.push(cur.clone());
        let mut i = len;
        while i > 0 && cur[i - 1] == dim - (len - i) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cur[i - 1] += 1;
        for j in i..len {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// All strictly increasing `len`-element subsets of an already sorted slice.
pub fn sorted_subsets(items: &[usize], len: usize) -> Vec<Vec<usize>> {
    index_tuples(items.len(), len)
        .into_iter()
        .map(|positions| positions.iter().map(|&p| items[p - 1]).collect())
        .collect()
}

impl AntisymTensor {
    pub fn new(arity: usize, dim: usize) -> Self {
        AntisymTensor {
            arity,
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Records f_{lower}^{upper} = value, canonicalizing the tuple with its
    /// sign. Zero values are dropped; re-inserting the same value is a no-op;
    /// a conflicting value for an existing canonical key is an error.
    pub fn insert(&mut self, lower: &[usize], upper: usize, value: Rational) -> Result<()> {
        if lower.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: lower.len(),
            });
        }
        for &l in lower.iter().chain(std::iter::once(&upper)) {
            if l == 0 || l > self.dim {
                return Err(Error::IndexOutOfRange {
                    index: l,
                    dim: self.dim,
                });
            }
        }
        let (sorted, sign) =
            canonicalize_word(lower).ok_or_else(|| Error::RepeatedIndex(lower.to_vec()))?;
        let signed = if sign < 0 { -value } else { value };
        if signed.is_zero() {
            return Ok(());
        }
        let key = (sorted, upper);
        if let Some(existing) = self.entries.get(&key) {
            if *existing != signed {
                return Err(Error::DuplicateEntry {
                    lower: key.0,
                    upper,
                });
            }
            return Ok(());
        }
        self.entries.insert(key, signed);
        Ok(())
    }

    /// Sign-adjusted lookup; repeated indices give zero.
    pub fn get(&self, lower: &[usize], upper: usize) -> Rational {
        debug_assert_eq!(lower.len(), self.arity);
        match canonicalize_word(lower) {
            None => Rational::zero(),
            Some((sorted, sign)) => match self.entries.get(&(sorted, upper)) {
                None => Rational::zero(),
                Some(v) => {
                    if sign < 0 {
                        -v.clone()
                    } else {
                        v.clone()
                    }
                }
            },
        }
    }

    /// Stored entries in lexicographic (lower, upper) order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], usize, &Rational)> {
        self.entries.iter().map(|((l, u), v)| (l.as_slice(), *u, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }
}
