//! Canonical subspaces: reduced row-echelon bases with strictly increasing
//! pivots. Two equal subspaces always have identical stored bases, so
//! equality is plain structural comparison and no tolerance exists anywhere.

use num::Zero;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let mut s = Subspace::zero(ambient_dim);
        for i in 0..ambient_dim {
            let mut v = vec![Rational::zero(); ambient_dim];
            v[i] = num::One::one();
            s.insert(&v);
        }
        s
    }

    pub fn from_vectors(
        ambient_dim: usize,
        vectors: impl IntoIterator<Item = Vec<Rational>>,
    ) -> Self {
        let mut s = Subspace::zero(ambient_dim);
        for v in vectors {
            s.insert(&v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Canonical basis rows, pivot columns strictly increasing.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for (x, r) in w.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &factor * r;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Grows the span by `candidate`; returns whether the vector was new.
    /// Keeps the representation canonical.
    pub fn extended(&self, candidate: &[Rational]) -> (Subspace, bool) {
        let mut s = self.clone();
        let was_new = s.insert(candidate);
        (s, was_new)
    }

    fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = self.reduce(v);
        let Some(lead) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[lead].clone().recip();
        for x in &mut w {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        // clear the new pivot column in existing rows, then place the row so
        // pivots stay strictly increasing
        for row in &mut self.rows {
            if !row[lead].is_zero() {
                let factor = row[lead].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, w);
        true
    }
}

/// Incremental span with exact coordinates: remembers how each echelon row
/// decomposes over the inserted vectors, so membership queries come back as
/// coefficient lists over the original (independent) vectors.
pub struct SpanSolver {
    ambient_dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    // combos[i] expresses rows[i] over the inserted vectors; short tails are zero
    combos: Vec<Vec<Rational>>,
    inserted: usize,
    // insertion slots of the vectors that enlarged the span, ascending
    kept: Vec<usize>,
}

fn axpy(dst: &mut Vec<Rational>, coeff: &Rational, src: &[Rational]) {
    if dst.len() < src.len() {
        dst.resize(src.len(), Rational::zero());
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= coeff * s;
        }
    }
}

impl SpanSolver {
    pub fn new(ambient_dim: usize) -> Self {
        SpanSolver {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
            kept: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tracked(&self, v: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut w = v.to_vec();
        let mut combo = Vec::new();
        for ((row, &p), rc) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for (x, r) in w.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &factor * r;
                    }
                }
                axpy(&mut combo, &factor, rc);
            }
        }
        (w, combo)
    }

    /// Adds a vector to the span; false means it was already contained.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let (mut w, mut combo) = self.reduce_tracked(v);
        let own = self.inserted;
        self.inserted += 1;
        let Some(lead) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // combo currently holds -(coefficients of earlier vectors); the new
        // row is v plus that correction, normalized by the leading entry
        if combo.len() <= own {
            combo.resize(own + 1, Rational::zero());
        }
        combo[own] = num::One::one();
        self.kept.push(own);
        let inv = w[lead].clone().recip();
        for x in &mut w {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for x in &mut combo {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (row, rc) in self.rows.iter_mut().zip(&mut self.combos) {
            if !row[lead].is_zero() {
                let factor = row[lead].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
                axpy(rc, &factor, &combo);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, w);
        self.combos.insert(pos, combo);
        true
    }

    /// Coefficients of `target` over the independent inserted vectors, or
    /// None when the target lies outside the span.
    pub fn solve(&self, target: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(target.len(), self.ambient_dim);
        let (w, combo) = self.reduce_tracked(target);
        if !w.iter().all(Zero::is_zero) {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); self.dim()];
        // reduce_tracked accumulated the negated combination; nonzero entries
        // only ever sit on kept slots
        for (i, c) in combo.into_iter().enumerate() {
            if !c.is_zero() {
                let slot = self
                    .kept
                    .binary_search(&i)
                    .expect("coefficient on a dependent vector");
                coeffs[slot] = -c;
            }
        }
        Some(coeffs)
    }
}
