//! Brute-force oracles for the integration suites, kept independent of the
//! library's elimination and basis-extraction paths: rank is computed
//! fraction-free over big integers, the Jacobi identity by the cyclic-sum
//! formula, and series dimensions from explicit generator sets.

#![allow(dead_code)]

use num::bigint::BigInt;
use num::{One, Zero};

use filippov::{rat_int, LieAlgebra, Matrix, NLieAlgebra, Rational};

/// Rank by fraction-free integer elimination (cross-multiplication), a
/// different algorithm and number type from Matrix::rref.
pub fn oracle_rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| {
                if x.is_zero() {
                    acc
                } else {
                    num::integer::lcm(acc, x.denom().clone())
                }
            });
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            if !m[r][c].is_zero() {
                let a = m[rank][c].clone();
                let b = m[r][c].clone();
                for j in 0..ncols {
                    m[r][j] = &m[r][j] * &a - &m[rank][j] * &b;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Jacobi identity by the cyclic sum over all i < j < k and free index l.
pub fn oracle_ji_holds(lie: &LieAlgebra) -> bool {
    let d = lie.dim();
    let c = |i: usize, j: usize, k: usize| lie.structure_constant(i, j, k);
    for i in 1..=d {
        for j in i + 1..=d {
            for k in j + 1..=d {
                for l in 1..=d {
                    let mut sum = Rational::zero();
                    for m in 1..=d {
                        sum += c(i, j, m) * c(m, k, l);
                        sum += c(j, k, m) * c(m, i, l);
                        sum += c(k, i, m) * c(m, j, l);
                    }
                    if !sum.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Bracket of coordinate vectors straight from the constants, dense loops.
pub fn oracle_bracket(lie: &LieAlgebra, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let d = lie.dim();
    let mut out = vec![Rational::zero(); d];
    for i in 1..=d {
        if x[i - 1].is_zero() {
            continue;
        }
        for j in 1..=d {
            if y[j - 1].is_zero() {
                continue;
            }
            for k in 1..=d {
                let c = lie.structure_constant(i, j, k);
                if !c.is_zero() {
                    out[k - 1] += &x[i - 1] * &y[j - 1] * c;
                }
            }
        }
    }
    out
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = rat_int(1);
    v
}

/// Series dims from generator sets: the next term is spanned by brackets of
/// generators, so ranks of stacked generator vectors give the dimensions.
fn oracle_series(lie: &LieAlgebra, lower_central: bool) -> Vec<usize> {
    let d = lie.dim();
    let basis: Vec<Vec<Rational>> = (0..d).map(|i| unit(d, i)).collect();
    let mut dims = vec![d];
    let mut current = basis.clone();
    while *dims.last().unwrap() != 0 {
        let left = if lower_central { &basis } else { &current };
        let mut next = Vec::new();
        for x in left {
            for y in &current {
                let b = oracle_bracket(lie, x, y);
                if b.iter().any(|v| !v.is_zero()) {
                    next.push(b);
                }
            }
        }
        let nd = oracle_rank(&next);
        let stable = nd == *dims.last().unwrap();
        dims.push(nd);
        current = next;
        if stable {
            break;
        }
    }
    dims
}

pub fn oracle_derived_series(lie: &LieAlgebra) -> Vec<usize> {
    oracle_series(lie, false)
}

pub fn oracle_lower_central_series(lie: &LieAlgebra) -> Vec<usize> {
    oracle_series(lie, true)
}

pub fn oracle_center_dim(lie: &LieAlgebra) -> usize {
    let d = lie.dim();
    let mut rows = Vec::new();
    for j in 1..=d {
        for k in 1..=d {
            rows.push(
                (1..=d)
                    .map(|i| lie.structure_constant(i, j, k))
                    .collect::<Vec<_>>(),
            );
        }
    }
    d - oracle_rank(&rows)
}

pub fn oracle_killing_rank(lie: &LieAlgebra) -> usize {
    let d = lie.dim();
    let mut rows = Vec::with_capacity(d);
    for i in 1..=d {
        let mut row = Vec::with_capacity(d);
        for j in 1..=d {
            let mut t = Rational::zero();
            for r in 1..=d {
                for c in 1..=d {
                    t += lie.structure_constant(i, c, r) * lie.structure_constant(j, r, c);
                }
            }
            row.push(t);
        }
        rows.push(row);
    }
    oracle_rank(&rows)
}

pub fn oracle_fingerprint(lie: &LieAlgebra) -> (usize, Vec<usize>, Vec<usize>, usize, usize) {
    (
        lie.dim(),
        oracle_derived_series(lie),
        oracle_lower_central_series(lie),
        oracle_center_dim(lie),
        oracle_killing_rank(lie),
    )
}

/// Series dims computed directly on endomorphism matrices, bypassing the
/// extracted basis and structure constants entirely.
pub fn oracle_matrix_series(mats: &[Matrix], lower_central: bool) -> Vec<usize> {
    let flat = |ms: &[Matrix]| -> Vec<Vec<Rational>> { ms.iter().map(Matrix::flatten).collect() };
    let basis = mats.to_vec();
    let mut dims = vec![oracle_rank(&flat(&basis))];
    let mut current = basis.clone();
    while *dims.last().unwrap() != 0 {
        let left = if lower_central { &basis } else { &current };
        let mut next = Vec::new();
        for a in left {
            for b in &current {
                let c = a.commutator(b).unwrap();
                if !c.is_zero() {
                    next.push(c);
                }
            }
        }
        let nd = oracle_rank(&flat(&next));
        let stable = nd == *dims.last().unwrap();
        dims.push(nd);
        current = next;
        if stable {
            break;
        }
    }
    dims
}

/// Unit coordinate vectors for the wedge space of an algebra, used to place
/// word coordinates inside kernels.
pub fn wedge_unit(alg: &NLieAlgebra, word: &[usize]) -> Vec<Rational> {
    let words = filippov::wedge_words(alg);
    let pos = words
        .iter()
        .position(|w| w == word)
        .expect("word in range");
    unit(words.len(), pos)
}
