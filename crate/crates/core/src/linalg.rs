//! Dense exact linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Rational>>`. Sizes here never exceed a few
//! dozen, so plain Gauss–Jordan elimination is all we need.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;
pub type Matrix = Vec<Vec<Rational>>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`; panics on a zero denominator.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` (optional sign, surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Dot product of an integer vector with a rational one.
pub fn dot_int(a: &[i64], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, _)| **x != 0)
        .fold(Rational::zero(), |acc, (&x, y)| acc + y * BigInt::from(x))
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn transpose(m: &[Vec<Rational>]) -> Matrix {
    if m.is_empty() {
        return vec![];
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Bilinear form `aᵀ G b`.
pub fn bilinear(g: &[Vec<Rational>], a: &[Rational], b: &[Rational]) -> Rational {
    dot(a, &mat_vec(g, b))
}

/// Reduced row echelon form in place; returns the pivot columns.
///
/// Pivots are taken as the first nonzero entry scanning columns left to
/// right and rows top to bottom, so the result is reproducible.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    rref(&mut m.to_vec()).len()
}

/// Basis of `{x : M x = 0}` for a matrix with `cols` columns.
///
/// One basis vector per free column, with a 1 in that column.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free = (0..cols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut x = vec![Rational::zero(); cols];
        x[f] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = -a[row][f].clone();
        }
        x
    })
    .collect()
}

/// Solves the square system `A x = b`; `None` when `A` is singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

pub fn inverse(a: &[Vec<Rational>]) -> Option<Matrix> {
    let n = a.len();
    let mut aug: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m = a.to_vec();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let s = &f * &m[c][j];
                m[i][j] -= s;
            }
        }
    }
    d
}

/// Positive definiteness via Sylvester's criterion.
pub fn is_positive_definite(a: &[Vec<Rational>]) -> bool {
    (1..=a.len()).all(|k| {
        let minor: Matrix = a[..k].iter().map(|r| r[..k].to_vec()).collect();
        det(&minor).is_positive()
    })
}

pub fn is_symmetric(a: &[Vec<Rational>]) -> bool {
    (0..a.len()).all(|i| (0..i).all(|j| a[i][j] == a[j][i]))
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}
