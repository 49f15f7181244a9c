//! Root systems of compact semisimple Lie algebras over the rationals.
//!
//! Roots are integer vectors in simple-root coordinates. Cartan elements are
//! written in fundamental-coweight coordinates, so coordinate `j` of `H` is
//! `α_j(H)` and evaluating a root on `H` is a dot product.
//!
//! The Killing form on the coweight basis is `G_ij = Σ_γ γ_i γ_j`, the sum
//! running over every root.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, dot_int, int, Matrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One simple factor `X_r`, numbered as in Bourbaki.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleFactor {
    family: Family,
    rank: usize,
}

impl SimpleFactor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(SimpleFactor { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix with `a_ij = <α_i^∨, α_j> = 2(α_i, α_j)/(α_i, α_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => (0..r - 1).for_each(|i| link(i, i + 1)),
            Family::D => {
                (0..r - 2).for_each(|i| link(i, i + 1));
                link(r - 3, r - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                (2..r - 1).for_each(|i| link(i, i + 1));
            }
            Family::F => (0..3).for_each(|i| link(i, i + 1)),
            Family::G => link(0, 1),
        }
        // Double and triple bonds; the long root sits on the `-1` side.
        match self.family {
            Family::B => a[r - 1][r - 2] = -2,
            Family::C => a[r - 2][r - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Half squared lengths `d_i = (α_i, α_i)/2` of the simple roots, long
    /// roots normalized to `(α, α) = 2`.
    fn half_lengths(&self, cartan: &[Vec<i64>]) -> Vec<Rational> {
        let r = self.rank;
        let mut d: Vec<Option<Rational>> = vec![None; r];
        d[0] = Some(int(1));
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..r {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    // d_i a_ij = d_j a_ji
                    let dj = d[i].clone().unwrap() * int(cartan[i][j]) / int(cartan[j][i]);
                    d[j] = Some(dj);
                    queue.push_back(j);
                }
            }
        }
        let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
        let max = d.iter().max().unwrap().clone();
        d.into_iter().map(|x| x / &max).collect()
    }

    /// Number of roots of the factor.
    pub fn root_count(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1),
            Family::B | Family::C => 2 * r * r,
            Family::D => 2 * r * (r - 1),
            Family::E => [72, 126, 240][r - 6],
            Family::F => 48,
            Family::G => 12,
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub coords: Vec<i64>,
    pub factor: usize,
    pub positive: bool,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// `γ(H)` for `H` in coweight coordinates.
    pub fn eval(&self, h: &[Rational]) -> Rational {
        dot_int(&self.coords, h)
    }
}

/// All roots of a semisimple algebra together with its Killing Gram matrix.
#[derive(Debug, Clone)]
pub struct RootSystem {
    factors: Vec<SimpleFactor>,
    offsets: Vec<usize>,
    total_rank: usize,
    roots: Vec<Root>,
    gram: Matrix,
    /// Weyl-invariant form on simple-root coordinates, long roots of length² 2.
    normalized: Matrix,
}

/// Builds the root system of a product of simple factors by reflection closure.
pub fn build_root_system(factors: &[SimpleFactor]) -> Result<RootSystem> {
    for f in factors {
        SimpleFactor::new(f.family, f.rank)?;
    }
    let total_rank: usize = factors.iter().map(|f| f.rank).sum();
    let mut offsets = Vec::with_capacity(factors.len());
    let mut roots = Vec::new();
    let mut normalized = vec![vec![Rational::zero(); total_rank]; total_rank];
    let mut off = 0;
    for (k, f) in factors.iter().enumerate() {
        offsets.push(off);
        let cartan = f.cartan_matrix();
        let d = f.half_lengths(&cartan);
        for i in 0..f.rank {
            for j in 0..f.rank {
                normalized[off + i][off + j] = &d[i] * int(cartan[i][j]);
            }
        }
        let mut local = reflection_closure(&cartan);
        local.sort_by_key(|c| {
            let h: i64 = c.iter().sum();
            (
                h < 0,
                h.abs(),
                c.iter().map(|x| x.abs()).collect::<Vec<_>>(),
            )
        });
        for c in local {
            let positive = c.iter().sum::<i64>() > 0;
            let mut coords = vec![0i64; total_rank];
            coords[off..off + f.rank].copy_from_slice(&c);
            roots.push(Root {
                coords,
                factor: k,
                positive,
            });
        }
        off += f.rank;
    }
    let gram = (0..total_rank)
        .map(|i| {
            (0..total_rank)
                .map(|j| int(roots.iter().map(|g| g.coords[i] * g.coords[j]).sum()))
                .collect()
        })
        .collect();
    Ok(RootSystem {
        factors: factors.to_vec(),
        offsets,
        total_rank,
        roots,
        gram,
        normalized,
    })
}

/// Closes the simple roots under the simple reflections
/// `s_i(γ) = γ - <γ, α_i^∨> α_i`.
fn reflection_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0i64; r];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(g) = queue.pop_front() {
        for i in 0..r {
            let pairing: i64 = (0..r).map(|j| g[j] * cartan[i][j]).sum();
            if pairing == 0 {
                continue;
            }
            let mut s = g.clone();
            s[i] -= pairing;
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    seen.into_iter().collect()
}

impl RootSystem {
    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn total_rank(&self) -> usize {
        self.total_rank
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = (usize, &Root)> {
        self.roots.iter().enumerate().filter(|(_, r)| r.positive)
    }

    /// Killing Gram matrix on the fundamental coweight basis.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Coordinate range of factor `k` inside `total_rank`.
    pub fn block(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k]..self.offsets[k] + self.factors[k].rank
    }

    pub fn find_root(&self, coords: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r.coords == coords)
    }

    /// Killing form `B(H, H')` of two Cartan elements in coweight coordinates.
    pub fn killing(&self, h: &[Rational], k: &[Rational]) -> Rational {
        linalg::bilinear(&self.gram, h, k)
    }

    /// The Cartan element `H` with `B(H, ·) = λ`, for `λ` in simple-root
    /// coordinates.
    pub fn dual_element(&self, functional: &[Rational]) -> Vec<Rational> {
        linalg::solve(&self.gram, functional).expect("Killing form is nondegenerate")
    }

    /// Normalized Weyl-invariant pairing `(β, γ)₀` of two roots.
    pub fn normalized_pairing(&self, a: &[i64], b: &[i64]) -> Rational {
        let a = linalg::ints(a);
        let b = linalg::ints(b);
        linalg::bilinear(&self.normalized, &a, &b)
    }

    /// `s_β(γ) = γ - 2(γ,β)/(β,β) β`.
    pub fn reflect(&self, beta: &[i64], gamma: &[i64]) -> Vec<i64> {
        let c = int(2) * self.normalized_pairing(gamma, beta) / self.normalized_pairing(beta, beta);
        assert!(c.is_integer(), "Cartan integers are integral");
        let c = c.to_integer();
        let c: i64 = c.try_into().expect("small Cartan integer");
        gamma.iter().zip(beta).map(|(g, b)| g - c * b).collect()
    }

    /// Indices of the roots of factor `k`.
    pub fn factor_roots(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(move |&i| self.roots[i].factor == k)
    }

    /// Distinct squared lengths appearing in factor `k` (one or two values).
    pub fn root_lengths(&self, k: usize) -> BTreeSet<Rational> {
        self.factor_roots(k)
            .map(|i| {
                let c = &self.roots[i].coords;
                self.normalized_pairing(c, c)
            })
            .collect()
    }
}

pub fn killing_gram(rs: &RootSystem) -> Matrix {
    rs.gram.clone()
}

/// `(α,α)₀ / Σ_γ (γ,α)₀²` for the first root of factor `k`.
pub fn killing_scale(rs: &RootSystem, k: usize) -> Rational {
    let first = rs.factor_roots(k).next().expect("factor exists");
    killing_scale_at(rs, first)
}

/// [`killing_scale`] computed from a chosen root; independent of the choice.
pub fn killing_scale_at(rs: &RootSystem, root: usize) -> Rational {
    let alpha = &rs.roots[root];
    let num = rs.normalized_pairing(&alpha.coords, &alpha.coords);
    let den = rs
        .factor_roots(alpha.factor)
        .map(|i| {
            let p = rs.normalized_pairing(&rs.roots[i].coords, &alpha.coords);
            &p * &p
        })
        .fold(Rational::zero(), |a, b| a + b);
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, ints};

    fn rs(spec: &[(Family, usize)]) -> RootSystem {
        let f: Vec<_> = spec
            .iter()
            .map(|&(fam, r)| SimpleFactor::new(fam, r).unwrap())
            .collect();
        build_root_system(&f).unwrap()
    }

    #[test]
    fn rank_constraints() {
        assert!(SimpleFactor::new(Family::D, 2).is_err());
        assert!(SimpleFactor::new(Family::E, 5).is_err());
        assert!(SimpleFactor::new(Family::F, 3).is_err());
        assert!(SimpleFactor::new(Family::G, 3).is_err());
        assert!(SimpleFactor::new(Family::A, 0).is_err());
        assert!(SimpleFactor::new(Family::E, 8).is_ok());
    }

    #[test]
    fn a1_has_two_roots() {
        let r = rs(&[(Family::A, 1)]);
        let coords: Vec<_> = r.roots().iter().map(|x| x.coords.clone()).collect();
        assert_eq!(coords, vec![vec![1], vec![-1]]);
    }

    #[test]
    fn classical_counts() {
        for (fam, rank) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 4),
            (Family::D, 4),
            (Family::D, 5),
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
            (Family::G, 2),
        ] {
            let f = SimpleFactor::new(fam, rank).unwrap();
            let r = build_root_system(&[f]).unwrap();
            assert_eq!(r.roots().len(), f.root_count(), "{f}");
        }
        assert_eq!(rs(&[(Family::D, 4)]).roots().len(), 24);
        assert_eq!(rs(&[(Family::G, 2)]).roots().len(), 12);
    }

    #[test]
    fn gram_examples() {
        assert_eq!(killing_gram(&rs(&[(Family::A, 1)])), vec![ints(&[2])]);
        assert_eq!(
            killing_gram(&rs(&[(Family::A, 2)])),
            vec![ints(&[4, 2]), ints(&[2, 4])]
        );
        let b2 = rs(&[(Family::B, 2)]);
        assert_eq!(killing_gram(&b2), vec![ints(&[6, 6]), ints(&[6, 12])]);
        // α₁ long, α₂ short
        assert_eq!(b2.normalized_pairing(&[1, 0], &[1, 0]), int(2));
        assert_eq!(b2.normalized_pairing(&[0, 1], &[0, 1]), int(1));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(killing_scale(&rs(&[(Family::A, 1)]), 0), frac(1, 4));
        assert_eq!(killing_scale(&rs(&[(Family::A, 2)]), 0), frac(1, 6));
        assert_eq!(killing_scale(&rs(&[(Family::B, 2)]), 0), frac(1, 6));
    }

    #[test]
    fn products_are_block_diagonal() {
        let r = rs(&[(Family::A, 2), (Family::G, 2)]);
        assert_eq!(r.roots().len(), 18);
        let g = r.gram();
        for i in r.block(0) {
            for j in r.block(1) {
                assert!(g[i][j].is_zero() && g[j][i].is_zero());
            }
        }
        for root in r.roots() {
            let support: Vec<_> = (0..4).filter(|&i| root.coords[i] != 0).collect();
            let blk = r.block(root.factor);
            assert!(support.iter().all(|i| blk.contains(i)));
        }
    }

    #[test]
    fn two_lengths_in_non_simply_laced() {
        for (fam, rank, short) in [
            (Family::B, 3, int(1)),
            (Family::C, 3, int(1)),
            (Family::F, 4, int(1)),
            (Family::G, 2, frac(2, 3)),
        ] {
            let r = rs(&[(fam, rank)]);
            let lens: Vec<_> = r.root_lengths(0).into_iter().collect();
            assert_eq!(lens, vec![short, int(2)], "{fam}{rank}");
        }
    }
}
