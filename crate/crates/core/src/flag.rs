//! Flag manifolds `G/K` given by a polarization element `ξ`.
//!
//! `ξ` is written through its marks `α_i(ξ)`, which are exactly its
//! fundamental-coweight coordinates. Roots vanishing on `ξ` form `R_o`; roots
//! positive on `ξ` form `R_m^+` and fix the invariant complex structure.
//!
//! All moment-type quantities are scaled by `2π`, so `z_V` below is the
//! rational element `2π·Z_V`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Rational};
use crate::root_system::{Root, RootSystem};

#[derive(Debug, Clone)]
pub struct FlagSpec {
    pub root_system: RootSystem,
    pub marks: Vec<Rational>,
}

/// The restriction of one or more roots of `R_m^+` to `z(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberFunctional {
    /// Values on the flag's `z(k)` basis.
    pub values: Vec<Rational>,
    /// Indices of every root of `R_m^+` with this restriction, ascending.
    pub roots: Vec<usize>,
}

impl ChamberFunctional {
    pub fn representative(&self) -> usize {
        self.roots[0]
    }
}

#[derive(Debug, Clone)]
pub struct FlagManifold {
    rs: RootSystem,
    marks: Vec<Rational>,
    r_o: Vec<usize>,
    r_m_plus: Vec<usize>,
    z_basis: Vec<Vec<Rational>>,
    z_gram: Matrix,
    z_v: Vec<Rational>,
    chamber: Vec<ChamberFunctional>,
}

pub fn build_flag(spec: FlagSpec) -> Result<FlagManifold> {
    let FlagSpec {
        root_system: rs,
        marks,
    } = spec;
    let n = rs.total_rank();
    if marks.len() != n {
        return Err(Error::DimensionMismatch {
            path: "flag.marks".into(),
            expected: n,
            found: marks.len(),
        });
    }
    let mut r_o = Vec::new();
    let mut r_m_plus = Vec::new();
    for (i, root) in rs.roots().iter().enumerate() {
        let v = root.eval(&marks);
        if v.is_zero() {
            r_o.push(i);
        } else if v.is_positive() {
            r_m_plus.push(i);
        }
    }
    if r_m_plus.is_empty() {
        return Err(Error::TrivialFlag);
    }

    let constraints: Matrix = r_o
        .iter()
        .filter(|&&i| rs.roots()[i].positive)
        .map(|&i| linalg::ints(&rs.roots()[i].coords))
        .collect();
    let z_basis = linalg::nullspace(&constraints, n);
    let z_gram = gram_on(&rs, &z_basis);

    let mut sum = vec![Rational::zero(); n];
    for &i in &r_m_plus {
        for (s, &c) in sum.iter_mut().zip(&rs.roots()[i].coords) {
            *s += linalg::int(c);
        }
    }
    let z_v = rs.dual_element(&sum);

    let mut chamber: Vec<ChamberFunctional> = Vec::new();
    for &i in &r_m_plus {
        let root = &rs.roots()[i];
        let values: Vec<Rational> = z_basis.iter().map(|b| root.eval(b)).collect();
        if values.iter().all(Zero::is_zero) {
            return Err(Error::DegenerateFunctional {
                root: root.coords.clone(),
            });
        }
        match chamber.iter_mut().find(|f| f.values == values) {
            Some(f) => f.roots.push(i),
            None => chamber.push(ChamberFunctional {
                values,
                roots: vec![i],
            }),
        }
    }

    Ok(FlagManifold {
        rs,
        marks,
        r_o,
        r_m_plus,
        z_basis,
        z_gram,
        z_v,
        chamber,
    })
}

/// Restricted Killing Gram `B(B_i, B_j)` of a family of Cartan elements.
pub fn gram_on(rs: &RootSystem, basis: &[Vec<Rational>]) -> Matrix {
    basis
        .iter()
        .map(|a| basis.iter().map(|b| rs.killing(a, b)).collect())
        .collect()
}

/// The scaled Kähler–Einstein element `z_V`, solving `G z_V = Σ_{α ∈ R_m^+} α`.
pub fn kahler_einstein_element(fm: &FlagManifold) -> Vec<Rational> {
    fm.z_v.clone()
}

pub fn chamber_functionals(fm: &FlagManifold) -> &[ChamberFunctional] {
    &fm.chamber
}

impl FlagManifold {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn marks(&self) -> &[Rational] {
        &self.marks
    }

    /// Indices of the roots vanishing on `ξ`.
    pub fn r_o(&self) -> &[usize] {
        &self.r_o
    }

    /// Indices of the roots positive on `ξ`.
    pub fn r_m_plus(&self) -> &[usize] {
        &self.r_m_plus
    }

    pub fn z_basis(&self) -> &[Vec<Rational>] {
        &self.z_basis
    }

    pub fn z_dim(&self) -> usize {
        self.z_basis.len()
    }

    pub fn z_gram(&self) -> &Matrix {
        &self.z_gram
    }

    pub fn z_v(&self) -> &[Rational] {
        &self.z_v
    }

    pub fn chamber(&self) -> &[ChamberFunctional] {
        &self.chamber
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.rs.roots()[i]
    }

    /// `H ∈ z(k)`, i.e. every root of `R_o` vanishes on `H`.
    pub fn in_center(&self, h: &[Rational]) -> bool {
        self.r_o.iter().all(|&i| self.root(i).eval(h).is_zero())
    }

    /// Scaled base moment value `μ(eP)`: the functional `Σ_{α ∈ R_m^+} α`
    /// in simple-root coordinates, whose `G`-dual is `z_V`.
    pub fn base_moment(&self) -> Vec<Rational> {
        linalg::mat_vec(self.rs.gram(), &self.z_v)
    }
}
