//! The Fano test for `M = G^C ×_{P,τ} F`.
//!
//! For each vertex `q` of the scaled canonical polytope the criterion point
//! is `p_q = z_V + G⁻¹(τ*q)`, an element of `z(k)`. `M` is Fano iff `F` is
//! Fano and every root of `R_m^+` is positive on every `p_q`. Each condition
//! is linear in `q`, so testing the vertices suffices.

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::flag::FlagManifold;
use crate::linalg::{self, Rational};
use crate::toric_fiber::{self, CanonicalPolytope, ValidFan};
use crate::twist::{pullback_vertex, Twist};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionPoint {
    pub vertex_index: usize,
    /// Coweight coordinates.
    pub p: Vec<Rational>,
}

pub fn criterion_points(
    fm: &FlagManifold,
    poly: &CanonicalPolytope,
    t: &Twist<'_>,
) -> Vec<CriterionPoint> {
    points_for(fm, poly.vertices(), t)
}

/// Criterion points for an arbitrary list of fiber points `q`.
pub fn points_for(fm: &FlagManifold, qs: &[Vec<Rational>], t: &Twist<'_>) -> Vec<CriterionPoint> {
    qs.iter()
        .enumerate()
        .map(|(vertex_index, q)| CriterionPoint {
            vertex_index,
            p: point_for(fm, q, t),
        })
        .collect()
}

pub fn point_for(fm: &FlagManifold, q: &[Rational], t: &Twist<'_>) -> Vec<Rational> {
    let phi = pullback_vertex(t, q);
    let w = linalg::solve(t.gram(), &phi).expect("Killing form is definite on z(k)");
    let mut p = fm.z_v().to_vec();
    for (wi, b) in w.iter().zip(t.basis()) {
        for (pj, bj) in p.iter_mut().zip(b) {
            *pj += wi * bj;
        }
    }
    p
}

/// A chamber functional, identified by one representative root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalInfo {
    pub representative: Vec<i64>,
    /// Number of roots of `R_m^+` restricting to this functional.
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub vertex: usize,
    pub functional: usize,
    pub margin: Rational,
    pub root: Vec<i64>,
    pub boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoReport {
    pub fiber_fano: bool,
    /// Scaled fiber points used: polytope vertices, or the fixed-point images
    /// when the fiber is not Fano.
    pub vertices: Vec<Vec<Rational>>,
    pub points: Vec<CriterionPoint>,
    pub functionals: Vec<FunctionalInfo>,
    /// `margins[v][f]` is functional `f` evaluated on `p_v`.
    pub margins: Vec<Vec<Rational>>,
    pub min_margin: Rational,
    pub failures: Vec<Failure>,
    pub verdict: bool,
    /// Smallest margin is exactly zero: `c₁` degenerate rather than positive.
    pub boundary: bool,
    pub barycenter: Option<Vec<Rational>>,
    pub warnings: Vec<String>,
}

pub fn evaluate_criterion(fm: &FlagManifold, fan: &ValidFan, t: &Twist<'_>) -> Result<FanoReport> {
    assert!(
        std::ptr::eq(fm, t.flag()),
        "twist was validated against a different flag"
    );
    assert_eq!(
        t.fiber_dim(),
        fan.dim(),
        "twist and fiber dimensions differ"
    );

    let fiber_fano = toric_fiber::fano_fan_check(fan);
    let (vertices, barycenter) = if fiber_fano {
        let poly = toric_fiber::canonical_polytope(fan)?;
        let b = toric_fiber::barycenter(&poly);
        (poly.vertices().to_vec(), Some(b))
    } else {
        (toric_fiber::fixed_point_images(fan), None)
    };

    let points = points_for(fm, &vertices, t);
    let functionals: Vec<FunctionalInfo> = fm
        .chamber()
        .iter()
        .map(|f| FunctionalInfo {
            representative: fm.root(f.representative()).coords.clone(),
            multiplicity: f.roots.len(),
        })
        .collect();
    let margins: Vec<Vec<Rational>> = points
        .iter()
        .map(|pt| {
            fm.chamber()
                .iter()
                .map(|f| fm.root(f.representative()).eval(&pt.p))
                .collect()
        })
        .collect();
    let min_margin = margins
        .iter()
        .flatten()
        .min()
        .cloned()
        .expect("a complete fan has at least one cone and a flag at least one functional");

    let mut failures = Vec::new();
    for (v, row) in margins.iter().enumerate() {
        for (f, m) in row.iter().enumerate() {
            if !m.is_positive() {
                failures.push(Failure {
                    vertex: v,
                    functional: f,
                    margin: m.clone(),
                    root: functionals[f].representative.clone(),
                    boundary: m.is_zero(),
                });
            }
        }
    }

    let mut warnings = Vec::new();
    if !fiber_fano {
        warnings.push("fiber fan is not Fano".to_string());
    }
    if !t.is_surjective() {
        warnings.push("twist is not surjective onto the fiber torus".to_string());
    }
    if !t.is_integral() {
        warnings.push(
            "twist images are not integral on the supplied basis; group-level integrality is not certified"
                .to_string(),
        );
    }

    Ok(FanoReport {
        fiber_fano,
        verdict: fiber_fano && min_margin.is_positive(),
        boundary: min_margin.is_zero(),
        vertices,
        points,
        functionals,
        margins,
        min_margin,
        failures,
        barycenter,
        warnings,
    })
}
