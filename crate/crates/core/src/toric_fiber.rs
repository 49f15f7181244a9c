//! Smooth complete fans, the Fano test, and the canonical polytope.
//!
//! At the fixed point of a maximal cone `σ` the torus acts on the tangent
//! space with weights `u_k^σ`, the basis dual to the generators of `σ`. The
//! trace formula for the canonical polytope then places that fixed point at
//! `-Σ_k u_k^σ` (scaled by `2π`). Equivalently the vertex is the unique `u`
//! with `<u, v_k> = -1` on the generators of `σ`, and the polytope is
//! `{u : <u, v_ρ> >= -1 for every ray ρ}`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::Deref;

use itertools::Itertools;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, int, Matrix, Rational};

/// A fan given by its rays and maximal cones (each a list of ray indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn dim(&self) -> usize {
        self.rays.first().map_or(0, Vec::len)
    }

    /// Fan of `CP^m`: rays `e_1, …, e_m, -(e_1 + … + e_m)`, every `m`-subset
    /// a maximal cone. Cone 0 omits the last ray; cone `r` omits `e_r`, so
    /// the vertex order is `Q_o, Q_1, …, Q_m`.
    pub fn projective_space(m: usize) -> Fan {
        let mut rays: Vec<Vec<i64>> = (0..m)
            .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
            .collect();
        rays.push(vec![-1; m]);
        let cones = std::iter::once(m)
            .chain(0..m)
            .map(|skip| (0..=m).filter(|&k| k != skip).collect())
            .collect();
        Fan { rays, cones }
    }

    /// Product fan, rays of `self` first.
    pub fn product(&self, other: &Fan) -> Fan {
        let (a, b) = (self.dim(), other.dim());
        let mut rays: Vec<Vec<i64>> = self
            .rays
            .iter()
            .map(|r| r.iter().copied().chain(std::iter::repeat_n(0, b)).collect())
            .collect();
        rays.extend(
            other
                .rays
                .iter()
                .map(|r| std::iter::repeat_n(0, a).chain(r.iter().copied()).collect()),
        );
        let shift = self.rays.len();
        let cones = self
            .cones
            .iter()
            .cartesian_product(&other.cones)
            .map(|(c, d)| {
                c.iter()
                    .copied()
                    .chain(d.iter().map(|k| k + shift))
                    .collect()
            })
            .collect();
        Fan { rays, cones }
    }
}

/// A fan that passed [`validate_fan`]: smooth, with paired facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidFan(Fan);

impl Deref for ValidFan {
    type Target = Fan;
    fn deref(&self) -> &Fan {
        &self.0
    }
}

impl ValidFan {
    pub fn into_inner(self) -> Fan {
        self.0
    }
}

fn malformed(reason: impl Into<String>) -> Error {
    Error::MalformedFan {
        reason: reason.into(),
    }
}

pub fn validate_fan(fan: Fan) -> Result<ValidFan> {
    let m = fan.dim();
    if m == 0 {
        return Err(malformed("fan has no rays or zero dimension"));
    }
    for (index, ray) in fan.rays.iter().enumerate() {
        if ray.len() != m {
            return Err(Error::DimensionMismatch {
                path: format!("fiber.rays[{index}]"),
                expected: m,
                found: ray.len(),
            });
        }
        let g = ray.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g != 1 {
            return Err(Error::NonPrimitiveRay {
                index,
                ray: ray.clone(),
            });
        }
    }
    if fan.rays.iter().duplicates().next().is_some() {
        return Err(malformed("repeated ray"));
    }
    let mut seen = BTreeSet::new();
    for (index, cone) in fan.cones.iter().enumerate() {
        let set: BTreeSet<usize> = cone.iter().copied().collect();
        if cone.len() != m || set.len() != m {
            return Err(malformed(format!(
                "cone {index} must have {m} distinct rays"
            )));
        }
        if let Some(&k) = set.iter().find(|&&k| k >= fan.rays.len()) {
            return Err(malformed(format!("cone {index} refers to missing ray {k}")));
        }
        if !seen.insert(set) {
            return Err(malformed(format!("cone {index} is repeated")));
        }
        let d = linalg::det(&generators(&fan, cone));
        if d.abs() != Rational::one() {
            return Err(Error::NonUnimodularCone {
                index,
                det: d.to_string(),
            });
        }
    }
    if let Some(k) = (0..fan.rays.len()).find(|k| !fan.cones.iter().any(|c| c.contains(k))) {
        return Err(malformed(format!("ray {k} lies in no maximal cone")));
    }

    // Every wall must separate exactly two maximal cones.
    let mut walls: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (ci, cone) in fan.cones.iter().enumerate() {
        let sorted: Vec<usize> = cone.iter().copied().sorted().collect();
        for skip in 0..m {
            let wall: Vec<usize> = sorted
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &k)| k)
                .collect();
            walls.entry(wall).or_default().push(ci);
        }
    }
    for (wall, cones) in &walls {
        if cones.len() != 2 {
            return Err(Error::IncompleteFan {
                reason: format!("wall {wall:?} bounds {} maximal cone(s)", cones.len()),
            });
        }
    }
    let mut reached = vec![false; fan.cones.len()];
    let mut queue = VecDeque::from([0usize]);
    reached[0] = true;
    while let Some(c) = queue.pop_front() {
        for pair in walls.values().filter(|p| p.contains(&c)) {
            for &d in pair {
                if !reached[d] {
                    reached[d] = true;
                    queue.push_back(d);
                }
            }
        }
    }
    if reached.iter().any(|r| !r) {
        return Err(Error::IncompleteFan {
            reason: "cone adjacency graph is disconnected".into(),
        });
    }
    Ok(ValidFan(fan))
}

fn generators(fan: &Fan, cone: &[usize]) -> Matrix {
    cone.iter().map(|&k| linalg::ints(&fan.rays[k])).collect()
}

/// The unique `u` with `<u, v_k> = -1` on the generators of cone `c`.
fn support_element(fan: &Fan, c: usize) -> Vec<Rational> {
    let m = fan.dim();
    linalg::solve(&generators(fan, &fan.cones[c]), &vec![int(-1); m]).expect("unimodular cone")
}

/// True iff the anticanonical support function is strictly convex: for
/// every cone, `<u_σ, v> > -1` for every ray `v` outside it.
pub fn fano_fan_check(fan: &ValidFan) -> bool {
    (0..fan.cones.len()).all(|c| {
        let u = support_element(fan, c);
        fan.rays
            .iter()
            .enumerate()
            .filter(|(k, _)| !fan.cones[c].contains(k))
            .all(|(_, v)| linalg::dot_int(v, &u) > int(-1))
    })
}

/// Tangent weights at the fixed point of cone `c`: the basis dual to the
/// cone's generators, in the cone's ray order.
pub fn fixed_point_weights(fan: &ValidFan, c: usize) -> Vec<Vec<Rational>> {
    let inv = linalg::inverse(&generators(fan, &fan.cones[c])).expect("unimodular cone");
    linalg::transpose(&inv)
}

/// `-Σ_k u_k^σ` for every maximal cone, in cone order. Defined for any
/// smooth fan, Fano or not.
pub fn fixed_point_images(fan: &ValidFan) -> Vec<Vec<Rational>> {
    (0..fan.cones.len())
        .map(|c| {
            let weights = fixed_point_weights(fan, c);
            (0..fan.dim())
                .map(|j| -weights.iter().fold(Rational::zero(), |s, w| s + &w[j]))
                .collect()
        })
        .collect()
}

/// `<u, normal> >= offset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl HalfSpace {
    pub fn slack(&self, u: &[Rational]) -> Rational {
        linalg::dot_int(&self.normal, u) - int(self.offset)
    }
}

/// The scaled canonical polytope `2π·Δ_F` in both representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPolytope {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    halfspaces: Vec<HalfSpace>,
    /// `cones[i]` is the maximal cone whose fixed point maps to vertex `i`.
    cones: Vec<Vec<usize>>,
}

impl CanonicalPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn vertex_cone(&self, i: usize) -> &[usize] {
        &self.cones[i]
    }

    pub fn contains(&self, u: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| !h.slack(u).is_negative())
    }
}

pub fn canonical_polytope(fan: &ValidFan) -> Result<CanonicalPolytope> {
    let vertices = fixed_point_images(fan);
    let halfspaces: Vec<HalfSpace> = fan
        .rays
        .iter()
        .map(|r| HalfSpace {
            normal: r.clone(),
            offset: -1,
        })
        .collect();
    // Simple polytope: tight exactly on the cone's own rays.
    for (c, v) in vertices.iter().enumerate() {
        for (k, h) in halfspaces.iter().enumerate() {
            let s = h.slack(v);
            let tight = fan.cones[c].contains(&k);
            if (tight && !s.is_zero()) || (!tight && !s.is_positive()) {
                return Err(Error::NotFano);
            }
        }
    }
    Ok(CanonicalPolytope {
        dim: fan.dim(),
        vertices,
        halfspaces,
        cones: fan.cones.clone(),
    })
}

/// Vertices of `{u : <u, n_i> >= c_i}` by brute force over `dim`-subsets of
/// constraints. Sorted, duplicates removed.
pub fn vertices_from_halfspaces(halfspaces: &[HalfSpace], dim: usize) -> Vec<Vec<Rational>> {
    let mut out: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for subset in (0..halfspaces.len()).combinations(dim) {
        let a: Matrix = subset
            .iter()
            .map(|&i| linalg::ints(&halfspaces[i].normal))
            .collect();
        let b: Vec<Rational> = subset.iter().map(|&i| int(halfspaces[i].offset)).collect();
        if let Some(u) = linalg::solve(&a, &b) {
            if halfspaces.iter().all(|h| !h.slack(&u).is_negative()) {
                out.insert(u);
            }
        }
    }
    out.into_iter().collect()
}

/// Exact Lebesgue barycenter.
///
/// The polytope is coned from the origin over each facet; each facet is
/// coned from its vertex average over its own facets, recursively down to
/// vertices. Faces are read off the fan: the face of a cone `τ` has as
/// vertices the maximal cones containing `τ`.
pub fn barycenter(poly: &CanonicalPolytope) -> Vec<Rational> {
    let m = poly.dim;
    let mut simplices = Vec::new();
    star(poly, &[], &mut Vec::new(), &mut simplices);

    let mut total = Rational::zero();
    let mut moment = vec![Rational::zero(); m];
    for s in &simplices {
        let edges: Matrix = s[1..]
            .iter()
            .map(|p| p.iter().zip(&s[0]).map(|(a, b)| a - b).collect())
            .collect();
        let vol = linalg::det(&edges).abs();
        for (j, mj) in moment.iter_mut().enumerate() {
            let sum = s.iter().fold(Rational::zero(), |acc, p| acc + &p[j]);
            *mj += &vol * sum;
        }
        total += vol;
    }
    // The 1/m! in every volume cancels; the centroid's 1/(m+1) does not.
    let denom = total * int(m as i64 + 1);
    moment.into_iter().map(|x| x / &denom).collect()
}

fn star(
    poly: &CanonicalPolytope,
    face: &[usize],
    prefix: &mut Vec<Vec<Rational>>,
    out: &mut Vec<Vec<Vec<Rational>>>,
) {
    let containing: Vec<usize> = (0..poly.cones.len())
        .filter(|&c| face.iter().all(|k| poly.cones[c].contains(k)))
        .collect();
    if face.len() == poly.dim {
        debug_assert_eq!(containing.len(), 1);
        let mut s = prefix.clone();
        s.push(poly.vertices[containing[0]].clone());
        out.push(s);
        return;
    }
    let apex = if face.is_empty() {
        vec![Rational::zero(); poly.dim]
    } else {
        let n = int(containing.len() as i64);
        (0..poly.dim)
            .map(|j| {
                containing
                    .iter()
                    .fold(Rational::zero(), |s, &c| s + &poly.vertices[c][j])
                    / &n
            })
            .collect()
    };
    prefix.push(apex);
    let sub_faces: BTreeSet<usize> = containing
        .iter()
        .flat_map(|&c| poly.cones[c].iter().copied())
        .filter(|k| !face.contains(k))
        .collect();
    for k in sub_faces {
        let mut sub = face.to_vec();
        sub.push(k);
        star(poly, &sub, prefix, out);
    }
    prefix.pop();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, ints};

    fn fan(rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
        Fan {
            rays: rays.iter().map(|r| r.to_vec()).collect(),
            cones: cones.iter().map(|c| c.to_vec()).collect(),
        }
    }

    fn sorted(mut v: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
        v.sort();
        v
    }

    #[test]
    fn cp2_is_valid_and_fano() {
        let f = validate_fan(Fan::projective_space(2)).unwrap();
        assert!(fano_fan_check(&f));
        let p = canonical_polytope(&f).unwrap();
        assert_eq!(
            sorted(p.vertices().to_vec()),
            sorted(vec![ints(&[-1, -1]), ints(&[2, -1]), ints(&[-1, 2])])
        );
    }

    #[test]
    fn cp1_vertices() {
        let f = validate_fan(Fan::projective_space(1)).unwrap();
        let p = canonical_polytope(&f).unwrap();
        assert_eq!(sorted(p.vertices().to_vec()), vec![ints(&[-1]), ints(&[1])]);
        assert_eq!(barycenter(&p), ints(&[0]));
    }

    #[test]
    fn non_primitive_ray() {
        let f = fan(&[&[2, 0], &[0, 1], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]]);
        assert!(matches!(
            validate_fan(f),
            Err(Error::NonPrimitiveRay { index: 0, .. })
        ));
        let z = fan(&[&[0, 0], &[0, 1]], &[&[0, 1]]);
        assert!(matches!(
            validate_fan(z),
            Err(Error::NonPrimitiveRay { .. })
        ));
    }

    #[test]
    fn missing_cone_is_incomplete() {
        let mut f = Fan::projective_space(2);
        f.cones.pop();
        assert!(matches!(validate_fan(f), Err(Error::IncompleteFan { .. })));
    }

    #[test]
    fn singular_cone() {
        let f = fan(&[&[1, 0], &[1, 2], &[-1, -1]], &[&[0, 1], &[1, 2], &[2, 0]]);
        assert!(matches!(
            validate_fan(f),
            Err(Error::NonUnimodularCone { index: 0, .. })
        ));
    }

    #[test]
    fn hirzebruch_two_is_not_fano() {
        let f = fan(
            &[&[1, 0], &[0, 1], &[-1, 2], &[0, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        );
        let f = validate_fan(f).unwrap();
        assert!(!fano_fan_check(&f));
        assert_eq!(canonical_polytope(&f), Err(Error::NotFano));
    }

    #[test]
    fn p1xp1() {
        let f = validate_fan(Fan::projective_space(1).product(&Fan::projective_space(1))).unwrap();
        assert!(fano_fan_check(&f));
        let p = canonical_polytope(&f).unwrap();
        assert_eq!(
            sorted(p.vertices().to_vec()),
            vec![
                ints(&[-1, -1]),
                ints(&[-1, 1]),
                ints(&[1, -1]),
                ints(&[1, 1])
            ]
        );
        assert_eq!(barycenter(&p), ints(&[0, 0]));
    }

    #[test]
    fn blowup_barycenter() {
        let f = fan(
            &[&[1, 0], &[1, 1], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
        );
        let p = canonical_polytope(&validate_fan(f).unwrap()).unwrap();
        assert_eq!(barycenter(&p), vec![frac(1, 12), frac(1, 12)]);
    }

    #[test]
    fn cp3_barycenter_and_weights() {
        let f = validate_fan(Fan::projective_space(3)).unwrap();
        let p = canonical_polytope(&f).unwrap();
        assert_eq!(barycenter(&p), ints(&[0, 0, 0]));
        let w = fixed_point_weights(&f, 0);
        for (k, u) in w.iter().enumerate() {
            for (j, &r) in f.cones[0].iter().enumerate() {
                let expected = if j == k { int(1) } else { int(0) };
                assert_eq!(linalg::dot_int(&f.rays[r], u), expected);
            }
        }
    }

    #[test]
    fn halfspace_enumeration_matches() {
        let f = validate_fan(Fan::projective_space(2)).unwrap();
        let p = canonical_polytope(&f).unwrap();
        assert_eq!(
            vertices_from_halfspaces(p.halfspaces(), 2),
            sorted(p.vertices().to_vec())
        );
    }
}
