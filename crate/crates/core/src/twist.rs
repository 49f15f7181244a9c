//! The twist `τ` restricted to `z(k)`, as a rational linear map into the
//! Lie algebra of the fiber torus.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::flag::{gram_on, FlagManifold};
use crate::linalg::{self, Matrix, Rational};

/// A validated twist: a basis `B_1, …, B_s` of `z(k)` in coweight
/// coordinates and the images `τ(B_i)` in fiber-lattice coordinates.
#[derive(Debug, Clone)]
pub struct Twist<'a> {
    flag: &'a FlagManifold,
    basis: Vec<Vec<Rational>>,
    images: Vec<Vec<Rational>>,
    gram: Matrix,
    integral: bool,
    surjective: bool,
}

/// Validates a twist; `τ` must be surjective onto the fiber torus.
pub fn validate_twist<'a>(
    flag: &'a FlagManifold,
    basis: Vec<Vec<Rational>>,
    images: Vec<Vec<Rational>>,
    fiber_dim: usize,
) -> Result<Twist<'a>> {
    validate_twist_with(flag, basis, images, fiber_dim, false)
}

/// As [`validate_twist`], optionally accepting a non-surjective `τ` (for
/// instance the trivial twist, which gives the product `V × F`).
pub fn validate_twist_with<'a>(
    flag: &'a FlagManifold,
    basis: Vec<Vec<Rational>>,
    images: Vec<Vec<Rational>>,
    fiber_dim: usize,
    allow_non_surjective: bool,
) -> Result<Twist<'a>> {
    let n = flag.root_system().total_rank();
    for (i, b) in basis.iter().enumerate() {
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                path: format!("twist.basis[{i}]"),
                expected: n,
                found: b.len(),
            });
        }
    }
    if images.len() != basis.len() {
        return Err(Error::DimensionMismatch {
            path: "twist.images".into(),
            expected: basis.len(),
            found: images.len(),
        });
    }
    for (i, img) in images.iter().enumerate() {
        if img.len() != fiber_dim {
            return Err(Error::DimensionMismatch {
                path: format!("twist.images[{i}]"),
                expected: fiber_dim,
                found: img.len(),
            });
        }
    }
    for (index, b) in basis.iter().enumerate() {
        if let Some(&r) = flag
            .r_o()
            .iter()
            .find(|&&r| !flag.root(r).eval(b).is_zero())
        {
            return Err(Error::NotInCenter {
                index,
                root: flag.root(r).coords.clone(),
            });
        }
    }
    if basis.len() != flag.z_dim() {
        return Err(Error::NotABasis {
            reason: format!("{} vectors given, dim z(k) = {}", basis.len(), flag.z_dim()),
        });
    }
    if linalg::rank(&basis) < basis.len() {
        return Err(Error::NotABasis {
            reason: "vectors are linearly dependent".into(),
        });
    }
    let rank = linalg::rank(&images);
    if rank < fiber_dim && !allow_non_surjective {
        return Err(Error::RankDeficient {
            rank,
            dim: fiber_dim,
        });
    }
    let gram = gram_on(flag.root_system(), &basis);
    let integral = images.iter().all(|v| linalg::is_integral(v));
    Ok(Twist {
        flag,
        basis,
        images,
        gram,
        integral,
        surjective: rank == fiber_dim,
    })
}

impl<'a> Twist<'a> {
    pub fn flag(&self) -> &'a FlagManifold {
        self.flag
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn images(&self) -> &[Vec<Rational>] {
        &self.images
    }

    /// Killing Gram of the twist basis.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn fiber_dim(&self) -> usize {
        self.images.first().map_or(0, Vec::len)
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    /// Whether every image is integral on the supplied basis. This is a
    /// heuristic only: the lattice of `Z(K)°` depends on the global group.
    pub fn is_integral(&self) -> bool {
        self.integral
    }
}

/// `φ_i = <q, τ(B_i)>`: the pullback `τ*q` on the twist basis.
pub fn pullback_vertex(t: &Twist<'_>, q: &[Rational]) -> Vec<Rational> {
    t.images.iter().map(|img| linalg::dot(q, img)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::{build_flag, FlagSpec};
    use crate::linalg::{frac, int, ints};
    use crate::root_system::{build_root_system, Family, SimpleFactor};

    fn a1_borel() -> FlagManifold {
        let rs = build_root_system(&[SimpleFactor::new(Family::A, 1).unwrap()]).unwrap();
        build_flag(FlagSpec {
            root_system: rs,
            marks: ints(&[1]),
        })
        .unwrap()
    }

    #[test]
    fn hirzebruch_twists_are_valid() {
        let fm = a1_borel();
        for n in 0..6 {
            let t = validate_twist(&fm, vec![ints(&[1])], vec![vec![frac(n, 2)]], 1);
            // n = 0 gives the zero map, which is not surjective.
            if n == 0 {
                assert!(matches!(t, Err(Error::RankDeficient { rank: 0, dim: 1 })));
                let t =
                    validate_twist_with(&fm, vec![ints(&[1])], vec![ints(&[0])], 1, true).unwrap();
                assert!(!t.is_surjective());
                continue;
            }
            let t = t.unwrap();
            assert_eq!(t.is_integral(), n % 2 == 0);
            assert_eq!(pullback_vertex(&t, &ints(&[1])), vec![frac(n, 2)]);
            assert_eq!(pullback_vertex(&t, &ints(&[-1])), vec![frac(-n, 2)]);
            assert_eq!(pullback_vertex(&t, &ints(&[0])), vec![int(0)]);
        }
    }

    #[test]
    fn so4n_preset_twist() {
        let n = 3i64;
        let nn = 2 * n as usize;
        let rs = build_root_system(&[SimpleFactor::new(Family::D, nn).unwrap()]).unwrap();
        let mut marks = vec![int(0); nn];
        marks[n as usize - 1] = int(-1);
        marks[nn - 1] = int(4);
        let fm = build_flag(FlagSpec {
            root_system: rs,
            marks,
        })
        .unwrap();
        let mut j1 = vec![int(0); nn];
        j1[n as usize - 1] = int(1);
        let mut j2 = vec![int(0); nn];
        j2[n as usize - 1] = int(-1);
        j2[nn - 1] = int(2);
        let t = validate_twist(
            &fm,
            vec![j1, j2],
            vec![ints(&[3 * n, 0]), ints(&[0, 3 * n])],
            2,
        )
        .unwrap();
        assert_eq!(
            pullback_vertex(&t, &ints(&[-1, -1])),
            ints(&[-3 * n, -3 * n])
        );
        let d = 4 * n * (2 * n - 1);
        assert_eq!(t.gram(), &vec![ints(&[d, 0]), ints(&[0, d])]);
    }

    #[test]
    fn basis_errors() {
        let rs = build_root_system(&[SimpleFactor::new(Family::A, 2).unwrap()]).unwrap();
        let fm = build_flag(FlagSpec {
            root_system: rs,
            marks: ints(&[1, 0]),
        })
        .unwrap();
        // z(k) is spanned by the first fundamental coweight.
        assert_eq!(fm.z_dim(), 1);
        let e = validate_twist(&fm, vec![ints(&[0, 1])], vec![ints(&[1])], 1);
        assert!(matches!(e, Err(Error::NotInCenter { index: 0, .. })));
        let e = validate_twist(
            &fm,
            vec![ints(&[1, 0]), ints(&[2, 0])],
            vec![ints(&[1]), ints(&[1])],
            1,
        );
        assert!(matches!(e, Err(Error::NotABasis { .. })));
        let e = validate_twist(&fm, vec![ints(&[1, 0])], vec![ints(&[0])], 1);
        assert!(matches!(e, Err(Error::RankDeficient { .. })));
    }
}
