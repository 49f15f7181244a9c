#![allow(dead_code)]

use toric_fano::flag::{build_flag, FlagManifold, FlagSpec};
use toric_fano::linalg::{int, ints, Rational};
use toric_fano::root_system::{build_root_system, Family, SimpleFactor};
use toric_fano::toric_fiber::Fan;

pub fn flag(factors: &[(Family, usize)], marks: &[i64]) -> FlagManifold {
    let f: Vec<_> = factors
        .iter()
        .map(|&(fam, r)| SimpleFactor::new(fam, r).unwrap())
        .collect();
    build_flag(FlagSpec {
        root_system: build_root_system(&f).unwrap(),
        marks: ints(marks),
    })
    .unwrap()
}

pub fn so4n_marks(n: usize) -> Vec<i64> {
    let mut m = vec![0; 2 * n];
    m[n - 1] = -1;
    m[2 * n - 1] = 4;
    m
}

/// `J₁ = e_n`, `J₂ = -e_n + 2e_{2n}` in `D_{2n}` coweight coordinates.
pub fn so4n_basis(n: usize) -> Vec<Vec<Rational>> {
    let mut j1 = vec![int(0); 2 * n];
    j1[n - 1] = int(1);
    let mut j2 = vec![int(0); 2 * n];
    j2[n - 1] = int(-1);
    j2[2 * n - 1] = int(2);
    vec![j1, j2]
}

/// Complete 2D fan from rays listed in counter-clockwise order.
pub fn cyclic_fan(rays: &[[i64; 2]]) -> Fan {
    let k = rays.len();
    Fan {
        rays: rays.iter().map(|r| r.to_vec()).collect(),
        cones: (0..k).map(|i| vec![i, (i + 1) % k]).collect(),
    }
}

pub fn cp2_blowup(points: usize) -> Fan {
    match points {
        1 => cyclic_fan(&[[1, 0], [1, 1], [0, 1], [-1, -1]]),
        2 => cyclic_fan(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1]]),
        3 => cyclic_fan(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]]),
        _ => panic!("only 1..=3 points"),
    }
}

/// Polygon centroid by the shoelace formula; vertices in cyclic order.
pub fn shoelace_centroid(vs: &[Vec<Rational>]) -> Vec<Rational> {
    let k = vs.len();
    let mut area2 = int(0);
    let mut cx = int(0);
    let mut cy = int(0);
    for i in 0..k {
        let (a, b) = (&vs[i], &vs[(i + 1) % k]);
        let cross = &a[0] * &b[1] - &b[0] * &a[1];
        cx += (&a[0] + &b[0]) * &cross;
        cy += (&a[1] + &b[1]) * &cross;
        area2 += cross;
    }
    let d = area2 * int(3);
    vec![cx / &d, cy / &d]
}

pub fn sorted(mut v: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    v.sort();
    v
}
