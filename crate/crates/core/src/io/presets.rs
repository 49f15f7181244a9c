//! Parameterized families with known answers.

use crate::error::{Error, Result};
use crate::linalg::{frac, int, ints, Rational};
use crate::root_system::{Family, SimpleFactor};

use super::spec::{FiberSpec, ProblemSpec, TwistSpec};

pub const NAMES: [&str; 2] = ["hirzebruch", "so4n-cp2"];

/// Hirzebruch surface `F_n` as `SL(2,C) ×_B CP¹` with `τ = α^n`.
///
/// On the fundamental coweight the twist image is `n/2`. The trivial twist
/// `n = 0` is flagged as non-surjective.
pub fn hirzebruch(n: u64) -> ProblemSpec {
    let n = i64::try_from(n).expect("n fits in i64");
    ProblemSpec {
        group: vec![SimpleFactor::new(Family::A, 1).unwrap()],
        marks: ints(&[1]),
        fiber: FiberSpec::ProjectiveSpace(1),
        twist: TwistSpec {
            basis: vec![ints(&[1])],
            images: vec![vec![frac(n, 2)]],
            allow_non_surjective: n == 0,
        },
    }
}

/// `SO(4n) ×_{K,τ} CP²` over `SO(4n)/U(n)×U(n)`, the orbit of `J₁ + 2J₂`.
///
/// In `D_{2n}` coweight coordinates `J₁ = e_n`, `J₂ = -e_n + 2e_{2n}`, and the
/// twist sends `J_i` to `3n` times the `i`-th fiber generator.
pub fn so4n_cp2(n: u64) -> Result<ProblemSpec> {
    if n < 2 {
        return Err(Error::RankTooSmall { n, min: 2 });
    }
    let k = n as usize;
    let rank = 2 * k;
    let unit = |i: usize, v: i64| -> Vec<Rational> {
        let mut e = vec![int(0); rank];
        e[i] = int(v);
        e
    };
    let mut marks = unit(k - 1, -1);
    marks[rank - 1] = int(4);
    let j1 = unit(k - 1, 1);
    let mut j2 = unit(k - 1, -1);
    j2[rank - 1] = int(2);
    let c = 3 * n as i64;
    Ok(ProblemSpec {
        group: vec![SimpleFactor::new(Family::D, rank).expect("rank >= 4")],
        marks,
        fiber: FiberSpec::ProjectiveSpace(2),
        twist: TwistSpec {
            basis: vec![j1, j2],
            images: vec![ints(&[c, 0]), ints(&[0, c])],
            allow_non_surjective: false,
        },
    })
}

pub fn preset(name: &str, n: u64) -> Result<ProblemSpec> {
    match name {
        "hirzebruch" => Ok(hirzebruch(n)),
        "so4n-cp2" => so4n_cp2(n),
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

pub fn default_parameter(name: &str) -> u64 {
    match name {
        "so4n-cp2" => 5,
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so4n_needs_d4() {
        assert_eq!(so4n_cp2(1), Err(Error::RankTooSmall { n: 1, min: 2 }));
        assert_eq!(so4n_cp2(2).unwrap().total_rank(), 4);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(preset("cp3", 1), Err(Error::UnknownPreset(_))));
    }
}
