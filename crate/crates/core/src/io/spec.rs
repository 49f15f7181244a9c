//! The JSON problem document.
//!
//! ```json
//! {
//!   "group": [{ "family": "A", "rank": 1 }],
//!   "flag": { "marks": ["1"] },
//!   "fiber": { "preset": "CPm", "m": 1 },
//!   "twist": { "basis": [["1"]], "images": [["1/2"]] }
//! }
//! ```
//!
//! Every rational is a string `"p/q"` or `"p"`; JSON numbers are rejected
//! there. A fiber is either `{ "preset": "CPm", "m": m }` or an explicit
//! `{ "rays": [[..]], "cones": [[..]] }` with integer rays and 0-based ray
//! indices. `twist.allow_non_surjective` is optional and defaults to false.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{parse_rational, Rational};
use crate::root_system::{Family, SimpleFactor};
use crate::toric_fiber::Fan;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub group: Vec<SimpleFactor>,
    /// `α_i(ξ)` for the polarization element `ξ`.
    pub marks: Vec<Rational>,
    pub fiber: FiberSpec,
    pub twist: TwistSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberSpec {
    /// `CP^m` with its standard fan.
    ProjectiveSpace(usize),
    Fan(Fan),
}

impl FiberSpec {
    pub fn fan(&self) -> Fan {
        match self {
            FiberSpec::ProjectiveSpace(m) => Fan::projective_space(*m),
            FiberSpec::Fan(f) => f.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            FiberSpec::ProjectiveSpace(m) => *m,
            FiberSpec::Fan(f) => f.dim(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistSpec {
    pub basis: Vec<Vec<Rational>>,
    pub images: Vec<Vec<Rational>>,
    pub allow_non_surjective: bool,
}

impl ProblemSpec {
    pub fn total_rank(&self) -> usize {
        self.group.iter().map(SimpleFactor::rank).sum()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    group: Vec<RawFactor>,
    flag: RawFlag,
    fiber: RawFiber,
    twist: RawTwist,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    family: String,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFlag {
    marks: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawFiber {
    Preset(RawPreset),
    Fan(RawFan),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPreset {
    preset: String,
    m: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFan {
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTwist {
    basis: Vec<Vec<String>>,
    images: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    allow_non_surjective: bool,
}

fn rational(path: String, s: &str) -> Result<Rational> {
    parse_rational(s).ok_or(Error::BadRational {
        path,
        value: s.to_string(),
    })
}

fn rationals(path: &str, v: &[String]) -> Result<Vec<Rational>> {
    v.iter()
        .enumerate()
        .map(|(i, s)| rational(format!("{path}[{i}]"), s))
        .collect()
}

fn check_len(path: String, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch {
            path,
            expected,
            found,
        });
    }
    Ok(())
}

/// Parses and structurally validates a problem document.
pub fn parse_spec(text: &str) -> Result<ProblemSpec> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawSpec = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Syntax {
            path: if path == "." {
                format!("line {}", inner.line())
            } else {
                path
            },
            reason: inner.to_string(),
        }
    })?;

    let mut group = Vec::with_capacity(raw.group.len());
    for (i, f) in raw.group.iter().enumerate() {
        let mut letters = f.family.chars();
        let family = match (letters.next(), letters.next()) {
            (Some(c), None) => Family::from_letter(c),
            _ => None,
        }
        .ok_or_else(|| Error::Syntax {
            path: format!("group[{i}].family"),
            reason: format!("unknown family {:?}", f.family),
        })?;
        group.push(SimpleFactor::new(family, f.rank)?);
    }
    if group.is_empty() {
        return Err(Error::Syntax {
            path: "group".into(),
            reason: "at least one simple factor is required".into(),
        });
    }
    let rank: usize = group.iter().map(SimpleFactor::rank).sum();

    let marks = rationals("flag.marks", &raw.flag.marks)?;
    check_len("flag.marks".into(), rank, marks.len())?;

    let fiber = match raw.fiber {
        RawFiber::Preset(p) => {
            if p.preset != "CPm" {
                return Err(Error::Syntax {
                    path: "fiber.preset".into(),
                    reason: format!("unknown fiber preset {:?}", p.preset),
                });
            }
            if p.m == 0 {
                return Err(Error::Syntax {
                    path: "fiber.m".into(),
                    reason: "fiber dimension must be positive".into(),
                });
            }
            FiberSpec::ProjectiveSpace(p.m)
        }
        RawFiber::Fan(f) => {
            let m = f.rays.first().map_or(0, Vec::len);
            for (i, r) in f.rays.iter().enumerate() {
                check_len(format!("fiber.rays[{i}]"), m, r.len())?;
            }
            FiberSpec::Fan(Fan {
                rays: f.rays,
                cones: f.cones,
            })
        }
    };
    let m = fiber.dim();

    let basis = raw
        .twist
        .basis
        .iter()
        .enumerate()
        .map(|(i, b)| rationals(&format!("twist.basis[{i}]"), b))
        .collect::<Result<Vec<_>>>()?;
    let images = raw
        .twist
        .images
        .iter()
        .enumerate()
        .map(|(i, b)| rationals(&format!("twist.images[{i}]"), b))
        .collect::<Result<Vec<_>>>()?;
    for (i, b) in basis.iter().enumerate() {
        check_len(format!("twist.basis[{i}]"), rank, b.len())?;
    }
    check_len("twist.images".into(), basis.len(), images.len())?;
    for (i, img) in images.iter().enumerate() {
        check_len(format!("twist.images[{i}]"), m, img.len())?;
    }

    Ok(ProblemSpec {
        group,
        marks,
        fiber,
        twist: TwistSpec {
            basis,
            images,
            allow_non_surjective: raw.twist.allow_non_surjective,
        },
    })
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Serializes a spec as a pretty-printed document accepted by [`parse_spec`].
pub fn emit_spec(spec: &ProblemSpec) -> String {
    let raw = RawSpec {
        group: spec
            .group
            .iter()
            .map(|f| RawFactor {
                family: f.family().to_string(),
                rank: f.rank(),
            })
            .collect(),
        flag: RawFlag {
            marks: strings(&spec.marks),
        },
        fiber: match &spec.fiber {
            FiberSpec::ProjectiveSpace(m) => RawFiber::Preset(RawPreset {
                preset: "CPm".into(),
                m: *m,
            }),
            FiberSpec::Fan(f) => RawFiber::Fan(RawFan {
                rays: f.rays.clone(),
                cones: f.cones.clone(),
            }),
        },
        twist: RawTwist {
            basis: spec.twist.basis.iter().map(|b| strings(b)).collect(),
            images: spec.twist.images.iter().map(|b| strings(b)).collect(),
            allow_non_surjective: spec.twist.allow_non_surjective,
        },
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    const MINIMAL: &str = r#"{
        "group": [{ "family": "A", "rank": 1 }],
        "flag": { "marks": ["1"] },
        "fiber": { "preset": "CPm", "m": 1 },
        "twist": { "basis": [["1"]], "images": [["1/2"]] }
    }"#;

    #[test]
    fn minimal_document() {
        let s = parse_spec(MINIMAL).unwrap();
        assert_eq!(s.total_rank(), 1);
        assert_eq!(s.fiber.dim(), 1);
        assert_eq!(s.twist.images, vec![vec![frac(1, 2)]]);
        assert!(!s.twist.allow_non_surjective);
    }

    #[test]
    fn explicit_fan() {
        let doc = MINIMAL.replace(
            r#"{ "preset": "CPm", "m": 1 }"#,
            r#"{ "rays": [[1], [-1]], "cones": [[0], [1]] }"#,
        );
        let s = parse_spec(&doc).unwrap();
        assert_eq!(s.fiber.fan(), Fan::projective_space(1));
    }

    #[test]
    fn marks_length_mismatch() {
        let doc = MINIMAL.replace(r#"["1"] }"#, r#"["1", "0"] }"#);
        assert!(matches!(
            parse_spec(&doc),
            Err(Error::DimensionMismatch { ref path, expected: 1, found: 2 }) if path == "flag.marks"
        ));
    }

    #[test]
    fn zero_denominator() {
        let doc = MINIMAL.replace("1/2", "1/0");
        assert_eq!(
            parse_spec(&doc),
            Err(Error::BadRational {
                path: "twist.images[0][0]".into(),
                value: "1/0".into()
            })
        );
    }

    #[test]
    fn floats_are_rejected() {
        let doc = MINIMAL.replace(r#""1/2""#, "0.5");
        assert!(matches!(parse_spec(&doc), Err(Error::Syntax { .. })));
        assert!(matches!(parse_spec("{"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn image_length_mismatch() {
        let doc = MINIMAL.replace(r#"[["1/2"]]"#, r#"[["1/2", "1"]]"#);
        assert!(matches!(
            parse_spec(&doc),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn bad_family() {
        let doc = MINIMAL.replace(r#""A""#, r#""Q""#);
        assert!(
            matches!(parse_spec(&doc), Err(Error::Syntax { ref path, .. }) if path == "group[0].family")
        );
        let doc = MINIMAL.replace(r#""rank": 1"#, r#""rank": 0"#);
        assert!(matches!(parse_spec(&doc), Err(Error::InvalidRank { .. })));
    }

    #[test]
    fn emit_then_parse() {
        let s = parse_spec(MINIMAL).unwrap();
        assert_eq!(parse_spec(&emit_spec(&s)).unwrap(), s);
        assert_eq!(s.marks, vec![int(1)]);
    }
}
