use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::Result;
use crate::linalg::Rational;

use super::{check, presets};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub parameter: u64,
    pub verdict: bool,
    pub boundary: bool,
    pub min_margin: Rational,
}

/// Evaluates a preset for every parameter in `range`, in parallel; rows come
/// back sorted by parameter.
pub fn sweep(name: &str, range: RangeInclusive<u64>) -> Result<Vec<SweepRow>> {
    let params: Vec<u64> = range.collect();
    params
        .par_iter()
        .map(|&n| {
            let report = check(&presets::preset(name, n)?)?;
            Ok(SweepRow {
                parameter: n,
                verdict: report.verdict,
                boundary: report.boundary,
                min_margin: report.min_margin,
            })
        })
        .collect()
}

/// Parses `A..B` (inclusive). `A > B` is an empty range.
pub fn parse_range(s: &str) -> Option<RangeInclusive<u64>> {
    let (a, b) = s.split_once("..")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Some(a.trim().parse().ok()?..=b.trim().parse().ok()?)
}
