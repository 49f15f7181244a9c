//! Input documents, presets, reports, and sweeps.

pub mod presets;
pub mod report;
pub mod spec;
pub mod sweep;

pub use report::{emit_flag_info, emit_polytope, emit_report, emit_sweep, Format};
pub use spec::{emit_spec, parse_spec, FiberSpec, ProblemSpec, TwistSpec};
pub use sweep::{parse_range, sweep, SweepRow};

use crate::criterion::{evaluate_criterion, FanoReport};
use crate::error::Result;
use crate::flag::{build_flag, FlagManifold, FlagSpec};
use crate::root_system::build_root_system;
use crate::toric_fiber::{validate_fan, ValidFan};
use crate::twist::validate_twist_with;

pub fn build_flag_for(spec: &ProblemSpec) -> Result<FlagManifold> {
    let rs = build_root_system(&spec.group)?;
    build_flag(FlagSpec {
        root_system: rs,
        marks: spec.marks.clone(),
    })
}

pub fn build_fan_for(spec: &ProblemSpec) -> Result<ValidFan> {
    validate_fan(spec.fiber.fan())
}

/// Runs the whole pipeline on a parsed document.
pub fn check(spec: &ProblemSpec) -> Result<FanoReport> {
    let fm = build_flag_for(spec)?;
    let fan = build_fan_for(spec)?;
    let t = validate_twist_with(
        &fm,
        spec.twist.basis.clone(),
        spec.twist.images.clone(),
        fan.dim(),
        spec.twist.allow_non_surjective,
    )?;
    evaluate_criterion(&fm, &fan, &t)
}
