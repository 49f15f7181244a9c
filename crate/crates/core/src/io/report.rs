//! Human and JSON renderings. Both are deterministic functions of their input.

use serde::Serialize;
use serde_json::json;

use crate::criterion::FanoReport;
use crate::flag::FlagManifold;
use crate::linalg::Rational;
use crate::toric_fiber::CanonicalPolytope;

use super::sweep::SweepRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Json,
}

fn s(q: &Rational) -> String {
    q.to_string()
}

fn sv(v: &[Rational]) -> Vec<String> {
    v.iter().map(s).collect()
}

fn tuple(v: &[Rational]) -> String {
    format!("({})", sv(v).join(", "))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("plain data serializes");
    out.push('\n');
    out
}

pub fn status(report: &FanoReport) -> &'static str {
    if report.verdict {
        "fano"
    } else if report.fiber_fano && report.boundary {
        "boundary"
    } else {
        "not_fano"
    }
}

/// Left-aligned table, columns separated by two spaces.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|x| x.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, x)| format!("{x:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn emit_report(report: &FanoReport, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({
            "verdict": report.verdict,
            "status": status(report),
            "boundary": report.boundary,
            "fiber_fano": report.fiber_fano,
            "min_margin": s(&report.min_margin),
            "functionals": report.functionals.iter().enumerate().map(|(i, f)| json!({
                "index": i,
                "root": f.representative,
                "multiplicity": f.multiplicity,
            })).collect::<Vec<_>>(),
            "vertices": report.vertices.iter().map(|v| sv(v)).collect::<Vec<_>>(),
            "points": report.points.iter().map(|p| sv(&p.p)).collect::<Vec<_>>(),
            "margins": report.margins.iter().map(|r| sv(r)).collect::<Vec<_>>(),
            "failures": report.failures.iter().map(|f| json!({
                "vertex": f.vertex,
                "functional": f.functional,
                "margin": s(&f.margin),
                "root": f.root,
                "boundary": f.boundary,
            })).collect::<Vec<_>>(),
            "barycenter": report.barycenter.as_ref().map(|b| sv(b)),
            "warnings": report.warnings,
        })),
        Format::Human => {
            let mut out = String::new();
            let verdict = match status(report) {
                "fano" => "Fano (c1 > 0)",
                "boundary" => "NOT Fano (boundary: c1 is degenerate, a margin is exactly 0)",
                _ => "NOT Fano",
            };
            out.push_str(&format!("verdict: {verdict}\n"));
            out.push_str(&format!(
                "fiber Fano: {}\n",
                if report.fiber_fano { "yes" } else { "no" }
            ));
            out.push_str(&format!("min margin: {}\n\n", report.min_margin));

            let mut rows = vec![];
            let mut header = vec![
                "functional".to_string(),
                "root".to_string(),
                "mult".to_string(),
            ];
            header.extend((0..report.vertices.len()).map(|v| format!("q{v}")));
            rows.push(header);
            for (f, info) in report.functionals.iter().enumerate() {
                let mut row = vec![
                    format!("f{f}"),
                    format!("{:?}", info.representative),
                    info.multiplicity.to_string(),
                ];
                row.extend(report.margins.iter().map(|m| s(&m[f])));
                rows.push(row);
            }
            out.push_str(&table(&rows));
            out.push('\n');
            for (v, q) in report.vertices.iter().enumerate() {
                out.push_str(&format!("q{v} = {}\n", tuple(q)));
            }
            for f in &report.failures {
                out.push_str(&format!(
                    "failure: q{} f{} margin {}{}\n",
                    f.vertex,
                    f.functional,
                    f.margin,
                    if f.boundary { " (boundary)" } else { "" }
                ));
            }
            match &report.barycenter {
                Some(b) => out.push_str(&format!("barycenter: {}\n", tuple(b))),
                None => out.push_str("barycenter: n/a\n"),
            }
            for w in &report.warnings {
                out.push_str(&format!("warning: {w}\n"));
            }
            out
        }
    }
}

pub fn emit_polytope(poly: &CanonicalPolytope, barycenter: &[Rational], format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({
            "dim": poly.dim(),
            "vertices": poly.vertices().iter().enumerate().map(|(i, v)| json!({
                "coords": sv(v),
                "cone": poly.vertex_cone(i),
            })).collect::<Vec<_>>(),
            "halfspaces": poly.halfspaces(),
            "barycenter": sv(barycenter),
        })),
        Format::Human => {
            let mut out = format!("dimension: {}\n", poly.dim());
            out.push_str("vertices:\n");
            for (i, v) in poly.vertices().iter().enumerate() {
                out.push_str(&format!(
                    "  q{i} = {}  cone {:?}\n",
                    tuple(v),
                    poly.vertex_cone(i)
                ));
            }
            out.push_str("half-spaces:\n");
            for h in poly.halfspaces() {
                out.push_str(&format!("  <u, {:?}> >= {}\n", h.normal, h.offset));
            }
            out.push_str(&format!("barycenter: {}\n", tuple(barycenter)));
            out
        }
    }
}

pub fn emit_flag_info(fm: &FlagManifold, format: Format) -> String {
    let rep = |i: usize| fm.root(i).coords.clone();
    match format {
        Format::Json => to_json(&json!({
            "r_o": fm.r_o().len(),
            "r_m_plus": fm.r_m_plus().len(),
            "z_dim": fm.z_dim(),
            "z_basis": fm.z_basis().iter().map(|b| sv(b)).collect::<Vec<_>>(),
            "z_v": sv(fm.z_v()),
            "chamber": fm.chamber().iter().map(|f| json!({
                "values": sv(&f.values),
                "root": rep(f.representative()),
                "multiplicity": f.roots.len(),
            })).collect::<Vec<_>>(),
        })),
        Format::Human => {
            let mut out = String::new();
            out.push_str(&format!("|R_o| = {}\n", fm.r_o().len()));
            out.push_str(&format!("|R_m^+| = {}\n", fm.r_m_plus().len()));
            out.push_str(&format!("dim z(k) = {}\n", fm.z_dim()));
            for (i, b) in fm.z_basis().iter().enumerate() {
                out.push_str(&format!("  B{i} = {}\n", tuple(b)));
            }
            out.push_str(&format!("z_V = {}\n", tuple(fm.z_v())));
            out.push_str("chamber functionals (values on B):\n");
            let mut rows = vec![vec![
                "functional".to_string(),
                "values".to_string(),
                "root".to_string(),
                "mult".to_string(),
            ]];
            for (i, f) in fm.chamber().iter().enumerate() {
                rows.push(vec![
                    format!("f{i}"),
                    tuple(&f.values),
                    format!("{:?}", rep(f.representative())),
                    f.roots.len().to_string(),
                ]);
            }
            out.push_str(&table(&rows));
            out
        }
    }
}

pub fn emit_sweep(rows: &[SweepRow], format: Format) -> String {
    match format {
        Format::Json => to_json(
            &rows
                .iter()
                .map(|r| {
                    json!({
                        "parameter": r.parameter,
                        "verdict": r.verdict,
                        "boundary": r.boundary,
                        "min_margin": s(&r.min_margin),
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Human => {
            let mut t = vec![vec![
                "n".to_string(),
                "verdict".to_string(),
                "min_margin".to_string(),
            ]];
            for r in rows {
                let v = match (r.verdict, r.boundary) {
                    (true, _) => "fano",
                    (false, true) => "boundary",
                    (false, false) => "not_fano",
                };
                t.push(vec![
                    r.parameter.to_string(),
                    v.to_string(),
                    s(&r.min_margin),
                ]);
            }
            table(&t)
        }
    }
}
