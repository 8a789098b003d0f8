//! Command implementations, kept binary-free so integration tests can
//! drive them directly.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::json;

use cicrit::classify::{classify, Verdict};
use cicrit::plot::{plane_svg, PlotOptions};
use cicrit::roots::{fano_index, invariants, variety_dim, DynkinType, VarietyDescriptor};
use cicrit::search;
use cicrit::Error;

use crate::envelope::{Format, OutputEnvelope, SCHEMA_VERSION};
use crate::oracle;

/// Envelope plus the rendering selected by `--format`.
pub struct CommandOutput {
    pub envelope: OutputEnvelope,
    pub text: String,
}

impl CommandOutput {
    fn render(envelope: OutputEnvelope, format: Format, tabular: String) -> CommandOutput {
        let text = match format {
            Format::Json => envelope.to_json(),
            Format::Csv | Format::Plain => tabular,
        };
        CommandOutput { envelope, text }
    }
}

/// Exit-code policy: 0 success, 1 usage, 2 data unavailable,
/// 3 assertion failure.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::DataUnavailable(_) | Error::PicardRestriction(_) => 2,
        Error::Inconclusive(_) => 3,
        _ => 1,
    }
}

fn descriptor(type_str: &str, rank: u32, node: u32) -> Result<VarietyDescriptor, Error> {
    let dynkin = DynkinType::parse(type_str)?;
    VarietyDescriptor::new(dynkin, rank, node)
}

fn csv_header(columns: &str) -> String {
    format!("# schema: {SCHEMA_VERSION}\n{columns}\n")
}

// ---------------------------------------------------------------------------
// variety
// ---------------------------------------------------------------------------

pub fn cmd_variety(
    type_str: &str,
    rank: u32,
    node: u32,
    format: Format,
) -> Result<CommandOutput, Error> {
    let desc = descriptor(type_str, rank, node)?;
    let inv = invariants(&desc)?;
    let inputs = json!({"type": type_str, "rank": rank, "node": node});
    let result = serde_json::to_value(&inv).expect("invariants serialize");
    let envelope = OutputEnvelope::new("variety", inputs, result, Vec::new());

    let tabular = match format {
        Format::Csv => {
            let mut text = csv_header(
                "type,rank,node,dim,index,m,p,p_lower_bound,sp,sp_lower_bound,picard_iso,codim_bound",
            );
            let _ = writeln!(
                text,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                desc.dynkin(),
                rank,
                node,
                inv.dim,
                inv.index,
                inv.m,
                inv.p.value,
                inv.p.lower_bound,
                inv.sp.map_or(String::new(), |v| v.value.to_string()),
                inv.sp.map_or(String::new(), |v| v.lower_bound.to_string()),
                inv.picard_iso,
                inv.codim_bound.map_or(String::new(), |v| v.to_string()),
            );
            text
        }
        _ => {
            let fmt_tv = |v: cicrit::roots::TableValue| {
                if v.lower_bound {
                    format!(">= {}", v.value)
                } else {
                    v.value.to_string()
                }
            };
            let mut text = format!("{desc}\n");
            let _ = writeln!(text, "  dim         = {}", inv.dim);
            let _ = writeln!(text, "  index       = {}", inv.index);
            let _ = writeln!(text, "  m           = {}", inv.m);
            let _ = writeln!(text, "  p           = {}", fmt_tv(inv.p));
            let _ = writeln!(
                text,
                "  sp          = {}",
                inv.sp.map_or("unavailable".into(), fmt_tv)
            );
            let _ = writeln!(text, "  picard_iso  = {}", inv.picard_iso);
            let _ = writeln!(
                text,
                "  codim_bound = {}",
                inv.codim_bound
                    .map_or("unavailable".into(), |v| v.to_string())
            );
            text
        }
    };
    Ok(CommandOutput::render(envelope, format, tabular))
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

pub fn cmd_classify(
    type_str: &str,
    rank: u32,
    node: u32,
    d: u64,
    n: u64,
    format: Format,
) -> Result<CommandOutput, Error> {
    let desc = descriptor(type_str, rank, node)?;
    let result = classify(&desc, d, n)?;
    let inputs = json!({"type": type_str, "rank": rank, "node": node, "d": d, "n": n});
    let notes = result.notes.clone();
    let value = serde_json::to_value(&result).expect("classification serializes");
    let envelope = OutputEnvelope::new("classify", inputs, value, notes);

    let (verdict, detail) = match &result.verdict {
        Verdict::CompleteIntersection { criterion } => {
            ("CompleteIntersection", criterion.as_str().to_string())
        }
        Verdict::ExcludedNoSuchSubvariety { reason } => {
            ("ExcludedNoSuchSubvariety", reason.as_str().to_string())
        }
        Verdict::Unknown => ("Unknown", String::new()),
    };
    let region = serde_json::to_value(result.region)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();

    let tabular = match format {
        Format::Csv => {
            let mut text = csv_header("type,rank,node,d,n,delta,region,verdict,criterion");
            let _ = writeln!(
                text,
                "{},{},{},{},{},{},{},{},{}",
                desc.dynkin(),
                rank,
                node,
                d,
                n,
                result.delta,
                region,
                verdict,
                detail
            );
            text
        }
        _ => {
            let mut text = format!("{desc}, d = {d}, n = {n}\n");
            let _ = writeln!(text, "  delta   = {}", result.delta);
            let _ = writeln!(text, "  region  = {region}");
            if detail.is_empty() {
                let _ = writeln!(text, "  verdict = {verdict}");
            } else {
                let _ = writeln!(text, "  verdict = {verdict}({detail})");
            }
            for a in &result.applied {
                let _ = writeln!(
                    text,
                    "  [{}] {:18} {}",
                    if a.satisfied { "x" } else { " " },
                    a.id,
                    a.inputs
                );
            }
            for note in &result.notes {
                let _ = writeln!(text, "  note: {note}");
            }
            text
        }
    };
    Ok(CommandOutput::render(envelope, format, tabular))
}

// ---------------------------------------------------------------------------
// deltamin
// ---------------------------------------------------------------------------

pub fn cmd_deltamin(
    p_max: u32,
    cache: Option<&Path>,
    format: Format,
) -> Result<CommandOutput, Error> {
    let table = search::schneider_table_with_cache(p_max, cache)?;
    let inputs = json!({
        "p_max": p_max,
        "cache": cache.map(|p| p.display().to_string()),
    });
    let value = serde_json::to_value(&table).expect("table serializes");
    let envelope = OutputEnvelope::new("deltamin", inputs, value, Vec::new());

    let tabular = match format {
        Format::Csv => {
            let mut text = csv_header("p,delta_min,c1,d");
            for row in &table.rows {
                let _ = writeln!(text, "{},{},{},{}", row.p, row.delta, row.c1, row.d);
            }
            text
        }
        _ => {
            let mut text = String::from("  p  delta_min  witness (c1, d)\n");
            for row in &table.rows {
                let _ = writeln!(
                    text,
                    "{:3}  {:9}  ({}, {})",
                    row.p, row.delta, row.c1, row.d
                );
            }
            text
        }
    };
    Ok(CommandOutput::render(envelope, format, tabular))
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyRow {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

pub struct VerifySpec {
    pub prop_sch: Option<(u32, u32)>,
    pub crossover: bool,
    pub tables: Option<u32>,
}

fn verify_prop_sch(rows: &mut Vec<VerifyRow>, from: u32, to: u32) -> Result<(), Error> {
    let report = search::verify_prop_bound(from, to)?;
    for entry in report.entries {
        rows.push(VerifyRow {
            check: format!("prop-sch p={}", entry.p),
            pass: entry.pass,
            detail: format!(
                "delta_min = {} vs p^2/6 = {} (margin {})",
                entry.delta_min, entry.bound, entry.margin
            ),
        });
    }
    Ok(())
}

fn verify_crossover(rows: &mut Vec<VerifyRow>) -> Result<(), Error> {
    let ell = search::crossover_ell()?;
    rows.push(VerifyRow {
        check: "crossover".into(),
        pass: ell == 18,
        detail: format!("smallest rank with the quartic bound ahead = {ell} (expected 18)"),
    });
    Ok(())
}

fn verify_tables(rows: &mut Vec<VerifyRow>, rank_max: u32) -> Result<(), Error> {
    let mut checked = 0u32;
    let mut skipped = 0u32;
    let mut mismatches = Vec::new();
    for (dynkin, rank, node) in oracle::classical_descriptors(rank_max) {
        let desc = VarietyDescriptor::new(dynkin, rank, node)?;
        let dim_expected = oracle::closed_form_dim(dynkin, u64::from(rank), u64::from(node));
        let m_expected = oracle::table_m(dynkin, u64::from(rank), u64::from(node));
        let (Some(dim_expected), Some(m_expected)) = (dim_expected, m_expected) else {
            skipped += 1;
            continue;
        };
        checked += 1;
        let dim = variety_dim(&desc);
        let m = fano_index(&desc) as i64 - 3;
        if dim != dim_expected {
            mismatches.push(format!(
                "{desc}: dim {dim} vs closed form {dim_expected}"
            ));
        }
        if m != m_expected {
            mismatches.push(format!("{desc}: m {m} vs table {m_expected}"));
        }
    }
    let pass = mismatches.is_empty();
    rows.push(VerifyRow {
        check: format!("tables rank_max={rank_max}"),
        pass,
        detail: if pass {
            format!("{checked} descriptors cross-checked, {skipped} uncovered rows skipped")
        } else {
            mismatches.join("; ")
        },
    });
    Ok(())
}

/// Runs the selected verifications. The second return value says
/// whether every assertion passed (exit 0) or not (exit 3).
pub fn cmd_verify(spec: &VerifySpec, format: Format) -> Result<(CommandOutput, bool), Error> {
    if spec.prop_sch.is_none() && !spec.crossover && spec.tables.is_none() {
        return Err(Error::InvalidInput(
            "verify needs at least one of --prop-sch, --crossover, --tables".into(),
        ));
    }
    let mut rows = Vec::new();
    if let Some((from, to)) = spec.prop_sch {
        verify_prop_sch(&mut rows, from, to)?;
    }
    if spec.crossover {
        verify_crossover(&mut rows)?;
    }
    if let Some(rank_max) = spec.tables {
        verify_tables(&mut rows, rank_max)?;
    }
    let all_pass = rows.iter().all(|r| r.pass);

    let inputs = json!({
        "prop_sch": spec.prop_sch.map(|(a, b)| vec![a, b]),
        "crossover": spec.crossover,
        "tables": spec.tables,
    });
    let value = json!({"checks": rows, "all_pass": all_pass});
    let envelope = OutputEnvelope::new("verify", inputs, value, Vec::new());

    let tabular = match format {
        Format::Csv => {
            let mut text = csv_header("check,pass,detail");
            for row in &rows {
                let _ = writeln!(
                    text,
                    "{},{},{}",
                    row.check,
                    row.pass,
                    row.detail.replace(',', ";")
                );
            }
            text
        }
        _ => {
            let mut text = String::new();
            for row in &rows {
                let _ = writeln!(
                    text,
                    "{} {} -- {}",
                    if row.pass { "PASS" } else { "FAIL" },
                    row.check,
                    row.detail
                );
            }
            let _ = writeln!(
                text,
                "{}",
                if all_pass {
                    "all checks passed"
                } else {
                    "some checks FAILED"
                }
            );
            text
        }
    };
    Ok((CommandOutput::render(envelope, format, tabular), all_pass))
}

// ---------------------------------------------------------------------------
// plot
// ---------------------------------------------------------------------------

/// Renders the (d, n)-plane; returns the SVG text (the caller decides
/// between stdout and `--out`).
pub fn cmd_plot(
    type_str: &str,
    rank: u32,
    node: u32,
    d_max: Option<u64>,
) -> Result<String, Error> {
    let desc = descriptor(type_str, rank, node)?;
    let opts = PlotOptions {
        d_max,
        ..PlotOptions::default()
    };
    plane_svg(&desc, &opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variety_envelope_carries_invariants() {
        let out = cmd_variety("A", 11, 1, Format::Json).unwrap();
        assert_eq!(out.envelope.result["m"], json!(9));
        assert_eq!(out.envelope.result["sp"]["value"], json!(11));
        assert!(out.text.contains("\"schema_version\": \"cicrit/1\""));
    }

    #[test]
    fn classify_plain_mentions_criterion() {
        let out = cmd_classify("A", 11, 1, 81, 10, Format::Plain).unwrap();
        assert!(out.text.contains("CompleteIntersection(hart-i)"));
    }

    #[test]
    fn deltamin_csv_rows() {
        let out = cmd_deltamin(4, None, Format::Csv).unwrap();
        assert!(out.text.contains("4,12,0,3"));
        assert!(out.text.starts_with("# schema: cicrit/1\np,delta_min,c1,d\n"));
    }

    #[test]
    fn verify_requires_a_mode() {
        let spec = VerifySpec {
            prop_sch: None,
            crossover: false,
            tables: None,
        };
        assert!(cmd_verify(&spec, Format::Plain).is_err());
    }

    #[test]
    fn verify_crossover_passes() {
        let spec = VerifySpec {
            prop_sch: None,
            crossover: true,
            tables: None,
        };
        let (out, pass) = cmd_verify(&spec, Format::Plain).unwrap();
        assert!(pass);
        assert!(out.text.contains("PASS crossover"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code_for(&Error::DataUnavailable("x".into())), 2);
        assert_eq!(exit_code_for(&Error::PicardRestriction("x".into())), 2);
        assert_eq!(exit_code_for(&Error::InvalidInput("x".into())), 1);
        assert_eq!(exit_code_for(&Error::Inconclusive("x".into())), 3);
    }
}
