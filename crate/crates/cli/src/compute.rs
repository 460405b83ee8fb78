use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use omega_engine::{omega_report, Method, OmegaReport};

use crate::args::{ComputeArgs, Format};
use crate::input::{load_inputs, Input};
use crate::output::{big, write_json_line, write_table};
use crate::{CliError, Result};

#[derive(Serialize)]
struct MethodRecord<'a> {
    record: &'static str,
    id: &'a str,
    n: usize,
    r: usize,
    method: &'a str,
    omega: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega_circ: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rule: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chains: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    visited: Option<u64>,
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    record: &'static str,
    id: &'a str,
    n: usize,
    r: usize,
    components: usize,
    consensus: Option<Value>,
    agreement: bool,
    notes: &'a [String],
}

/// The report for one input.
pub fn compute_one(input: &Input, method: Method) -> Result<OmegaReport> {
    let m = input.spec.build().map_err(|source| CliError::Matroid { id: input.id.clone(), source })?;
    let schubert = input
        .spec
        .schubert_data()
        .map_err(|source| CliError::Matroid { id: input.id.clone(), source })?;
    omega_report(&input.id, &m, schubert.as_ref(), method)
        .map_err(|source| CliError::Omega { id: input.id.clone(), source })
}

pub fn write_reports(out: &mut dyn Write, reports: &[OmegaReport], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for rep in reports {
                for res in &rep.results {
                    write_json_line(
                        out,
                        &MethodRecord {
                            record: "method",
                            id: &rep.id,
                            n: rep.n,
                            r: rep.r,
                            method: &res.method,
                            omega: big(&res.omega),
                            omega_circ: res.omega_circ.as_ref().map(big),
                            rule: res.rule,
                            chains: res.chains,
                            visited: res.visited,
                        },
                    )?;
                }
                write_json_line(
                    out,
                    &SummaryRecord {
                        record: "summary",
                        id: &rep.id,
                        n: rep.n,
                        r: rep.r,
                        components: rep.components,
                        consensus: rep.consensus.as_ref().map(big),
                        agreement: rep.agreement,
                        notes: &rep.notes,
                    },
                )?;
            }
            Ok(())
        }
        Format::Table => {
            let mut rows = Vec::new();
            for rep in reports {
                for res in &rep.results {
                    rows.push(vec![
                        rep.id.clone(),
                        format!("{}/{}", rep.n, rep.r),
                        res.method.clone(),
                        res.omega.to_string(),
                        res.rule.map_or_else(|| res.chains.map_or(String::new(), |c| c.to_string()), String::from),
                        format!("{:.3}", res.elapsed.as_secs_f64() * 1e3),
                    ]);
                }
                let verdict = match (&rep.consensus, rep.agreement) {
                    (Some(v), true) => format!("agree: {v}"),
                    (None, true) => "no result".into(),
                    _ => "DISAGREE".into(),
                };
                rows.push(vec![rep.id.clone(), String::new(), verdict, String::new(), rep.notes.join("; "), String::new()]);
            }
            write_table(out, &["id", "n/r", "method", "omega", "rule/chains", "ms"], &rows)
        }
    }
}

/// Exit status 0 when every report agrees, 1 otherwise; errors carry their
/// own status.
pub fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<i32> {
    let inputs = load_inputs(&args.config.inputs)?;
    if inputs.is_empty() {
        return Err(CliError::Usage("no input matroids".into()));
    }
    let results: Vec<Result<OmegaReport>> = inputs.par_iter().map(|i| compute_one(i, args.method)).collect();
    let mut reports = Vec::new();
    let mut first_error = None;
    for r in results {
        match r {
            Ok(rep) => reports.push(rep),
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    write_reports(out, &reports, args.config.format)?;
    if let Some(e) = first_error {
        return Err(e);
    }
    Ok(if reports.iter().all(|r| r.agreement) { 0 } else { 1 })
}
