use std::fs;
use std::io::Write;

use serde::Serialize;

use polytope_bergman::{
    check_batch, grid_points, points_from_json, sample_points, IdentityKind, RationalPoint,
};

use crate::args::{Format, IdentityArgs};
use crate::input::load_inputs;
use crate::output::{write_json_line, write_table};
use crate::{CliError, Result};

/// Grids larger than this are refused.
pub const GRID_LIMIT: usize = 200_000;

/// Failures listed in full per record.
const SHOWN_FAILURES: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub point: Vec<(i64, i64)>,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityRecord {
    pub record: &'static str,
    pub id: String,
    pub kind: String,
    pub seed: u64,
    pub points: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failing: Vec<Failure>,
}

pub fn cmd_check_identities(args: &IdentityArgs, out: &mut dyn Write) -> Result<i32> {
    let cfg = &args.config;
    let inputs = load_inputs(&cfg.inputs)?;
    if inputs.is_empty() {
        return Err(CliError::Usage("no input matroids".into()));
    }
    let batch = match &args.points {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Parse { path: path.clone(), message: e.to_string() })?;
            Some(points_from_json(&text).map_err(|e| CliError::Parse { path: path.clone(), message: e.to_string() })?)
        }
        None => None,
    };
    let kinds: Vec<IdentityKind> = args.kind.map_or(IdentityKind::ALL.to_vec(), |k| vec![k]);
    let mut records = Vec::new();
    for input in &inputs {
        let m = input.spec.build().map_err(|source| CliError::Matroid { id: input.id.clone(), source })?;
        let points: Vec<RationalPoint> = match (&batch, args.grid) {
            (Some(b), _) => b.clone(),
            (None, Some(d)) => grid_points(m.ground_size(), m.rank(), d, -1, 2, GRID_LIMIT)
                .ok_or_else(|| CliError::Usage(format!("{}: grid with denominator {d} is too large", input.id)))?,
            (None, None) => sample_points(&m, args.samples, cfg.seed),
        };
        for &kind in &kinds {
            let mut rec = IdentityRecord {
                record: "identity",
                id: input.id.clone(),
                kind: kind.name().into(),
                seed: cfg.seed,
                points: points.len(),
                failures: 0,
                skipped: None,
                failing: Vec::new(),
            };
            if kind.uses_flats() && m.has_loops() {
                rec.skipped = Some("matroid has loops".into());
                records.push(rec);
                continue;
            }
            let checks = check_batch(&m, kind, &points)
                .map_err(|source| CliError::Polytope { id: input.id.clone(), source })?;
            for (z, c) in points.iter().zip(checks) {
                if !c.holds() {
                    rec.failures += 1;
                    if rec.failing.len() < SHOWN_FAILURES {
                        rec.failing.push(Failure {
                            point: z.to_fractions().unwrap_or_default(),
                            lhs: c.lhs,
                            rhs: c.rhs,
                        });
                    }
                }
            }
            records.push(rec);
        }
    }
    match cfg.format {
        Format::Json => {
            for r in &records {
                write_json_line(out, r)?;
            }
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![
                        r.id.clone(),
                        r.kind.clone(),
                        r.points.to_string(),
                        r.skipped.clone().unwrap_or_else(|| r.failures.to_string()),
                    ]
                })
                .collect();
            write_table(out, &["id", "identity", "points", "failures"], &rows)?;
        }
    }
    Ok(if records.iter().all(|r| r.failures == 0) { 0 } else { 1 })
}
