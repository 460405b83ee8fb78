use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use matroid_core::spec::{MatroidSpec, SpecBody};
use omega_engine::{component_sign, omega_chain_sum, ChainVariant, OmegaError};

use crate::args::{BenchArgs, Family, Format};
use crate::corpus::generate;
use crate::input::{load_inputs, Input};
use crate::output::{big, write_json_line, write_table};
use crate::{CliError, Result};

#[derive(Debug, Clone, Serialize)]
pub struct BenchRecord {
    pub record: &'static str,
    pub id: String,
    pub n: usize,
    pub r: usize,
    pub variant: String,
    pub evaluator: String,
    pub omega: Value,
    pub chains: u128,
    pub visited: u64,
    pub millis: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct PruningRecord {
    pub record: &'static str,
    pub id: String,
    pub outward_flats: Option<u128>,
    pub crowded_flats: Option<u128>,
    pub record_flats: Option<u128>,
    pub final_flats: Option<u128>,
    /// Crowded, record and final chains are each no more than outward ones.
    pub monotone: bool,
}

/// The default benchmark corpus.
pub fn standard_corpus(seed: u64) -> Vec<Input> {
    let order: Vec<usize> = (0..10).collect();
    let ferroni = MatroidSpec::new(SpecBody::SchubertLower {
        chain: vec![vec![], order[..2].to_vec(), order[..7].to_vec(), order.clone()],
        a: vec![0, 1, 3, 4],
    })
    .with_n(10);
    let mut specs = vec![
        MatroidSpec::uniform(5, 12).named("uniform-5-12"),
        MatroidSpec::uniform(3, 9).named("uniform-3-9"),
        ferroni.named("schubert-example-10"),
    ];
    specs.extend(generate(Family::Schubert, 10, Some(4), 3, seed));
    specs.extend(generate(Family::Closure, 9, None, 3, seed));
    specs
        .into_iter()
        .map(|spec| Input { id: spec.name.clone().unwrap_or_default(), spec })
        .collect()
}

pub fn bench_one(input: &Input) -> Result<(Vec<BenchRecord>, PruningRecord)> {
    let m = input.spec.build().map_err(|source| CliError::Matroid { id: input.id.clone(), source })?;
    let mut records = Vec::new();
    for v in ChainVariant::ALL {
        let start = Instant::now();
        let rep = match omega_chain_sum(&m, v) {
            Ok(rep) => rep,
            Err(OmegaError::Infeasible { .. } | OmegaError::VariantInapplicable { .. }) => continue,
            Err(source) => return Err(CliError::Omega { id: input.id.clone(), source }),
        };
        records.push(BenchRecord {
            record: "bench",
            id: input.id.clone(),
            n: m.ground_size(),
            r: m.rank(),
            variant: v.name().into(),
            evaluator: format!("{:?}", rep.evaluator).to_lowercase(),
            omega: big(&(rep.omega_circ * component_sign(&m))),
            chains: rep.chains,
            visited: rep.visited,
            millis: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    let chains = |v: ChainVariant| records.iter().find(|r| r.variant == v.name()).map(|r| r.chains);
    let outward = chains(ChainVariant::OutwardFlats);
    let pruned = [ChainVariant::CrowdedFlats, ChainVariant::RecordFlats, ChainVariant::FinalFlats].map(chains);
    let monotone = match outward {
        Some(o) => pruned.iter().all(|p| p.map_or(true, |c| c <= o)),
        None => true,
    };
    let pruning = PruningRecord {
        record: "pruning",
        id: input.id.clone(),
        outward_flats: outward,
        crowded_flats: pruned[0],
        record_flats: pruned[1],
        final_flats: pruned[2],
        monotone,
    };
    Ok((records, pruning))
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    let cfg = &args.config;
    let inputs = if cfg.inputs.is_empty() { standard_corpus(cfg.seed) } else { load_inputs(&cfg.inputs)? };
    let mut all = Vec::new();
    let mut pruning = Vec::new();
    for input in &inputs {
        let (recs, p) = bench_one(input)?;
        all.extend(recs);
        pruning.push(p);
    }
    match cfg.format {
        Format::Json => {
            for r in &all {
                write_json_line(out, r)?;
            }
            for p in &pruning {
                write_json_line(out, p)?;
            }
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = all
                .iter()
                .map(|r| {
                    vec![
                        r.id.clone(),
                        format!("{}/{}", r.n, r.r),
                        r.variant.clone(),
                        r.evaluator.clone(),
                        r.omega.to_string(),
                        r.chains.to_string(),
                        r.visited.to_string(),
                        format!("{:.2}", r.millis),
                    ]
                })
                .collect();
            write_table(out, &["id", "n/r", "variant", "evaluator", "omega", "chains", "visited", "ms"], &rows)?;
        }
    }
    let agree = inputs.iter().all(|i| {
        let vals: Vec<&Value> = all.iter().filter(|r| r.id == i.id).map(|r| &r.omega).collect();
        vals.windows(2).all(|w| w[0] == w[1])
    });
    Ok(if agree && pruning.iter().all(|p| p.monotone) { 0 } else { 1 })
}
