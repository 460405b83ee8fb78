//! The `omega` command-line tool.
//!
//! Output is JSON lines by default, one record per (matroid, method) plus a
//! summary per matroid; `--format table` gives a human-readable view. Exit
//! status is 0 on success and agreement, 1 on disagreement or a failed
//! identity, 2 on unreadable input, and 3 when a size cap is exceeded.

pub mod args;
pub mod bench;
pub mod compute;
pub mod corpus;
mod error;
pub mod identities;
pub mod input;
pub mod output;

use std::fs::File;
use std::io::{BufWriter, Write};

pub use args::{Cli, Command, Format, RunConfig};
pub use error::{CliError, Result};

use args::RandomArgs;

fn config(cmd: &Command) -> &RunConfig {
    match cmd {
        Command::Compute(a) => &a.config,
        Command::CheckIdentities(a) => &a.config,
        Command::Random(a) => &a.config,
        Command::Bench(a) => &a.config,
    }
}

pub fn cmd_random(args: &RandomArgs, out: &mut dyn Write) -> Result<i32> {
    if args.n == 0 || args.n > matroid_core::MAX_GROUND_SET {
        return Err(CliError::Usage(format!("--n must be in 1..={}", matroid_core::MAX_GROUND_SET)));
    }
    if args.r.is_some_and(|r| r > args.n) {
        return Err(CliError::Usage("--r exceeds --n".into()));
    }
    for spec in corpus::generate(args.family, args.n, args.r, args.count, args.config.seed) {
        writeln!(out, "{}", spec.to_json())?;
    }
    Ok(0)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Compute(a) => compute::cmd_compute(a, out),
        Command::CheckIdentities(a) => identities::cmd_check_identities(a, out),
        Command::Random(a) => cmd_random(a, out),
        Command::Bench(a) => bench::cmd_bench(a, out),
    }
}

/// Run `cli`, writing to `--out` if given and to `stdout` otherwise.
/// Returns the process exit status; errors are reported on standard error.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> i32 {
    let cfg = config(&cli.command);
    let go = |out: &mut dyn Write| -> Result<i32> {
        let code = match cfg.jobs {
            Some(j) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                let mut buf = Vec::new();
                let code = pool.install(|| dispatch(cli, &mut buf));
                out.write_all(&buf)?;
                code?
            }
            None => dispatch(cli, out)?,
        };
        out.flush()?;
        Ok(code)
    };
    let result = match &cfg.out {
        Some(path) => File::create(path)
            .map_err(CliError::from)
            .and_then(|f| go(&mut BufWriter::new(f))),
        None => go(stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("omega: {e}");
            e.exit_code()
        }
    }
}
