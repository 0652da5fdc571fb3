mod args;
mod commands;
mod config;
mod input;
mod output;

use std::process::ExitCode;

use clap::Parser;
use graphspark::linalg::io;
use rayon::prelude::*;
use serde_json::{json, Value};

use args::{Cli, Command};
use config::Config;
use input::GraphSource;
use output::Format;

const THREADS_ENV: &str = "GRAPHSPARK_THREADS";

enum Failure {
    /// Bad arguments or unreadable input: exit code 2.
    Usage(String),
    /// The command ran but found violations or bad records: exit code 1.
    Found,
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Found) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("graphspark: {msg}");
            ExitCode::from(2)
        }
    }
}

fn thread_count(cli: &Cli, cfg: &Config) -> Result<Option<usize>, String> {
    if let Some(t) = cli.threads {
        return Ok(Some(t));
    }
    match std::env::var(THREADS_ENV) {
        Ok(s) if !s.trim().is_empty() => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{THREADS_ENV}={s:?} is not a thread count")),
        _ => Ok(cfg.threads),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    if let Some(t) = thread_count(&cli, &cfg)? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Text
    };

    match &cli.command {
        Command::Spark(a) => {
            let method = a.method;
            graph_command(&a.graph, format, |g| commands::spark(g, method))
        }
        Command::Forts(a) => {
            let (limit, list) = (commands::fort_limit(&cfg), a.list);
            graph_command(&a.graph, format, |g| commands::fort_sequence(g, limit, list))
        }
        Command::Zf(a) => graph_command(&a.graph, format, |g| commands::zero_forcing(g, &a.initial)),
        Command::Connectivity(a) => graph_command(&a.graph, format, |g| Ok(commands::connectivity(g))),
        Command::Mat(m) => {
            let v = commands::mat(m, &cfg)?;
            emit(format, &[v])
        }
        Command::Construct(c) => {
            let (a, mut info) = commands::construct(c)?;
            if format == Format::Text {
                print!("{}", io::format_matrix(&a));
                return Ok(());
            }
            info["matrix"] = io::matrix_to_json(&a);
            emit(format, &[info])
        }
        Command::Verify(v) => {
            let seed = v.seed.or(cfg.seed).unwrap_or(0);
            let reports = commands::verify(&v.suite, &v.corpus, seed, v.case)?;
            let records: Vec<Value> = reports
                .iter()
                .map(|r| {
                    if format == Format::Json {
                        json!(r)
                    } else {
                        json!({
                            "suite": r.suite.id(),
                            "corpus": r.corpus,
                            "seed": r.seed,
                            "cases": r.cases,
                            "checks": r.checks,
                            "skipped": r.skipped,
                            "violations": r.violations.len(),
                            "status": if r.passed() { "PASS" } else { "FAIL" },
                            "elapsed_ms": r.elapsed_ms as u64,
                        })
                    }
                })
                .collect();
            emit(format, &records)?;
            if format == Format::Text {
                for r in &reports {
                    for x in &r.violations {
                        eprintln!("{} case {} {}: {}", r.suite, x.case, x.graph6, x.detail);
                    }
                }
            }
            if reports.iter().all(|r| r.passed()) {
                Ok(())
            } else {
                Err(Failure::Found)
            }
        }
        Command::Batch(b) => {
            let text = std::fs::read_to_string(&b.file).map_err(|e| format!("{}: {e}", b.file.display()))?;
            let cmd = b.command;
            batch(input::graph_lines(&text), format, |g| {
                commands::batch_record(cmd, g, &cfg)
            })
        }
    }
}

fn emit(format: Format, records: &[Value]) -> Result<(), Failure> {
    output::emit(format, records).map_err(|e| Failure::Usage(e.to_string()))
}

/// Runs `f` on one graph, or on every line when the argument names a file.
fn graph_command<F>(arg: &str, format: Format, f: F) -> Result<(), Failure>
where
    F: Fn(&graphspark::Graph) -> Result<Value, String> + Sync,
{
    match input::graph_source(arg)? {
        GraphSource::One(g) => {
            let v = f(&g)?;
            emit(format, &[v])
        }
        GraphSource::Lines(lines) => batch(lines, format, f),
    }
}

/// One record per input line, in input order. A bad line yields an error
/// record and the rest still run.
fn batch<F>(lines: Vec<(usize, Result<graphspark::Graph, String>)>, format: Format, f: F) -> Result<(), Failure>
where
    F: Fn(&graphspark::Graph) -> Result<Value, String> + Sync,
{
    let records: Vec<(bool, Value)> = lines
        .into_par_iter()
        .map(|(line, parsed)| match parsed.and_then(|g| f(&g)) {
            Ok(v) => {
                let mut rec = json!({"line": line});
                if let (Value::Object(dst), Value::Object(src)) = (&mut rec, v) {
                    dst.extend(src);
                }
                (true, rec)
            }
            Err(e) => (false, json!({"line": line, "error": e})),
        })
        .collect();
    let ok = records.iter().all(|(ok, _)| *ok);
    let values: Vec<Value> = records.into_iter().map(|(_, v)| v).collect();
    emit(format, &values)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Found)
    }
}
