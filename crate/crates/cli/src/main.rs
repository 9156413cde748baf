//! `ubg`: unit ball graphs, recognizers, witnesses and theorem suites from
//! the command line.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ubg_core::graphs::io::{graph_to_dot, graph_to_json, parse_graph};
use ubg_core::harness::{run_suite, Suite, TrialConfig};
use ubg_core::rational::{format_rational, parse_rational};
use ubg_core::recognizers::classify_graph;
use ubg_core::spaces::classify_space;
use ubg_core::spaces::io::parse_space;
use ubg_core::ubg::io::{points_from_json, realization_to_json};
use ubg_core::ubg::{build_ubg, realize_any_graph};
use ubg_core::witnesses::{cycle_witness, realize_unit_interval, tripod_witness, Witness};
use ubg_core::{Error, Graph, Mode, Realization};

#[derive(Parser, Debug)]
#[command(
    name = "ubg",
    version,
    about = "Unit ball graphs over exact geodesic space models"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    out: Output,
    /// Master seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Output {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the unit ball graph of points in a space.
    Ubg {
        #[arg(long)]
        space: PathBuf,
        /// JSON list of points, bare or as {"vertex", "at"} entries.
        #[arg(long)]
        points: PathBuf,
        /// Threshold as an integer, decimal or num/den.
        #[arg(long)]
        delta: String,
        /// Use open balls (d < delta).
        #[arg(long)]
        open: bool,
    },
    /// Run every recognizer on a graph.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Construct an obstruction witness in a metric graph.
    Witness {
        #[arg(value_enum)]
        kind: WitnessKind,
        #[arg(long)]
        space: PathBuf,
    },
    /// Run a randomized theorem suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Realize any graph in the space obtained by gluing unit edges.
    RealizeAny {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Realize a unit interval graph on the line.
    RealizeInterval {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum WitnessKind {
    Cycle,
    Tripod,
}

/// How a command ended, beyond success.
enum Outcome {
    Ok,
    /// The command ran but the answer is negative (suite failures, graph
    /// not unit interval).
    Negative,
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_json(path: &Path) -> anyhow::Result<Value> {
    serde_json::from_str(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Writes to stdout, treating a closed pipe as a normal end of output.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn print_json(v: &Value) {
    emit(&(serde_json::to_string_pretty(v).expect("values serialize") + "\n"));
}

fn emit_graph(out: Output, g: &Graph, annotations: &[(String, String)], json: Value) {
    match out {
        Output::Json => print_json(&json),
        Output::Dot => emit(&graph_to_dot(g, annotations)),
    }
}

fn emit_realization(out: Output, r: &Realization) {
    let g = build_ubg(r, Mode::Closed);
    let notes = [("delta".to_string(), format_rational(r.delta()))];
    emit_graph(out, &g, &notes, realization_to_json(r));
}

fn emit_witness(out: Output, w: &Witness, extra: Value) {
    let mut v = w.to_json();
    v["graph"] = graph_to_json(&w.graph);
    if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
        map.extend(more);
    }
    let notes = [
        (
            "certificate".to_string(),
            w.certificate.kind.name().to_string(),
        ),
        ("delta".to_string(), format_rational(w.delta())),
    ];
    emit_graph(out, &w.graph, &notes, v);
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Ubg {
            space,
            points,
            delta,
            open,
        } => {
            let space = parse_space(&read(&space)?)?;
            let points = points_from_json(&space, &read_json(&points)?)?;
            let delta = parse_rational(&delta)?;
            let r = Realization::new(space, points, delta)?;
            let mode = if open { Mode::Open } else { Mode::Closed };
            let g = build_ubg(&r, mode);
            let notes = [("delta".to_string(), format_rational(r.delta()))];
            emit_graph(cli.out, &g, &notes, graph_to_json(&g));
        }
        Command::Classify { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            let report = classify_graph(&g);
            emit_graph(cli.out, &g, &report.summary(), report.to_json());
        }
        Command::Witness { kind, space } => {
            let space = parse_space(&read(&space)?)?;
            let Some(g) = space.as_metric_graph() else {
                bail!(
                    "witnesses are built in metric graph spaces, got {}",
                    space.kind_name()
                );
            };
            match kind {
                WitnessKind::Cycle => {
                    let w = cycle_witness(g)?;
                    emit_witness(cli.out, &w.witness, json!({"arc_vertices": w.arc_vertices}));
                }
                WitnessKind::Tripod => {
                    let class = classify_space(g)?;
                    let Some(tripod) = class.tripod else {
                        bail!("the space has no vertex of degree three or more");
                    };
                    let w = tripod_witness(g, &tripod, None)?;
                    let structure = w.structure.as_ref().map(|s| json!([s.a, s.b, s.c]));
                    emit_witness(cli.out, &w.witness, json!({"net_like_paths": structure}));
                }
            }
        }
        Command::Verify { suite, trials } => {
            if cli.out == Output::Dot {
                bail!("verify reports are JSON only");
            }
            let suite: Suite = suite.parse()?;
            let report = run_suite(&TrialConfig::new(suite, trials, cli.seed))?;
            print_json(&report.to_json());
            if !report.passed() {
                return Ok(Outcome::Negative);
            }
        }
        Command::RealizeAny { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            emit_realization(cli.out, &realize_any_graph(&g));
        }
        Command::RealizeInterval { graph } => {
            let g = parse_graph(&read(&graph)?)?;
            match realize_unit_interval(&g) {
                Ok(r) => emit_realization(cli.out, &r),
                Err(Error::NotUnitInterval(cert)) => {
                    print_json(&json!({"unit_interval": false, "certificate": cert.to_json()}));
                    return Ok(Outcome::Negative);
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
