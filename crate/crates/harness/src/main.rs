use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bridgeburn::families::{self, build_gk};
use bridgeburn::sim::{cop_cascade_policy, default_round_cap, robber_delay_policy, simulate_traced, TraceEvent};
use bridgeburn::solver::{self, Method, DEFAULT_STATE_BUDGET};
use bridgeburn::{parse_graph, render_graph, Error, Graph};
use clap::{Parser, Subcommand, ValueEnum};
use harness::experiments;
use harness::report::{ExperimentReport, Row};
use serde_json::json;

#[derive(Parser)]
#[command(name = "bridgeburn", version, about = "Bridge-burning cops and robbers: solver, generators, simulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMethod {
    Retro,
    Vi,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Gk,
    Path,
    Cycle,
    Kmn,
    Hypercube,
    Grid,
    Gnp,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the game for a fixed number of cops.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cops: usize,
        #[arg(long, value_enum, default_value = "retro")]
        method: SolveMethod,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Write a graph from one of the built-in families.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Cop count for `gk`.
        #[arg(long)]
        k: Option<usize>,
        /// Size parameter (vertices, or `n` of G_k, or the second part size).
        #[arg(long)]
        n: Option<usize>,
        /// First part size for `kmn`, row count for `grid`.
        #[arg(long)]
        m: Option<usize>,
        /// Dimension for `hypercube`.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output JSON file; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Play the cascade cops against the delaying robber on G_k.
    Simulate {
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        round_cap: Option<u32>,
        /// Write every move as a JSON line.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    #[command(subcommand)]
    Experiment(Experiment),
    /// Version and limits, or a summary of a graph file.
    Info {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Experiment {
    /// Check capt_b <= (2n)^(c_b+2)/c_b! on small graphs.
    Bounds {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Fit the growth exponent of the simulated game on G_k.
    Exponent {
        #[arg(long)]
        k: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Estimate how often G(n, p) has cop number one.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Exit status for a failed check, as opposed to an error.
const FAILED: u8 = 1;
const ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ERROR)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text)
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

fn need<T>(v: Option<T>, name: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::Input(format!("--{name} is required for this family")))
}

fn emit<R: Row>(report: &ExperimentReport<R>, format: Format) -> bool {
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    report.pass
}

fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Solve {
            graph,
            cops,
            method,
            format,
        } => {
            let g = read_graph(&graph)?;
            let methods: &[Method] = match method {
                SolveMethod::Retro => &[Method::LayeredRetrograde],
                SolveMethod::Vi => &[Method::ValueIteration],
                SolveMethod::Both => &[Method::LayeredRetrograde, Method::ValueIteration],
            };
            let results = methods
                .iter()
                .map(|&m| solver::solve_with(&g, cops, m))
                .collect::<Result<Vec<_>, _>>()?;
            let agree = results.windows(2).all(|w| w[0].verdict() == w[1].verdict());
            match format {
                Format::Json if results.len() == 1 => {
                    println!("{}", serde_json::to_string_pretty(&results[0]).expect("serializable"))
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "agree": agree, "results": results })).expect("serializable")
                ),
                Format::Text => {
                    for r in &results {
                        println!(
                            "{:?}: cops_win={} capture_time={} cop_start={:?} robber_start={} states={}",
                            r.method,
                            r.cops_win,
                            r.capture_time.map_or("-".into(), |t| t.to_string()),
                            r.optimal_cop_start,
                            r.robber_best_start.map_or("-".into(), |v| v.to_string()),
                            r.states_explored
                        );
                    }
                    if results.len() > 1 {
                        println!("agree: {agree}");
                    }
                }
            }
            Ok(agree)
        }
        Command::Generate {
            family,
            k,
            n,
            m,
            d,
            p,
            seed,
            out,
            dot,
        } => {
            let g = match family {
                Family::Gk => build_gk(need(k, "k")?, need(n, "n")?)?.graph,
                Family::Path => families::path(need(n, "n")?)?,
                Family::Cycle => families::cycle(need(n, "n")?)?,
                Family::Kmn => families::complete_bipartite(need(m, "m")?, need(n, "n")?)?,
                Family::Hypercube => families::hypercube(need(d, "d")?)?,
                Family::Grid => families::grid(need(m, "m")?, need(n, "n")?)?,
                Family::Gnp => families::random_gnp(need(n, "n")?, need(p, "p")?, need(seed, "seed")?)?,
            };
            let text = render_graph(&g);
            match out {
                Some(path) => write_file(&path, &text)?,
                None => println!("{text}"),
            }
            if let Some(path) = dot {
                write_file(&path, &g.to_dot(None))?;
            }
            Ok(true)
        }
        Command::Simulate {
            k,
            n,
            round_cap,
            trace,
            format,
        } => {
            let d = build_gk(k, n)?;
            let mut cops = cop_cascade_policy(&d);
            let mut robber = robber_delay_policy(&d);
            let cap = round_cap.unwrap_or_else(|| default_round_cap(k, n));
            let result = match trace {
                Some(path) => {
                    let file = fs::File::create(&path)
                        .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))?;
                    let mut w = BufWriter::new(file);
                    let mut io_error = None;
                    let mut sink = |e: &TraceEvent| {
                        if io_error.is_none() {
                            let line = serde_json::to_string(e).expect("serializable");
                            if let Err(err) = writeln!(w, "{line}") {
                                io_error = Some(err);
                            }
                        }
                    };
                    let t = simulate_traced(&d, &mut cops, &mut robber, cap, Some(&mut sink))?;
                    if let Some(err) = io_error.or_else(|| w.flush().err()) {
                        return Err(Error::Input(format!("cannot write {}: {err}", path.display())));
                    }
                    t
                }
                None => simulate_traced(&d, &mut cops, &mut robber, cap, None)?,
            };
            let ok = result.door_coverage_violations == 0;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&result).expect("serializable")),
                Format::Text => {
                    println!("k={k} n={n} vertices={}", d.graph.vertex_count());
                    println!("outcome: {:?}", result.outcome.as_ref().expect("simulation ends with an outcome"));
                    println!("rounds: {}", result.rounds_played);
                    println!("robber moves: {}", result.robber_forced_moves);
                    if let Some(mean) = result.mean_oscillation_cost() {
                        println!(
                            "traversals: {} (mean {mean:.2} cop turns)",
                            result.cop_steps_per_oscillation.len()
                        );
                    }
                    println!("door coverage violations: {}", result.door_coverage_violations);
                }
            }
            Ok(ok)
        }
        Command::Experiment(e) => match e {
            Experiment::Bounds { n_max, seed, format } => Ok(emit(&experiments::bounds(n_max, seed)?, format)),
            Experiment::Exponent { k, n, seed, format } => Ok(emit(&experiments::exponent(k, &n, seed)?, format)),
            Experiment::Random {
                n,
                p,
                samples,
                seed,
                format,
            } => Ok(emit(&experiments::random(n, p, samples, seed)?, format)),
        },
        Command::Info { graph, format } => {
            let info = match graph {
                None => json!({
                    "tool_version": env!("CARGO_PKG_VERSION"),
                    "solver_max_edges": 64,
                    "solver_max_vertices": 64,
                    "solver_state_budget": DEFAULT_STATE_BUDGET,
                    "families": ["gk", "path", "cycle", "kmn", "hypercube", "grid", "gnp"],
                }),
                Some(path) => {
                    let g = read_graph(&path)?;
                    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
                    json!({
                        "vertices": g.vertex_count(),
                        "edges": g.edge_count(),
                        "min_degree": degrees.iter().min(),
                        "max_degree": degrees.iter().max(),
                        "labelled": g.labels().len(),
                        "solvable": g.edge_count() <= 64 && g.vertex_count() <= 64,
                    })
                }
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&info).expect("serializable")),
                Format::Text => {
                    for (k, v) in info.as_object().expect("object") {
                        println!("{k}: {v}");
                    }
                }
            }
            Ok(true)
        }
    }
}
