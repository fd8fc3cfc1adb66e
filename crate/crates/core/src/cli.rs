//! Command-line front end behind the `dcs` binary.
//!
//! Solver commands print a JSON run report: the command line, SHA-256
//! digests of every input file, the effective configuration, the result
//! record and the wall time.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::cooccur::{cooccurrence_graph, Tokenizer};
use crate::dcsad::dcs_greedy;
use crate::dcsga::{new_sea, InitPolicy, ReplicatorStop, ShrinkMethod, SolverConfig};
use crate::difference::{
    build_difference, flip_signs, transform_weights, DifferenceGraph, WeightTransform,
};
use crate::error::Error;
use crate::graph::{read_edge_list, write_edge_list, WeightedGraph};
use crate::oracle::{
    oracle_dcsad, oracle_dcsga, Witness, DEFAULT_DCSAD_LIMIT, DEFAULT_DCSGA_LIMIT,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_NOT_CONVERGED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "dcs", version, about = "Density contrast subgraph mining")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build D = A2 - alpha A1 and write it as an edge list.
    Diff {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
        #[command(flatten)]
        transform: TransformArgs,
        /// Destination file; stdout when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print n, m+, m-, max, min and average weight of a signed graph.
    Stats { gd: PathBuf },
    /// Densest contrast subgraph under average degree.
    Dcsad {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Densest contrast subgraph under graph affinity.
    Dcsga {
        #[command(flatten)]
        input: InputArgs,
        /// Shrink tolerance is eps / |S|.
        #[arg(long, default_value_t = 1e-2)]
        eps: f64,
        #[arg(long)]
        max_inits: Option<usize>,
        /// Seed from every vertex instead of the bound-ordered scan.
        #[arg(long)]
        all_inits: bool,
        #[arg(long, value_enum)]
        baseline: Option<Baseline>,
        /// Improvement threshold of the replicator baseline.
        #[arg(long, default_value_t = 1e-6)]
        baseline_stop: f64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Exact optimum by exhaustive search on small graphs.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Measure::Ga)]
        measure: Measure,
        /// Largest vertex count accepted; defaults to 15 (ad) or 12 (ga).
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Keyword co-occurrence graph from a file with one document per line.
    Ingest {
        docs: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Stop-word file (one word per line) replacing the bundled list.
        #[arg(long, conflicts_with = "no_stopwords")]
        stopwords: Option<PathBuf>,
        #[arg(long)]
        no_stopwords: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Baseline {
    Replicator,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Measure {
    Ad,
    Ga,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Bands {
    Dblp,
}

#[derive(Debug, Args)]
struct TransformArgs {
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Negate every weight: mine what disappeared instead of what emerged.
    #[arg(long)]
    flip: bool,
    #[arg(long, value_enum, conflicts_with = "clamp_max")]
    discretize: Option<Bands>,
    #[arg(long)]
    clamp_max: Option<f64>,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Difference graph edge list.
    #[arg(required_unless_present_all = ["g1", "g2"], conflicts_with_all = ["g1", "g2"])]
    gd: Option<PathBuf>,
    #[arg(long, requires = "g2")]
    g1: Option<PathBuf>,
    #[arg(long, requires = "g1")]
    g2: Option<PathBuf>,
    #[command(flatten)]
    transform: TransformArgs,
}

#[derive(Debug, Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Debug, Serialize)]
struct RunReport {
    command: Vec<String>,
    inputs: Vec<InputDigest>,
    config: Value,
    result: Value,
    wall_time_secs: f64,
}

/// Failure of a command, with the process exit code it maps to.
#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Input(#[from] Error),
    #[error("{}: {source}", path.display())]
    File { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Graph { path: PathBuf, source: Error },
    #[error("{0}")]
    Usage(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Input(Error::BadConfig(_)) => EXIT_USAGE,
            _ => EXIT_INPUT,
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Errors go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let echo: Vec<String> = std::iter::once("dcs".to_string())
        .chain(
            args.iter()
                .skip(1)
                .map(|a| a.to_string_lossy().into_owned()),
        )
        .collect();
    match dispatch(cli.command, echo) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

fn dispatch(command: Command, echo: Vec<String>) -> Result<i32, Failure> {
    let start = Instant::now();
    match command {
        Command::Diff {
            g1,
            g2,
            transform,
            output,
        } => {
            let gd = transformed(
                build_difference(&load(&g1)?, &load(&g2)?, check_alpha(transform.alpha)?),
                &transform,
            )?;
            let stats = gd.stats();
            match &output {
                Some(path) => {
                    write_graph(gd.graph(), path)?;
                    print_text(&stats.to_string())?;
                }
                None => {
                    write_edge_list(gd.graph(), io::stdout().lock()).map_err(|e| {
                        Failure::File {
                            path: "<stdout>".into(),
                            source: e,
                        }
                    })?;
                    eprintln!("{stats}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Stats { gd } => {
            print_text(&DifferenceGraph::from_graph(load(&gd)?).stats().to_string())?;
            Ok(EXIT_OK)
        }
        Command::Dcsad { input, output } => {
            let (gd, inputs) = load_input(&input)?;
            let r = dcs_greedy(&gd)?;
            let g = gd.graph();
            let result = json!({
                "vertices": r.vertices.iter().map(|&u| g.label(u)).collect::<Vec<_>>(),
                "density": r.density,
                "ratio_beta": r.ratio_beta,
                "is_connected": r.is_connected,
                "is_positive_clique": r.is_positive_clique,
                "provenance": r.provenance,
            });
            let config = json!({ "transform": transform_json(&input.transform) });
            emit(echo, inputs, config, result, start, output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Dcsga {
            input,
            eps,
            max_inits,
            all_inits,
            baseline,
            baseline_stop,
            threads,
            output,
        } => {
            let (gd, inputs) = load_input(&input)?;
            if threads == 0 {
                return Err(Failure::Usage("--threads must be at least 1".into()));
            }
            let cfg = SolverConfig {
                eps_scale: eps,
                max_inits,
                init_policy: if all_inits {
                    InitPolicy::AllVertices
                } else {
                    InitPolicy::SmartOrder
                },
                parallel_inits: threads > 1,
                shrink: match baseline {
                    Some(Baseline::Replicator) => ShrinkMethod::Replicator(
                        ReplicatorStop::ObjectiveImprovement(baseline_stop),
                    ),
                    None => ShrinkMethod::CoordinateDescent,
                },
                ..SolverConfig::default()
            };
            cfg.validate()?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let r = pool.install(|| new_sea(&gd, &cfg))?;
            let g = gd.graph();
            let result = json!({
                "support": r.embedding.weights().map(|(u, w)| (g.label(u), w)).collect::<Vec<_>>(),
                "affinity_diff": r.affinity,
                "edge_density_diff": r.edge_density,
                "kkt_residual": r.kkt_residual,
                "is_positive_clique": r.is_positive_clique,
                "inits_used": r.inits_used,
                "converged": r.converged,
                "guard_rejections": r.audit.guard_rejections,
                "expansions": r.audit.expansions,
                "monotonicity_violations": r.audit.violations.len(),
            });
            let config = json!({
                "solver": cfg,
                "threads": threads,
                "transform": transform_json(&input.transform),
            });
            emit(echo, inputs, config, result, start, output.as_deref())?;
            Ok(if r.converged {
                EXIT_OK
            } else {
                EXIT_NOT_CONVERGED
            })
        }
        Command::Oracle {
            input,
            measure,
            limit,
            output,
        } => {
            let (gd, inputs) = load_input(&input)?;
            let g = gd.graph();
            let r = match measure {
                Measure::Ad => oracle_dcsad(&gd, limit.unwrap_or(DEFAULT_DCSAD_LIMIT))?,
                Measure::Ga => oracle_dcsga(&gd, limit.unwrap_or(DEFAULT_DCSGA_LIMIT))?,
            };
            let witness = match &r.witness {
                Witness::Set(s) => {
                    json!({ "vertices": s.iter().map(|&u| g.label(u)).collect::<Vec<_>>() })
                }
                Witness::Embedding(x) => {
                    json!({ "support": x.iter().map(|&(u, w)| (g.label(u), w)).collect::<Vec<_>>() })
                }
            };
            let result = json!({
                "measure": format!("{measure:?}").to_lowercase(),
                "optimum_value": r.optimum_value,
                "witness": witness,
                "instances_enumerated": r.instances_enumerated,
                "skipped": r.skipped,
            });
            let config = json!({ "limit": limit, "transform": transform_json(&input.transform) });
            emit(echo, inputs, config, result, start, output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Ingest {
            docs,
            output,
            stopwords,
            no_stopwords,
        } => {
            let tokenizer = if no_stopwords {
                Tokenizer::without_stopwords()
            } else if let Some(path) = stopwords {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Failure::File { path, source: e })?;
                Tokenizer::with_stopwords(text.lines().map(str::trim).filter(|l| !l.is_empty()))
            } else {
                Tokenizer::default()
            };
            let file = File::open(&docs).map_err(|e| Failure::File {
                path: docs.clone(),
                source: e,
            })?;
            let g = cooccurrence_graph(BufReader::new(file), &tokenizer)?;
            match output {
                Some(path) => write_graph(&g, &path)?,
                None => write_edge_list(&g, io::stdout().lock()).map_err(|e| Failure::File {
                    path: "<stdout>".into(),
                    source: e,
                })?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn check_alpha(alpha: f64) -> Result<f64, Failure> {
    if alpha.is_finite() && alpha >= 0.0 {
        Ok(alpha)
    } else {
        Err(Failure::Usage(format!(
            "--alpha must be finite and non-negative, got {alpha}"
        )))
    }
}

fn transform_of(t: &TransformArgs) -> WeightTransform {
    match (t.discretize, t.clamp_max) {
        (Some(Bands::Dblp), _) => WeightTransform::coauthor_bands(),
        (None, Some(cap)) => WeightTransform::ClampMax(cap),
        (None, None) => WeightTransform::Identity,
    }
}

fn transform_json(t: &TransformArgs) -> Value {
    json!({
        "alpha": t.alpha,
        "flip": t.flip,
        "discretize": t.discretize.map(|_| "dblp"),
        "clamp_max": t.clamp_max,
    })
}

/// Applies the sign flip first, then the weight transform.
fn transformed(gd: DifferenceGraph, t: &TransformArgs) -> Result<DifferenceGraph, Failure> {
    let gd = if t.flip { flip_signs(&gd) } else { gd };
    Ok(transform_weights(&gd, &transform_of(t))?)
}

fn load(path: &Path) -> Result<WeightedGraph, Failure> {
    let file = File::open(path).map_err(|e| Failure::File {
        path: path.to_owned(),
        source: e,
    })?;
    read_edge_list(BufReader::new(file)).map_err(|e| match e {
        Error::Io(io) => Failure::File {
            path: path.to_owned(),
            source: io,
        },
        other => Failure::Graph {
            path: path.to_owned(),
            source: other,
        },
    })
}

fn load_input(input: &InputArgs) -> Result<(DifferenceGraph, Vec<InputDigest>), Failure> {
    let paths: Vec<&PathBuf> = match (&input.gd, &input.g1, &input.g2) {
        (Some(gd), _, _) => vec![gd],
        (None, Some(g1), Some(g2)) => vec![g1, g2],
        _ => {
            return Err(Failure::Usage(
                "give a difference graph or both --g1 and --g2".into(),
            ))
        }
    };
    let mut digests = Vec::new();
    for p in &paths {
        let bytes = std::fs::read(p).map_err(|e| Failure::File {
            path: (*p).clone(),
            source: e,
        })?;
        digests.push(InputDigest {
            path: p.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
    }
    let gd = match paths.as_slice() {
        [gd] => DifferenceGraph::from_graph(load(gd)?),
        [g1, g2] => build_difference(&load(g1)?, &load(g2)?, check_alpha(input.transform.alpha)?),
        _ => unreachable!(),
    };
    let gd = transformed(gd, &input.transform)?;
    if gd.vertex_count() == 0 {
        return Err(Error::EmptyGraph.into());
    }
    Ok((gd, digests))
}

fn write_graph(g: &WeightedGraph, path: &Path) -> Result<(), Failure> {
    let file = File::create(path).map_err(|e| Failure::File {
        path: path.to_owned(),
        source: e,
    })?;
    let mut out = BufWriter::new(file);
    write_edge_list(g, &mut out)
        .and_then(|_| out.flush())
        .map_err(|e| Failure::File {
            path: path.to_owned(),
            source: e,
        })
}

fn emit(
    command: Vec<String>,
    inputs: Vec<InputDigest>,
    config: Value,
    result: Value,
    start: Instant,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let report = RunReport {
        command,
        inputs,
        config,
        result,
        wall_time_secs: start.elapsed().as_secs_f64(),
    };
    let text = serde_json::to_string_pretty(&report).expect("report is plain data");
    match output {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| Failure::File {
            path: path.to_owned(),
            source: e,
        }),
        None => print_text(&text),
    }
}

/// Writes a line to stdout; a closed pipe is not an error.
fn print_text(text: &str) -> Result<(), Failure> {
    match writeln!(io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::File {
            path: "<stdout>".into(),
            source: e,
        }),
        _ => Ok(()),
    }
}
