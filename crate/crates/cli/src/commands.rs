use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use pauvc::graph::parse_dimacs;
use pauvc::reductions::{build_bipartite_gadget, build_gc, parse_cnf};
use pauvc::{gen, vc, Algo, Graph, Limits, Model, PreAssignment, PreAssignmentJson, SolveOptions};
use serde::Serialize;
use thiserror::Error;

use crate::{Cli, Command, Family, ReduceKind};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pauvc::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("generated instance failed re-verification: {0}")]
    Verification(String),
}

impl CliError {
    /// 2 for malformed input, 3 for resource limits, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_limit() => 3,
            CliError::Core(pauvc::Error::Infeasible(_)) => 1,
            CliError::Core(_) | CliError::Io { .. } | CliError::Json { .. } => 2,
            CliError::Csv(_) | CliError::Verification(_) => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn read_graph(path: &Path) -> Result<Graph> {
    Ok(parse_dimacs(&read(path)?).map_err(pauvc::Error::from)?.graph)
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn options(cli: &Cli) -> SolveOptions {
    let mut limits = Limits::from_env();
    if let Some(v) = cli.vertex_limit {
        limits.vertex_limit = v;
    }
    SolveOptions {
        limits,
        time_limit: cli.time_limit.map(Duration::from_secs_f64),
        ..SolveOptions::default()
    }
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    let opts = options(cli);
    match &cli.command {
        Command::Solve { graph, model, algo, k, json } => {
            let g = read_graph(graph)?;
            let r = pauvc::solve_with(&g, (*model).into(), (*algo).into(), &opts)?;
            if *json {
                print!("{}", pretty(&r.to_json()));
            } else {
                println!("model: {}", r.model);
                println!("opt_size: {}", r.opt_size);
                println!("include: {}", r.pre.include());
                println!("exclude: {}", r.pre.exclude());
                println!("unique_cover: {}", r.unique_cover);
                println!("nodes: {}", r.stats.nodes_explored);
            }
            Ok(match k {
                Some(k) if r.opt_size > *k => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            })
        }
        Command::Check { graph, pre, json } => {
            let g = read_graph(graph)?;
            let text = read(pre)?;
            let pj: PreAssignmentJson = serde_json::from_str(&text)
                .map_err(|source| CliError::Json { path: pre.clone(), source })?;
            let pa = PreAssignment::from_json(&pj, g.n())?;
            let report = pauvc::is_feasible(&g, &pa)?;
            if *json {
                #[derive(Serialize)]
                struct Out {
                    feasible: bool,
                    reason: Option<pauvc::InfeasibleReason>,
                    unique_cover: Option<Vec<usize>>,
                }
                let out = Out {
                    feasible: report.feasible,
                    reason: report.reason,
                    unique_cover: report.witness.as_ref().map(|w| w.to_vec()),
                };
                print!("{}", pretty(&out));
            } else if let Some(w) = &report.witness {
                println!("feasible: unique cover {w}");
            } else {
                println!("infeasible: {}", report.reason.expect("reason"));
            }
            Ok(if report.feasible { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Generate { family, input, n, p, seed, model, out } => {
            let (g, source) = match input {
                Some(path) => (read_graph(path)?, Source::File { path: path.display().to_string() }),
                None => {
                    let mut rng = gen::rng(*seed);
                    match family {
                        Family::Er => (gen::erdos_renyi(*n, *p, &mut rng), Source::Er { n: *n, p: *p }),
                        Family::Tree => (gen::random_tree(*n, &mut rng), Source::Tree { n: *n }),
                    }
                }
            };
            let meta = generate(&g, (*model).into(), &opts, source, *seed)?;
            write(&with_ext(out, "col"), &meta.1)?;
            write(&with_ext(out, "json"), &pretty(&meta.0))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { kind } => {
            reduce(kind)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { dir, model, algo, compare } => {
            bench(dir, (*model).into(), (*algo).into(), *compare, &opts, io::stdout().lock())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Source {
    Er { n: usize, p: f64 },
    Tree { n: usize },
    File { path: String },
}

#[derive(Debug, Serialize)]
pub struct GenerateMeta {
    pub expected_tau: usize,
    pub source_seed: u64,
    pub source: Source,
    pub source_n: usize,
    pub source_m: usize,
    pub source_tau: usize,
    pub pre_assignment: PreAssignmentJson,
    pub n: usize,
    pub m: usize,
    /// Reduced id `i` is source vertex `kept[i]`.
    pub kept: Vec<usize>,
}

/// Solves, reduces and re-verifies; returns the metadata and the DIMACS text.
fn generate(
    g: &Graph,
    model: Model,
    opts: &SolveOptions,
    source: Source,
    seed: u64,
) -> Result<(GenerateMeta, String)> {
    let r = pauvc::solve_with(g, model, Algo::Auto, opts)?;
    let red = pauvc::reduce_instance(g, &r.pre)?;
    let (unique, sol) = pauvc::has_unique_min_vc(&red.graph)?;
    if !unique || sol.tau != red.expected_tau {
        return Err(CliError::Verification(format!(
            "unique = {unique}, tau = {}, expected {}",
            sol.tau, red.expected_tau
        )));
    }
    let meta = GenerateMeta {
        expected_tau: red.expected_tau,
        source_seed: seed,
        source,
        source_n: g.n(),
        source_m: g.m(),
        source_tau: r.unique_cover.len(),
        pre_assignment: r.pre.to_json(),
        n: red.graph.n(),
        m: red.graph.m(),
        kept: (0..red.map.new_len()).map(|i| red.map.old(i)).collect(),
    };
    Ok((meta, red.graph.to_dimacs()))
}

fn reduce(kind: &ReduceKind) -> Result<()> {
    let (graph, meta, out) = match kind {
        ReduceKind::Fcp { cnf, out } => {
            let cnf = parse_cnf(&read(cnf)?)?;
            let gc = build_gc(&cnf);
            (gc.graph, pretty(&gc.labeling.to_json()), out)
        }
        ReduceKind::Ids { graph, out } => {
            let g = read_graph(graph)?;
            let gadget = build_bipartite_gadget(&g);
            if !gadget.bipartite {
                eprintln!("warning: input graph is not bipartite");
            }
            #[derive(Serialize)]
            struct Meta {
                pendant: Vec<usize>,
                bipartite: bool,
            }
            let meta = pretty(&Meta { pendant: gadget.pendant, bipartite: gadget.bipartite });
            (gadget.graph, meta, out)
        }
    };
    match out {
        Some(prefix) => {
            write(&with_ext(prefix, "col"), &graph.to_dimacs())?;
            write(&with_ext(prefix, "json"), &meta)?;
        }
        None => {
            print!("{}", graph.to_dimacs());
            eprint!("{meta}");
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct BenchRow {
    instance: String,
    n: Option<usize>,
    m: Option<usize>,
    tau: Option<usize>,
    model: Model,
    algo: String,
    opt_size: Option<usize>,
    nodes: Option<u64>,
    elapsed_ms: Option<String>,
    agrees: String,
}

const BENCH_HEADER: [&str; 10] =
    ["instance", "n", "m", "tau", "model", "algo", "opt_size", "nodes", "elapsed_ms", "agrees"];

/// One CSV row per instance file, in file-name order; failures become rows.
pub fn bench(
    dir: &Path,
    model: Model,
    algo: Algo,
    compare: bool,
    opts: &SolveOptions,
    out: impl Write,
) -> Result<()> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|source| CliError::Io { path: dir.to_owned(), source })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|e| e == "col" || e == "dimacs"))
        .collect();
    files.sort();
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(BENCH_HEADER)?;
    for path in files {
        let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let mut row = BenchRow {
            instance: name,
            n: None,
            m: None,
            tau: None,
            model,
            algo: algo.to_string(),
            opt_size: None,
            nodes: None,
            elapsed_ms: None,
            agrees: String::new(),
        };
        match bench_one(&path, model, algo, compare, opts, &mut row) {
            Ok(()) => {}
            Err(e) => row.agrees = format!("error: {e}"),
        }
        w.serialize(&row)?;
    }
    w.flush().map_err(|source| CliError::Io { path: dir.to_owned(), source })?;
    Ok(())
}

fn bench_one(
    path: &Path,
    model: Model,
    algo: Algo,
    compare: bool,
    opts: &SolveOptions,
    row: &mut BenchRow,
) -> Result<()> {
    let g = read_graph(path)?;
    row.n = Some(g.n());
    row.m = Some(g.m());
    row.tau = Some(vc::tau(&g)?);
    let r = pauvc::solve_with(&g, model, algo, opts)?;
    row.opt_size = Some(r.opt_size);
    row.nodes = Some(r.stats.nodes_explored);
    row.elapsed_ms = Some(format!("{:.3}", r.stats.elapsed_ms));
    if compare {
        let e = pauvc::solve_with(&g, model, Algo::Enum, opts)?;
        row.agrees = (e.opt_size == r.opt_size).to_string();
    }
    Ok(())
}
