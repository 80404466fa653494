use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use impartial::graph::{enumerate_sub_f, parse_any, sgn_between, AnyGraph, Digraph};
use impartial::impartiality::{census, verdict, CensusMode, Route, DEFAULT_SEED};
use impartial::structure::{generate_rbm, generate_rbm_undirected, recursive_cutting};
use impartial::tourneyon::{probe_extrema, t_density, Direction, ProbeConfig, StepTourneyon};

const THREADS_ENV: &str = "IMPARTIAL_THREADS";

#[derive(Parser)]
#[command(name = "impartial", version, about = "Recognize and explore impartial digraphs")]
struct Cli {
    /// Worker threads for census and probe (default: all cores).
    /// IMPARTIAL_THREADS overrides this flag.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Structural,
    Signsum,
    Census,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Structural => Route::Structural,
            RouteArg::Signsum => Route::SignSum,
            RouteArg::Census => Route::Census,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Min,
    Max,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a digraph is impartial.
    Recognize {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "structural")]
        route: RouteArg,
        #[arg(long)]
        json: bool,
    },
    /// Histogram of labeled-copy counts over tournaments.
    Census {
        file: PathBuf,
        /// Tournament order (default: the digraph's order).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, conflicts_with_all = ["samples", "seed"])]
        exact: bool,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, requires = "samples")]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// List recursively bridge-mirrored digraphs on 2^k vertices.
    Generate {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        undirected: bool,
        #[arg(long)]
        json: bool,
    },
    /// Show the stages of recursive cutting.
    Cut {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the signed-copy certificate.
    Signsum {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List the spanning subdigraphs of H isomorphic to F with their signs.
    Subf {
        hfile: PathBuf,
        ffile: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Density of a digraph in a step tourneyon (default: the constant one).
    Density {
        file: PathBuf,
        #[arg(long)]
        tourneyon: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Search for the extreme density over step tourneyons.
    Probe {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        blocks: usize,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
        #[arg(long, default_value_t = 2000)]
        iters: usize,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
        #[arg(long, default_value_t = 0.999)]
        decay: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "min")]
        direction: DirectionArg,
        #[arg(long)]
        json: bool,
    },
}

/// Printed payload plus whether the mathematical verdict was positive.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn done(text: String) -> Self {
        Output { text, ok: true }
    }
}

type Outcome = Result<Output, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_any(path: &Path) -> Result<AnyGraph, String> {
    parse_any(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

/// Undirected inputs are read as digraphs oriented from smaller to larger
/// label.
fn load_digraph(path: &Path) -> Result<Digraph, String> {
    Ok(match load_any(path)? {
        AnyGraph::Directed(d) => d,
        AnyGraph::Undirected(g) => g.to_digraph(),
    })
}

fn json_line(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn edges_json(d: &Digraph) -> Value {
    d.edges().iter().map(|&(u, v)| json!([u, v])).collect()
}

fn cmd_recognize(file: &Path, route: RouteArg, as_json: bool) -> Outcome {
    let h = load_digraph(file)?;
    let v = verdict(&h, route.into()).map_err(|e| e.to_string())?;
    let text = if as_json { json_line(&v.to_json()) } else { v.to_string() };
    Ok(Output { text, ok: v.impartial })
}

fn cmd_census(file: &Path, n: Option<usize>, samples: Option<u64>, seed: Option<u64>, as_json: bool) -> Outcome {
    let h = load_digraph(file)?;
    let n = n.unwrap_or(h.n());
    let mode = match samples {
        Some(samples) => CensusMode::Sampled { seed: seed.unwrap_or(DEFAULT_SEED), samples },
        None => CensusMode::Exact,
    };
    let r = census(&h, n, mode).map_err(|e| e.to_string())?;
    let text = if as_json {
        json_line(&r.to_json())
    } else {
        let mut lines = vec![format!("n: {}", r.n)];
        lines.push(match r.mode {
            CensusMode::Exact => "mode: exact".to_owned(),
            CensusMode::Sampled { seed, samples } => format!("mode: sampled {samples} seed {seed}"),
        });
        lines.extend(r.distribution.iter().map(|(count, freq)| format!("{count} {freq}")));
        lines.push(format!("constant: {}", r.is_constant));
        lines.join("\n")
    };
    Ok(Output { text, ok: r.is_constant })
}

fn cmd_generate(k: u32, undirected: bool, as_json: bool) -> Outcome {
    let blocks: Vec<(String, Value)> = if undirected {
        generate_rbm_undirected(k)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|g| (g.to_text(), json!({"n": g.n(), "edges": g.edges()})))
            .collect()
    } else {
        generate_rbm(k)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|d| (d.to_text(), json!({"n": d.n(), "edges": d.edges()})))
            .collect()
    };
    let text = if as_json {
        let graphs: Vec<Value> = blocks.iter().map(|(_, v)| v.clone()).collect();
        json_line(&json!({"k": k, "undirected": undirected, "count": graphs.len(), "graphs": graphs}))
    } else {
        let mut out = blocks.iter().map(|(t, _)| t.as_str()).collect::<Vec<_>>().join("---\n");
        out.push_str(&blocks.len().to_string());
        out
    };
    Ok(Output::done(text))
}

fn cmd_cut(file: &Path, as_json: bool) -> Outcome {
    let (forest, orientation) = match load_any(file)? {
        AnyGraph::Directed(d) => (d.underlying(), Some(d)),
        AnyGraph::Undirected(g) => (g, None),
    };
    let trace = recursive_cutting(&forest).map_err(|e| e.to_string())?;
    let text = if as_json {
        let mut v = serde_json::to_value(&trace).expect("trace serializes");
        if let Some(d) = &orientation {
            let oriented = trace
                .stages
                .iter()
                .map(|s| d.orient(s).map(|o| edges_json(&o)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            v["oriented"] = Value::Array(oriented);
        }
        json_line(&v)
    } else {
        trace.to_text(orientation.as_ref()).map_err(|e| e.to_string())?.trim_end().to_owned()
    };
    Ok(Output::done(text))
}

fn cmd_subf(hfile: &Path, ffile: &Path, as_json: bool) -> Outcome {
    let h = load_digraph(hfile)?;
    let f = load_any(ffile)?.underlying();
    let subs = enumerate_sub_f(&h, &f).map_err(|e| e.to_string())?;
    let signs = subs
        .iter()
        .map(|s| sgn_between(&subs[0], s).map(|x| x.value()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let text = if as_json {
        let items: Vec<Value> =
            subs.iter().zip(&signs).map(|(s, sg)| json!({"edges": edges_json(s), "sign": sg})).collect();
        json_line(&json!({"count": subs.len(), "subgraphs": items}))
    } else {
        let mut out: String =
            subs.iter().zip(&signs).map(|(s, sg)| format!("{}sign: {sg}\n", s.to_text())).collect::<Vec<_>>().join("---\n");
        out.push_str(&subs.len().to_string());
        out
    };
    Ok(Output::done(text))
}

fn cmd_density(file: &Path, tourneyon: Option<&Path>, as_json: bool) -> Outcome {
    let h = load_digraph(file)?;
    let w = match tourneyon {
        Some(p) => serde_json::from_str::<StepTourneyon>(&read(p)?).map_err(|e| format!("{}: {e}", p.display()))?,
        None => StepTourneyon::constant(),
    };
    let t = t_density(&h, &w).map_err(|e| e.to_string())?;
    let text = if as_json { json_line(&json!({"density": t, "blocks": w.blocks(), "edges": h.edge_count()})) } else { t.to_string() };
    Ok(Output::done(text))
}

fn cmd_probe(file: &Path, cfg: ProbeConfig, as_json: bool) -> Outcome {
    let h = load_digraph(file)?;
    let r = probe_extrema(&h, &cfg).map_err(|e| e.to_string())?;
    let text = if as_json {
        json_line(&serde_json::to_value(&r).expect("report serializes"))
    } else {
        let point = serde_json::to_string(&r.best_point).expect("point serializes");
        let dir = match r.direction {
            Direction::Min => "min",
            Direction::Max => "max",
        };
        format!(
            "{dir} {}\nreference {}\nrestart {}\ngradient norm {}\npoint {point}",
            r.best_value,
            0.5f64.powi(h.edge_count() as i32),
            r.best_restart,
            r.gradient_norm_at_best
        )
    };
    Ok(Output::done(text))
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Ok(s) => s.trim().parse().map(Some).map_err(|_| format!("{THREADS_ENV}: not a thread count: {s}")),
        Err(_) => Ok(flag),
    }
}

fn run(cli: Cli) -> Outcome {
    if let Some(n) = thread_count(cli.threads)? {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    }
    match cli.command {
        Command::Recognize { file, route, json } => cmd_recognize(&file, route, json),
        Command::Census { file, n, exact: _, samples, seed, json } => cmd_census(&file, n, samples, seed, json),
        Command::Generate { k, undirected, json } => cmd_generate(k, undirected, json),
        Command::Cut { file, json } => cmd_cut(&file, json),
        Command::Signsum { file, json } => cmd_recognize(&file, RouteArg::Signsum, json),
        Command::Subf { hfile, ffile, json } => cmd_subf(&hfile, &ffile, json),
        Command::Density { file, tourneyon, json } => cmd_density(&file, tourneyon.as_deref(), json),
        Command::Probe { file, blocks, restarts, iters, step, decay, seed, direction, json } => {
            let direction = match direction {
                DirectionArg::Min => Direction::Min,
                DirectionArg::Max => Direction::Max,
            };
            cmd_probe(&file, ProbeConfig { blocks, restarts, iters, step, decay, seed, direction }, json)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
