//! Seeded, reproducible command-line experiments over the `maxkcut`
//! library: full solves with per-depth reports, depth-1 landscape export,
//! compiled resource tables, and exhaustive reference optima.
//!
//! Exit codes: 0 success, 1 usage or input errors, 2 capacity limits,
//! 3 verification / numerical-integrity failures.

use std::fs;
use std::io::BufReader;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use maxkcut::circuit::resource_report;
use maxkcut::cut::{brute_force, random_baseline};
use maxkcut::graph::{gen_barabasi_albert, gen_erdos_renyi, read_graph, Graph};
use maxkcut::hamiltonian::EncodingScheme;
use maxkcut::qaoa::{grid_search_p1, run_qaoa, GridSpec, NmOptions, QaoaProblem, RunConfig};
use maxkcut::{Error, Result};

#[derive(Parser)]
#[command(
    name = "maxkcut",
    version,
    about = "Weighted MAX k-CUT experiments on a statevector simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimize schedules depth by depth and write run.json + params.csv.
    Solve(SolveArgs),
    /// Export the full depth-1 energy grid as CSV.
    Landscape(LandscapeArgs),
    /// Print compiled qubit/gate budgets per scheme and color count.
    Resources(ResourcesArgs),
    /// Exhaustively compute the reference optimum.
    BruteForce(BruteForceArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Graph source: an edge-list file path, `barbell`, `er:n,p`, or `ba:n,m`.
    #[arg(long)]
    graph: String,
    /// Global seed; fans out to the generator and the per-depth samplers.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SchemeArgs {
    /// Number of colors.
    #[arg(long)]
    k: usize,
    /// Encoding/mixer scheme: binary | onehot-x | onehot-penalty | onehot-xy.
    #[arg(long, default_value = "binary")]
    scheme: String,
    /// Penalty weight (required for onehot-penalty, rejected otherwise).
    #[arg(long)]
    penalty_beta: Option<f64>,
}

#[derive(Args)]
struct GridArgs {
    /// Depth-1 search lattice, e.g. 20x20.
    #[arg(long, default_value = "20x20")]
    grid: String,
    /// Upper γ bound (default: 2π, scaled by mean |w| on weighted graphs).
    #[arg(long)]
    gamma_max: Option<f64>,
    /// Upper β bound (default: π).
    #[arg(long)]
    beta_max: Option<f64>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    scheme: SchemeArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Deepest layer count; all depths 1..=p run.
    #[arg(long, default_value_t = 1)]
    p: usize,
    /// Measurement shots per depth.
    #[arg(long, default_value_t = 8192)]
    shots: u64,
    /// Output directory for run.json and params.csv.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct LandscapeArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[command(flatten)]
    scheme: SchemeArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Output directory for landscape.csv.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct ResourcesArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Color counts: a single value `4` or an inclusive range `2-8`.
    #[arg(long, default_value = "2-8")]
    k: String,
    /// One scheme name, or `all`.
    #[arg(long, default_value = "all")]
    scheme: String,
}

#[derive(Args)]
struct BruteForceArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Number of colors.
    #[arg(long)]
    k: usize,
}

fn main() -> ExitCode {
    // Die quietly when the read end of a pipe closes early
    // (`maxkcut resources ... | head`) instead of panicking on EPIPE.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help / --version land here too and are not failures.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Capacity(_) => 2,
                Error::Verification { .. } | Error::NonFiniteObjective { .. } => 3,
                _ => 1,
            })
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Landscape(args) => cmd_landscape(args),
        Command::Resources(args) => cmd_resources(args),
        Command::BruteForce(args) => cmd_brute_force(args),
    }
}

// ---------------------------------------------------------------------------
// Shared parsing
// ---------------------------------------------------------------------------

fn load_graph(spec: &str, seed: u64) -> Result<Graph> {
    if spec == "barbell" {
        return Ok(Graph::barbell());
    }
    if let Some(rest) = spec.strip_prefix("er:") {
        let (n, p) = split_pair(rest, "er:n,p")?;
        return gen_erdos_renyi(parse_num(&n, "vertex count")?, parse_float(&p, "edge probability")?, seed, None);
    }
    if let Some(rest) = spec.strip_prefix("ba:") {
        let (n, m) = split_pair(rest, "ba:n,m")?;
        return gen_barabasi_albert(parse_num(&n, "vertex count")?, parse_num(&m, "attachment count")?, seed, None);
    }
    let file = fs::File::open(spec).map_err(|e| {
        Error::Parameter(format!("cannot open graph file '{spec}': {e}"))
    })?;
    read_graph(BufReader::new(file))
}

fn split_pair(s: &str, shape: &str) -> Result<(String, String)> {
    match s.split_once(',') {
        Some((a, b)) => Ok((a.to_string(), b.to_string())),
        None => Err(Error::Parameter(format!("generator spec must look like {shape}"))),
    }
}

fn parse_num(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parameter(format!("invalid {what}: '{s}'")))
}

fn parse_float(s: &str, what: &str) -> Result<f64> {
    s.trim().parse().map_err(|_| Error::Parameter(format!("invalid {what}: '{s}'")))
}

fn make_scheme(args: &SchemeArgs) -> Result<EncodingScheme> {
    let scheme = match args.scheme.as_str() {
        "binary" => EncodingScheme::binary(args.k),
        "onehot-x" => EncodingScheme::onehot_x(args.k),
        "onehot-xy" => EncodingScheme::onehot_xy(args.k),
        "onehot-penalty" => {
            let beta = args.penalty_beta.ok_or_else(|| {
                Error::Parameter("onehot-penalty needs --penalty-beta".into())
            })?;
            EncodingScheme::onehot_penalty_x(args.k, beta)
        }
        other => {
            return Err(Error::Parameter(format!(
                "unknown scheme '{other}' (expected binary | onehot-x | onehot-penalty | onehot-xy)"
            )))
        }
    };
    if args.penalty_beta.is_some() && args.scheme != "onehot-penalty" {
        return Err(Error::Parameter(
            "--penalty-beta only applies to the onehot-penalty scheme".into(),
        ));
    }
    Ok(scheme)
}

fn make_grid(args: &GridArgs) -> Result<GridSpec> {
    let (ng, nb) = args
        .grid
        .split_once('x')
        .ok_or_else(|| Error::Parameter(format!("grid must look like 20x20, got '{}'", args.grid)))?;
    Ok(GridSpec {
        n_gamma: parse_num(ng, "grid γ count")?,
        n_beta: parse_num(nb, "grid β count")?,
        gamma_max: args.gamma_max,
        beta_max: args.beta_max,
    })
}

/// One-line provenance stamp embedded (as `#` comments) in every CSV.
fn provenance(command: &str, graph: &GraphArgs, extra: &str) -> String {
    format!("# command={command} graph={} seed={} {extra}\n", graph.graph, graph.seed)
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct CliEcho {
    command: String,
    graph: String,
    k: usize,
    scheme: String,
    p: usize,
    shots: u64,
    seed: u64,
    grid: String,
    gamma_max: Option<f64>,
    beta_max: Option<f64>,
    penalty_beta: Option<f64>,
}

fn cmd_solve(args: SolveArgs) -> Result<()> {
    let graph = load_graph(&args.graph.graph, args.graph.seed)?;
    let scheme = make_scheme(&args.scheme)?;
    let grid = make_grid(&args.grid)?;
    let mut config = RunConfig::new(scheme);
    config.max_depth = args.p;
    config.shots = args.shots;
    config.seed = args.graph.seed;
    config.grid = grid;
    config.nm = NmOptions::default();

    let run = run_qaoa(&graph, &config)?;

    println!(
        "graph: {} vertices, {} edges, optimum {} (k={}, scheme {})",
        graph.num_vertices(),
        graph.num_edges(),
        run.best_value,
        args.scheme.k,
        args.scheme.scheme
    );
    println!(
        "{:<4} {:>12} {:>12} {:>8} {:>10} {:>9} {:>9}",
        "p", "energy", "cut", "ratio", "sampled", "nm_iters", "wall_ms"
    );
    for d in &run.depths {
        println!(
            "{:<4} {:>12.6} {:>12.6} {:>8.4} {:>10.4} {:>9} {:>9}",
            d.depth, d.energy, d.expected_cut, d.exact_ratio, d.sampled_ratio, d.nm_iterations, d.wall_ms
        );
    }
    println!(
        "random baseline {:.4}",
        random_baseline(args.scheme.k).unwrap_or(0.0)
    );

    fs::create_dir_all(&args.out)?;
    let echo = CliEcho {
        command: "solve".into(),
        graph: args.graph.graph.clone(),
        k: args.scheme.k,
        scheme: args.scheme.scheme.clone(),
        p: args.p,
        shots: args.shots,
        seed: args.graph.seed,
        grid: args.grid.grid.clone(),
        gamma_max: args.grid.gamma_max,
        beta_max: args.grid.beta_max,
        penalty_beta: args.scheme.penalty_beta,
    };
    let report = serde_json::json!({ "cli": echo, "run": run });
    let json_path = args.out.join("run.json");
    fs::write(&json_path, serde_json::to_string_pretty(&report).expect("report serializes") + "\n")?;

    let mut csv = provenance(
        "solve",
        &args.graph,
        &format!(
            "k={} scheme={} p={} shots={} grid={}",
            args.scheme.k, args.scheme.scheme, args.p, args.shots, args.grid.grid
        ),
    );
    csv.push_str("depth,layer,gamma_init,beta_init,gamma_opt,beta_opt\n");
    for d in &run.depths {
        for layer in 0..d.depth {
            csv.push_str(&format!(
                "{},{},{},{},{},{}\n",
                d.depth,
                layer,
                d.gamma_init[layer],
                d.beta_init[layer],
                d.gamma_opt[layer],
                d.beta_opt[layer]
            ));
        }
    }
    let csv_path = args.out.join("params.csv");
    fs::write(&csv_path, csv)?;
    println!("wrote {} and {}", json_path.display(), csv_path.display());
    Ok(())
}

fn cmd_landscape(args: LandscapeArgs) -> Result<()> {
    let graph = load_graph(&args.graph.graph, args.graph.seed)?;
    let scheme = make_scheme(&args.scheme)?;
    let grid = make_grid(&args.grid)?;
    let problem = QaoaProblem::new(&graph, &scheme, None)?;
    let result = grid_search_p1(&graph, &problem, &grid)?;

    let mut csv = provenance(
        "landscape",
        &args.graph,
        &format!("k={} scheme={} grid={}", args.scheme.k, args.scheme.scheme, args.grid.grid),
    );
    csv.push_str("gamma,beta,energy\n");
    for (gamma, beta, energy) in &result.table {
        csv.push_str(&format!("{gamma},{beta},{energy}\n"));
    }
    fs::create_dir_all(&args.out)?;
    let path = args.out.join("landscape.csv");
    fs::write(&path, csv)?;
    println!(
        "{} grid nodes; minimum energy {:.6} at gamma={:.6}, beta={:.6}",
        result.table.len(),
        result.energy,
        result.gamma,
        result.beta
    );
    println!("wrote {}", path.display());
    Ok(())
}

fn cmd_resources(args: ResourcesArgs) -> Result<()> {
    let graph = load_graph(&args.graph.graph, args.graph.seed)?;
    let (k_lo, k_hi) = match args.k.split_once('-') {
        Some((lo, hi)) => (parse_num(lo, "k range start")?, parse_num(hi, "k range end")?),
        None => {
            let k = parse_num(&args.k, "k")?;
            (k, k)
        }
    };
    if k_lo < 2 || k_hi < k_lo {
        return Err(Error::Parameter(format!("invalid k range {}-{}", k_lo, k_hi)));
    }
    let scheme_names: Vec<&str> = match args.scheme.as_str() {
        "all" => vec!["binary", "onehot-x", "onehot-penalty", "onehot-xy"],
        one => vec![one],
    };

    println!(
        "graph: {} vertices, {} edges",
        graph.num_vertices(),
        graph.num_edges()
    );
    println!(
        "{:<4} {:<15} {:>7} {:>9} {:>10} {:>10} {:>12}",
        "k", "scheme", "qubits", "init_cx", "phase_cx", "mixer_cx", "cx_per_layer"
    );
    for k in k_lo..=k_hi {
        for name in &scheme_names {
            let scheme = match *name {
                "binary" => EncodingScheme::binary(k),
                "onehot-x" => EncodingScheme::onehot_x(k),
                "onehot-xy" => EncodingScheme::onehot_xy(k),
                // Counts are independent of the weight; any admissible
                // value produces the same table.
                "onehot-penalty" => EncodingScheme::onehot_penalty_x(
                    k,
                    (k * graph.num_edges()) as f64 + 1.0,
                ),
                other => {
                    return Err(Error::Parameter(format!(
                        "unknown scheme '{other}' (expected binary | onehot-x | onehot-penalty | onehot-xy | all)"
                    )))
                }
            };
            let r = resource_report(&graph, &scheme)?;
            println!(
                "{:<4} {:<15} {:>7} {:>9} {:>10} {:>10} {:>12}",
                k, name, r.qubits_total, r.init.cx, r.phase_per_layer.cx, r.mixer_per_layer.cx, r.first_layer_cx
            );
        }
    }
    Ok(())
}

fn cmd_brute_force(args: BruteForceArgs) -> Result<()> {
    let graph = load_graph(&args.graph.graph, args.graph.seed)?;
    let result = brute_force(&graph, args.k, None)?;
    println!(
        "optimum {} with assignment {:?} ({} assignments evaluated)",
        result.best_value, result.best_assignment, result.evaluated
    );
    Ok(())
}
