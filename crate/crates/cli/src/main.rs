//! Command-line front door: construction, spectra, counting, enumeration,
//! verification campaigns, and report post-processing.
//!
//! Exit codes: 0 for pass/report, 1 for a falsified assertable claim, 2 for
//! usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use specsat::{
    pattern_by_name, read_graph6_input, report_body, report_to_json, reports_to_csv, sidecar_json,
    solver_for, Config,
};
use specsat_core::bounds::Verdict;
use specsat_core::families::{
    enumerate_all_graphs, enumerate_family, l_graph, perturbed_multipartite, t_star_graph, turan,
    y_graph, PartitionedGraph,
};
use specsat_core::graph::Graph;
use specsat_core::graph6::emit_graph6;
use specsat_core::harness::{self, Status, VerificationReport};
use specsat_core::spectral::spectral_radius;

#[derive(Parser)]
#[command(
    name = "specsat",
    version,
    about = "Spectral extremal graph batteries: constructions, certified spectra, copy counts, and verification campaigns",
    propagate_version = true
)]
struct Cli {
    /// Battery config file (JSON); defaults to $SPECSAT_CONFIG, then builtins
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Builds a named family member and prints graph6 plus a JSON sidecar
    Construct(ConstructArgs),
    /// Certified spectral radius of named families or graph6 input
    Spectrum(SpectrumArgs),
    /// Exact copy counts, anchored counts, minimum-edge counts, covering numbers
    Count(CountArgs),
    /// Enumerates family members or all small graphs up to isomorphism
    Enumerate(EnumerateArgs),
    /// Runs a verification campaign and emits a deterministic report
    Verify(VerifyArgs),
    /// Flattens or merges report JSON files
    Report(ReportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    /// Complete multipartite with near-equal parts
    Turan,
    /// Matching added in a largest part
    Y,
    /// Star (triangle when q = 3) added in a smallest part
    L,
    /// Star added in a largest part
    TStar,
    /// Explicit part sizes with added class-edges and deleted cross-edges
    Perturbed,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family constructor
    #[arg(long, value_enum)]
    family: Option<FamilyKind>,
    /// Vertex count n
    #[arg(long)]
    n: Option<usize>,
    /// Part count r
    #[arg(long)]
    r: Option<usize>,
    /// Added-edge parameter q
    #[arg(long)]
    q: Option<usize>,
    /// Explicit part sizes, descending (e.g. 4,3) for --family perturbed
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Class-edges to add, e.g. 0-1,2-3
    #[arg(long)]
    add_edges: Option<String>,
    /// Cross-edges to delete, e.g. 0-4
    #[arg(long)]
    del_edges: Option<String>,
}

impl FamilyArgs {
    fn build(&self) -> Result<PartitionedGraph, String> {
        let need =
            |v: Option<usize>, name: &str| v.ok_or_else(|| format!("missing required flag --{name}"));
        match self.family {
            None => Err("missing --family".into()),
            Some(FamilyKind::Turan) => {
                turan(need(self.n, "n")?, need(self.r, "r")?).map_err(|e| e.to_string())
            }
            Some(FamilyKind::Y) => {
                y_graph(need(self.n, "n")?, need(self.r, "r")?, need(self.q, "q")?)
                    .map_err(|e| e.to_string())
            }
            Some(FamilyKind::L) => {
                l_graph(need(self.n, "n")?, need(self.r, "r")?, need(self.q, "q")?)
                    .map_err(|e| e.to_string())
            }
            Some(FamilyKind::TStar) => {
                t_star_graph(need(self.n, "n")?, need(self.r, "r")?, need(self.q, "q")?)
                    .map_err(|e| e.to_string())
            }
            Some(FamilyKind::Perturbed) => {
                let sizes = self.sizes.clone().ok_or("--family perturbed needs --sizes")?;
                let add = parse_edge_list(self.add_edges.as_deref().unwrap_or(""))?;
                let del = parse_edge_list(self.del_edges.as_deref().unwrap_or(""))?;
                perturbed_multipartite(&sizes, &add, &del).map_err(|e| e.to_string())
            }
        }
    }
}

fn parse_edge_list(text: &str) -> Result<Vec<(usize, usize)>, String> {
    let mut out = Vec::new();
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        let (a, b) = item
            .trim()
            .split_once('-')
            .ok_or_else(|| format!("edge '{item}' must look like U-V"))?;
        let u: usize = a.trim().parse().map_err(|_| format!("bad vertex '{a}'"))?;
        let v: usize = b.trim().parse().map_err(|_| format!("bad vertex '{b}'"))?;
        out.push((u, v));
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    Json,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "graph6")]
    format: OutputFormat,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// graph6 input file, or - for stdin (one graph per line)
    #[arg(long)]
    input: Option<String>,
    /// Certified enclosure width target (default from config)
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountWhat {
    /// N_F(G): copies of the pattern in the host
    Copies,
    /// N_F(G, e): copies through a given edge
    ThroughEdge,
    /// c(n, F): minimum copies created by one edge added to the Turan graph
    Cnf,
    /// c(n_1..n_r, F): copies through an edge in the largest part
    CPartsF,
    /// tau_F(G): minimum vertex set hitting every copy
    Tau,
    /// Least-squares fit of c(n, F) against n^{f-2}
    Alpha,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    what: CountWhat,
    /// Pattern: K3..K6, C5/C7/C9, B2..B4, W5/W7, or a graph6 line
    #[arg(long, default_value = "K3")]
    pattern: String,
    #[command(flatten)]
    family: FamilyArgs,
    /// graph6 host input file, or - for stdin
    #[arg(long)]
    input: Option<String>,
    /// Edge U-V for --what through-edge
    #[arg(long)]
    edge: Option<String>,
    /// Sample sizes for --what alpha, e.g. 20,40,80
    #[arg(long, value_delimiter = ',')]
    n_list: Option<Vec<usize>>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Enumerate all n-vertex graphs up to isomorphism (n <= 8)
    #[arg(long, conflicts_with_all = ["n", "r", "q"])]
    all_graphs: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremKind {
    /// Matching member minimizes and star/triangle member maximizes lambda
    MinMax,
    /// Above q = 2 sqrt(n) the (q-1)-star beats the q-matching
    Tightness,
    /// Exhaustive small-n triangle-count scan above the bipartite threshold
    NingZhai,
    /// Every family member holds at least q c(n,F) copies; perturbed scan
    Supersat,
    /// Covering number and copy floor of the matching member
    Covering,
    /// Star member count plus the certified Y < T-star <= L chain
    TVariant,
    /// Residual and unbalanced-part bounds for near-multipartite graphs
    FirstKey,
    /// Certified enclosures for the move-one-vertex spectral shift
    MoveOne,
    /// One-vertex shift residual with embeddings kept fixed
    Shift,
    /// Star-vs-smallest-part comparisons at one (n, r, q)
    LVsT,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: TheoremKind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long)]
    q: Option<usize>,
    /// Covering-number target s (covering campaign)
    #[arg(long)]
    s: Option<usize>,
    #[arg(long, default_value = "K3")]
    pattern: String,
    /// Shift-window parameter (default from config)
    #[arg(long)]
    eps: Option<f64>,
    /// Linear-range fraction for the additive star comparison
    #[arg(long)]
    delta: Option<f64>,
    /// Copy floor constant for covering runs
    #[arg(long)]
    covering_c: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    /// Worker cap for parallel batteries
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// Flatten checks of the input reports into CSV
    #[arg(long, conflicts_with = "merge")]
    csv: Option<PathBuf>,
    /// Merge input reports into one JSON array
    #[arg(long)]
    merge: Option<PathBuf>,
    /// Input report JSON files
    inputs: Vec<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    let config = Config::load(cli.config.as_deref())?;
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Spectrum(args) => spectrum(args, &config),
        Command::Count(args) => count(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Verify(args) => verify(args, &config),
        Command::Report(args) => report(args),
    }
}

fn write_out(out: Option<&PathBuf>, content: &str) -> Result<(), String> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, content).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
    }
}

fn construct(args: ConstructArgs) -> Result<i32, String> {
    let pg = args.family.build()?;
    let g6 = emit_graph6(pg.graph()).map_err(|e| e.to_string())?;
    let sidecar = sidecar_json(&pg);
    let content = match args.format {
        OutputFormat::Graph6 => format!("{g6}\n{sidecar}\n"),
        OutputFormat::Json => {
            let mut v = serde_json::json!({ "graph6": g6 });
            let side: serde_json::Value = serde_json::from_str(&sidecar).unwrap();
            v["sidecar"] = side;
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
    };
    write_out(args.out.as_ref(), &content)?;
    Ok(0)
}

fn spectrum_json(g: &Graph, tol: f64) -> Result<String, String> {
    let r = spectral_radius(g, tol).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&serde_json::json!({
        "lambda": r.lambda,
        "interval": [r.interval.0, r.interval.1],
        "iterations": r.iterations,
        "residual": r.residual,
    }))
    .unwrap())
}

fn spectrum(args: SpectrumArgs, config: &Config) -> Result<i32, String> {
    let tol = args.tol.unwrap_or(config.tol);
    let mut lines = String::new();
    if let Some(input) = &args.input {
        for g in read_graph6_input(input)? {
            lines.push_str(&spectrum_json(&g, tol)?);
            lines.push('\n');
        }
    } else {
        let pg = args.family.build()?;
        lines.push_str(&spectrum_json(pg.graph(), tol)?);
        lines.push('\n');
    }
    write_out(args.out.as_ref(), &lines)?;
    Ok(0)
}

fn count(args: CountArgs) -> Result<i32, String> {
    use specsat_core::counting as cnt;
    let pattern = pattern_by_name(&args.pattern).map_err(|e| e.to_string())?;
    let host = |args: &CountArgs| -> Result<Graph, String> {
        if let Some(input) = &args.input {
            let graphs = read_graph6_input(input)?;
            graphs.into_iter().next().ok_or_else(|| "no host graph in input".to_string())
        } else {
            Ok(args.family.build()?.graph().clone())
        }
    };
    let value = match args.what {
        CountWhat::Copies => {
            let g = host(&args)?;
            serde_json::json!({
                "copies": cnt::count_copies(&pattern, &g).map_err(|e| e.to_string())?
            })
        }
        CountWhat::ThroughEdge => {
            let g = host(&args)?;
            let e = parse_edge_list(args.edge.as_deref().ok_or("--edge required")?)?
                .into_iter()
                .next()
                .ok_or("--edge required")?;
            serde_json::json!({
                "copies_through_edge":
                    cnt::count_copies_through_edge(&pattern, &g, e).map_err(|e| e.to_string())?
            })
        }
        CountWhat::Cnf => {
            let n = args.family.n.ok_or("--n required")?;
            serde_json::json!({ "c": cnt::c_n_f(n, &pattern).map_err(|e| e.to_string())? })
        }
        CountWhat::CPartsF => {
            let sizes = args.family.sizes.clone().ok_or("--sizes required")?;
            serde_json::json!({ "c": cnt::c_parts_f(&sizes, &pattern).map_err(|e| e.to_string())? })
        }
        CountWhat::Tau => {
            let g = host(&args)?;
            serde_json::json!({
                "tau": cnt::covering_number(&pattern, &g).map_err(|e| e.to_string())?
            })
        }
        CountWhat::Alpha => {
            let n_list = args.n_list.clone().ok_or("--n-list required")?;
            let (alpha, rel) =
                cnt::estimate_alpha_f(&pattern, &n_list).map_err(|e| e.to_string())?;
            serde_json::json!({ "alpha": alpha, "max_rel_residual": rel })
        }
    };
    write_out(
        args.out.as_ref(),
        &format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
    )?;
    Ok(0)
}

fn enumerate(args: EnumerateArgs) -> Result<i32, String> {
    let mut out = String::new();
    if let Some(n) = args.all_graphs {
        let graphs = enumerate_all_graphs(n).map_err(|e| e.to_string())?;
        for g in &graphs {
            out.push_str(&emit_graph6(g).map_err(|e| e.to_string())?);
            out.push('\n');
        }
    } else {
        let (n, r, q) = (
            args.n.ok_or("--n required")?,
            args.r.ok_or("--r required")?,
            args.q.ok_or("--q required")?,
        );
        let members = enumerate_family(n, r, q).map_err(|e| e.to_string())?;
        match args.format {
            OutputFormat::Graph6 => {
                for m in &members {
                    out.push_str(&emit_graph6(m.graph()).map_err(|e| e.to_string())?);
                    out.push('\n');
                }
            }
            OutputFormat::Json => {
                let items: Vec<serde_json::Value> = members
                    .iter()
                    .map(|m| {
                        let side: serde_json::Value =
                            serde_json::from_str(&sidecar_json(m)).unwrap();
                        serde_json::json!({
                            "graph6": emit_graph6(m.graph()).unwrap(),
                            "sidecar": side,
                        })
                    })
                    .collect();
                out = format!("{}\n", serde_json::to_string_pretty(&items).unwrap());
            }
        }
    }
    write_out(args.out.as_ref(), &out)?;
    Ok(0)
}

fn verify(args: VerifyArgs, config: &Config) -> Result<i32, String> {
    let tol = args.tol.unwrap_or(config.tol);
    let jobs = args.jobs.unwrap_or(config.jobs);
    let solver = solver_for(jobs);
    let started = Instant::now();
    let q = args.q;
    let need_q = || q.ok_or_else(|| String::from("missing required flag --q"));
    let mut rep: VerificationReport = match args.theorem {
        TheoremKind::MinMax => {
            harness::verify_min_max(args.n, args.r, need_q()?, tol, solver.as_ref())
        }
        TheoremKind::Tightness => harness::verify_tightness(args.n, args.r, need_q()?, tol),
        TheoremKind::NingZhai => harness::verify_ning_zhai(args.n, tol, solver.as_ref()),
        TheoremKind::Supersat => {
            let pattern = pattern_by_name(&args.pattern).map_err(|e| e.to_string())?;
            harness::verify_supersat(args.n, args.r, need_q()?, &pattern, tol, solver.as_ref())
        }
        TheoremKind::Covering => {
            let pattern = pattern_by_name(&args.pattern).map_err(|e| e.to_string())?;
            let s = args.s.or(q).ok_or("missing required flag --s")?;
            let c = args.covering_c.unwrap_or(config.covering_c);
            harness::verify_covering(args.n, args.r, s, &pattern, c, tol)
        }
        TheoremKind::TVariant => {
            let pattern = pattern_by_name(&args.pattern).map_err(|e| e.to_string())?;
            harness::verify_t_variant(args.n, args.r, need_q()?, &pattern, tol)
        }
        TheoremKind::FirstKey => harness::verify_first_key(args.n, args.r, tol),
        TheoremKind::MoveOne => harness::verify_move_one(args.n, tol),
        TheoremKind::Shift => {
            harness::verify_shift(args.n, args.eps.unwrap_or(config.shift_eps), tol)
        }
        TheoremKind::LVsT => harness::verify_l_vs_t(
            args.n,
            args.r,
            need_q()?,
            tol,
            args.delta.unwrap_or(config.lvst_delta),
        ),
    }
    .map_err(|e| e.to_string())?;
    rep.wallclock_ms = started.elapsed().as_millis() as u64;
    let json = report_to_json(&rep);
    write_out(args.out.as_ref(), &format!("{json}\n"))?;
    // one human-readable line per check on stderr for quick scanning
    for c in &rep.checks {
        eprintln!(
            "{}: {} [{}]",
            rep.theorem,
            c.name,
            match c.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "FAIL",
                Verdict::Indeterminate => "indeterminate",
                Verdict::HypothesisNotMet => "hypothesis-not-met",
            }
        );
    }
    eprintln!("{}: status {:?} in {} ms", rep.theorem, rep.status, rep.wallclock_ms);
    Ok(match rep.status {
        Status::Pass | Status::Report => 0,
        Status::Fail => 1,
    })
}

fn report(args: ReportArgs) -> Result<i32, String> {
    let mut values = Vec::new();
    for input in &args.inputs {
        let text = fs::read_to_string(input)
            .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
        let v: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| format!("invalid report {}: {e}", input.display()))?;
        values.push(v);
    }
    if let Some(csv_path) = &args.csv {
        let csv = reports_to_csv(&values);
        fs::write(csv_path, csv)
            .map_err(|e| format!("cannot write {}: {e}", csv_path.display()))?;
        return Ok(0);
    }
    if let Some(merge_path) = &args.merge {
        let merged = serde_json::to_string_pretty(&serde_json::Value::Array(values)).unwrap();
        fs::write(merge_path, format!("{merged}\n"))
            .map_err(|e| format!("cannot write {}: {e}", merge_path.display()))?;
        return Ok(0);
    }
    // default: validate inputs and echo the body of each
    for v in &values {
        let body = report_body(&serde_json::to_string(v).unwrap())?;
        println!("{body}");
    }
    Ok(0)
}
