//! `rainbow`: exact rainbow domination from the command line.
//!
//! Exit codes: 0 success, 1 failed validation or verification, 2 bad input,
//! 3 graph too large, 4 search budget exhausted, 5 unmet precondition.

mod input;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::certify::{CertifyOptions, LowerBound};
use rainbow_core::constructions::{glued_family_labeling, path_pattern_labeling};
use rainbow_core::graph::{enumerate_connected_graphs, to_graph6};
use rainbow_core::{cartesian, lexicographic, Error, Graph, RainbowLabeling, Solver, VerifyConfig};

use input::{load_graph, Format};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Core(Error),
    /// A checked object failed its check; the message is already printed.
    Rejected,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Rejected => f.write_str("rejected"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Rejected => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                Error::MalformedGraph6(_) | Error::MalformedEdgeList(_) | Error::MalformedLabeling(_) | Error::LoopEdge(_) => 2,
                Error::CapacityExceeded { .. } | Error::TooLarge { .. } => 3,
                Error::BudgetExceeded { .. } | Error::CapExceeded { .. } => 4,
                Error::NotValidRdf(_) | Error::WitnessInvalid(_) => 1,
                _ => 5,
            },
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "rainbow", version, about = "Exact k-rainbow domination on graphs and lexicographic products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct FormatArg {
    /// Format of graph files, overriding the extension.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute γ, γt or γrk with a witness.
    Invariant {
        graph: String,
        #[arg(long = "type", value_enum)]
        kind: InvariantKind,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=8))]
        k: u8,
        /// Node budget for the search.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print the lexicographic or Cartesian product as graph6.
    Product {
        g: String,
        h: String,
        #[arg(long, value_enum, default_value_t = ProductKind::Lex)]
        kind: ProductKind,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Certify γr2(G ∘ H).
    Certify {
        g: String,
        h: String,
        /// Node budget for solving interval cases outright; 0 disables it.
        #[arg(long, default_value_t = rainbow_core::certify::DEFAULT_EXACT_BUDGET)]
        exact_budget: u64,
        /// Fail on a disconnected H instead of solving the product.
        #[arg(long)]
        strict: bool,
        /// Write the certificate as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the upper-bound labeling.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Build an explicit labeling of a lexicographic product.
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Check a labeling against a graph, or against G ∘ H with --h.
    Validate {
        labeling: PathBuf,
        graph: String,
        #[arg(long)]
        h: Option<String>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=8))]
        k: u8,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List connected graphs of order n, or every minimum k-RDF of a graph.
    Enumerate {
        #[arg(long, conflicts_with = "rdfs", required_unless_present = "rdfs")]
        n: Option<usize>,
        #[arg(long)]
        rdfs: Option<String>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=8))]
        k: u8,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check every theorem against exact solves over a corpus of small graphs.
    Verify {
        /// Largest order of G.
        #[arg(long)]
        ng: usize,
        /// Graphs H (repeatable).
        #[arg(long = "h", required = true)]
        h: Vec<String>,
        /// Largest product order to solve.
        #[arg(long, default_value_t = 24)]
        cap: usize,
        /// Largest product order whose minimum labelings are enumerated.
        #[arg(long, default_value_t = 14)]
        lemma_cap: usize,
        /// Worker threads; 1 gives a single-threaded run.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
        /// Write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// Path tiles on P_n ∘ H.
    Tiles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        h: String,
        #[command(flatten)]
        out: Output,
    },
    /// The labeling from a minimum-cost dominating couple of G.
    Couple {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=8))]
        k: u8,
        #[command(flatten)]
        out: Output,
    },
    /// [k] on one vertex above each vertex of a minimum total dominating set of G.
    Totaldom {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=8))]
        k: u8,
        #[command(flatten)]
        out: Output,
    },
    /// The glued-path family with m P_6 arms and p2 pendant arms.
    Glued {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p2: usize,
        #[arg(long)]
        h: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Write the labeling here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantKind {
    Gamma,
    Gammat,
    Rdk,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProductKind {
    Lex,
    Cart,
}

fn solver(budget: Option<u64>) -> Solver {
    budget.map_or_else(Solver::default, Solver::with_node_limit)
}

fn write_file(path: &PathBuf, text: &str) -> CliResult {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn json_error(e: serde_json::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn invariant(graph: &str, kind: InvariantKind, k: usize, budget: Option<u64>, format: Option<Format>) -> CliResult {
    let g = load_graph(graph, format)?;
    let solver = solver(budget);
    match kind {
        InvariantKind::Gamma | InvariantKind::Gammat => {
            let total = matches!(kind, InvariantKind::Gammat);
            let sol = if total { solver.min_total_dominating_set(&g)? } else { solver.min_dominating_set(&g)? };
            let ok = if total { g.is_total_dominating_set(&sol.witness) } else { g.is_dominating_set(&sol.witness) };
            if !ok || sol.witness.len() != sol.value {
                return Err(Error::WitnessInvalid("dominating set witness".into()).into());
            }
            println!("value {}", sol.value);
            println!("witness {}", sol.witness);
        }
        InvariantKind::Rdk => {
            let sol = solver.min_rainbow(&g, k)?;
            sol.witness.validate(&g)?;
            println!("value {}", sol.value);
            print!("{}", sol.witness.to_text());
        }
    }
    Ok(())
}

fn certify(g: &str, h: &str, exact_budget: u64, strict: bool, json_out: Option<&PathBuf>, witness: Option<&PathBuf>, format: Option<Format>) -> CliResult {
    let (g, h) = (load_graph(g, format)?, load_graph(h, format)?);
    let opts = CertifyOptions { exact_budget: (exact_budget > 0).then_some(exact_budget), strict };
    let cert = Solver::default().certify_rd_lex(&g, &h, opts)?;
    let (product, _) = lexicographic(&g, &h);
    cert.upper.validate(&product)?;
    println!("{cert}");
    let lower = match &cert.lower {
        LowerBound::Gamma { value, witness } => format!("2γ(G) with γ(G) = {value}, dominating set {witness}"),
        LowerBound::GammaT { value, witness } => format!("2γt(G) with γt(G) = {value}, total dominating set {witness}"),
        LowerBound::Couple { value, witness } => format!("couple optimum {value}, A = {}, B = {}", witness.a, witness.b),
        LowerBound::Exact { value } => format!("exact optimum {value}"),
        LowerBound::Sum { value } => format!("sum over components {value}"),
    };
    println!("lower {lower}");
    println!("upper labeling of weight {}", cert.upper.weight());
    for c in &cert.citations {
        println!("uses {c}");
    }
    for (i, part) in cert.components.iter().enumerate() {
        println!("component {i}: {part}");
    }
    if let Some(path) = json_out {
        write_file(path, &serde_json::to_string_pretty(&cert).map_err(json_error)?)?;
    }
    if let Some(path) = witness {
        write_file(path, &cert.upper.to_text())?;
    }
    Ok(())
}

fn emit_labeling(f: &RainbowLabeling, product: &Graph, out: &Output) -> CliResult {
    f.validate(product)?;
    let text = format!("# k {} weight {}\n{}", f.k(), f.weight(), f.to_text());
    match &out.out {
        Some(path) => {
            write_file(path, &text)?;
            println!("weight {}", f.weight());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn pair_of(h: &Graph) -> CliResult<(usize, usize)> {
    let w = Solver::default().pair_witness(h)?.ok_or(Error::NoPairWitness)?;
    Ok((w.u, w.v.ok_or(Error::NoPairWitness)?))
}

fn construct(kind: Construction) -> CliResult {
    let solver = Solver::default();
    match kind {
        Construction::Tiles { n, h, out } => {
            let h = load_graph(&h, out.format.format)?;
            let (u, v) = pair_of(&h)?;
            let f = path_pattern_labeling(n, &h, u, v)?;
            let (product, _) = lexicographic(&rainbow_core::graph::gen_path(n)?, &h);
            emit_labeling(&f, &product, &out)
        }
        Construction::Couple { g, h, k, out } => {
            let (g, h) = (load_graph(&g, out.format.format)?, load_graph(&h, out.format.format)?);
            let k = usize::from(k);
            let rd_h = solver.min_rainbow(&h, k)?.value;
            let couple = solver.min_couple_cost(&g, k, rd_h)?;
            let f = solver.couple_labeling(&g, &h, k, &couple.witness)?;
            eprintln!("couple A = {}, B = {}", couple.witness.a, couple.witness.b);
            emit_labeling(&f, &lexicographic(&g, &h).0, &out)
        }
        Construction::Totaldom { g, h, k, out } => {
            let (g, h) = (load_graph(&g, out.format.format)?, load_graph(&h, out.format.format)?);
            let f = solver.total_dom_labeling(&g, &h, usize::from(k))?;
            emit_labeling(&f, &lexicographic(&g, &h).0, &out)
        }
        Construction::Glued { m, p2, h, out } => {
            let h = load_graph(&h, out.format.format)?;
            let (u, v) = pair_of(&h)?;
            let f = glued_family_labeling(m, p2, &h, u, v)?;
            let g = rainbow_core::graph::gen_glued_paths(m, p2)?;
            emit_labeling(&f, &lexicographic(&g, &h).0, &out)
        }
    }
}

fn validate(labeling: &PathBuf, graph: &str, h: Option<&str>, k: usize, format: Option<Format>) -> CliResult {
    let text = std::fs::read_to_string(labeling).map_err(|e| CliError::Io(format!("{}: {e}", labeling.display())))?;
    let f = RainbowLabeling::parse(&text, k)?;
    let g = load_graph(graph, format)?;
    let (target, n_h) = match h {
        Some(h) => {
            let h = load_graph(h, format)?;
            let n_h = h.n();
            (lexicographic(&g, &h).0, Some(n_h))
        }
        None => (g, None),
    };
    match f.validate(&target) {
        Ok(()) => {
            println!("ok weight {}", f.weight());
            Ok(())
        }
        Err(Error::NotValidRdf(v)) => {
            match n_h {
                Some(n_h) if n_h > 0 => println!("violation at vertex {v} = ({}, {})", v / n_h, v % n_h),
                _ => println!("violation at vertex {v}"),
            }
            Err(CliError::Rejected)
        }
        Err(e) => Err(e.into()),
    }
}

fn enumerate(n: Option<usize>, rdfs: Option<&str>, k: usize, cap: usize, format: Option<Format>) -> CliResult {
    if let Some(n) = n {
        for g in enumerate_connected_graphs(n)? {
            println!("{}", to_graph6(&g));
        }
        return Ok(());
    }
    let g = load_graph(rdfs.expect("clap requires --n or --rdfs"), format)?;
    let all = Solver::default().enumerate_min_rdfs(&g, k, cap)?;
    for f in &all {
        f.validate(&g)?;
        let labels: Vec<String> = f.labels().iter().map(ToString::to_string).collect();
        println!("{}", labels.join(" "));
    }
    eprintln!("{} minimum labelings of weight {}", all.len(), all.first().map_or(0, RainbowLabeling::weight));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(ng: usize, h: &[String], cap: usize, lemma_cap: usize, workers: usize, budget: Option<u64>, json_out: Option<&PathBuf>, format: Option<Format>) -> CliResult {
    let h_list = h.iter().map(|name| Ok((name.clone(), load_graph(name, format)?))).collect::<CliResult<Vec<_>>>()?;
    let mut config = VerifyConfig::new(ng, h_list, cap);
    config.lemma_cap = lemma_cap;
    config.workers = workers;
    if let Some(b) = budget {
        config.node_limit = b;
    }
    let report = rainbow_core::verify_corpus(&config)?;
    print!("{}", report.to_text());
    if let Some(path) = json_out {
        write_file(path, &serde_json::to_string_pretty(&report).map_err(json_error)?)?;
    }
    if report.is_clean() {
        Ok(())
    } else {
        Err(CliError::Rejected)
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Invariant { graph, kind, k, budget, format } => invariant(&graph, kind, usize::from(k), budget, format.format),
        Command::Product { g, h, kind, format } => {
            let (g, h) = (load_graph(&g, format.format)?, load_graph(&h, format.format)?);
            let (p, _) = if kind == ProductKind::Lex { lexicographic(&g, &h) } else { cartesian(&g, &h) };
            println!("{}", to_graph6(&p));
            Ok(())
        }
        Command::Certify { g, h, exact_budget, strict, json, witness, format } => {
            certify(&g, &h, exact_budget, strict, json.as_ref(), witness.as_ref(), format.format)
        }
        Command::Construct { kind } => construct(kind),
        Command::Validate { labeling, graph, h, k, format } => validate(&labeling, &graph, h.as_deref(), usize::from(k), format.format),
        Command::Enumerate { n, rdfs, k, cap, format } => enumerate(n, rdfs.as_deref(), usize::from(k), cap, format.format),
        Command::Verify { ng, h, cap, lemma_cap, workers, budget, json, format } => {
            verify(ng, &h, cap, lemma_cap, workers, budget, json.as_ref(), format.format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Rejected) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
