use std::ffi::OsString;
use std::fmt;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use strongcolor::coloring::{
    caterpillar_cycle_audit, exact_strong_chromatic_index, parse_coloring, precondition_report,
    strong_color_sparse, verify_strong_coloring, write_coloring, write_trace, AlgorithmMode,
    AlgorithmVariant, SparseError, DEFAULT_NODE_BUDGET,
};
use strongcolor::odd::format::parse_subset;
use strongcolor::odd::walks::{WalkMode, WalkRequest};
use strongcolor::odd::{
    construct_avoiding_walk, construct_prescribed_walk, odd_graph, sharpness_audit, write_walk,
};
use strongcolor::{girth_profile, mad, parse_graph, write_graph};

use crate::report::{ChisReport, InvariantsReport, MadReport, PreconditionLine};

pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn invalid(message: impl fmt::Display) -> Self {
        CliError {
            code: 1,
            message: message.to_string(),
        }
    }

    fn algorithm(message: impl fmt::Display) -> Self {
        CliError {
            code: 3,
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

#[derive(Parser)]
#[command(
    name = "strongcolor",
    about = "Strong edge coloring of sparse graphs via odd-graph walks",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    /// Worker threads (all current algorithms are deterministic and
    /// single-threaded; values above 1 are accepted and reserved).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WalkModeArg {
    Prescribed,
    Avoiding,
    Dp,
}

#[derive(Subcommand)]
enum Command {
    /// Print maximum degree, girth profile, exact mad and coloring-mode gates.
    Invariants {
        /// Graph file in the text format (`-` for stdin).
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Color a sparse graph with 2*delta - 1 colors and print the coloring.
    Color {
        file: String,
        /// Maximum-degree bound of the mode.
        #[arg(long)]
        delta: usize,
        /// Which sufficient condition gates the run.
        #[arg(long)]
        mode: String,
        /// Fail (exit 3) when the mode preconditions do not hold.
        #[arg(long)]
        strict: bool,
        /// Also write the reduction trace to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Verify a coloring file against a graph file; exit 0 iff valid.
    Verify { graph: String, coloring: String },
    /// Exact strong chromatic index.
    Chis {
        file: String,
        /// Backtracking node budget.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Construct (or decide, with --mode dp) a special walk in O_n.
    Walk {
        #[arg(long)]
        n: usize,
        /// Start vertex as a comma-separated element list, e.g. 1,2.
        #[arg(long)]
        start: String,
        /// End vertex as a comma-separated element list.
        #[arg(long)]
        end: String,
        /// First-edge label (prescribed) or forbidden first label (avoiding).
        #[arg(long)]
        l1: u8,
        /// Last-edge label (prescribed) or forbidden last label (avoiding).
        #[arg(long)]
        l2: u8,
        #[arg(long)]
        len: usize,
        #[arg(long, value_enum, default_value_t = WalkModeArg::Prescribed)]
        mode: WalkModeArg,
    },
    /// Export O_n in the graph text format with a vertex-to-subset table.
    Oddgraph {
        #[arg(long)]
        n: usize,
    },
    /// Audit the walk-length sharpness results for n = 3 or 4.
    ReproSharpness {
        #[arg(long)]
        n: usize,
    },
    /// Check the caterpillar-cycle coloring C_(kappa,delta) end to end.
    ReproCw {
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        delta: usize,
    },
}

pub fn run<I, T>(args: I) -> Result<ExitCode, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError {
        code: if e.use_stderr() { 1 } else { 0 },
        message: e.to_string(),
    })?;
    if cli.threads == 0 {
        return Err(CliError::invalid("--threads must be at least 1"));
    }
    match cli.command {
        Command::Invariants { file, json } => invariants(&file, json),
        Command::Color {
            file,
            delta,
            mode,
            strict,
            trace,
        } => color(&file, delta, &mode, strict, trace.as_deref()),
        Command::Verify { graph, coloring } => verify(&graph, &coloring),
        Command::Chis { file, budget, json } => chis(&file, budget, json),
        Command::Walk {
            n,
            start,
            end,
            l1,
            l2,
            len,
            mode,
        } => walk(n, &start, &end, l1, l2, len, mode),
        Command::Oddgraph { n } => oddgraph_cmd(n),
        Command::ReproSharpness { n } => repro_sharpness(n),
        Command::ReproCw { kappa, delta } => repro_cw(kappa, delta),
    }
}

fn read_input(file: &str) -> Result<String, CliError> {
    if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(CliError::invalid)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(file)
            .map_err(|e| CliError::invalid(format!("cannot read {file}: {e}")))
    }
}

fn load_graph(file: &str) -> Result<strongcolor::SimpleGraph, CliError> {
    parse_graph(&read_input(file)?).map_err(CliError::invalid)
}

const ALL_MODES: [(AlgorithmVariant, usize); 4] = [
    (AlgorithmVariant::HighGirth, 4),
    (AlgorithmVariant::SubcubicGirth41, 3),
    (AlgorithmVariant::MadBased, 4),
    (AlgorithmVariant::SubcubicMad, 3),
];

fn invariants(file: &str, json: bool) -> Result<ExitCode, CliError> {
    let g = load_graph(file)?;
    let profile = girth_profile(&g);
    let density = mad(&g).ok();
    let delta = g.max_degree();
    let mut precondition_lines = Vec::new();
    for (variant, base_delta) in ALL_MODES {
        // Subcubic variants pin delta = 3; the others scale to the graph.
        let mode_delta = if base_delta == 3 {
            3
        } else {
            delta.max(base_delta)
        };
        let mode = AlgorithmMode {
            variant,
            delta: mode_delta,
        };
        for check in precondition_report(&g, mode).checks {
            precondition_lines.push(PreconditionLine {
                variant: variant.name().into(),
                delta: mode_delta,
                name: check.name,
                required: check.required,
                actual: check.actual,
                holds: check.holds,
            });
        }
    }
    if json {
        let report = InvariantsReport {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            max_degree: delta,
            girth: profile.girth,
            odd_girth: profile.odd_girth,
            even_girth: profile.even_girth,
            mad: density.map(|d| MadReport {
                numerator: d.numerator,
                denominator: d.denominator,
                display: d.to_string(),
                witness_size: d.witness.len(),
            }),
            preconditions: precondition_lines,
        };
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
        return Ok(ExitCode::SUCCESS);
    }
    let show = |v: Option<usize>| v.map_or("inf".to_string(), |x| x.to_string());
    println!("vertices     {}", g.vertex_count());
    println!("edges        {}", g.edge_count());
    println!("max degree   {delta}");
    println!("girth        {}", show(profile.girth));
    println!("odd girth    {}", show(profile.odd_girth));
    println!("even girth   {}", show(profile.even_girth));
    match &density {
        Some(d) => println!("mad          {d} (witness on {} vertices)", d.witness.len()),
        None => println!("mad          - (empty graph)"),
    }
    println!();
    for line in &precondition_lines {
        println!(
            "{} [{}] delta={} {}: {} (required {})",
            if line.holds { "PASS" } else { "FAIL" },
            line.variant,
            line.delta,
            line.name,
            line.actual,
            line.required,
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn color(
    file: &str,
    delta: usize,
    mode_name: &str,
    strict: bool,
    trace_path: Option<&std::path::Path>,
) -> Result<ExitCode, CliError> {
    let g = load_graph(file)?;
    let variant = AlgorithmVariant::from_name(mode_name).ok_or_else(|| {
        CliError::invalid(format!(
            "unknown mode `{mode_name}`; expected high-girth, subcubic-girth41, mad-based or subcubic-mad"
        ))
    })?;
    let mode = AlgorithmMode { variant, delta };
    match strong_color_sparse(&g, mode, strict) {
        Ok((coloring, trace)) => {
            print!("{}", write_coloring(&g, &coloring));
            if let Some(path) = trace_path {
                std::fs::write(path, write_trace(&trace))
                    .map_err(|e| CliError::invalid(format!("cannot write trace: {e}")))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ SparseError::InvalidMode(_)) | Err(e @ SparseError::DegreeExceeded { .. }) => {
            Err(CliError::invalid(e))
        }
        Err(e) => Err(CliError::algorithm(e)),
    }
}

fn verify(graph_file: &str, coloring_file: &str) -> Result<ExitCode, CliError> {
    let g = load_graph(graph_file)?;
    let coloring =
        parse_coloring(&g, &read_input(coloring_file)?).map_err(CliError::invalid)?;
    match verify_strong_coloring(&g, &coloring) {
        Ok(()) => {
            println!("valid strong {}-edge-coloring", coloring.palette_size());
            Ok(ExitCode::SUCCESS)
        }
        Err(violations) => {
            for &(i, j) in &violations {
                let (a, b) = g.endpoints(i);
                let (c, d) = g.endpoints(j);
                println!(
                    "conflict: edges {a}-{b} and {c}-{d} share color {}",
                    coloring.color(i)
                );
            }
            println!("{} violations", violations.len());
            Ok(ExitCode::from(2))
        }
    }
}

fn chis(file: &str, budget: Option<u64>, json: bool) -> Result<ExitCode, CliError> {
    let g = load_graph(file)?;
    let result = exact_strong_chromatic_index(&g, budget.unwrap_or(DEFAULT_NODE_BUDGET));
    if json {
        let report = ChisReport {
            chi: result.chi,
            exact: result.exact,
            lower_bound: result.lower_bound,
            upper_bound: result.upper_bound,
            nodes_used: result.nodes_used,
        };
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else if result.exact {
        println!("{}", result.chi);
    } else {
        println!(
            "inexact: between {} and {} (budget exhausted after {} nodes)",
            result.lower_bound, result.upper_bound, result.nodes_used
        );
    }
    if result.exact {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(3))
    }
}

fn walk(
    n: usize,
    start: &str,
    end: &str,
    l1: u8,
    l2: u8,
    len: usize,
    mode: WalkModeArg,
) -> Result<ExitCode, CliError> {
    let start = parse_subset(n, start).map_err(CliError::invalid)?;
    let end = parse_subset(n, end).map_err(CliError::invalid)?;
    let req = WalkRequest {
        n,
        start,
        end,
        first_label: l1,
        last_label: l2,
        length: len,
        mode: if mode == WalkModeArg::Avoiding {
            WalkMode::Avoiding
        } else {
            WalkMode::Prescribed
        },
    };
    match mode {
        WalkModeArg::Prescribed => match construct_prescribed_walk(&req) {
            Ok(w) => {
                print!("{}", write_walk(&w));
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => Err(classify_walk_error(e)),
        },
        WalkModeArg::Avoiding => match construct_avoiding_walk(&req) {
            Ok(w) => {
                print!("{}", write_walk(&w));
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => Err(classify_walk_error(e)),
        },
        WalkModeArg::Dp => {
            let og = odd_graph(n).map_err(CliError::invalid)?;
            match strongcolor::odd::dp::dp_special_walk(&og, &req).map_err(CliError::invalid)? {
                Some(w) => print!("{}", write_walk(&w)),
                None => println!("none"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn classify_walk_error(e: strongcolor::odd::WalkError) -> CliError {
    use strongcolor::odd::WalkError::*;
    match e {
        Internal(_) | NoSuchWalk => CliError::algorithm(e),
        other => CliError::invalid(other),
    }
}

fn oddgraph_cmd(n: usize) -> Result<ExitCode, CliError> {
    let og = odd_graph(n).map_err(CliError::invalid)?;
    print!("{}", write_graph(og.graph()));
    println!("# vertex table: id -> subset of {{1..{}}}", 2 * n - 1);
    for (id, subset) in og.subsets().iter().enumerate() {
        println!("# v {id} {subset}");
    }
    Ok(ExitCode::SUCCESS)
}

fn repro_sharpness(n: usize) -> Result<ExitCode, CliError> {
    let report = sharpness_audit(n).map_err(CliError::invalid)?;
    let mut all = true;
    for check in &report.checks {
        println!(
            "{} {} — {}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        );
        all &= check.passed;
    }
    if all {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn repro_cw(kappa: usize, delta: usize) -> Result<ExitCode, CliError> {
    let checks = caterpillar_cycle_audit(kappa, delta).map_err(CliError::invalid)?;
    let mut all = true;
    for check in &checks {
        println!(
            "{} {} — {}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        );
        all &= check.passed;
    }
    if all {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}
