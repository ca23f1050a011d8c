use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use robustnet::classical::EndpointMode;
use robustnet::graph::{generate, parse_edge_list, Family};
use robustnet::reliability::{
    coefficients_by_contraction, coefficients_by_enumeration, csv_row, reliability_monte_carlo, ReliabilityPolynomial,
    DEFAULT_NODE_BUDGET, MAX_ENUMERATION_EDGES,
};
use robustnet::report::{
    compare_graphs, render_comparison, render_json, render_suggestions, render_table, suggest_edges, MeasureReport,
    SuggestMeasure,
};
use robustnet::{Error, Graph};

/// Evaluation points used by `relpoly` when neither --grid nor --at is given.
/// These are conventional choices; no single p is canonical.
const DEFAULT_PROBABILITIES: [f64; 2] = [0.9, 0.99];

#[derive(Debug, Parser)]
#[command(name = "robustnet", version, about = "Robustness measures for undirected graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print every robustness measure of a graph.
    Measures {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Endpoint convention for vertex betweenness: exclude, full or half.
        #[arg(long, default_value = "full")]
        bt_mode: String,
    },
    /// Compare two graphs measure by measure.
    Compare {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value = "full")]
        bt_mode: String,
    },
    /// Reliability polynomial coefficients and samples of Rel(p).
    Relpoly {
        file: PathBuf,
        /// Sample k + 1 evenly spaced points on [0, 1].
        #[arg(long, conflicts_with = "at")]
        grid: Option<usize>,
        /// Evaluate at a single probability.
        #[arg(long)]
        at: Option<f64>,
        /// Estimate by Monte Carlo with this many trials instead.
        #[arg(long)]
        mc: Option<u64>,
        #[arg(long, default_value_t = 0, requires = "mc")]
        seed: u64,
        /// Recursion-node budget for exact coefficients beyond 24 edges.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Rank absent edges by the improvement they bring to one measure.
    SuggestEdge {
        file: PathBuf,
        /// Measure name or alias (R, xi, lambda2, ...) or relpoly@P.
        #[arg(long)]
        measure: String,
        #[arg(long, default_value_t = 5)]
        top: usize,
        #[arg(long, default_value = "full")]
        bt_mode: String,
    },
    /// Write a generated graph (K, C, S, P or O) as an edge list.
    Gen { family: String, n: usize, out: PathBuf },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Graph(Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(..) => 2,
            CliError::Graph(e) => e.exit_code() as u8,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Graph(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Graph(e) => write!(f, "{e}"),
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    Ok(parse_edge_list(&text)?)
}

fn usage(e: Error) -> CliError {
    match e {
        Error::Domain(msg) | Error::InvalidFamily(msg) => CliError::Usage(msg),
        other => CliError::Usage(other.to_string()),
    }
}

fn graph_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn bt_mode(s: &str) -> Result<EndpointMode, CliError> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("unknown --bt-mode '{s}' (exclude, full, half)")))
}

fn format_power_basis(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let neg = c.sign() == Sign::Minus;
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.magnitude();
        let one = mag == &1u32.into();
        match k {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !one {
                    out.push_str(&mag.to_string());
                }
                out.push('p');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn sample_points(grid: Option<usize>, at: Option<f64>) -> Result<Vec<f64>, CliError> {
    match (grid, at) {
        (Some(0), _) => Err(CliError::Usage("--grid needs at least 1 interval".into())),
        (Some(k), _) => Ok((0..=k).map(|i| i as f64 / k as f64).collect()),
        (None, Some(p)) if !(0.0..=1.0).contains(&p) => Err(CliError::Usage(format!("--at {p} is outside [0, 1]"))),
        (None, Some(p)) => Ok(vec![p]),
        (None, None) => Ok(DEFAULT_PROBABILITIES.to_vec()),
    }
}

struct RelpolyArgs {
    grid: Option<usize>,
    at: Option<f64>,
    mc: Option<u64>,
    seed: u64,
    budget: u64,
}

fn relpoly(file: &Path, args: RelpolyArgs) -> Result<String, CliError> {
    let RelpolyArgs {
        grid,
        at,
        mc,
        seed,
        budget,
    } = args;
    let g = read_graph(file)?;
    let points = sample_points(grid, at)?;
    let mut out = String::new();
    if grid.is_none() && at.is_none() {
        out.push_str("# p = 0.9 and 0.99 are conventional evaluation points\n");
    }
    if let Some(trials) = mc {
        if trials == 0 {
            return Err(CliError::Usage("--mc needs at least one trial".into()));
        }
        out.push_str(&format!(
            "# Monte Carlo: {trials} trials, seed {seed}, 95% half-widths\n"
        ));
        let estimates = points
            .iter()
            .map(|&p| reliability_monte_carlo(&g, p, trials, seed))
            .collect::<Result<Vec<_>, _>>()?;
        for (p, e) in points.iter().zip(&estimates) {
            out.push_str(&format!(
                "# p={p:.6} estimate={:.6} ± {:.6}\n",
                e.estimate, e.half_width
            ));
        }
        out.push_str("p,rel\n");
        for (p, e) in points.iter().zip(&estimates) {
            out.push_str(&csv_row(*p, e.estimate));
        }
        return Ok(out);
    }
    let coeffs = if g.m() <= MAX_ENUMERATION_EDGES {
        coefficients_by_enumeration(&g)
    } else {
        coefficients_by_contraction(&g, budget)
    };
    let poly = coeffs
        .map(ReliabilityPolynomial::from_coefficients)
        .map_err(|e| match e {
            Error::Capacity(msg) => CliError::Graph(Error::Capacity(format!("{msg} (rerun with --mc TRIALS)"))),
            other => CliError::Graph(other),
        })?;
    let f: Vec<String> = poly.coefficients().iter().map(|c| c.to_string()).collect();
    out.push_str(&format!("# F = {}\n", f.join(" ")));
    out.push_str(&format!("# Rel(p) = {}\n", format_power_basis(&poly.power_basis())));
    out.push_str("p,rel\n");
    for p in points {
        out.push_str(&csv_row(p, poly.eval(p)?));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Measures {
            file,
            json,
            bt_mode: mode,
        } => {
            let mode = bt_mode(&mode)?;
            let g = read_graph(&file)?;
            let report = MeasureReport::compute(&g, graph_name(&file), mode);
            Ok(if json {
                render_json(&report) + "\n"
            } else {
                render_table(&report)
            })
        }
        Command::Compare {
            first,
            second,
            bt_mode: mode,
        } => {
            let mode = bt_mode(&mode)?;
            let (g1, g2) = (read_graph(&first)?, read_graph(&second)?);
            let rows = compare_graphs(&g1, &g2, mode);
            Ok(render_comparison(&rows, &graph_name(&first), &graph_name(&second)))
        }
        Command::Relpoly {
            file,
            grid,
            at,
            mc,
            seed,
            budget,
        } => relpoly(
            &file,
            RelpolyArgs {
                grid,
                at,
                mc,
                seed,
                budget,
            },
        ),
        Command::SuggestEdge {
            file,
            measure,
            top,
            bt_mode: mode,
        } => {
            let mode = bt_mode(&mode)?;
            let measure: SuggestMeasure = measure.parse().map_err(usage)?;
            let g = read_graph(&file)?;
            let suggestions = suggest_edges(&g, measure, top, mode)?;
            if suggestions.is_empty() {
                return Ok("no absent edges\n".into());
            }
            Ok(format!("measure {measure}\n{}", render_suggestions(&suggestions)))
        }
        Command::Gen { family, n, out } => {
            let kind: Family = family.parse().map_err(usage)?;
            let g = generate(kind, n).map_err(usage)?;
            fs::write(&out, g.to_edge_list()).map_err(|e| CliError::Io(out.clone(), e))?;
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("robustnet: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
