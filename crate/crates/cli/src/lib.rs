//! The `pturan` command line: generators, validation, the two extractors,
//! the exhaustive search and report aggregation over PLG and CSV files.
//!
//! Exit codes: 0 success, 2 precondition not met or no long cycle, 3 absence
//! confirmed by the oracle, 4 bound violation, 64 usage, 65 malformed input,
//! 70 internal error, 74 I/O, 75 budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use planar_turan::constructions::{figure2_fixture, k4, kleetope, sharp_chain, substitute};
use planar_turan::embed::{
    circuit_from_outer, cuts, is_near_triangulation, parse_plg, serialize_plg, PlaneGraph,
};
use planar_turan::pattern::{circumference_within, matches_within, BitGraph, Pattern, Witness};
use planar_turan::theta_extract::find_theta_traced;
use planar_turan::tri_extract::{find_near_triangulation, oracle_near_triangulation, ExtractError};
use planar_turan::turan::{
    ex_p_with, read_report_csv, report_rows, write_report_csv, BoundStatus, ReportRow, SearchOptions, TuranError,
};
use planar_turan::{Budget, BudgetExceeded};

pub mod exit {
    pub const OK: i32 = 0;
    pub const NOT_FOUND: i32 = 2;
    pub const ORACLE_ABSENT: i32 = 3;
    pub const VIOLATION: i32 = 4;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
    pub const SOFTWARE: i32 = 70;
    pub const IO: i32 = 74;
    pub const BUDGET: i32 = 75;
}

#[derive(Parser, Debug)]
#[command(name = "pturan", version, about = "Plane-graph tools for planar Turán problems")]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Limits {
    /// Wall-clock limit for exhaustive searches.
    #[arg(long, global = true, value_name = "SECONDS")]
    max_seconds: Option<f64>,
    /// Search-node limit for exhaustive searches.
    #[arg(long, global = true, value_name = "NODES")]
    max_nodes: Option<u64>,
}

impl Limits {
    fn budget(&self) -> Budget {
        Budget::unlimited()
            .with_max_nodes(self.max_nodes)
            .with_time_limit(self.max_seconds.map(Duration::from_secs_f64))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a generated plane graph as PLG.
    Gen {
        #[arg(long, value_enum)]
        construction: Construction,
        /// Near-triangulation size for `chain`.
        #[arg(long)]
        t: Option<usize>,
        /// Stacking rounds for `kleetope`, copies for `chain`.
        #[arg(long)]
        iterations: Option<usize>,
        /// Host graph (default K4).
        #[arg(long)]
        host: Option<PathBuf>,
        /// Block substituted for each host vertex (default K4).
        #[arg(long)]
        block: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Validate a PLG file and optionally test patterns.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Pattern such as c5, theta6, theta12.6 or circ7; repeatable.
        #[arg(long)]
        pattern: Vec<Pattern>,
    },
    /// Find a near triangulation on at least t vertices inside a circuit graph.
    Extract {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        input: PathBuf,
        /// Also run the exhaustive cycle oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Find a k-cycle with a chord at distance 2 in a near triangulation.
    Theta {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
    },
    /// Exhaustive maximum edge count of pattern-free connected planar graphs.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: Pattern,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        /// Witness PLG path (default: the CSV path with extension `witness.plg`).
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Summarize report CSVs.
    Report {
        #[arg(long = "input", required = true)]
        inputs: Vec<PathBuf>,
        /// Also write the merged rows as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Construction {
    Kleetope,
    Chain,
    Substitute,
    Figure2,
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure::new(exit::IO, format!("{}: {e}", path.display()))
    }
}

impl From<BudgetExceeded> for Failure {
    fn from(e: BudgetExceeded) -> Self {
        Failure::new(exit::BUDGET, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the command line and returns the process exit code. Normal output
/// goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => exit::OK,
                _ => exit::USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == exit::OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Outcome {
    let mut budget = cli.limits.budget();
    match cli.command {
        Command::Gen { construction, t, iterations, host, block, out: path } => {
            gen(construction, t, iterations, host.as_deref(), block.as_deref(), &path, out)
        }
        Command::Verify { input, pattern } => verify(&input, &pattern, &mut budget, out),
        Command::Extract { t, input, oracle } => extract(t, &input, oracle, &mut budget, out),
        Command::Theta { k, input } => theta(k, &input, &mut budget, out),
        Command::Search { n, pattern, jobs, out: csv, witness } => {
            search(n, pattern, jobs, &csv, witness, &mut budget, out)
        }
        Command::Report { inputs, out: merged } => report(&inputs, merged.as_deref(), out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::new(exit::IO, format!("stdout: {e}")))
}

fn read_plg(path: &Path) -> Result<PlaneGraph, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::io(path, e))?;
    parse_plg(&bytes).map_err(|e| Failure::new(exit::DATA, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::io(path, e))
}

fn gen(
    construction: Construction,
    t: Option<usize>,
    iterations: Option<usize>,
    host: Option<&Path>,
    block: Option<&Path>,
    path: &Path,
    out: &mut dyn Write,
) -> Outcome {
    let load = |p: Option<&Path>| p.map(read_plg).transpose().map(|g| g.unwrap_or_else(k4));
    let bad = |e: planar_turan::constructions::ConstructionError| Failure::new(exit::DATA, e.to_string());
    let g = match construction {
        Construction::Kleetope => kleetope(&load(host)?, iterations.unwrap_or(1)).map_err(bad)?,
        Construction::Chain => {
            let t = t.ok_or_else(|| Failure::new(exit::USAGE, "--t is required for --construction chain"))?;
            sharp_chain(t, iterations.unwrap_or(1)).map_err(bad)?.into_graph()
        }
        Construction::Substitute => {
            let block = load(block)?;
            let corners = block
                .outer()
                .filter(|o| o.len() == 3)
                .map(|o| [o[0], o[1], o[2]])
                .ok_or_else(|| Failure::new(exit::DATA, "block needs a triangular outer face"))?;
            substitute(&load(host)?, &block, corners).map_err(bad)?
        }
        Construction::Figure2 => figure2_fixture(),
    };
    write_file(path, serialize_plg(&g).as_bytes())?;
    emit(out, &format!("wrote {} (n={} e={})\n", path.display(), g.n(), g.edge_count()))?;
    Ok(exit::OK)
}

fn describe_witness(w: &Witness) -> String {
    let join = |c: &[usize]| c.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    match w {
        Witness::Cycle(c) => format!("cycle {}", join(c)),
        Witness::Theta(t) => format!("cycle {} chord {} {}", join(&t.cycle), t.chord.0, t.chord.1),
    }
}

fn bit_graph(g: &PlaneGraph) -> Result<BitGraph, Failure> {
    BitGraph::from_plane(g).ok_or_else(|| Failure::new(exit::DATA, format!("{} vertices exceed the detector limit", g.n())))
}

fn verify(input: &Path, patterns: &[Pattern], budget: &mut Budget, out: &mut dyn Write) -> Outcome {
    let g = read_plg(input)?;
    let faces = g.faces();
    let mut text = format!("valid plane graph: n={} e={} faces={}\n", g.n(), g.edge_count(), faces.len());
    match g.outer() {
        Some(o) => {
            text += &format!("outer face length {}\n", o.len());
            text += &format!("near triangulation: {}\n", is_near_triangulation(&g));
            match circuit_from_outer(&g) {
                Ok(cg) => text += &format!("circuit graph: yes, deficiency m={}\n", cg.deficiency()),
                Err(e) => text += &format!("circuit graph: no ({e})\n"),
            }
        }
        None => text += "no outer face designated\n",
    }
    if g.edge_count() == 3 * g.n().saturating_sub(2) && g.n() >= 3 {
        text += &format!("triangulation: yes, 2-cuts: {}\n", cuts(&g, 2).len());
    }
    if !patterns.is_empty() {
        let bg = bit_graph(&g)?;
        for &p in patterns {
            let m = matches_within(&bg, p, budget).map_err(|e| match e {
                planar_turan::pattern::DetectError::Budget(b) => b.into(),
                other => Failure::new(exit::DATA, other.to_string()),
            })?;
            let status = if m.present { "present" } else { "absent" };
            text += &format!("pattern {p}: {status}");
            if let Some(w) = &m.witness {
                text += &format!(" ({})", describe_witness(w));
            }
            text += "\n";
        }
    }
    emit(out, &text)?;
    Ok(exit::OK)
}

fn extract(t: usize, input: &Path, oracle: bool, budget: &mut Budget, out: &mut dyn Write) -> Outcome {
    let g = read_plg(input)?;
    let cg = circuit_from_outer(&g).map_err(|e| Failure::new(exit::DATA, format!("not a circuit graph: {e}")))?;
    let run_oracle = |budget: &mut Budget| {
        oracle_near_triangulation(cg.graph(), t, budget).map_err(|e| match e {
            planar_turan::pattern::DetectError::Budget(b) => Failure::from(b),
            other => Failure::new(exit::DATA, other.to_string()),
        })
    };
    match find_near_triangulation(&cg, t) {
        Ok((w, trace)) => {
            if oracle && run_oracle(budget)?.is_none() {
                return Err(Failure::new(exit::SOFTWARE, "oracle found no witness but the extractor did"));
            }
            let mut text = serialize_plg(&w.graph);
            text += &format!("host-labels: {}\n", w.to_host.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
            for step in &trace.steps {
                text += &format!("step {step}\n");
            }
            for a in &trace.anomalies {
                text += &format!("anomaly {a}\n");
            }
            emit(out, &text)?;
            Ok(exit::OK)
        }
        Err(ExtractError::PreconditionViolated { m, v, t, reason }) => {
            let mut text = format!("precondition violated: m={m} v={v} t={t}: {reason}\n");
            if !oracle {
                emit(out, &text)?;
                return Ok(exit::NOT_FOUND);
            }
            match run_oracle(budget)? {
                None => {
                    text += &format!("oracle: no near triangulation on at least {t} vertices\n");
                    emit(out, &text)?;
                    Ok(exit::ORACLE_ABSENT)
                }
                Some(w) => {
                    text += "oracle witness:\n";
                    text += &serialize_plg(&w.graph);
                    emit(out, &text)?;
                    Ok(exit::OK)
                }
            }
        }
        Err(e @ ExtractError::InternalInvariantBroken(_)) => Err(Failure::new(exit::SOFTWARE, e.to_string())),
    }
}

fn theta(k: usize, input: &Path, budget: &mut Budget, out: &mut dyn Write) -> Outcome {
    use planar_turan::pattern::DetectError;
    use planar_turan::theta_extract::ThetaError;
    if k < 4 {
        return Err(Failure::new(exit::USAGE, format!("--k must be at least 4 (got {k})")));
    }
    let g = read_plg(input)?;
    if !is_near_triangulation(&g) {
        return Err(Failure::new(exit::DATA, "input is not a near triangulation with an outer face"));
    }
    let seed = match circumference_within(&bit_graph(&g)?, budget) {
        Ok((len, c)) if len >= k => c,
        Ok((len, _)) => {
            emit(out, &format!("no cycle of length at least {k} (circumference {len})\n"))?;
            return Ok(exit::NOT_FOUND);
        }
        Err(DetectError::Acyclic) => {
            emit(out, &format!("no cycle of length at least {k} (acyclic)\n"))?;
            return Ok(exit::NOT_FOUND);
        }
        Err(DetectError::Budget(b)) => return Err(b.into()),
        Err(e) => return Err(Failure::new(exit::DATA, e.to_string())),
    };
    match find_theta_traced(&g, k, Some(&seed)) {
        Ok(run) => {
            let w = &run.witness;
            let cycle = w.cycle.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            let mut text = format!("cycle: {cycle}\nchord: {} {}\n", w.chord.0, w.chord.1);
            for s in &run.steps {
                text += &format!("step {s}\n");
            }
            emit(out, &text)?;
            Ok(exit::OK)
        }
        Err(ThetaError::NoLongCycle { k, longest }) => {
            emit(out, &format!("no cycle of length at least {k} (circumference {longest})\n"))?;
            Ok(exit::NOT_FOUND)
        }
        Err(e) => Err(Failure::new(exit::SOFTWARE, e.to_string())),
    }
}

fn search(
    n: usize,
    pattern: Pattern,
    jobs: Option<usize>,
    csv: &Path,
    witness: Option<PathBuf>,
    budget: &mut Budget,
    out: &mut dyn Write,
) -> Outcome {
    if jobs == Some(0) {
        return Err(Failure::new(exit::USAGE, "--jobs must be positive"));
    }
    let report = ex_p_with(n, pattern, &SearchOptions { jobs }, budget).map_err(|e| match e {
        TuranError::Budget(b) => b.into(),
        TuranError::Pool(_) => Failure::new(exit::SOFTWARE, e.to_string()),
        other => Failure::new(exit::USAGE, other.to_string()),
    })?;
    let witness = witness.unwrap_or_else(|| csv.with_extension("witness.plg"));
    let plg = serialize_plg(&report.witness);
    write_file(&witness, plg.as_bytes())?;
    let mut buf = Vec::new();
    write_report_csv(&report_rows(&report, &witness.to_string_lossy()), &mut buf)
        .map_err(|e| Failure::new(exit::IO, e.to_string()))?;
    write_file(csv, &buf)?;
    let mut text = format!(
        "n={} pattern={} max_edges={} visited={} pruned={}\n",
        report.n, report.pattern, report.max_edges, report.stats.visited, report.stats.pruned
    );
    for row in &report.rows {
        text += &format!("{} {:.6} {}\n", row.name, row.value, row.status);
    }
    if report.all_satisfied() {
        emit(out, &text)?;
        Ok(exit::OK)
    } else {
        text += "counterexample:\n";
        text += &plg;
        emit(out, &text)?;
        Ok(exit::VIOLATION)
    }
}

fn report(inputs: &[PathBuf], merged: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let mut rows: Vec<ReportRow> = Vec::new();
    for path in inputs {
        let bytes = fs::read(path).map_err(|e| Failure::io(path, e))?;
        let mut r = read_report_csv(&bytes).map_err(|e| Failure::new(exit::DATA, format!("{}: {e}", path.display())))?;
        rows.append(&mut r);
    }
    rows.sort_by(|a, b| {
        (a.pattern.to_string(), a.n, &a.bound_name)
            .cmp(&(b.pattern.to_string(), b.n, &b.bound_name))
    });
    let mut text = format!("{:<10} {:>3} {:>9} {:<26} {:>12} {}\n", "pattern", "n", "max_edges", "bound", "value", "satisfied");
    for r in &rows {
        text += &format!(
            "{:<10} {:>3} {:>9} {:<26} {:>12.6} {}\n",
            r.pattern.to_string(),
            r.n,
            r.max_edges,
            r.bound_name,
            r.bound_value,
            r.status
        );
    }
    let count = |s: BoundStatus| rows.iter().filter(|r| r.status == s).count();
    let violated = count(BoundStatus::Violated);
    text += &format!(
        "rows={} satisfied={} violated={} not-applicable={}\n",
        rows.len(),
        count(BoundStatus::Satisfied),
        violated,
        count(BoundStatus::NotApplicable)
    );
    if let Some(path) = merged {
        let mut buf = Vec::new();
        write_report_csv(&rows, &mut buf).map_err(|e| Failure::new(exit::IO, e.to_string()))?;
        write_file(path, &buf)?;
    }
    emit(out, &text)?;
    Ok(if violated > 0 { exit::VIOLATION } else { exit::OK })
}
