//! Command-line driver: `compute`, `construct`, `moments`, `compare`, `verify`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input parse error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::error::Error;
use crate::families::{
    complete_bipartite, g_double_star, g_star, join_family, join_family_double, CoverPartition,
    JoinFamilyParams, JoinSplit,
};
use crate::graph::{is_bipartite, Graph};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::invariants::{edge_connectivity, matching_number, vertex_connectivity, ClassKind};
use crate::quartic::{lemma_43_grid, lemma_grid, Lemma, LemmaVerdict, Verdict};
use crate::report::{float17, integer_raw, VerifyRun};
use crate::search::{class_values, find_maximizers, Ranking, SearchConfig, NEAR_TIE};
use crate::spectral::{
    eigenvalues, estrada_cosh, estrada_series, moment_series, series_cutoff, DEFAULT_TOLERANCE,
    MOMENT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "estrada", version, about = "Estrada index tools for bipartite graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum, Estrada index by three methods, and invariants of each input graph.
    Compute(ComputeArgs),
    /// Build a named family member and print its graph6 string.
    Construct(ConstructArgs),
    /// Exact closed-walk counts M_0..M_K.
    Moments(MomentsArgs),
    /// Check one of the family inequalities over a parameter grid.
    Compare(CompareArgs),
    /// Exhaustively search each class for its maximizer and compare with the prediction.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    CompleteBipartite,
    Join,
    JoinDouble,
    GStar,
    GDoubleStar,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// Family to build instead of reading a graph.
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Join set size.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    /// join-double: n1; g-star/g-double-star: |X1|.
    #[arg(long)]
    pub n1: Option<usize>,
    /// join-double: n2; g-star/g-double-star: |X2|.
    #[arg(long)]
    pub n2: Option<usize>,
    /// join-double: m1; g-star/g-double-star: |Y1|.
    #[arg(long)]
    pub m1: Option<usize>,
    /// join-double: m2; g-star/g-double-star: |Y2|.
    #[arg(long)]
    pub m2: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// A graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Jacobi off-diagonal threshold.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Largest walk length.
    #[arg(long, default_value_t = 16)]
    pub k_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Which inequality: 4.1, 4.2 or 4.3.
    #[arg(long)]
    pub lemma: String,
    #[arg(long, default_value_t = 12)]
    pub max_p: usize,
    #[arg(long, default_value_t = 12)]
    pub max_q: usize,
    #[arg(long, default_value_t = 12)]
    pub max_s: usize,
    /// Largest order for the 4.3 grid.
    #[arg(long, default_value_t = 40)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Matching,
    Connectivity,
    EdgeConnectivity,
}

impl Theorem {
    fn kind(self) -> ClassKind {
        match self {
            Theorem::Matching => ClassKind::Matching,
            Theorem::Connectivity => ClassKind::VertexConnectivity,
            Theorem::EdgeConnectivity => ClassKind::EdgeConnectivity,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Theorem::Matching => "matching",
            Theorem::Connectivity => "connectivity",
            Theorem::EdgeConnectivity => "edge-connectivity",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PredictionArg {
    FloorFirst,
    CeilFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RankingArg {
    Float,
    ExactMoments,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: Theorem,
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    /// Permit order 10 (2^25 masks in the largest split).
    #[arg(long)]
    pub allow_n10: bool,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// JSON report path; the CSV summary and timing sidecar are written next to it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Parameter split of the predicted connectivity maximizer.
    #[arg(long, value_enum, default_value_t = PredictionArg::FloorFirst)]
    pub prediction: PredictionArg,
    #[arg(long, value_enum, default_value_t = RankingArg::Float)]
    pub ranking: RankingArg,
    /// Width of the near-tie band.
    #[arg(long, default_value_t = NEAR_TIE)]
    pub near_tie: f64,
    /// Moments compared when breaking near ties.
    #[arg(long, default_value_t = MOMENT_BUDGET)]
    pub k_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Graph6 { .. } => CliError::Parse(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "estrada: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match cli.command {
        Command::Compute(a) => compute(&a, out),
        Command::Construct(a) => construct(&a, out),
        Command::Moments(a) => moments(&a, out),
        Command::Compare(a) => compare(&a, out),
        Command::Verify(a) => verify(&a, out, err),
    }
}

fn need(v: Option<usize>, flag: &str, family: &str) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for family {family}")))
}

/// The family member described by the flags, with a readable label.
pub fn build_family(f: &FamilyArgs) -> CliResult<(Graph, String)> {
    let Some(name) = f.family else {
        return Err(CliError::Usage("--family is required".into()));
    };
    Ok(match name {
        FamilyName::CompleteBipartite => {
            let (p, q) = (need(f.p, "p", "complete-bipartite")?, need(f.q, "q", "complete-bipartite")?);
            (complete_bipartite(p, q)?, format!("complete-bipartite p={p} q={q}"))
        }
        FamilyName::Join => {
            let (s, p, q) = (need(f.s, "s", "join")?, need(f.p, "p", "join")?, need(f.q, "q", "join")?);
            (join_family(JoinFamilyParams::new(s, p, q)?), format!("join s={s} p={p} q={q}"))
        }
        FamilyName::JoinDouble => {
            let s = need(f.s, "s", "join-double")?;
            let n1 = need(f.n1, "n1", "join-double")?;
            let n2 = need(f.n2, "n2", "join-double")?;
            let m1 = need(f.m1, "m1", "join-double")?;
            let m2 = need(f.m2, "m2", "join-double")?;
            (
                join_family_double(s, n1, n2, m1, m2)?,
                format!("join-double s={s} n1={n1} n2={n2} m1={m1} m2={m2}"),
            )
        }
        FamilyName::GStar | FamilyName::GDoubleStar => {
            let label = if name == FamilyName::GStar { "g-star" } else { "g-double-star" };
            let x1 = need(f.n1, "n1", label)?;
            let x2 = need(f.n2, "n2", label)?;
            let y1 = need(f.m1, "m1", label)?;
            let y2 = need(f.m2, "m2", label)?;
            let part = CoverPartition::from_sizes(x1, x2, y1, y2)?;
            let g = if name == FamilyName::GStar { g_star(&part) } else { g_double_star(&part) };
            (g, format!("{label} |X1|={x1} |X2|={x2} |Y1|={y1} |Y2|={y2}"))
        }
    })
}

/// Graphs named by exactly one of `--graph6`, `--file`, `--family`.
pub fn read_inputs(input: &InputArgs) -> CliResult<Vec<Graph>> {
    let sources = input.graph6.is_some() as usize
        + input.file.is_some() as usize
        + input.family.family.is_some() as usize;
    if sources != 1 {
        return Err(CliError::Usage(
            "exactly one of --graph6, --file or --family must be given".into(),
        ));
    }
    if let Some(text) = &input.graph6 {
        return Ok(vec![parse_graph6(text)?]);
    }
    if let Some(path) = &input.file {
        return read_graph6_file(path);
    }
    Ok(vec![build_family(&input.family)?.0])
}

fn read_graph6_file(path: &Path) -> CliResult<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line)
            .map_err(|e| CliError::Parse(format!("{} line {}: {e}", path.display(), i + 1)))?;
        graphs.push(g);
    }
    if graphs.is_empty() {
        return Err(CliError::Parse(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}

#[derive(Serialize)]
struct ComputeRecord {
    graph6: String,
    n: usize,
    m: usize,
    bipartite: bool,
    tolerance: Box<RawValue>,
    eigenvalues: Vec<Box<RawValue>>,
    nullity: usize,
    estrada_eigen: Box<RawValue>,
    estrada_cosh: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
    estrada_moment_series: Box<RawValue>,
    error_bound: Box<RawValue>,
    series_cutoff: usize,
    matching_number: Option<usize>,
    vertex_connectivity: usize,
    edge_connectivity: usize,
}

fn compute_record(g: &Graph, tol: f64) -> CliResult<ComputeRecord> {
    if !(tol > 0.0) {
        return Err(CliError::Usage(format!("tolerance must be positive (got {tol})")));
    }
    let spec = eigenvalues(g, tol)?;
    let bipartite = is_bipartite(g);
    let (series, bound) = estrada_series(g);
    Ok(ComputeRecord {
        graph6: emit_graph6(g),
        n: g.order(),
        m: g.edge_count(),
        bipartite,
        tolerance: float17(tol),
        eigenvalues: spec.eigenvalues.iter().map(|&x| float17(x)).collect(),
        nullity: spec.nullity,
        estrada_eigen: float17(spec.eigenvalues.iter().map(|x| x.exp()).sum()),
        estrada_cosh: bipartite.then(|| float17(estrada_cosh(&spec))),
        note: (!bipartite).then_some("cosh method needs a bipartite graph"),
        estrada_moment_series: float17(series),
        error_bound: float17(bound),
        series_cutoff: series_cutoff(g.order(), g.max_degree()),
        matching_number: matching_number(g).ok(),
        vertex_connectivity: vertex_connectivity(g),
        edge_connectivity: edge_connectivity(g),
    })
}

fn raw_text(x: &Option<Box<RawValue>>) -> String {
    x.as_ref().map(|v| v.get().to_string()).unwrap_or_default()
}

fn compute(a: &ComputeArgs, out: &mut dyn Write) -> CliResult<i32> {
    let graphs = read_inputs(&a.input)?;
    let records: Vec<ComputeRecord> =
        graphs.iter().map(|g| compute_record(g, a.tolerance)).collect::<CliResult<_>>()?;
    match a.format {
        Format::Json => {
            let text = if records.len() == 1 && a.input.file.is_none() {
                serde_json::to_string_pretty(&records[0])
            } else {
                serde_json::to_string_pretty(&records)
            };
            writeln!(out, "{}", text.expect("record serialises"))?;
        }
        Format::Csv => {
            writeln!(
                out,
                "graph6,n,m,bipartite,nullity,estrada_eigen,estrada_cosh,estrada_moment_series,\
                 error_bound,matching_number,vertex_connectivity,edge_connectivity"
            )?;
            for r in &records {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{}",
                    r.graph6,
                    r.n,
                    r.m,
                    r.bipartite,
                    r.nullity,
                    r.estrada_eigen.get(),
                    raw_text(&r.estrada_cosh),
                    r.estrada_moment_series.get(),
                    r.error_bound.get(),
                    r.matching_number.map(|x| x.to_string()).unwrap_or_default(),
                    r.vertex_connectivity,
                    r.edge_connectivity
                )?;
            }
        }
        Format::Text => {
            for r in &records {
                let mut s = String::new();
                let f = |x: &RawValue| x.get().parse::<f64>().unwrap_or(f64::NAN);
                let _ = writeln!(s, "graph6      {}", r.graph6);
                let _ = writeln!(s, "n, m        {}, {}", r.n, r.m);
                let eig: Vec<String> = r.eigenvalues.iter().map(|x| format!("{:.6}", f(x))).collect();
                let _ = writeln!(s, "eigenvalues {}", eig.join(" "));
                let _ = writeln!(s, "nullity     {}", r.nullity);
                let _ = writeln!(s, "EE eigen    {:.10}", f(&r.estrada_eigen));
                match &r.estrada_cosh {
                    Some(c) => {
                        let _ = writeln!(s, "EE cosh     {:.10}", f(c));
                    }
                    None => {
                        let _ = writeln!(s, "EE cosh     n/a (not bipartite)");
                    }
                }
                let _ = writeln!(
                    s,
                    "EE series   {:.10} (bound {:.1e})",
                    f(&r.estrada_moment_series),
                    f(&r.error_bound)
                );
                let matching = r.matching_number.map(|x| x.to_string()).unwrap_or("n/a".into());
                let _ = writeln!(
                    s,
                    "matching {}, kappa {}, kappa' {}",
                    matching, r.vertex_connectivity, r.edge_connectivity
                );
                write!(out, "{s}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn construct(a: &ConstructArgs, out: &mut dyn Write) -> CliResult<i32> {
    let (g, label) = build_family(&a.family)?;
    let g6 = emit_graph6(&g);
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Built<'a> {
                family: &'a str,
                graph6: &'a str,
                n: usize,
                m: usize,
                vertex_connectivity: usize,
                edge_connectivity: usize,
            }
            let doc = Built {
                family: &label,
                graph6: &g6,
                n: g.order(),
                m: g.edge_count(),
                vertex_connectivity: vertex_connectivity(&g),
                edge_connectivity: edge_connectivity(&g),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialises"))?;
        }
        Format::Csv => {
            writeln!(out, "family,graph6,n,m")?;
            writeln!(out, "\"{label}\",{g6},{},{}", g.order(), g.edge_count())?;
        }
        Format::Text => {
            writeln!(out, "{g6}")?;
            writeln!(
                out,
                "# {label}: n={} m={} kappa={} kappa'={}",
                g.order(),
                g.edge_count(),
                vertex_connectivity(&g),
                edge_connectivity(&g)
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn moments(a: &MomentsArgs, out: &mut dyn Write) -> CliResult<i32> {
    if a.k_max > MOMENT_BUDGET {
        return Err(Error::WalkBudget { k: a.k_max, max: MOMENT_BUDGET }.into());
    }
    let graphs = read_inputs(&a.input)?;
    #[derive(Serialize)]
    struct Record {
        graph6: String,
        k_max: usize,
        moments: Vec<Box<RawValue>>,
    }
    let records: Vec<Record> = graphs
        .iter()
        .map(|g| Record {
            graph6: emit_graph6(g),
            k_max: a.k_max,
            moments: moment_series(g, a.k_max).moments.iter().map(|m| integer_raw(m.to_string())).collect(),
        })
        .collect();
    match a.format {
        Format::Json => {
            let text = if records.len() == 1 && a.input.file.is_none() {
                serde_json::to_string_pretty(&records[0])
            } else {
                serde_json::to_string_pretty(&records)
            };
            writeln!(out, "{}", text.expect("serialises"))?;
        }
        Format::Csv | Format::Text => {
            writeln!(out, "graph6,k,moment")?;
            for r in &records {
                for (k, m) in r.moments.iter().enumerate() {
                    writeln!(out, "{},{k},{}", r.graph6, m.get())?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn compare(a: &CompareArgs, out: &mut dyn Write) -> CliResult<i32> {
    let lemma: Lemma = a.lemma.parse().map_err(|e: Error| CliError::Usage(e.to_string()))?;
    let rows = match lemma {
        Lemma::L43 => lemma_43_grid(a.max_n, a.max_s),
        _ => lemma_grid(lemma, a.max_p, a.max_q, a.max_s),
    };
    write_lemma_rows(&rows, a.format, out)?;
    let failed = rows.iter().any(|r| r.verdict == Verdict::Fails);
    Ok(if failed { EXIT_FAILED } else { EXIT_OK })
}

fn write_lemma_rows(rows: &[LemmaVerdict], format: Format, out: &mut dyn Write) -> CliResult<()> {
    let opt = |x: Option<f64>| x.map(|v| float17(v).get().to_string()).unwrap_or_default();
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                lemma: String,
                n: usize,
                s: usize,
                p: usize,
                q: usize,
                lhs: Option<Box<RawValue>>,
                rhs: Option<Box<RawValue>>,
                gap: Option<Box<RawValue>>,
                exact_check: Option<bool>,
                verdict: String,
                reason: Option<&'a str>,
            }
            let doc: Vec<Row> = rows
                .iter()
                .map(|r| Row {
                    lemma: r.lemma.to_string(),
                    n: r.n,
                    s: r.s,
                    p: r.p,
                    q: r.q,
                    lhs: r.lhs.map(float17),
                    rhs: r.rhs.map(float17),
                    gap: r.gap.map(float17),
                    exact_check: r.exact_check,
                    verdict: r.verdict.to_string(),
                    reason: r.reason.as_deref(),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialises"))?;
        }
        Format::Csv | Format::Text => {
            writeln!(out, "lemma,n,s,p,q,lhs,rhs,gap,exact_check,verdict,reason")?;
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    r.lemma,
                    r.n,
                    r.s,
                    r.p,
                    r.q,
                    opt(r.lhs),
                    opt(r.rhs),
                    opt(r.gap),
                    r.exact_check.map(|b| b.to_string()).unwrap_or_default(),
                    r.verdict,
                    r.reason.as_deref().map(|s| format!("\"{s}\"")).unwrap_or_default()
                )?;
            }
        }
    }
    Ok(())
}

fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    if a.n_min < 2 {
        return Err(CliError::Usage("--n-min must be at least 2".into()));
    }
    if a.n_min > a.n_max {
        return Err(CliError::Usage("--n-min exceeds --n-max".into()));
    }
    let limit = if a.allow_n10 { 10 } else { 9 };
    if a.n_max > limit {
        return Err(CliError::Usage(format!(
            "--n-max {} exceeds {limit}{}",
            a.n_max,
            if a.allow_n10 { "" } else { " (order 10 needs --allow-n10)" }
        )));
    }
    let config = SearchConfig {
        threads: a.threads,
        near_tie: a.near_tie,
        k_max: a.k_max,
        allow_n10: a.allow_n10,
        split: match a.prediction {
            PredictionArg::FloorFirst => JoinSplit::FloorFirst,
            PredictionArg::CeilFirst => JoinSplit::CeilFirst,
        },
        ranking: match a.ranking {
            RankingArg::Float => Ranking::Float,
            RankingArg::ExactMoments => Ranking::ExactMoments,
        },
        ..SearchConfig::default()
    };
    let start = Instant::now();
    let kind = a.theorem.kind();
    let mut reports = Vec::new();
    for n in a.n_min..=a.n_max {
        reports.extend(find_maximizers(kind, n, &class_values(kind, n), &config)?);
    }
    let total = start.elapsed();
    let run = VerifyRun {
        theorem: a.theorem.name(),
        n_min: a.n_min,
        n_max: a.n_max,
        config: &config,
        reports: &reports,
    };
    let json = run.to_json();
    if let Some(path) = &a.out {
        std::fs::write(path, &json)?;
        std::fs::write(path.with_extension("csv"), run.to_csv())?;
        std::fs::write(sidecar_path(path), run.timing_json(total, a.threads))?;
    }
    match (a.format, &a.out) {
        (Format::Json, None) => write!(out, "{json}")?,
        (Format::Csv, _) => write!(out, "{}", run.to_csv())?,
        _ => {
            for r in &reports {
                let verdict = if r.verified() { "ok" } else { "FAIL" };
                writeln!(
                    out,
                    "{verdict:4} {:8} {:9} maximizer={} predicted={}",
                    r.class.to_string(),
                    r.status.name(),
                    r.maximizer.as_ref().map(emit_graph6).unwrap_or_else(|| "-".into()),
                    r.prediction.clone().unwrap_or_else(|| "-".into()),
                )?;
            }
        }
    }
    let failures: Vec<String> =
        reports.iter().filter(|r| !r.verified()).map(|r| r.class.to_string()).collect();
    if failures.is_empty() {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "verification failed for {}", failures.join(", "))?;
        Ok(EXIT_FAILED)
    }
}

/// `report.json` -> `report.timing.json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}.timing.json"))
}
