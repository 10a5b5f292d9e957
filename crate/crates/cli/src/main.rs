//! `edgeideal`: batch driver for projective dimension, Betti tables,
//! generator sequences and their certification.
//!
//! Exit status: 0 success, 1 verification failure, 2 usage or input error,
//! 3 resource limit.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgeideal::formulas::{self, FormulaError};
use edgeideal::graphs::{self, FamilySpec, Graph, GraphError};
use edgeideal::groebner::GroebnerConfig;
use edgeideal::homcomplex::{self, BettiTable, HomologyError};
use edgeideal::polyalg::PrimeField;
use edgeideal::sequences::{self, GeneratorSequence, SequenceError};
use edgeideal::verify::{self, CertifyOptions, VerificationReport, VerifyError, DEFAULT_HOMOLOGY_LIMIT};
use serde_json::json;
use thiserror::Error;

#[derive(Parser)]
#[command(name = "edgeideal", version, about = "Edge ideals of cycles and bicyclic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Projective dimension from the closed form and from homology.
    Pd(Common),
    /// Graded Betti table.
    Betti(Common),
    /// Generator sequence of length pd for the family.
    Sequence(Common),
    /// Certify the family's sequence; exits 1 on a failing report.
    Verify(Common),
    /// Whether the edge ideal is a set-theoretic complete intersection.
    Stci(Common),
    /// Certify every instance of a family range, one line per instance.
    Matrix(MatrixArgs),
}

#[derive(Args)]
struct Limits {
    /// Comma-separated primes.
    #[arg(long, value_delimiter = ',', default_values_t = verify::DEFAULT_FIELDS)]
    fields: Vec<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Gröbner S-pair budget per radical-membership run.
    #[arg(long)]
    spair_budget: Option<usize>,
    /// Homology is evaluated only up to this many vertices.
    #[arg(long, default_value_t = DEFAULT_HOMOLOGY_LIMIT)]
    homology_limit: usize,
}

#[derive(Args)]
struct Common {
    /// Graph in the family mini-language, e.g. `cycle:6` or `dumbbell:3,1,3`.
    #[arg(long)]
    graph: String,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long, value_enum, default_value_t = Family::All)]
    family: Family,
    #[arg(long, default_value_t = 11)]
    max_vertices: usize,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Cycle,
    Bicyclic,
    Dumbbell,
    All,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("verification failed")]
    Failed,
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed => 1,
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::TooLarge(..) => CliError::Resource(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::TooLarge { .. } => CliError::Resource(e.to_string()),
            e => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FormulaError> for CliError {
    fn from(e: FormulaError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SequenceError> for CliError {
    fn from(e: SequenceError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        if e.is_resource_limit() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl Limits {
    fn fields(&self) -> Result<Vec<PrimeField>, CliError> {
        if self.fields.is_empty() {
            return Err(CliError::Usage("no fields given".into()));
        }
        self.fields
            .iter()
            .map(|&p| PrimeField::new(p).map_err(|e| CliError::Usage(format!("field {p}: {e}"))))
            .collect()
    }

    fn certify_options(&self) -> CertifyOptions {
        let mut opts = CertifyOptions {
            homology_limit: self.homology_limit,
            ..CertifyOptions::default()
        };
        if let Some(b) = self.spair_budget {
            opts.groebner = GroebnerConfig::with_budget(b);
        }
        opts
    }
}

fn parse_graph(text: &str) -> Result<(FamilySpec, Graph), CliError> {
    let spec: FamilySpec = text.parse().map_err(|e: GraphError| CliError::Usage(e.to_string()))?;
    let g = graphs::build(&spec)?;
    Ok((spec, g))
}

/// The closed form, or `None` for specs it does not cover (unions).
fn formula(spec: &FamilySpec) -> Result<Option<formulas::FormulaResult>, CliError> {
    match formulas::pd_formula(spec) {
        Ok(r) => Ok(Some(r)),
        Err(FormulaError::Unsupported(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn cmd_pd(args: &Common) -> Result<String, CliError> {
    let (spec, g) = parse_graph(&args.graph)?;
    let field = args.limits.fields()?[0];
    let f = formula(&spec)?;
    let hom = if g.vertex_count() <= args.limits.homology_limit {
        Some(homcomplex::projective_dimension(&g, field)?)
    } else {
        None
    };
    let (value, case) = (f.as_ref().map(|r| r.value), f.as_ref().map(|r| r.case_tag.clone()));
    Ok(match args.limits.format {
        Format::Json => json!({"pd_formula": value, "case": case, "pd_homology": hom}).to_string(),
        Format::Csv => format!("pd_formula,case,pd_homology\n{},{},{}", opt(value), case.unwrap_or_default(), opt(hom)),
        Format::Text => format!(
            "graph        {spec}\npd formula   {} ({})\npd homology  {}",
            opt(value),
            case.as_deref().unwrap_or("no closed form"),
            hom.map_or("skipped".to_string(), |h| h.to_string()),
        ),
    })
}

fn opt(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// Table with one column per homological index `i` and one row per
/// `d - i`, zeros shown as `.`.
fn betti_text(t: &BettiTable) -> String {
    let Some(pd) = t.projective_dimension() else {
        return "zero table".into();
    };
    let rows: Vec<usize> = {
        let mut r: Vec<usize> = t.iter().map(|((i, d), _)| d - i).collect();
        r.sort_unstable();
        r.dedup();
        r
    };
    let width = t.iter().map(|(_, v)| v.to_string().len()).max().unwrap_or(1).max(pd.to_string().len());
    let mut out = format!("{:>4}", "");
    for i in 1..=pd {
        write!(out, " {i:>width$}").unwrap();
    }
    for r in rows {
        write!(out, "\n{r:>3}:").unwrap();
        for i in 1..=pd {
            match t.get(i, i + r) {
                0 => write!(out, " {:>width$}", "."),
                v => write!(out, " {v:>width$}"),
            }
            .unwrap();
        }
    }
    out
}

fn cmd_betti(args: &Common) -> Result<String, CliError> {
    let (_, g) = parse_graph(&args.graph)?;
    let t = homcomplex::betti_table(&g, args.limits.fields()?[0])?;
    Ok(match args.limits.format {
        Format::Json => serde_json::to_string(&t).expect("table serializes"),
        Format::Csv => t.to_csv().trim_end().to_string(),
        Format::Text => betti_text(&t),
    })
}

fn sequence_text(seq: &GeneratorSequence, csv: bool) -> String {
    let mut out = if csv {
        String::from("index,polynomial")
    } else {
        format!("{} ({}), length {}", seq.graph(), seq.case_tag(), seq.len())
    };
    for (i, f) in seq.rendered().iter().enumerate() {
        if csv {
            write!(out, "\n{i},{f}").unwrap();
        } else {
            write!(out, "\n  q{i} = {f}").unwrap();
        }
    }
    out
}

fn cmd_sequence(args: &Common) -> Result<String, CliError> {
    let (spec, _) = parse_graph(&args.graph)?;
    let seq = sequences::family_sequence(&spec, args.limits.fields()?[0])?;
    Ok(match args.limits.format {
        Format::Json => seq.to_json().to_string(),
        Format::Csv => sequence_text(&seq, true),
        Format::Text => sequence_text(&seq, false),
    })
}

fn report_csv(r: &VerificationReport) -> String {
    let mut out = String::from("edge,ok");
    for p in &r.fields {
        write!(out, ",gf{p}").unwrap();
    }
    for e in &r.reverse {
        write!(out, "\n{},{}", e.edge, e.ok).unwrap();
        for b in &e.per_field {
            write!(out, ",{b}").unwrap();
        }
    }
    out
}

fn report_text(r: &VerificationReport) -> String {
    let failing: Vec<&str> = r.reverse.iter().filter(|e| !e.ok).map(|e| e.edge.as_str()).collect();
    format!(
        "graph        {}\nfields       {:?}\nverdict      {}\nlength       {}\npd formula   {}\npd homology  {}\nforward      {}/{} generators inside I(G)\nreverse      {}/{} edges in the radical{}\ns-pairs      {} ({} ms)",
        r.graph,
        r.fields,
        if r.passed() { "pass" } else { "fail" },
        r.length,
        r.pd_formula,
        r.pd_homology.map_or("skipped".to_string(), |h| h.to_string()),
        r.forward.iter().filter(|&&b| b).count(),
        r.forward.len(),
        r.reverse.len() - failing.len(),
        r.reverse.len(),
        if failing.is_empty() { String::new() } else { format!(" (missing {})", failing.join(", ")) },
        r.stats.spairs,
        r.stats.wall_ms,
    )
}

fn cmd_verify(args: &Common) -> Result<(String, bool), CliError> {
    let (spec, _) = parse_graph(&args.graph)?;
    args.limits.fields()?;
    let r = verify::certify(&spec, &args.limits.fields, &args.limits.certify_options())?;
    let out = match args.limits.format {
        Format::Json => r.to_json().to_string(),
        Format::Csv => report_csv(&r),
        Format::Text => report_text(&r),
    };
    Ok((out, r.passed()))
}

fn cmd_stci(args: &Common) -> Result<String, CliError> {
    let (spec, g) = parse_graph(&args.graph)?;
    // ara equals pd only where a sequence of that length is known
    if matches!(spec, FamilySpec::Line(_) | FamilySpec::Union(..)) {
        return Err(CliError::Usage(format!("{spec}: arithmetical rank is not known in closed form")));
    }
    let ara = formulas::pd_formula(&spec)?.value;
    let height = graphs::min_vertex_cover_size(&g)?;
    let stci = ara == height;
    Ok(match args.limits.format {
        Format::Json => json!({"stci": stci, "height": height, "ara": ara}).to_string(),
        Format::Csv => format!("stci,height,ara\n{stci},{height},{ara}"),
        Format::Text => format!("{spec}: height {height}, ara {ara}, {}", if stci { "complete intersection" } else { "not a complete intersection" }),
    })
}

fn matrix_instances(family: Family, max: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    if matches!(family, Family::Cycle | Family::All) {
        out.extend((3..=max).map(FamilySpec::Cycle));
    }
    if matches!(family, Family::Bicyclic | Family::All) {
        for m in 3..max {
            for n in m..=max {
                if m + n - 1 <= max {
                    out.push(FamilySpec::BicyclicVertex { m, n });
                }
            }
        }
    }
    if matches!(family, Family::Dumbbell | Family::All) {
        for m in 3..max {
            for n in 3..=max - m {
                for k in 0..=max - m - n {
                    out.push(FamilySpec::Dumbbell { m, k, n });
                }
            }
        }
    }
    out
}

/// Certifies every instance on worker threads; rows come back in instance
/// order regardless of completion order.
fn cmd_matrix(args: &MatrixArgs) -> Result<(String, bool), CliError> {
    args.limits.fields()?;
    let specs = matrix_instances(args.family, args.max_vertices);
    let opts = args.limits.certify_options();
    let results: Vec<Mutex<Option<Result<VerificationReport, VerifyError>>>> =
        specs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(specs.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(spec) = specs.get(i) else { break };
                let r = verify::certify(spec, &args.limits.fields, &opts);
                *results[i].lock().unwrap() = Some(r);
            });
        }
    });
    let mut lines = Vec::new();
    if args.limits.format == Format::Csv {
        lines.push("graph,verdict,length,pd_formula,pd_homology,spairs".to_string());
    }
    let mut all_pass = true;
    for (spec, cell) in specs.iter().zip(results) {
        let r = cell.into_inner().unwrap().expect("every instance ran")?;
        all_pass &= r.passed();
        let verdict = if r.passed() { "pass" } else { "fail" };
        lines.push(match args.limits.format {
            Format::Json => r.to_json_untimed().to_string(),
            Format::Csv => format!("\"{spec}\",{verdict},{},{},{},{}", r.length, r.pd_formula, opt(r.pd_homology), r.stats.spairs),
            Format::Text => format!(
                "{:<20} {verdict}  length {:>2}  pd {:>2}  homology {:>2}",
                spec.to_string(),
                r.length,
                r.pd_formula,
                r.pd_homology.map_or("-".to_string(), |h| h.to_string()),
            ),
        });
    }
    Ok((lines.join("\n"), all_pass))
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let checked = |(out, ok): (String, bool)| {
        println!("{out}");
        if ok {
            Ok(String::new())
        } else {
            Err(CliError::Failed)
        }
    };
    match &cli.command {
        Command::Pd(a) => cmd_pd(a),
        Command::Betti(a) => cmd_betti(a),
        Command::Sequence(a) => cmd_sequence(a),
        Command::Stci(a) => cmd_stci(a),
        Command::Verify(a) => cmd_verify(a).and_then(checked),
        Command::Matrix(a) => cmd_matrix(a).and_then(checked),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("edgeideal: {e}");
            ExitCode::from(e.code())
        }
    }
}
