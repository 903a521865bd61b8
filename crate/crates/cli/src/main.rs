use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use birational_rowmotion::algebra::{Labeling, Rational, Semifield, Tropical};
use birational_rowmotion::arborescence::{enumerate, weight, Direction};
use birational_rowmotion::counting::{
    enumerate_plane_partitions, lattice_points_polygonal, macmahon, pp_bijection, BijectionDirection, PlanePartition,
};
use birational_rowmotion::poset::{Element, GridPoset, SkewShape};
use birational_rowmotion::report::VerificationReport;
use birational_rowmotion::rowmotion::{apply_map, MapKind};
use birational_rowmotion::verify::{run_suite, Suite, SuiteParams};
use birational_rowmotion::zeta::{intermediate_poset, zeta, zeta_k, zeta_k_inverse, ZetaDirection};
use birational_rowmotion::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact rowmotion on grid posets.
#[derive(Parser, Debug)]
#[command(name = "rowmotion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a poset in the text format.
    Poset(PosetArgs),
    /// Apply a toggle, transfer or rowmotion map to a labeling.
    Apply(ApplyArgs),
    /// Apply the intermediate maps or their composite.
    Zeta(ZetaArgs),
    /// Map a plane partition between trapezoid and rectangle.
    Bijection(BijectionArgs),
    /// Box counts, plane partitions and polytope lattice points.
    Count(CountArgs),
    /// List the upward or downward arborescences of a skew shape.
    Arborescences(ArborescenceArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Rectangle,
    Trapezoid,
    RightTrapezoid,
    Intermediate,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum AlgebraName {
    Rational,
    Tropical,
}

#[derive(Args, Debug)]
struct PosetArgs {
    /// Poset file; overrides the kind flags.
    #[arg(long)]
    poset: Option<PathBuf>,
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
}

impl PosetArgs {
    fn build(&self) -> Result<GridPoset, CliError> {
        if let Some(path) = &self.poset {
            return Ok(GridPoset::parse(&read_input(path)?)?);
        }
        let kind = self.kind.ok_or_else(|| CliError::usage("give --poset or --kind"))?;
        let r = self.r.ok_or_else(|| CliError::usage("--r is required"))?;
        let s = self.s.ok_or_else(|| CliError::usage("--s is required"))?;
        let poset = match kind {
            Kind::Rectangle => GridPoset::rectangle(r, s)?,
            Kind::Trapezoid => GridPoset::trapezoid(r, s)?,
            Kind::RightTrapezoid => GridPoset::right_trapezoid(r, s)?,
            Kind::Intermediate => {
                GridPoset::intermediate(r, s, self.k.ok_or_else(|| CliError::usage("--k is required"))?)?
            }
        };
        Ok(poset)
    }
}

#[derive(Args, Debug)]
struct ApplyArgs {
    #[command(flatten)]
    poset: PosetArgs,
    /// rowmotion, antichain-rowmotion, polygonal-rowmotion, transfer, transfer-inv,
    /// dual-transfer, dual-transfer-inv, toggle, antichain-toggle, polygonal-toggle
    #[arg(long)]
    map: String,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    power: i64,
    /// Element for the toggle maps, as `i,j`.
    #[arg(long)]
    at: Option<String>,
    #[arg(long, value_enum, default_value = "rational")]
    algebra: AlgebraName,
    /// Labeling file (`-` for standard input).
    #[arg(long, default_value = "-")]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct ZetaArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    s: u32,
    /// A single step `ζ_k`; omit for the composite.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, default_value = "fwd")]
    direction: String,
    #[arg(long, value_enum, default_value = "rational")]
    algebra: AlgebraName,
    #[arg(long, default_value = "-")]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct BijectionArgs {
    #[arg(long)]
    direction: String,
    #[arg(long, default_value = "-")]
    input: PathBuf,
    /// Dimensions; inferred from the cells when omitted.
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountWhat {
    Macmahon,
    PlanePartitions,
    LatticePoints,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long, value_enum)]
    what: CountWhat,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    s: u32,
    /// Intermediate index for lattice points or plane partitions.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, default_value_t = 1)]
    height: u32,
    /// Poset for plane partitions (default rectangle).
    #[arg(long, value_enum)]
    kind: Option<Kind>,
}

#[derive(Args, Debug)]
struct ArborescenceArgs {
    #[arg(long)]
    shape: PathBuf,
    #[arg(long)]
    direction: String,
    /// Labeling used to print the weight of each arborescence.
    #[arg(long)]
    weights: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    suite: String,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    /// Use seeds 1..=N.
    #[arg(long)]
    seeds: Option<u64>,
    /// Explicit seeds, e.g. `3,5,8`.
    #[arg(long, value_delimiter = ',')]
    seed_list: Option<Vec<u64>>,
    #[arg(long)]
    height: Option<u32>,
    #[arg(long)]
    shapes: Option<usize>,
    #[arg(long)]
    max_cells: Option<usize>,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
    Io(String),
}

impl CliError {
    fn usage(m: &str) -> Self {
        CliError::Usage(m.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }
}

fn parse_element(text: &str) -> Result<Element, CliError> {
    let bad = || CliError::Usage(format!("expected `i,j`, got `{text}`"));
    let (i, j) = text.split_once(',').ok_or_else(bad)?;
    Ok(Element::new(i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

/// Outcome of a command: text for stdout and whether checks all passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn apply_in<A: Semifield>(poset: GridPoset, text: &str, kind: MapKind, power: i64) -> Result<String, CliError> {
    let x = Labeling::<A>::parse(Arc::new(poset), text)?;
    x.validate()?;
    Ok(apply_map(&x, kind, power)?.to_text())
}

fn cmd_apply(a: &ApplyArgs) -> Result<Output, CliError> {
    let poset = a.poset.build()?;
    let at = a.at.as_deref().map(parse_element).transpose()?;
    let kind = MapKind::parse(&a.map, at)?;
    let text = read_input(&a.input)?;
    let out = match a.algebra {
        AlgebraName::Rational => apply_in::<Rational>(poset, &text, kind, a.power)?,
        AlgebraName::Tropical => apply_in::<Tropical>(poset, &text, kind, a.power)?,
    };
    Ok(Output::ok(out))
}

fn zeta_in<A: Semifield>(a: &ZetaArgs, direction: ZetaDirection, text: &str) -> Result<String, CliError> {
    let (r, s) = (a.r, a.s);
    let domain_k = match (a.k, direction) {
        (Some(k), ZetaDirection::Forward) => k + 1,
        (Some(k), ZetaDirection::Inverse) => k,
        (None, ZetaDirection::Forward) => s,
        (None, ZetaDirection::Inverse) => 1,
    };
    let poset = Arc::new(intermediate_poset(r, s, domain_k)?);
    let x = Labeling::<A>::parse(poset, text)?;
    let z = match (a.k, direction) {
        (Some(k), ZetaDirection::Forward) => zeta_k(&x, k)?,
        (Some(k), ZetaDirection::Inverse) => zeta_k_inverse(&x, k)?,
        (None, d) => zeta(&x, d)?,
    };
    Ok(z.to_text())
}

fn cmd_zeta(a: &ZetaArgs) -> Result<Output, CliError> {
    let direction: ZetaDirection = a.direction.parse()?;
    let text = read_input(&a.input)?;
    let out = match a.algebra {
        AlgebraName::Rational => zeta_in::<Rational>(a, direction, &text)?,
        AlgebraName::Tropical => zeta_in::<Tropical>(a, direction, &text)?,
    };
    Ok(Output::ok(out))
}

/// Largest `i` and `j` among the `i j value` lines.
fn extent(text: &str) -> Result<(i32, i32), CliError> {
    let mut imax = 0;
    let mut jmax = 0;
    for line in text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()) {
        let mut it = line.split_whitespace();
        let (Some(i), Some(j)) = (it.next(), it.next()) else {
            return Err(CliError::Core(Error::Parse { line: 0, message: format!("bad line `{line}`") }));
        };
        let parse = |t: &str| t.parse::<i32>().map_err(|_| CliError::Core(Error::Parse { line: 0, message: format!("bad line `{line}`") }));
        imax = imax.max(parse(i)?);
        jmax = jmax.max(parse(j)?);
    }
    Ok((imax, jmax))
}

fn cmd_bijection(a: &BijectionArgs) -> Result<Output, CliError> {
    let direction: BijectionDirection = a.direction.parse()?;
    let text = read_input(&a.input)?;
    let (r, s) = match (a.r, a.s) {
        (Some(r), Some(s)) => (r, s),
        _ => {
            let (imax, jmax) = extent(&text)?;
            let s = jmax.max(1) as u32;
            match direction {
                BijectionDirection::T2R => ((imax - jmax + 1).max(1) as u32, s),
                BijectionDirection::R2T => (imax.max(1) as u32, s),
            }
        }
    };
    let poset = match direction {
        BijectionDirection::T2R => GridPoset::trapezoid(r, s)?,
        BijectionDirection::R2T => GridPoset::rectangle(r, s)?,
    };
    let x = PlanePartition::parse(Arc::new(poset), &text)?;
    Ok(Output::ok(pp_bijection(&x, direction)?.to_text()))
}

fn cmd_count(a: &CountArgs) -> Result<Output, CliError> {
    let n = match a.what {
        CountWhat::Macmahon => macmahon(a.r, a.s, a.height).to_string(),
        CountWhat::LatticePoints => lattice_points_polygonal(a.r, a.s, a.k.unwrap_or(1), a.height)?.to_string(),
        CountWhat::PlanePartitions => {
            let poset = match (a.kind, a.k) {
                (Some(Kind::Intermediate), Some(k)) | (None, Some(k)) => intermediate_poset(a.r, a.s, k)?,
                (Some(Kind::Trapezoid), _) => GridPoset::trapezoid(a.r, a.s)?,
                (Some(Kind::RightTrapezoid), _) => GridPoset::right_trapezoid(a.r, a.s)?,
                (Some(Kind::Intermediate), None) => return Err(CliError::usage("--k is required")),
                (Some(Kind::Rectangle), _) | (None, None) => GridPoset::rectangle(a.r, a.s)?,
            };
            enumerate_plane_partitions(&Arc::new(poset), a.height)?.len().to_string()
        }
    };
    Ok(Output::ok(format!("{n}\n")))
}

fn cmd_arborescences(a: &ArborescenceArgs) -> Result<Output, CliError> {
    let direction: Direction = a.direction.parse()?;
    let poset = GridPoset::parse(&read_input(&a.shape)?)?;
    let shape = SkewShape::from_poset(poset)?;
    let poset = Arc::new(shape.poset().clone());
    let weights = match &a.weights {
        Some(path) => Some(Labeling::<Rational>::parse(poset.clone(), &read_input(path)?)?),
        None => None,
    };
    let mut out = String::new();
    for t in enumerate(&poset, direction)? {
        out.push_str(&t.to_text(&poset));
        if let Some(y) = &weights {
            out.push_str(&format!(" : {}", weight(y, &t)));
        }
        out.push('\n');
    }
    Ok(Output::ok(out))
}

fn report_json(suite: Suite, params: &SuiteParams, rep: &VerificationReport) -> String {
    let checks: Vec<serde_json::Value> = rep
        .checks
        .iter()
        .map(|c| serde_json::json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let value = serde_json::json!({
        "suite": suite.name(),
        "dims": params.dims.map(|(r, s)| vec![r, s]),
        "seeds": params.seeds,
        "checks": checks,
        "notes": rep.notes,
        "summary": {
            "total": rep.checks.len(),
            "passed": rep.passed_count(),
            "failed": rep.checks.len() - rep.passed_count(),
        },
    });
    let mut text = serde_json::to_string_pretty(&value).expect("report serializes");
    text.push('\n');
    text
}

fn cmd_verify(a: &VerifyArgs) -> Result<Output, CliError> {
    let suite: Suite = a.suite.parse()?;
    let dims = match (a.r, a.s) {
        (Some(r), Some(s)) => Some((r, s)),
        (None, None) => None,
        _ => return Err(CliError::usage("give both --r and --s or neither")),
    };
    let mut params = SuiteParams { dims, ..SuiteParams::default() };
    if let Some(list) = &a.seed_list {
        params.seeds = list.clone();
    } else if let Some(n) = a.seeds {
        params.seeds = (1..=n).collect();
    }
    if let Some(h) = a.height {
        params.max_height = h;
    }
    if let Some(n) = a.shapes {
        params.shapes = n;
    }
    if let Some(n) = a.max_cells {
        params.max_cells = n;
    }
    let rep = run_suite(suite, &params)?;
    let text = if a.json { report_json(suite, &params, &rep) } else { format!("suite {suite}\n{rep}") };
    Ok(Output { text, passed: rep.all_passed() })
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Poset(a) => Ok(Output::ok(a.build()?.to_text())),
        Command::Apply(a) => cmd_apply(a),
        Command::Zeta(a) => cmd_zeta(a),
        Command::Bijection(a) => cmd_bijection(a),
        Command::Count(a) => cmd_count(a),
        Command::Arborescences(a) => cmd_arborescences(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
