mod document;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyhedral::check::{run_suite, Suite};
use polyhedral::convex_function::{evaluate, is_proper, optimal_value_fn, solution_map, ExtReal, PCFunc};
use polyhedral::linalg::{Matrix, Rat};
use polyhedral::multifunction::{self as mfn, MultiFn};
use polyhedral::polyhedron::{self as poly, CoordSet, HRep};
use polyhedral::relint;

use document::{Document, SchemaError};

#[derive(Parser)]
#[command(
    name = "polyhedral",
    version,
    about = "Exact rational calculus of polyhedral sets, functions and multifunctions"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on polyhedra
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Operations on polyhedral multifunctions
    #[command(subcommand)]
    Mfn(MfnCmd),
    /// Operations on polyhedral convex functions
    #[command(subcommand, name = "fn")]
    Func(FnCmd),
    /// Run a randomized agreement suite against the brute-force oracles
    Check(CheckArgs),
}

#[derive(Args)]
struct In {
    /// Input document ("-" for stdin)
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args)]
struct SetPoint {
    #[arg(long)]
    set: PathBuf,
    #[arg(long)]
    point: PathBuf,
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    left: PathBuf,
    #[arg(long)]
    right: PathBuf,
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Convert an hrep to a vrep or a vrep to an hrep
    Convert(In),
    /// Project onto the listed coordinates
    Project {
        #[command(flatten)]
        io: In,
        /// Comma-separated coordinate indices to keep, e.g. 0,2
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        keep: Vec<usize>,
    },
    Member(SetPoint),
    Empty(In),
    /// Relative interior as a relatively open description
    Relint(In),
    RiMember(SetPoint),
    Affhull(In),
    /// Linear image T(P)
    Image {
        #[command(flatten)]
        io: In,
        #[arg(long)]
        map: PathBuf,
    },
    /// Minkowski sum
    SumSets(Pair),
}

#[derive(Subcommand)]
enum MfnCmd {
    Dom(In),
    Rge(In),
    Inv(In),
    Value {
        #[command(flatten)]
        io: In,
        #[arg(long)]
        point: PathBuf,
    },
    Image {
        #[command(flatten)]
        io: In,
        #[arg(long)]
        set: PathBuf,
    },
    Preimage {
        #[command(flatten)]
        io: In,
        #[arg(long)]
        set: PathBuf,
    },
    /// outer ∘ inner
    Compose {
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        inner: PathBuf,
    },
    Sum(Pair),
}

#[derive(Args)]
struct Objective {
    #[arg(long)]
    phi: PathBuf,
    #[arg(long)]
    mfn: PathBuf,
}

#[derive(Subcommand)]
enum FnCmd {
    Eval {
        #[command(flatten)]
        io: In,
        #[arg(long)]
        point: PathBuf,
    },
    Proper(In),
    /// Optimal value function, or its value at --point
    Optval {
        #[command(flatten)]
        obj: Objective,
        #[arg(long)]
        point: Option<PathBuf>,
    },
    /// Solution set at a point
    Argmin {
        #[command(flatten)]
        obj: Objective,
        #[arg(long)]
        point: PathBuf,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// One of roundtrip, projection, compose, sum, optval, relint, ri-graph, linear-image, lp
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of instances (defaults to the acceptance size of the suite)
    #[arg(long)]
    count: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("{0}")]
    Domain(#[from] polyhedral::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Schema(_) => 1,
            CliError::Domain(_) => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

struct Output {
    json: Value,
    text: String,
    code: u8,
}

impl Output {
    fn doc(d: Document) -> Self {
        let text = match &d {
            Document::HRep(p) => p.to_string(),
            Document::VRep(v) => v.to_string(),
            Document::MultiFn(f) => f.to_string(),
            Document::Pcf(f) => f.to_string(),
            Document::RelOpen(r) => r.to_string(),
            Document::Point(x) => point_text(x),
            Document::Matrix(m) => m.to_string(),
        };
        Output { json: d.to_json(), text, code: 0 }
    }

    fn hrep(p: HRep) -> Self {
        Output::doc(Document::HRep(p.canonicalized()))
    }

    fn mfn(f: MultiFn) -> CliResult<Self> {
        let (nx, ny) = (f.nx(), f.ny());
        Ok(Output::doc(Document::MultiFn(MultiFn::new(nx, ny, f.graph().canonicalized())?)))
    }

    fn flag(key: &str, value: bool) -> Self {
        Output { json: json!({ key: value }), text: format!("{key}: {value}"), code: 0 }
    }

    fn value(v: ExtReal) -> Self {
        Output { json: json!({ "value": v.to_string() }), text: format!("value: {v}"), code: 0 }
    }
}

fn point_text(x: &[Rat]) -> String {
    let parts: Vec<String> = x.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn read_doc(path: &Path) -> CliResult<Document> {
    let mut text = String::new();
    let read = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| text = s)
    };
    read.map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{} is not valid JSON: {e}", path.display())))?;
    Ok(Document::from_json(&value)?)
}

fn wrong_kind(path: &Path, want: &str, got: &Document) -> CliError {
    CliError::Usage(format!("{}: expected a {want} document, found {}", path.display(), got.kind()))
}

macro_rules! reader {
    ($name:ident, $variant:ident, $ty:ty, $kind:literal) => {
        fn $name(path: &Path) -> CliResult<$ty> {
            match read_doc(path)? {
                Document::$variant(x) => Ok(x),
                other => Err(wrong_kind(path, $kind, &other)),
            }
        }
    };
}

reader!(read_hrep, HRep, HRep, "hrep");
reader!(read_mfn, MultiFn, MultiFn, "multifn");
reader!(read_pcf, Pcf, PCFunc, "pcf");
reader!(read_point, Point, Vec<Rat>, "point");
reader!(read_matrix, Matrix, Matrix, "matrix");

fn run_poly(cmd: PolyCmd) -> CliResult<Output> {
    Ok(match cmd {
        PolyCmd::Convert(io) => match read_doc(&io.input)? {
            Document::HRep(p) => Output::doc(Document::VRep(poly::h_to_v(&p))),
            Document::VRep(v) => Output::hrep(poly::v_to_h(&v)),
            other => return Err(wrong_kind(&io.input, "hrep or vrep", &other)),
        },
        PolyCmd::Project { io, keep } => {
            let p = read_hrep(&io.input)?;
            Output::hrep(poly::project(&p, &CoordSet::new(keep, p.dim())?)?)
        }
        PolyCmd::Member(sp) => Output::flag("member", poly::member(&read_hrep(&sp.set)?, &read_point(&sp.point)?)?),
        PolyCmd::Empty(io) => Output::flag("empty", poly::is_empty(&read_hrep(&io.input)?)),
        PolyCmd::Relint(io) => Output::doc(Document::RelOpen(relint::relative_interior(&read_hrep(&io.input)?)?)),
        PolyCmd::RiMember(sp) => {
            let (p, x) = (read_hrep(&sp.set)?, read_point(&sp.point)?);
            Output::flag("member", relint::ri_member(&p, &x)?)
        }
        PolyCmd::Affhull(io) => Output::hrep(poly::affine_hull(&read_hrep(&io.input)?)?),
        PolyCmd::Image { io, map } => Output::hrep(poly::linear_image(&read_matrix(&map)?, &read_hrep(&io.input)?)?),
        PolyCmd::SumSets(pair) => Output::hrep(poly::minkowski_sum(&read_hrep(&pair.left)?, &read_hrep(&pair.right)?)?),
    })
}

fn run_mfn(cmd: MfnCmd) -> CliResult<Output> {
    Ok(match cmd {
        MfnCmd::Dom(io) => Output::hrep(mfn::domain(&read_mfn(&io.input)?)?),
        MfnCmd::Rge(io) => Output::hrep(mfn::range(&read_mfn(&io.input)?)?),
        MfnCmd::Inv(io) => Output::mfn(mfn::inverse(&read_mfn(&io.input)?))?,
        MfnCmd::Value { io, point } => Output::hrep(mfn::value(&read_mfn(&io.input)?, &read_point(&point)?)?),
        MfnCmd::Image { io, set } => Output::hrep(mfn::image(&read_mfn(&io.input)?, &read_hrep(&set)?)?),
        MfnCmd::Preimage { io, set } => Output::hrep(mfn::preimage(&read_mfn(&io.input)?, &read_hrep(&set)?)?),
        MfnCmd::Compose { outer, inner } => Output::mfn(mfn::compose(&read_mfn(&outer)?, &read_mfn(&inner)?)?)?,
        MfnCmd::Sum(pair) => Output::mfn(mfn::sum(&read_mfn(&pair.left)?, &read_mfn(&pair.right)?)?)?,
    })
}

fn run_fn(cmd: FnCmd) -> CliResult<Output> {
    Ok(match cmd {
        FnCmd::Eval { io, point } => Output::value(evaluate(&read_pcf(&io.input)?, &read_point(&point)?)?),
        FnCmd::Proper(io) => Output::flag("proper", is_proper(&read_pcf(&io.input)?)),
        FnCmd::Optval { obj, point } => {
            let (phi, f) = (read_pcf(&obj.phi)?, read_mfn(&obj.mfn)?);
            let mu = optimal_value_fn(&phi, &f)?;
            match point {
                Some(p) => Output::value(evaluate(&mu, &read_point(&p)?)?),
                None => Output::doc(Document::Pcf(PCFunc::new(mu.n(), mu.epi().canonicalized())?)),
            }
        }
        FnCmd::Argmin { obj, point } => {
            let (phi, f) = (read_pcf(&obj.phi)?, read_mfn(&obj.mfn)?);
            Output::hrep(solution_map(&phi, &f, &read_point(&point)?)?)
        }
    })
}

/// Exit code of a suite run with at least one disagreeing instance.
const SUITE_FAILED: u8 = 3;

fn run_check(args: CheckArgs) -> CliResult<Output> {
    let suite: Suite = args.suite.parse().map_err(CliError::Usage)?;
    let count = args.count.unwrap_or(suite.default_count());
    let report = run_suite(suite, args.seed, count);
    let failures: Vec<Value> = report
        .failures()
        .map(|i| json!({"index": i.index, "message": i.failure.clone().unwrap_or_default()}))
        .collect();
    let mut text = format!(
        "{} {}: seed {}, {} instances, {} checks",
        if report.passed() { "PASS" } else { "FAIL" },
        suite,
        args.seed,
        count,
        report.total_checks()
    );
    for i in report.failures() {
        text.push_str(&format!("\n  instance {}: {}", i.index, i.failure.as_deref().unwrap_or("")));
    }
    Ok(Output {
        json: json!({
            "suite": suite.name(),
            "seed": args.seed,
            "count": count,
            "checks": report.total_checks(),
            "passed": report.passed(),
            "failures": failures,
        }),
        text,
        code: if report.passed() { 0 } else { SUITE_FAILED },
    })
}

fn run(cli: Cli) -> CliResult<Output> {
    match cli.command {
        Command::Poly(c) => run_poly(c),
        Command::Mfn(c) => run_mfn(c),
        Command::Func(c) => run_fn(c),
        Command::Check(a) => run_check(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(std::env::args_os()) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", out.json),
                Format::Text => println!("{}", out.text.trim_end()),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
