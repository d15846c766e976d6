//! The `gyro` command-line front end.
//!
//! Every command prints one JSON document to stdout (except `plot` without
//! `--out`, which prints the SVG). Exit status is 0 on success, 1 when a
//! property suite fails and 2 on usage or domain errors, which are reported
//! as `{"error": {"code": ..., "message": ...}}`.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::ball::{
    einstein_add, gamma_of_gyrodifference, gamma_signed, AmbientVector, BallPoint, GammaKind,
    Region, SignedGamma,
};
use crate::barycentric::{eval_gyro, solve_gyro, AnchorSet, GyrobarycentricRep};
use crate::context::{SpaceContext, DEFAULT_ABS_TOL, DEFAULT_REL_TOL};
use crate::error::GyroError;
use crate::gyration::GyrationMap;
use crate::gyrovector::{boundary_points, gyrodistance, gyromidpoint, scalar_mul};
use crate::numeric::relative_residual;
use crate::relativity::{
    boost_apply, minkowski_norm_sq, newtonian_resultant, resultant_invariant_mass,
    total_four_momentum, InvariantMass, Particle,
};
use crate::report::AxiomReport;
use crate::suites::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILURE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gyro", version, about = "Einstein gyrovector space calculator")]
pub struct Cli {
    /// Ball radius
    #[arg(long, global = true)]
    pub s: Option<f64>,
    /// Dimension of the ambient space
    #[arg(long, global = true)]
    pub dim: Option<usize>,
    /// Seed for the property suites
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Residual threshold for the property suites
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// JSON input file
    #[arg(long, global = true, value_name = "FILE")]
    pub json: Option<PathBuf>,
    /// Output file (plot)
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Einstein sum u ⊕ v
    Add {
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
    },
    /// Gyration gyr[u,v]w and its matrix
    Gyr {
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<String>,
    },
    /// Scalar multiple r ⊗ v
    Mul {
        #[arg(long, allow_negative_numbers = true)]
        r: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
    },
    /// Gyrodistance ‖⊖a ⊕ b‖
    Dist {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Gyromidpoint of a and b
    Midpoint {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Boundary points of the gyroline through a and b
    Boundary {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Resultant invariant mass of a particle system (--json)
    Commass,
    /// Gyrobarycentric coordinates of a point set (--json)
    Bary {
        #[arg(value_enum)]
        mode: BaryMode,
    },
    /// Run a seeded property suite
    Check {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// Klein-disk SVG of a two-dimensional point set (--json)
    Plot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaryMode {
    Eval,
    Solve,
    Classify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Gyrogroup,
    Gyrovector,
    Motions,
    Covariance,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Gyrogroup => vec![Suite::Gyrogroup],
            SuiteArg::Gyrovector => vec![Suite::Gyrovector],
            SuiteArg::Motions => vec![Suite::Motions],
            SuiteArg::Covariance => vec![Suite::Covariance],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParticleRecord {
    pub m: f64,
    pub v: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParticleSystemFile {
    #[serde(default)]
    pub s: Option<f64>,
    #[serde(default)]
    pub dim: Option<usize>,
    pub particles: Vec<ParticleRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointSetFile {
    #[serde(default)]
    pub s: Option<f64>,
    #[serde(default)]
    pub dim: Option<usize>,
    pub anchors: Vec<Vec<f64>>,
    #[serde(default)]
    pub weights: Option<Vec<f64>>,
    #[serde(default)]
    pub query: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
}

impl CliError {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self::new("usage", message)
    }

    fn to_json(&self) -> Value {
        json!({ "error": { "code": self.code, "message": self.message } })
    }
}

impl From<GyroError> for CliError {
    fn from(e: GyroError) -> Self {
        Self::new(e.code(), e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Result of one command: the document to print and the exit status.
enum Output {
    Json(Value, i32),
    Text(String),
}

/// Parses `args` (program name first) and runs the command with the given
/// gyration implementation, writing to `out`. Returns the exit status.
pub fn run_with<I, T>(args: I, map: &dyn GyrationMap, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("invalid arguments");
                    let first = first.trim_start_matches("error: ").to_string();
                    print_json(out, &CliError::usage(first).to_json());
                    EXIT_ERROR
                }
            };
        }
    };
    match execute(&cli, map) {
        Ok(Output::Json(v, code)) => {
            print_json(out, &v);
            code
        }
        Ok(Output::Text(t)) => {
            let _ = out.write_all(t.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            print_json(out, &e.to_json());
            EXIT_ERROR
        }
    }
}

fn print_json(out: &mut dyn Write, v: &Value) {
    let text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    let _ = writeln!(out, "{text}");
}

fn execute(cli: &Cli, map: &dyn GyrationMap) -> CliResult<Output> {
    match &cli.command {
        Command::Add { u, v } => cmd_add(cli, u, v),
        Command::Gyr { u, v, w } => cmd_gyr(cli, map, u, v, w),
        Command::Mul { r, v } => cmd_mul(cli, *r, v),
        Command::Dist { a, b } => cmd_pair(cli, "dist", a, b),
        Command::Midpoint { a, b } => cmd_pair(cli, "midpoint", a, b),
        Command::Boundary { a, b } => cmd_pair(cli, "boundary", a, b),
        Command::Commass => cmd_commass(cli),
        Command::Bary { mode } => cmd_bary(cli, *mode),
        Command::Check { suite, count } => cmd_check(cli, map, *suite, *count),
        Command::Plot => cmd_plot(cli),
    }
}

fn parse_vector(name: &str, text: &str) -> CliResult<Vec<f64>> {
    text.split(',')
        .map(|c| {
            let c = c.trim();
            match c.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(x),
                _ => Err(CliError::new(
                    "parse",
                    format!("--{name}: {c:?} is not a finite number"),
                )),
            }
        })
        .collect()
}

fn read_json_file(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::new("parse", format!("{}: {e}", path.display())))
}

fn read_typed<T: for<'de> Deserialize<'de>>(cli: &Cli) -> CliResult<T> {
    let path = cli
        .json
        .as_ref()
        .ok_or_else(|| CliError::usage("this command reads its input from --json <FILE>"))?;
    serde_json::from_value(read_json_file(path)?)
        .map_err(|e| CliError::new("parse", format!("{}: {e}", path.display())))
}

/// Inline flags, falling back to fields of the optional `--json` object.
struct Inputs {
    file: Map<String, Value>,
}

impl Inputs {
    fn load(cli: &Cli) -> CliResult<Self> {
        let file = match &cli.json {
            None => Map::new(),
            Some(path) => match read_json_file(path)? {
                Value::Object(m) => m,
                _ => return Err(CliError::new("parse", "JSON input must be an object")),
            },
        };
        Ok(Self { file })
    }

    fn vector(&self, name: &str, flag: &Option<String>) -> CliResult<Vec<f64>> {
        if let Some(text) = flag {
            return parse_vector(name, text);
        }
        match self.file.get(name) {
            Some(v) => serde_json::from_value::<Vec<f64>>(v.clone())
                .map_err(|e| CliError::new("parse", format!("{name}: {e}"))),
            None => Err(CliError::usage(format!("missing --{name}"))),
        }
    }

    fn scalar(&self, name: &str, flag: Option<f64>) -> CliResult<Option<f64>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.file.get(name) {
            Some(v) => v
                .as_f64()
                .map(Some)
                .ok_or_else(|| CliError::new("parse", format!("{name} must be a number"))),
            None => Ok(None),
        }
    }

    fn dim(&self) -> CliResult<Option<usize>> {
        match self.file.get("dim") {
            Some(v) => v
                .as_u64()
                .map(|d| Some(d as usize))
                .ok_or_else(|| CliError::new("parse", "dim must be a nonnegative integer")),
            None => Ok(None),
        }
    }
}

/// Flags take precedence over file fields; the dimension is otherwise
/// inferred from the first vector.
fn context(
    cli: &Cli,
    file_s: Option<f64>,
    file_dim: Option<usize>,
    inferred: Option<usize>,
) -> CliResult<SpaceContext> {
    let s = cli.s.or(file_s).unwrap_or(1.0);
    let dim = cli
        .dim
        .or(file_dim)
        .or(inferred)
        .ok_or_else(|| CliError::usage("cannot infer the dimension; pass --dim"))?;
    let ctx = SpaceContext::new(s, dim)?;
    Ok(match cli.tol {
        Some(t) => ctx.with_tolerances(t, DEFAULT_ABS_TOL.min(t))?,
        None => ctx,
    })
}

fn header(command: &str, ctx: &SpaceContext) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("s".into(), json!(ctx.s()));
    m.insert("dim".into(), json!(ctx.dim()));
    m
}

fn vec_json(v: &nalgebra::DVector<f64>) -> Value {
    json!(v.iter().copied().collect::<Vec<f64>>())
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn gamma_json(g: &SignedGamma) -> Value {
    let kind = match g.kind() {
        GammaKind::Real => "real",
        GammaKind::Infinite => "infinite",
        GammaKind::Imaginary => "imaginary",
    };
    let value = g.real().or_else(|| g.imaginary());
    json!({ "kind": kind, "gamma_sq": finite_or_null(g.gamma_sq()), "abs": value.map_or(Value::Null, finite_or_null) })
}

fn region_name(r: Region) -> &'static str {
    match r {
        Region::Inside => "inside",
        Region::Boundary => "boundary",
        Region::Outside => "outside",
    }
}

fn cmd_add(cli: &Cli, u: &Option<String>, v: &Option<String>) -> CliResult<Output> {
    let inputs = Inputs::load(cli)?;
    let (u, v) = (inputs.vector("u", u)?, inputs.vector("v", v)?);
    let ctx = context(cli, inputs.scalar("s", None)?, inputs.dim()?, Some(u.len()))?;
    let up = ctx.ball_point(u.clone())?;
    let va = ctx.ambient(v.clone())?;
    let sum = einstein_add(&up, &va, &ctx)?;
    let mut m = header("add", &ctx);
    m.insert("u".into(), json!(u));
    m.insert("v".into(), json!(v));
    m.insert("result".into(), vec_json(sum.coords()));
    m.insert("norm".into(), json!(sum.norm()));
    Ok(Output::Json(Value::Object(m), EXIT_OK))
}

fn cmd_gyr(
    cli: &Cli,
    map: &dyn GyrationMap,
    u: &Option<String>,
    v: &Option<String>,
    w: &Option<String>,
) -> CliResult<Output> {
    let inputs = Inputs::load(cli)?;
    let (u, v, w) = (
        inputs.vector("u", u)?,
        inputs.vector("v", v)?,
        inputs.vector("w", w)?,
    );
    let ctx = context(cli, inputs.scalar("s", None)?, inputs.dim()?, Some(u.len()))?;
    let (up, vp) = (ctx.ball_point(u.clone())?, ctx.ball_point(v.clone())?);
    let wa = ctx.ambient(w.clone())?;
    let result = map.gyrate(&up, &vp, &wa, &ctx);
    let matrix = map.matrix(&up, &vp, &ctx);
    let rows: Vec<Vec<f64>> = matrix
        .row_iter()
        .map(|r| r.iter().copied().collect())
        .collect();
    let mut m = header("gyr", &ctx);
    m.insert("u".into(), json!(u));
    m.insert("v".into(), json!(v));
    m.insert("w".into(), json!(w));
    m.insert("result".into(), vec_json(result.coords()));
    m.insert("matrix".into(), json!(rows));
    Ok(Output::Json(Value::Object(m), EXIT_OK))
}

fn cmd_mul(cli: &Cli, r: Option<f64>, v: &Option<String>) -> CliResult<Output> {
    let inputs = Inputs::load(cli)?;
    let r = inputs
        .scalar("r", r)?
        .ok_or_else(|| CliError::usage("missing --r"))?;
    if !r.is_finite() {
        return Err(CliError::new("parse", "--r must be finite"));
    }
    let v = inputs.vector("v", v)?;
    let ctx = context(cli, inputs.scalar("s", None)?, inputs.dim()?, Some(v.len()))?;
    let result = scalar_mul(r, &ctx.ball_point(v.clone())?, &ctx)?;
    let mut m = header("mul", &ctx);
    m.insert("r".into(), json!(r));
    m.insert("v".into(), json!(v));
    m.insert("result".into(), vec_json(result.coords()));
    m.insert("norm".into(), json!(result.norm()));
    Ok(Output::Json(Value::Object(m), EXIT_OK))
}

fn cmd_pair(cli: &Cli, command: &str, a: &Option<String>, b: &Option<String>) -> CliResult<Output> {
    let inputs = Inputs::load(cli)?;
    let (a, b) = (inputs.vector("a", a)?, inputs.vector("b", b)?);
    let ctx = context(cli, inputs.scalar("s", None)?, inputs.dim()?, Some(a.len()))?;
    let (ap, bp) = (ctx.ball_point(a.clone())?, ctx.ball_point(b.clone())?);
    let mut m = header(command, &ctx);
    m.insert("a".into(), json!(a));
    m.insert("b".into(), json!(b));
    match command {
        "dist" => {
            m.insert("result".into(), json!(gyrodistance(&ap, &bp, &ctx)?));
            m.insert(
                "gamma".into(),
                json!(gamma_of_gyrodifference(&ap, &bp, &ctx)),
            );
        }
        "midpoint" => {
            let mid = gyromidpoint(&ap, &bp, &ctx)?;
            m.insert("result".into(), vec_json(mid.coords()));
        }
        _ => {
            let pair = boundary_points(&ap, &bp, &ctx)?;
            m.insert("near_a".into(), vec_json(pair.near_a1.coords()));
            m.insert("near_b".into(), vec_json(pair.near_a2.coords()));
        }
    }
    Ok(Output::Json(Value::Object(m), EXIT_OK))
}

fn cmd_commass(cli: &Cli) -> CliResult<Output> {
    let file: ParticleSystemFile = read_typed(cli)?;
    let inferred = file.particles.first().map(|p| p.v.len());
    let ctx = context(cli, file.s, file.dim, inferred)?;
    let system = file
        .particles
        .iter()
        .map(|p| {
            if !p.m.is_finite() {
                return Err(GyroError::NonFinite);
            }
            Ok(Particle::new(p.m, ctx.ball_point(p.v.clone())?))
        })
        .collect::<Result<Vec<_>, GyroError>>()?;
    let r = resultant_invariant_mass(&system, &ctx)?;
    let newton_input: Vec<(f64, AmbientVector)> =
        system.iter().map(|p| (p.m, p.v.to_ambient())).collect();
    let newton = newtonian_resultant(&newton_input).ok();

    let total = total_four_momentum(&system, &ctx);
    let scale = system
        .iter()
        .map(|p| p.m.abs() * crate::ball::gamma(&p.v, &ctx))
        .sum::<f64>()
        .powi(2);
    let minkowski_residual = (r.m0_sq - minkowski_norm_sq(&total, &ctx)).abs() / scale;
    let rest_frame = match (&r.m0, r.v0.clone().into_ball(&ctx)) {
        (InvariantMass::Real(_), Ok(v0)) => {
            let rest = boost_apply(&-&v0, &total, &ctx);
            finite_or_null(rest.x.norm() / r.gamma_mass.abs())
        }
        _ => Value::Null,
    };
    let m0 = match r.m0 {
        InvariantMass::Real(x) => json!({ "kind": "real", "value": x }),
        InvariantMass::Zero => json!({ "kind": "zero", "value": 0.0 }),
        InvariantMass::Imaginary(x) => json!({ "kind": "imaginary", "value": x }),
    };

    let mut m = header("commass", &ctx);
    m.insert(
        "particles".into(),
        serde_json::to_value(&file.particles).expect("records serialize"),
    );
    m.insert("m0_sq".into(), json!(r.m0_sq));
    m.insert("m0".into(), m0);
    m.insert("gamma_mass".into(), json!(r.gamma_mass));
    m.insert("v0".into(), vec_json(r.v0.coords()));
    m.insert("gamma_v0".into(), gamma_json(&r.gamma_v0));
    m.insert(
        "classification".into(),
        json!(region_name(r.classification)),
    );
    m.insert(
        "newtonian".into(),
        newton.map_or(
            Value::Null,
            |(m0, v0)| json!({ "m0": m0, "v0": vec_json(v0.coords()) }),
        ),
    );
    m.insert("minkowski_residual".into(), json!(minkowski_residual));
    m.insert("rest_frame_momentum_residual".into(), rest_frame);
    Ok(Output::Json(Value::Object(m), EXIT_OK))
}

fn load_point_set(cli: &Cli) -> CliResult<(PointSetFile, SpaceContext)> {
    let file: PointSetFile = read_typed(cli)?;
    let inferred = file
        .anchors
        .first()
        .map(Vec::len)
        .or(file.query.as_ref().map(Vec::len));
    let ctx = context(cli, file.s, file.dim, inferred)?;
    Ok((file, ctx))
}

fn anchors_of(file: &PointSetFile, ctx: &SpaceContext) -> CliResult<AnchorSet> {
    let pts = file
        .anchors
        .iter()
        .map(|a| ctx.ball_point(a.clone()))
        .collect::<Result<Vec<BallPoint>, GyroError>>()?;
    Ok(AnchorSet::new(pts, ctx)?)
}

fn rep_fields(m: &mut Map<String, Value>, rep: &GyrobarycentricRep) {
    m.insert("canonical_weights".into(), json!(rep.weights));
    m.insert("const_sq".into(), json!(rep.const_sq));
    m.insert("classification".into(), json!(region_name(rep.classify())));
}

fn cmd_bary(cli: &Cli, mode: BaryMode) -> CliResult<Output> {
    let (file, ctx) = load_point_set(cli)?;
    let anchors = anchors_of(&file, &ctx)?;
    let mut m = header("bary", &ctx);
    m.insert(
        "mode".into(),
        json!(match mode {
            BaryMode::Eval => "eval",
            BaryMode::Solve => "solve",
            BaryMode::Classify => "classify",
        }),
    );
    m.insert("anchors".into(), json!(file.anchors));
    let query = |file: &PointSetFile| -> CliResult<AmbientVector> {
        let q = file
            .query
            .clone()
            .ok_or_else(|| CliError::usage("the point set has no query point"))?;
        Ok(ctx.ambient(q)?)
    };
    match mode {
        BaryMode::Eval => {
            let w = file
                .weights
                .clone()
                .ok_or_else(|| CliError::usage("the point set has no weights"))?;
            let (p, rep) = eval_gyro(&anchors, &w, &ctx)?;
            m.insert("weights".into(), json!(w));
            m.insert("query".into(), vec_json(p.coords()));
            rep_fields(&mut m, &rep);
        }
        BaryMode::Solve => {
            let q = query(&file)?;
            let rep = solve_gyro(&q, &anchors, &ctx)?;
            let p = rep.point(&ctx)?;
            m.insert("query".into(), vec_json(q.coords()));
            m.insert("weights".into(), json!(rep.weights));
            m.insert(
                "residual".into(),
                json!(relative_residual(p.coords(), q.coords(), ctx.s())),
            );
            rep_fields(&mut m, &rep);
        }
        BaryMode::Classify => {
            let (p, rep) = match &file.weights {
                Some(w) => {
                    m.insert("weights".into(), json!(w));
                    eval_gyro(&anchors, w, &ctx)?
                }
                None => {
                    let q = query(&file)?;
                    let rep = solve_gyro(&q, &anchors, &ctx)?;
                    (q, rep)
                }
            };
            m.insert("query".into(), vec_json(p.coords()));
            rep_fields(&mut m, &rep);
            let direct = match gamma_signed(&p, &ctx).kind() {
                GammaKind::Real => Region::Inside,
                GammaKind::Infinite => Region::Boundary,
                GammaKind::Imaginary => Region::Outside,
            };
            m.insert("norm_classification".into(), json!(region_name(direct)));
        }
    }
    Ok(Output::Json(Value::Object(m), EXIT_OK))
}

fn report_json(suite: Suite, report: &AxiomReport, tol: f64) -> Value {
    let laws: Vec<Value> = report
        .laws
        .iter()
        .map(|l| {
            json!({
                "law": l.law,
                "max_residual": finite_or_null(l.max_residual),
                "samples": l.samples,
                "passed": l.max_residual < tol,
            })
        })
        .collect();
    json!({ "suite": suite.name(), "passed": report.passes(tol), "laws": laws })
}

fn cmd_check(cli: &Cli, map: &dyn GyrationMap, suite: SuiteArg, count: usize) -> CliResult<Output> {
    let ctx = context(cli, None, None, Some(3))?;
    let tol = cli.tol.unwrap_or(DEFAULT_REL_TOL);
    let mut passed = true;
    let mut suites = Vec::new();
    for s in suite.suites() {
        let report = run_suite(s, map, &ctx, cli.seed, count);
        passed &= report.passes(tol);
        suites.push(report_json(s, &report, tol));
    }
    let mut m = header("check", &ctx);
    m.insert("seed".into(), json!(cli.seed));
    m.insert("count".into(), json!(count));
    m.insert("tol".into(), json!(tol));
    m.insert("suites".into(), json!(suites));
    m.insert("passed".into(), json!(passed));
    Ok(Output::Json(
        Value::Object(m),
        if passed { EXIT_OK } else { EXIT_SUITE_FAILURE },
    ))
}

fn cmd_plot(cli: &Cli) -> CliResult<Output> {
    let file: PointSetFile = read_typed(cli)?;
    let inferred = file.anchors.first().map(Vec::len).or(Some(2));
    let ctx = context(cli, file.s, file.dim, inferred)?;
    if ctx.dim() != 2 {
        return Err(GyroError::DimensionMismatch {
            expected: 2,
            found: ctx.dim(),
        }
        .into());
    }
    let anchors = file
        .anchors
        .iter()
        .map(|a| ctx.ball_point(a.clone()))
        .collect::<Result<Vec<_>, GyroError>>()?;
    let query = match &file.query {
        Some(q) => Some(ctx.ambient(q.clone())?),
        None => None,
    };
    let plot = render_klein_svg(&anchors, query.as_ref(), &ctx)?;
    match &cli.out {
        None => Ok(Output::Text(plot.svg)),
        Some(path) => {
            fs::write(path, &plot.svg)
                .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
            let mut m = header("plot", &ctx);
            m.insert("out".into(), json!(path.display().to_string()));
            m.insert("anchors".into(), json!(file.anchors));
            m.insert("gyrolines".into(), json!(plot.gyrolines));
            Ok(Output::Json(Value::Object(m), EXIT_OK))
        }
    }
}

pub struct KleinPlot {
    pub svg: String,
    pub gyrolines: usize,
}

/// Fixed-precision coordinate with negative zero folded to zero.
fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// Unit disk for the boundary sphere, a chord per anchor pair running
/// between its two boundary points, gyromidpoints, anchors and the query.
pub fn render_klein_svg(
    anchors: &[BallPoint],
    query: Option<&AmbientVector>,
    ctx: &SpaceContext,
) -> crate::Result<KleinPlot> {
    let s = ctx.s();
    let xy = |v: &nalgebra::DVector<f64>| (num(v[0] / s), num(-v[1] / s));
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="480" height="480" viewBox="-1.1 -1.1 2.2 2.2">"#
    );
    let _ = writeln!(
        svg,
        r#"<circle class="boundary" cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.006"/>"#
    );
    let mut gyrolines = 0;
    for i in 0..anchors.len() {
        for j in i + 1..anchors.len() {
            let pair = match boundary_points(&anchors[i], &anchors[j], ctx) {
                Ok(p) => p,
                Err(GyroError::CoincidentPoints) => continue,
                Err(e) => return Err(e),
            };
            gyrolines += 1;
            let (x1, y1) = xy(pair.near_a1.coords());
            let (x2, y2) = xy(pair.near_a2.coords());
            let _ = writeln!(
                svg,
                r##"<line class="gyroline" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#4a6fa5" stroke-width="0.006"/>"##
            );
            for (x, y) in [(x1, y1), (x2, y2)] {
                let _ = writeln!(
                    svg,
                    r##"<circle class="boundary-point" cx="{x}" cy="{y}" r="0.018" fill="white" stroke="#4a6fa5" stroke-width="0.006"/>"##
                );
            }
            let mid = gyromidpoint(&anchors[i], &anchors[j], ctx)?;
            let (mx, my) = xy(mid.coords());
            let _ = writeln!(
                svg,
                r##"<circle class="midpoint" cx="{mx}" cy="{my}" r="0.014" fill="#c0392b"/>"##
            );
        }
    }
    for (k, a) in anchors.iter().enumerate() {
        let (x, y) = xy(a.coords());
        let _ = writeln!(
            svg,
            r#"<circle class="anchor" cx="{x}" cy="{y}" r="0.02" fill="black"/>"#
        );
        let (lx, ly) = (
            num(a.coords()[0] / s + 0.03),
            num(-a.coords()[1] / s - 0.03),
        );
        let _ = writeln!(
            svg,
            r#"<text x="{lx}" y="{ly}" font-size="0.07" font-family="sans-serif">A{}</text>"#,
            k + 1
        );
    }
    if let Some(q) = query {
        let (x, y) = xy(q.coords());
        let _ = writeln!(
            svg,
            r##"<circle class="query" cx="{x}" cy="{y}" r="0.02" fill="#27ae60"/>"##
        );
        let (lx, ly) = (
            num(q.coords()[0] / s + 0.03),
            num(-q.coords()[1] / s - 0.03),
        );
        let _ = writeln!(
            svg,
            r#"<text x="{lx}" y="{ly}" font-size="0.07" font-family="sans-serif">P</text>"#
        );
    }
    svg.push_str("</svg>\n");
    Ok(KleinPlot { svg, gyrolines })
}
