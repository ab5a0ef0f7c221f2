use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::json;

use malcev_core::enveloping::{default_degree, EnvError};
use malcev_core::fixtures::{self, FixtureError};
use malcev_core::loops::DEFAULT_SEED;
use malcev_core::malcev::{AlgebraJson, MalcevAlgebra, MalcevError, PlusMode};
use malcev_core::report::{Status, VerificationReport};
use malcev_core::smash::{SmashAlgebra, SmashError};
use malcev_core::suite::{self, SmashTarget, SuiteError};

mod loops;

#[derive(Parser)]
#[command(name = "malcev", version)]
#[command(about = "Exact checks for Malcev algebras, their envelopes, smash products and Moufang loops")]
struct Cli {
    /// Also write the JSON report to this file
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,

    /// Seed for sampled sweeps on large loops
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Malcev identity, D-maps and relative representations
    Malcev {
        #[command(subcommand)]
        cmd: MalcevCmd,
    },
    /// Concrete models of Lie(m)+ and Lie(m)
    Lie {
        #[command(subcommand)]
        cmd: LieCmd,
    },
    /// The truncated nonassociative envelope U(m)
    Envelope {
        #[command(subcommand)]
        cmd: EnvelopeCmd,
    },
    /// Smash products k[V] ⊗ U(m)
    Smash {
        #[command(subcommand)]
        cmd: SmashCmd,
    },
    /// Finite loops and loop extensions
    Loop {
        #[command(subcommand)]
        cmd: loops::LoopCmd,
    },
    /// Run a named bundle of checks
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct AlgArgs {
    /// Named algebra: sl2, so3, o0, abelianN, non-malcev-3d
    #[arg(long, default_value = "sl2")]
    algebra: String,

    /// Structure constants as JSON (overrides --algebra)
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum MalcevCmd {
    /// Check the Malcev identity on all basis tuples
    Check(AlgArgs),
    /// D_{a,b} is a derivation and satisfies the D-D relation
    Dmap(AlgArgs),
    /// Check a named relative representation
    RepCheck {
        #[command(flatten)]
        alg: AlgArgs,
        /// adjoint, m2, m2-matrix, natural, natural-trivial
        #[arg(long, default_value = "adjoint")]
        module: String,
    },
}

#[derive(Subcommand)]
enum LieCmd {
    BuildPlus {
        #[command(flatten)]
        alg: AlgArgs,
        /// semisimple-lie or multiplication-algebra; chosen from the algebra if omitted
        #[arg(long)]
        mode: Option<String>,
    },
    BuildEnvelope {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long)]
        mode: Option<String>,
    },
}

#[derive(Subcommand)]
enum EnvelopeCmd {
    Build {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, alias = "max-deg")]
        degree: Option<usize>,
    },
    Verify(VerifyArgs),
    /// Print r(z,w) and s(z,w) for two PBW monomials such as `e*h`
    Rs {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, alias = "max-deg")]
        degree: Option<usize>,
        #[arg(long, default_value = "1")]
        z: String,
        #[arg(long, default_value = "1")]
        w: String,
    },
}

#[derive(Args, Clone)]
struct SmashArgs {
    #[command(flatten)]
    alg: AlgArgs,
    #[arg(long, default_value = "adjoint")]
    module: String,
    #[arg(long)]
    deg_env: Option<usize>,
    #[arg(long, default_value_t = 2)]
    deg_v: usize,
}

#[derive(Subcommand)]
enum SmashCmd {
    Build(SmashArgs),
    /// nalt, comma, product-paths, fiber or all
    Verify {
        check: String,
        #[command(flatten)]
        args: SmashArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    All,
    Malcev,
    Dmap,
    Plus,
    Lie,
    Engine,
    MoufangHopf,
    Nalt,
    Rs,
    Classification,
    Smash,
    Loops,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    #[command(flatten)]
    alg: AlgArgs,
    /// Envelope degree budget
    #[arg(long, alias = "max-deg")]
    degree: Option<usize>,
    #[arg(long, default_value = "adjoint")]
    module: String,
    /// Loop fixture for `verify loops`
    #[arg(long = "loop", default_value = "s3-sign-f3")]
    loop_name: String,
}

/// Why a command stopped before producing a verdict.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Json(String),
    Budget(String),
    Error(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Error(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Json(_) => 3,
            Failure::Budget(_) => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Error(_) => "error",
            Failure::Usage(_) => "usage",
            Failure::Json(_) => "malformed-json",
            Failure::Budget(_) => "budget",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Json(m) | Failure::Budget(m) | Failure::Error(m) => m,
        }
    }
}

impl From<SuiteError> for Failure {
    fn from(e: SuiteError) -> Self {
        let msg = e.to_string();
        if e.is_budget() {
            return Failure::Budget(msg);
        }
        match e {
            SuiteError::Fixture(FixtureError::Unknown { .. } | FixtureError::NeedsSl2 { .. }) => Failure::Usage(msg),
            SuiteError::Malcev(MalcevError::Json(_)) | SuiteError::Fixture(FixtureError::Malcev(MalcevError::Json(_))) => {
                Failure::Json(msg)
            }
            SuiteError::Malcev(MalcevError::ModeMismatch(_)) => Failure::Usage(msg),
            _ => Failure::Error(msg),
        }
    }
}

macro_rules! impl_from_via_suite {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                SuiteError::from(e).into()
            }
        }
    )*};
}
impl_from_via_suite!(FixtureError, MalcevError, EnvError, SmashError, malcev_core::loops::LoopError);

type Run = Result<(), Failure>;

pub(crate) fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Json(format!("{}: {e}", path.display())))
}

pub(crate) fn write_json(path: &Path, value: &impl serde::Serialize) -> Run {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    fs::write(path, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Named or file-supplied algebra; `check` rejects non-Malcev input.
fn load_algebra(rep: &mut VerificationReport, a: &AlgArgs, check: bool) -> Result<Arc<MalcevAlgebra>, Failure> {
    match &a.file {
        Some(path) => {
            let j: AlgebraJson = read_json(path)?;
            rep.fixture("algebra", path.display().to_string());
            Ok(Arc::new(j.to_algebra(check).map_err(|e| match e {
                MalcevError::Json(m) => Failure::Json(m),
                e => Failure::Error(e.to_string()),
            })?))
        }
        None => {
            rep.fixture("algebra", &a.algebra);
            Ok(fixtures::algebra(&a.algebra)?)
        }
    }
}

fn mode_of(alg: &MalcevAlgebra, mode: &Option<String>) -> Result<PlusMode, Failure> {
    match mode {
        Some(m) => m.parse().map_err(|e: MalcevError| Failure::Usage(e.to_string())),
        None => Ok(fixtures::plus_mode(alg)),
    }
}

fn run_malcev(rep: &mut VerificationReport, cmd: MalcevCmd) -> Run {
    match cmd {
        MalcevCmd::Check(a) => {
            let alg = load_algebra(rep, &a, false)?;
            suite::malcev(rep, &alg);
        }
        MalcevCmd::Dmap(a) => {
            let alg = load_algebra(rep, &a, true)?;
            suite::dmap(rep, &alg);
        }
        MalcevCmd::RepCheck { alg, module } => {
            let alg = load_algebra(rep, &alg, true)?;
            rep.fixture("module", &module);
            suite::rep_check(rep, &fixtures::module(&alg, &module)?);
        }
    }
    Ok(())
}

fn run_lie(rep: &mut VerificationReport, cmd: LieCmd) -> Run {
    let (a, mode, envelope) = match cmd {
        LieCmd::BuildPlus { alg, mode } => (alg, mode, false),
        LieCmd::BuildEnvelope { alg, mode } => (alg, mode, true),
    };
    let alg = load_algebra(rep, &a, true)?;
    let p = suite::plus(rep, &alg, mode_of(&alg, &mode)?)?;
    if envelope {
        suite::lie(rep, p)?;
    }
    Ok(())
}

fn degree_for(rep: &mut VerificationReport, a: &AlgArgs, degree: Option<usize>) -> usize {
    let d = degree.unwrap_or_else(|| default_degree(&a.algebra));
    rep.truncate("degree", d);
    d
}

fn run_envelope(rep: &mut VerificationReport, cmd: EnvelopeCmd, seed: u64) -> Run {
    match cmd {
        EnvelopeCmd::Build { alg: a, degree } => {
            let alg = load_algebra(rep, &a, true)?;
            let env = suite::envelope(&alg, degree_for(rep, &a, degree))?;
            rep.fact("envelope", env.summary());
            rep.extend([env.unit_check(), env.ordered_product_check()]);
        }
        EnvelopeCmd::Verify(v) => run_verify(rep, v, seed)?,
        EnvelopeCmd::Rs { alg: a, degree, z, w } => {
            let alg = load_algebra(rep, &a, true)?;
            let env = suite::envelope(&alg, degree_for(rep, &a, degree))?;
            let (zm, wm) = (env.parse_monomial(&z)?, env.parse_monomial(&w)?);
            let (r, s) = env.rs_mono(&zm, &wm)?;
            let u = env.ulie();
            rep.fact("z", &z).fact("w", &w).fact("r", env.render_op(&r)).fact("s", env.render_op(&s));
            let plus_only = |name: &str, op| {
                malcev_core::report::IdentityRecord::single(
                    name,
                    &format!("{name}(z,w) ∈ U(Lie(m)+)"),
                    (!u.is_plus_only(op)).then(|| format!("z={z} w={w}")),
                )
            };
            rep.extend([plus_only("r", &r), plus_only("s", &s)]);
        }
    }
    Ok(())
}

fn build_smash(rep: &mut VerificationReport, s: &SmashArgs) -> Result<SmashAlgebra, Failure> {
    let alg = load_algebra(rep, &s.alg, true)?;
    let deg_env = s.deg_env.unwrap_or_else(|| fixtures::smash_degree(&s.alg.algebra));
    rep.fixture("module", &s.module).truncate("deg_env", deg_env).truncate("deg_v", s.deg_v);
    let module = fixtures::module(&alg, &s.module)?;
    suite::rep_check(rep, &module);
    Ok(SmashAlgebra::build(suite::envelope(&alg, deg_env)?, &module, s.deg_v)?)
}

fn run_smash(rep: &mut VerificationReport, cmd: SmashCmd) -> Run {
    match cmd {
        SmashCmd::Build(s) => {
            let a = build_smash(rep, &s)?;
            rep.fact("smash", a.summary());
        }
        SmashCmd::Verify { check, args } => {
            let target: SmashTarget = check.parse().map_err(Failure::Usage)?;
            let a = build_smash(rep, &args)?;
            suite::smash(rep, &a, target);
        }
    }
    Ok(())
}

fn run_verify(rep: &mut VerificationReport, v: VerifyArgs, seed: u64) -> Run {
    let a = &v.alg;
    if let Target::All = v.target {
        if a.file.is_some() {
            return Err(Failure::Usage("`verify all` runs on named algebras only".into()));
        }
        return Ok(suite::all(rep, &a.algebra, seed)?);
    }
    if let Target::Loops = v.target {
        rep.fixture("loop", &v.loop_name);
        let (g, vr, wr, e) = fixtures::smith_loop(&v.loop_name)?;
        return Ok(suite::loop_lab(rep, &g, &vr, &wr, &e, seed)?);
    }
    let alg = load_algebra(rep, a, true)?;
    match v.target {
        Target::Malcev => suite::malcev(rep, &alg),
        Target::Dmap => suite::dmap(rep, &alg),
        Target::Plus => {
            suite::plus(rep, &alg, fixtures::plus_mode(&alg))?;
        }
        Target::Lie => {
            let p = suite::plus(rep, &alg, fixtures::plus_mode(&alg))?;
            suite::lie(rep, p)?;
        }
        Target::Classification => suite::classification(rep, &alg)?,
        Target::Smash => {
            let s = SmashArgs { alg: a.clone(), module: v.module.clone(), deg_env: v.degree, deg_v: 2 };
            let sm = build_smash(rep, &s)?;
            suite::smash(rep, &sm, SmashTarget::All);
        }
        Target::Engine | Target::MoufangHopf | Target::Nalt | Target::Rs => {
            let d = degree_for(rep, a, v.degree);
            let env = suite::envelope(&alg, d)?;
            match v.target {
                Target::Engine => suite::engine(rep, &env)?,
                Target::MoufangHopf => {
                    suite::moufang_hopf(rep, &env, d);
                    suite::nalt(rep, &env);
                }
                Target::Nalt => suite::nalt(rep, &env),
                _ => {
                    let total = d.saturating_sub(1);
                    rep.truncate("rs_total_degree", total);
                    suite::rs(rep, &env, total);
                }
            }
        }
        Target::All | Target::Loops => unreachable!(),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut rep = VerificationReport::new(args);
    let start = Instant::now();
    let outcome = match cli.command {
        Command::Malcev { cmd } => run_malcev(&mut rep, cmd),
        Command::Lie { cmd } => run_lie(&mut rep, cmd),
        Command::Envelope { cmd } => run_envelope(&mut rep, cmd, cli.seed),
        Command::Smash { cmd } => run_smash(&mut rep, cmd),
        Command::Loop { cmd } => loops::run(&mut rep, cmd, cli.seed),
        Command::Verify(v) => run_verify(&mut rep, v, cli.seed),
    };
    rep.finish(start.elapsed());
    let (value, code) = match outcome {
        Ok(()) => {
            let code = if rep.status == Status::Pass { 0 } else { 1 };
            (serde_json::to_value(&rep).expect("serializable"), code)
        }
        Err(f) => {
            eprintln!("malcev: {}", f.message());
            let v = json!({
                "command": rep.command,
                "status": "error",
                "error": { "kind": f.kind(), "message": f.message() },
            });
            (v, f.code())
        }
    };
    // a closed pipe downstream is not our failure
    let _ = writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(&value).expect("serializable"));
    if let Some(path) = &cli.json_out {
        if let Err(f) = write_json(path, &value) {
            eprintln!("malcev: {}", f.message());
            return ExitCode::from(f.code());
        }
    }
    for r in rep.failures() {
        eprintln!("FAIL {}: {} ({} of {})", r.identity, r.failures.join("; "), r.failure_count, r.instances_checked);
    }
    ExitCode::from(code)
}
