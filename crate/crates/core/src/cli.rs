//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or the
//! computation cannot be completed, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::duality::{duality_grid, Duality};
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::noumi::check_daha_relations;
use crate::paramfield::{Assignment, FieldElement, NPARAMS, PARAM_NAMES};
use crate::polynomials::{Koornwinder, LabeledPolynomial};
use crate::scalar::{parse_rational, Params, Scalar};

/// Environment variable naming the default on-disk cache directory.
pub const CACHE_ENV: &str = "KOORNWINDER_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "koornwinder",
    version,
    about = "Exact computation of nonsymmetric and symmetric Koornwinder polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Nonsymmetric polynomial E_α.
    ComputeE {
        /// Rank.
        #[arg(long)]
        n: usize,
        /// Comma-separated exponent vector.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[command(flatten)]
        common: Common,
    },
    /// Symmetric polynomial P_λ.
    ComputeP {
        /// Rank.
        #[arg(long)]
        n: usize,
        /// Comma-separated partition.
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        common: Common,
    },
    /// Rank of {E_α : |α| ≤ k} against the monomials of the same degree.
    BasisCheck {
        /// Rank.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Defining relations of the algebra on all monomials of degree at most k.
    CheckRelations {
        /// Rank.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Pairing symmetries and evaluation duality for labels of weight at most k.
    CheckDuality {
        /// Rank.
        #[arg(long)]
        n: usize,
        #[arg(long = "max-weight")]
        max_weight: u32,
        /// Shorthand for --mode symbolic.
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Specializes a symbolic polynomial JSON file ("-" for stdin).
    Specialize {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Symbolic,
    Specialized,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, value_enum, default_value = "specialized")]
    mode: Mode,
    /// Six comma-separated rationals: the square roots of q, t, t0, tn, u0, un.
    #[arg(long, allow_hyphen_values = true)]
    assignment: Option<String>,
    /// Seed for drawing an assignment when none is given.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    output: OutputFormat,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    #[arg(long, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
}

/// Resolved settings for one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: usize,
    pub mode: Mode,
    pub assignment: Option<Assignment>,
    pub seed: Option<u64>,
    pub output: OutputFormat,
    pub cache_dir: Option<PathBuf>,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn parse_csv(s: &str) -> Result<Vec<i32>> {
    s.split(',').map(|x| x.trim().parse::<i32>().map_err(|_| usage(format!("bad integer {x:?} in {s:?}")))).collect()
}

fn parse_assignment(s: &str) -> Result<Assignment> {
    let vals: Vec<BigRational> = s.split(',').map(|x| parse_rational(x.trim())).collect::<Result<_>>()?;
    let arr: [BigRational; NPARAMS] = vals.try_into().map_err(|_| usage("an assignment has exactly six values"))?;
    Assignment::new(arr)
}

/// Six positive rationals with numerators and denominators in `1..=60`,
/// excluding 1 itself.
pub fn draw_assignment(seed: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vals = std::array::from_fn(|_| loop {
        let r = BigRational::new(rng.gen_range(1..=60i64).into(), rng.gen_range(1..=60i64).into());
        if r != BigRational::from_integer(1.into()) {
            break r;
        }
    });
    Assignment::new(vals).expect("drawn values are nonzero")
}

fn next_seed(seed: u64) -> u64 {
    seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407)
}

fn is_unlucky(e: &Error) -> bool {
    matches!(e, Error::UnluckySpecialization(_) | Error::NonGeneric(_) | Error::DivisionByZero)
}

fn assignment_json(a: &Assignment) -> Value {
    Value::Object(PARAM_NAMES.iter().zip(a.0.iter()).map(|(k, v)| (format!("sqrt_{k}"), Scalar::to_json(v))).collect())
}

/// Outcome of a subcommand: the report and whether every check passed.
struct Outcome {
    report: Value,
    passed: bool,
}

struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    fn key(kind: &str, n: usize, label: &[i32], mode: Mode, assignment: Option<&Assignment>) -> String {
        let a: Vec<String> = assignment.map(|a| a.0.iter().map(|v| v.to_string()).collect()).unwrap_or_default();
        let material = json!({"kind": kind, "n": n, "label": label, "mode": format!("{mode:?}"), "assignment": a});
        hex::encode(Sha256::digest(material.to_string().as_bytes()))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    fn load<F: Scalar>(&self, key: &str) -> Option<LabeledPolynomial<F>> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        LabeledPolynomial::from_json(&serde_json::from_str(&text).ok()?).ok()
    }

    fn store<F: Scalar>(&self, key: &str, p: &LabeledPolynomial<F>) -> Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!("{key}.tmp"));
        std::fs::write(&tmp, p.to_json().to_string())?;
        std::fs::rename(tmp, self.path(key))?;
        Ok(())
    }
}

fn cached<F: Scalar>(
    cfg: &RunConfig,
    assignment: Option<&Assignment>,
    kind: &str,
    label: &[i32],
    compute: impl FnOnce() -> Result<LabeledPolynomial<F>>,
) -> Result<LabeledPolynomial<F>> {
    let Some(dir) = &cfg.cache_dir else { return compute() };
    let cache = DiskCache { dir: dir.clone() };
    let key = DiskCache::key(kind, cfg.n, label, cfg.mode, assignment);
    if let Some(p) = cache.load::<F>(&key) {
        if p.label == label {
            return Ok(p);
        }
    }
    let p = compute()?;
    cache.store(&key, &p)?;
    Ok(p)
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 {
        Err(usage("--n must be at least 1"))
    } else {
        Ok(())
    }
}

fn check_label(n: usize, v: &[i32], what: &str) -> Result<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(usage(format!("{what} needs {n} entries, got {}", v.len())))
    }
}

fn execute<F: Scalar>(cmd: &Command, cfg: &RunConfig, params: Params<F>) -> Result<Outcome> {
    let assignment = params.assignment().cloned();
    let n = cfg.n;
    match cmd {
        Command::ComputeE { alpha, .. } => {
            let alpha = parse_csv(alpha)?;
            check_label(n, &alpha, "--alpha")?;
            let fam = Koornwinder::new(params, n);
            let e = cached(cfg, assignment.as_ref(), "E", &alpha, || fam.compute_e(&alpha))?;
            Ok(Outcome { report: e.to_json(), passed: true })
        }
        Command::ComputeP { lambda, .. } => {
            let lambda = parse_csv(lambda)?;
            check_label(n, &lambda, "--lambda")?;
            if !crate::weyl::is_partition(&lambda) {
                return Err(usage(format!("{lambda:?} is not a partition")));
            }
            let fam = Koornwinder::new(params, n);
            let p = cached(cfg, assignment.as_ref(), "P", &lambda, || fam.compute_p(&lambda))?;
            Ok(Outcome { report: p.to_json(), passed: true })
        }
        Command::BasisCheck { degree, .. } => {
            let fam = Koornwinder::new(params, n);
            let r = fam.basis_check(*degree)?;
            Ok(Outcome { report: json!({"n": n, "degree": degree, "basis": r.to_json()}), passed: r.invertible() })
        }
        Command::CheckRelations { degree, .. } => {
            let r = check_daha_relations(&params, n, *degree)?;
            Ok(Outcome { report: json!({"n": n, "degree": degree, "relations": r.to_json()}), passed: r.all_passed() })
        }
        Command::CheckDuality { max_weight, .. } => {
            let d = Duality::new(params, n);
            let r = duality_grid(&d, *max_weight)?;
            Ok(Outcome {
                report: json!({"n": n, "max_weight": max_weight, "checks": r.to_json()}),
                passed: r.all_passed(),
            })
        }
        Command::Specialize { input, .. } => {
            let text = if input == Path::new("-") {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(input)?
            };
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let sym = LaurentPolynomial::<FieldElement>::from_json(&v)?;
            let a = params.assignment().ok_or_else(|| usage("specialize needs specialized mode"))?.clone();
            let mut out = LaurentPolynomial::<BigRational>::zero(sym.nvars());
            for (e, c) in sym.terms() {
                out.add_term(e.clone(), &c.specialize(&a)?);
            }
            let mut report = out.to_json();
            if let Some(label) = v.get("label") {
                report["label"] = label.clone();
            }
            Ok(Outcome { report, passed: true })
        }
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::ComputeE { common, .. }
        | Command::ComputeP { common, .. }
        | Command::BasisCheck { common, .. }
        | Command::CheckRelations { common, .. }
        | Command::CheckDuality { common, .. }
        | Command::Specialize { common, .. } => common,
    }
}

fn rank_of(cmd: &Command) -> usize {
    match cmd {
        Command::ComputeE { n, .. }
        | Command::ComputeP { n, .. }
        | Command::BasisCheck { n, .. }
        | Command::CheckRelations { n, .. }
        | Command::CheckDuality { n, .. } => *n,
        Command::Specialize { .. } => 1,
    }
}

fn resolve(cmd: &Command) -> Result<RunConfig> {
    let c = common(cmd);
    let mut mode = c.mode;
    if let Command::CheckDuality { symbolic: true, .. } = cmd {
        mode = Mode::Symbolic;
    }
    if let Command::Specialize { .. } = cmd {
        mode = Mode::Specialized;
    }
    let output = if c.text {
        OutputFormat::Text
    } else if c.json {
        OutputFormat::Json
    } else {
        c.output
    };
    let n = rank_of(cmd);
    check_rank(n)?;
    Ok(RunConfig {
        n,
        mode,
        assignment: c.assignment.as_deref().map(parse_assignment).transpose()?,
        seed: c.seed,
        output,
        cache_dir: c.cache_dir.clone(),
    })
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Outcome> {
    let mut out = match cfg.mode {
        Mode::Symbolic => execute(cmd, cfg, Params::symbolic())?,
        Mode::Specialized => {
            let (first, explicit) = match (&cfg.assignment, cfg.seed) {
                (Some(a), _) => (a.clone(), true),
                (None, Some(s)) => (draw_assignment(s), false),
                (None, None) => (Assignment::primes(), false),
            };
            let attempt = |a: &Assignment| -> Result<(Outcome, Assignment)> {
                let mut c = cfg.clone();
                c.assignment = Some(a.clone());
                Ok((execute(cmd, &c, Params::specialized(a)?)?, a.clone()))
            };
            let (mut out, used) = match attempt(&first) {
                Err(e) if is_unlucky(&e) && !explicit => attempt(&draw_assignment(next_seed(cfg.seed.unwrap_or(0))))?,
                r => r?,
            };
            out.report["assignment"] = assignment_json(&used);
            out
        }
    };
    out.report["mode"] = json!(match cfg.mode {
        Mode::Symbolic => "symbolic",
        Mode::Specialized => "specialized",
    });
    out.report["n"] = json!(cfg.n);
    out.report["status"] = json!(if out.passed { "pass" } else { "fail" });
    Ok(out)
}

/// Plain-text rendering of a JSON report: one `path: value` line per leaf.
pub fn render_text(v: &Value) -> String {
    fn walk(v: &Value, path: &str, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                    walk(x, &p, out);
                }
            }
            Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
                for (i, x) in a.iter().enumerate() {
                    walk(x, &format!("{path}[{i}]"), out);
                }
            }
            _ => {
                out.push_str(path);
                out.push_str(": ");
                out.push_str(&v.to_string());
                out.push('\n');
            }
        }
    }
    let mut out = String::new();
    walk(v, "", &mut out);
    out
}

/// Parses `argv` (program name first), runs the subcommand, writes the report
/// to `out` and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let cfg = match resolve(&cli.command) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    match dispatch(&cli.command, &cfg) {
        Ok(o) => {
            let text = match cfg.output {
                OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&o.report).expect("serializable")),
                OutputFormat::Text => render_text(&o.report),
            };
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            if o.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvalidArgument(_) | Error::Parse(_) | Error::RankTooLarge(_) => 2,
                _ => 1,
            }
        }
    }
}
