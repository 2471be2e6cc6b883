//! The `magma` command line, as a library so it can be driven in-process.
//!
//! Exit codes: 0 when the property holds / the structure is accepted /
//! nothing was found; 1 when it fails / is rejected / a pattern was found;
//! 2 on usage or input errors.

mod bench;
mod generate;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{field_verify, ring_check, AlgebraError};
use crate::detect::format::{
    kind_of, parse_bitmats, parse_graph, parse_hypergraph, parse_intsets, parse_lists, parse_tripartite, parse_wgraph,
};
use crate::detect::{self, DetectError};
use crate::expr::{classify_identity, parse_identity_any, ExprError, Regime};
use crate::field::FieldConfig;
use crate::reduce::{ReduceError, DEFAULT_WINDOW};
use crate::structure::{load_structure, Structure, StructureError};
use crate::verify::{brute_force_verify, count_distributive_triples, freivalds_distributivity, verify_identity, VerifyError};

pub use bench::{bench, fit_slope, BenchRow, BenchSuite};
pub use generate::{generate, GenerateOptions, Generator};
pub use report::RunReport;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Detect(#[from] DetectError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

const EXIT_CODES: &str = "\
Exit codes:
  0  holds / accept / nothing found (classify, generate, count, bench: success)
  1  fails / reject / pattern found
  2  usage or input error

The seed defaults to $MAGMA_SEED, then 0.";

#[derive(Debug, Parser)]
#[command(name = "magma", version, about = "Verify identities on finite Cayley-table structures", after_help = EXIT_CODES)]
pub struct Cli {
    /// Seed for every randomized step
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Print a JSON run report instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    /// Randomized test for classified identities, exhaustive otherwise
    Auto,
    /// Randomized test only; refuses identities it cannot classify
    Pit,
    /// Exhaustive check over all triples
    Brute,
    /// Freivalds-style check (left distributivity of * over + only)
    Freivalds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DetectKind {
    /// Monochromatic square in the first matrix of a bitmat file
    Square,
    /// Multichromatic square across four matrices
    MultiSquare,
    /// Multichromatic T across four matrices
    T,
    /// k-AP in the first set of an intset file
    Kap,
    /// Multichromatic AP across all sets of an intset file
    MultiKap,
    /// Zero-sum 4-tuple in a lists file
    Foursum,
    /// Triangle in a graph file
    Triangle,
    /// Zero-weight triangle in a wgraph or tripartite file
    ZeroTriangle,
    /// Hyperclique in a hypergraph file
    Hyperclique,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify an identity on a structure
    Verify {
        file: PathBuf,
        #[arg(long)]
        identity: String,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
        #[arg(long, default_value_t = 2)]
        trials: u32,
        /// Prime modulus (default 2^61 - 1)
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Print the regime of an identity
    Classify {
        #[arg(long)]
        identity: String,
    },
    /// Check that (S, +, *) is a field
    CheckField { file: PathBuf },
    /// Check that (S, +, *) is a ring
    CheckRing {
        file: PathBuf,
        /// Also require a multiplicative identity
        #[arg(long)]
        unital: bool,
        #[arg(long, default_value_t = 2)]
        trials: u32,
    },
    /// Run a pattern detector on an instance file
    Detect {
        #[arg(value_enum)]
        kind: DetectKind,
        file: PathBuf,
        /// Progression length for `kap`
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Write random inputs or reduction instances plus manifest.json
    Generate {
        #[arg(value_enum)]
        generator: Generator,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        count: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        trials: usize,
        /// Window factor c for the square and T reductions
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: f64,
        /// Emit only this shift (square and T reductions)
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<i64>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        expr: Option<String>,
    },
    /// Count triples with x*(y+z) = (x*y)+(x*z)
    Count { file: PathBuf },
    /// Time a verification suite on Z_n and fit a log-log slope
    Bench {
        #[arg(long, value_enum)]
        suite: BenchSuite,
        #[arg(long, value_delimiter = ',', default_values_t = [64usize, 128, 256, 512])]
        sizes: Vec<usize>,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let seed = match cli.seed {
        Some(s) => s,
        None => match std::env::var("MAGMA_SEED") {
            Ok(v) => match v.trim().parse() {
                Ok(s) => s,
                Err(_) => {
                    let _ = writeln!(err, "error: MAGMA_SEED=`{v}` is not an unsigned integer");
                    return 2;
                }
            },
            Err(_) => 0,
        },
    };
    let start = Instant::now();
    match execute(&cli.command, seed) {
        Ok((mut report, lines, code)) => {
            report.wall_time_ms = start.elapsed().as_secs_f64() * 1000.0;
            if cli.json {
                let _ = writeln!(out, "{}", report.to_json());
            } else {
                for l in lines {
                    let _ = writeln!(out, "{l}");
                }
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load(path: &Path) -> Result<Structure, CliError> {
    Ok(load_structure(&read(path)?)?)
}

fn triple(w: [u32; 3]) -> String {
    format!("(a, b, c) = ({}, {}, {})", w[0], w[1], w[2])
}

fn verdict_line(r: &RunReport) -> String {
    match r.verdict.as_deref() {
        Some("holds") => format!("holds (error bound {:e})", r.err_bound.unwrap_or(0.0)),
        Some("fails") => match r.witness.as_ref().and_then(|w| serde_json::from_value::<[u32; 3]>(w.clone()).ok()) {
            Some(w) => format!("fails at {}", triple(w)),
            None => "fails".to_string(),
        },
        Some("reject") => format!("reject: {}", r.detail.as_ref().and_then(Value::as_str).unwrap_or("")),
        other => other.unwrap_or("").to_string(),
    }
}

type Outcome = (RunReport, Vec<String>, i32);

fn execute(cmd: &Command, seed: u64) -> Result<Outcome, CliError> {
    match cmd {
        Command::Verify { file, identity, engine, trials, prime } => {
            let s = load(file)?;
            let id = parse_identity_any(identity)?;
            let cfg = FieldConfig { p: prime.unwrap_or(FieldConfig::default().p), trials: *trials, seed };
            let regime = classify_identity(&id).ok();
            let (name, verdict) = match engine {
                Engine::Auto | Engine::Pit if regime.is_some() => ("randomized", verify_identity(&s, &id, &cfg)?),
                Engine::Auto => ("brute-force", brute_force_verify(&s, &id)?),
                Engine::Pit => {
                    return Err(CliError::Usage("subexpression-pair identities have no randomized test; use --engine brute".into()))
                }
                Engine::Brute => ("brute-force", brute_force_verify(&s, &id)?),
                Engine::Freivalds => {
                    if id != parse_identity_any("a*(b+c) = (a*b)+(a*c)")? {
                        return Err(CliError::Usage("the freivalds engine only checks a*(b+c) = (a*b)+(a*c)".into()));
                    }
                    ("freivalds", freivalds_distributivity(&s, &cfg)?)
                }
            };
            let mut r = RunReport::new("verify", seed)
                .param("file", file.display().to_string())
                .param("identity", id.to_string())
                .param("trials", *trials)
                .param("prime", cfg.p)
                .with_verdict(&verdict);
            r.engine = Some(name.into());
            r.regime = regime.map(|g| g.name().to_string());
            let line = verdict_line(&r);
            Ok((r, vec![line], if verdict.holds() { 0 } else { 1 }))
        }
        Command::Classify { identity } => {
            let id = parse_identity_any(identity)?;
            let name = match classify_identity(&id) {
                Ok(g) => g.name(),
                Err(ExprError::SubexpressionPair) => "subexpression-pair",
                Err(e) => return Err(e.into()),
            };
            let mut r = RunReport::new("classify", seed).param("identity", id.to_string());
            r.regime = Some(name.into());
            Ok((r, vec![name.to_string()], 0))
        }
        Command::CheckField { file } => {
            let s = load(file)?;
            let v = field_verify(&s)?;
            let mut r = RunReport::new("check-field", seed).param("file", file.display().to_string()).with_verdict(&v);
            r.engine = Some("exact".into());
            let accept = v.holds();
            let line = if accept { "accept".to_string() } else { verdict_line(&r) };
            Ok((r, vec![line], if accept { 0 } else { 1 }))
        }
        Command::CheckRing { file, unital, trials } => {
            let s = load(file)?;
            let cfg = FieldConfig { trials: *trials, ..FieldConfig::with_seed(seed) };
            let rep = ring_check(&s, &cfg, *unital)?;
            let mut r = RunReport::new("check-ring", seed)
                .param("file", file.display().to_string())
                .param("unital", *unital)
                .param("trials", *trials)
                .with_verdict(&rep.verdict);
            r.engine = Some("randomized".into());
            let accept = rep.verdict.holds();
            let extra = json!({ "unit": rep.unit, "commutative": rep.commutative });
            let lines = if accept {
                let unit = rep.unit.map_or("none".to_string(), |u| u.to_string());
                vec![format!(
                    "accept (unit {unit}, commutative {}, error bound {:e})",
                    rep.commutative,
                    r.err_bound.unwrap_or(0.0)
                )]
            } else {
                vec![verdict_line(&r)]
            };
            if accept {
                r.detail = Some(extra);
            }
            Ok((r, lines, if accept { 0 } else { 1 }))
        }
        Command::Detect { kind, file, k } => {
            let text = read(file)?;
            let found: Option<Value> = match kind {
                DetectKind::Square => {
                    let ms = parse_bitmats(&text)?;
                    let m = ms.first().ok_or_else(|| CliError::Usage("no matrix in file".into()))?;
                    detect::detect_square(m)?.map(|w| json!([w.0, w.1, w.2]))
                }
                DetectKind::MultiSquare => {
                    detect::detect_multichromatic_square(&parse_bitmats(&text)?)?.map(|w| json!([w.0, w.1, w.2]))
                }
                DetectKind::T => detect::detect_multichromatic_t(&parse_bitmats(&text)?)?.map(|w| json!([w.0, w.1, w.2])),
                DetectKind::Kap => {
                    let sets = parse_intsets(&text)?;
                    let a = sets.first().ok_or_else(|| CliError::Usage("no set in file".into()))?;
                    detect::detect_kap(a, *k)?.map(|w| json!([w.0, w.1]))
                }
                DetectKind::MultiKap => detect::detect_multichromatic_kap(&parse_intsets(&text)?)?.map(|w| json!([w.0, w.1])),
                DetectKind::Foursum => detect::detect_foursum(&parse_lists(&text)?)?.map(|w| json!(w)),
                DetectKind::Triangle => detect::detect_triangle(&parse_graph(&text)?).map(|w| json!([w.0, w.1, w.2])),
                DetectKind::ZeroTriangle => {
                    let w = if kind_of(&text) == Some("tripartite") {
                        detect::detect_zero_triangle(&parse_tripartite(&text)?)
                    } else {
                        detect::detect_zero_triangle_graph(&parse_wgraph(&text)?)
                    };
                    w.map(|w| json!([w.0, w.1, w.2]))
                }
                DetectKind::Hyperclique => detect::detect_hyperclique(&parse_hypergraph(&text)?).map(|w| json!(w)),
            };
            let kname = kind.to_possible_value().expect("named").get_name().to_string();
            let mut r = RunReport::new("detect", seed).param("kind", kname).param("file", file.display().to_string());
            if *kind == DetectKind::Kap {
                r = r.param("k", *k);
            }
            r.verdict = Some(if found.is_some() { "found" } else { "none" }.into());
            let line = match &found {
                Some(w) => format!("found {w}"),
                None => "none".to_string(),
            };
            let code = if found.is_some() { 1 } else { 0 };
            r.witness = found;
            Ok((r, vec![line], code))
        }
        Command::Generate { generator, out, input, n, count, density, k, trials, window, delta, family, expr } => {
            let opts = GenerateOptions {
                generator: *generator,
                input: input.clone(),
                out: out.clone(),
                n: *n,
                count: *count,
                density: *density,
                k: *k,
                trials: *trials,
                window: *window,
                delta: *delta,
                family: family.clone(),
                expr: expr.clone(),
            };
            let manifest = generate(&opts, seed)?;
            let files = manifest["files"].as_array().map_or(0, Vec::len);
            let mut r = RunReport::new("generate", seed)
                .param("generator", manifest["generator"].clone())
                .param("out", out.display().to_string());
            r.detail = Some(manifest);
            Ok((r, vec![format!("wrote {files} instance file(s) and manifest.json to {}", out.display())], 0))
        }
        Command::Count { file } => {
            let s = load(file)?;
            let c = count_distributive_triples(&s)?;
            let mut r = RunReport::new("count", seed).param("file", file.display().to_string());
            r.engine = Some("exact".into());
            r.detail = Some(json!({ "distributive_triples": c, "total": (s.n() as u64).pow(3) }));
            Ok((r, vec![c.to_string()], 0))
        }
        Command::Bench { suite, sizes } => {
            let (rows, slope) = bench(*suite, sizes, seed)?;
            let mut r = RunReport::new("bench", seed).param("suite", json!(suite)).param("sizes", json!(sizes));
            r.regime = Some(
                match suite {
                    BenchSuite::Quadratic => Regime::Quadratic,
                    BenchSuite::Matrix | BenchSuite::Freivalds => Regime::Matrix,
                    BenchSuite::Cubic => Regime::Cubic,
                }
                .name()
                .to_string(),
            );
            r.engine = Some(if *suite == BenchSuite::Cubic { "brute-force" } else { "randomized" }.to_string());
            let mut lines = vec![format!("{:>8}  {:>12}  {:>6}  verdict", "n", "ms", "runs")];
            lines.extend(rows.iter().map(|row| format!("{:>8}  {:>12.3}  {:>6}  {}", row.n, row.ms, row.runs, row.verdict)));
            lines.push(match slope {
                Some(s) => format!("log-log slope {s:.3}"),
                None => "log-log slope n/a (need two sizes)".to_string(),
            });
            r.detail = Some(json!({ "rows": rows, "slope": slope }));
            Ok((r, lines, 0))
        }
    }
}
