use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;

use crate::expr::parse_identity_any;
use crate::field::FieldConfig;
use crate::structure::make_zn;
use crate::verify::{brute_force_verify, freivalds_distributivity, verify_identity, Verdict};

use super::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BenchSuite {
    /// Randomized associativity check on (Z_n, +).
    Quadratic,
    /// Randomized distributivity check on (Z_n, +, *).
    Matrix,
    /// Exhaustive associativity check on (Z_n, +).
    Cubic,
    /// Freivalds distributivity check on (Z_n, +, *).
    Freivalds,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    /// Mean wall time of one verification.
    pub ms: f64,
    pub runs: usize,
    pub verdict: String,
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.max(1e-9).ln())).collect();
    let m = logs.len() as f64;
    let (mx, my) = (logs.iter().map(|p| p.0).sum::<f64>() / m, logs.iter().map(|p| p.1).sum::<f64>() / m);
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Times the suite at each size. Runs shorter than 50 ms are repeated and
/// averaged. Returns the rows and the fitted log-log slope.
pub fn bench(suite: BenchSuite, sizes: &[usize], seed: u64) -> Result<(Vec<BenchRow>, Option<f64>), CliError> {
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) || sizes[0] == 0 {
        return Err(CliError::Usage("sizes must be positive and strictly ascending".into()));
    }
    let cfg = FieldConfig::with_seed(seed);
    let assoc = parse_identity_any("(a+b)+c = a+(b+c)")?;
    let dist = parse_identity_any("a*(b+c) = (a*b)+(a*c)")?;
    let mut rows = Vec::new();
    for &n in sizes {
        let s = make_zn(n, matches!(suite, BenchSuite::Matrix | BenchSuite::Freivalds))?;
        let once = || -> Result<Verdict, CliError> {
            Ok(match suite {
                BenchSuite::Quadratic => verify_identity(&s, &assoc, &cfg)?,
                BenchSuite::Matrix => verify_identity(&s, &dist, &cfg)?,
                BenchSuite::Cubic => brute_force_verify(&s, &assoc)?,
                BenchSuite::Freivalds => freivalds_distributivity(&s, &cfg)?,
            })
        };
        let start = Instant::now();
        let verdict = once()?;
        let mut runs = 1;
        while start.elapsed().as_secs_f64() < 0.05 {
            once()?;
            runs += 1;
        }
        let ms = start.elapsed().as_secs_f64() * 1000.0 / runs as f64;
        let verdict = if verdict.holds() { "holds" } else { "fails" }.to_string();
        rows.push(BenchRow { n, ms, runs, verdict });
    }
    let slope = fit_slope(&rows.iter().map(|r| (r.n as f64, r.ms)).collect::<Vec<_>>());
    Ok((rows, slope))
}
