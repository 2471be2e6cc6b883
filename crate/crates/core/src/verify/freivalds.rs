//! Randomized left-distributivity check in matrix-multiplication time.
//!
//! With random weights `w_b`, distributivity implies for every `a`, `k`:
//!
//! ```text
//! Σ_b w_b u[a*(b+k)] = Σ_b w_b u[(a*b)+(a*k)]
//! ```
//!
//! for every vector `u`. Both sides are entries of matrix products: the left
//! is `(X Y)[a,k]` with `X[a,j] = u[a*j]`, `Y[j,k] = Σ_{b+k=j} w_b`; the right
//! is `(X' Y')[a, a*k]` with `X'[a,m] = Σ_{a*b=m} w_b`, `Y'[m,j] = u[m+j]`.
//! Several Freivalds vectors `u` separate distinct weight vectors with high
//! probability.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::FieldConfig;
use crate::matrix::{mm_fp, FpMatrix};
use crate::structure::Structure;

use super::{prepare_field, Verdict, VerifyError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreivaldsParams {
    /// Vectors per round: `⌈c · log₂ n⌉`.
    pub c: f64,
    /// Independent rounds with fresh weights.
    pub rounds: u32,
}

impl Default for FreivaldsParams {
    fn default() -> Self {
        FreivaldsParams { c: 8.0, rounds: 3 }
    }
}

impl FreivaldsParams {
    pub fn vectors(&self, n: usize) -> usize {
        ((self.c * (n.max(2) as f64).log2()).ceil() as usize).max(1)
    }
}

pub fn freivalds_distributivity(s: &Structure, cfg: &FieldConfig) -> Result<Verdict, VerifyError> {
    freivalds_distributivity_with(s, cfg, FreivaldsParams::default())
}

pub fn freivalds_distributivity_with(s: &Structure, cfg: &FieldConfig, params: FreivaldsParams) -> Result<Verdict, VerifyError> {
    let add = s.table("+")?;
    let mul = s.table("*")?;
    let field = prepare_field(s, cfg)?;
    let n = s.n();
    let ell = params.vectors(n);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    for _ in 0..params.rounds {
        let w = field.random_vec(&mut rng, n);
        let mut y = FpMatrix::zeros(n, n);
        let mut xp = FpMatrix::zeros(n, n);
        for b in 0..n as u32 {
            for k in 0..n as u32 {
                y.add_at(&field, add.get(b, k) as usize, k as usize, w[b as usize]);
                xp.add_at(&field, k as usize, mul.get(k, b) as usize, w[b as usize]);
            }
        }
        for _ in 0..ell {
            let u = field.random_vec(&mut rng, n);
            let x = FpMatrix::from_fn(n, n, |a, j| u[mul.get(a as u32, j as u32) as usize]);
            let yp = FpMatrix::from_fn(n, n, |m, j| u[add.get(m as u32, j as u32) as usize]);
            let left = mm_fp(&field, &x, &y).expect("square operands");
            let right = mm_fp(&field, &xp, &yp).expect("square operands");
            for a in 0..n {
                for k in 0..n {
                    if left.get(a, k) != right.get(a, mul.get(a as u32, k as u32) as usize) {
                        return Ok(Verdict::Fails { witness: None });
                    }
                }
            }
        }
    }
    let p = cfg.p as f64;
    let per_round = 1.0 / p + p.powi(-(ell as i32));
    Ok(Verdict::Holds { err_bound: per_round.powi(params.rounds as i32) })
}
