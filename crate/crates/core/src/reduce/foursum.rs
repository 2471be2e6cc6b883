//! Multichromatic 4-AP → 4-SUM.
//!
//! A 4-AP is exactly a solution of `a₁ − 2a₂ + a₃ = 0` and
//! `2a₁ − 3a₂ + a₄ = 0`. Each `aₜ` becomes a 2-vector whose coordinates are
//! its contributions to the two equations; the pair is packed into one
//! integer as `x + y·10n`. The summed first coordinate lies in `[-2n, 2n]`,
//! so a zero total forces both coordinates to vanish.

use crate::detect::IntSet;

use super::ReduceError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourSumInstance {
    pub lists: [Vec<i64>; 4],
    /// `sources[t][i]` is the member of `A_t` that produced `lists[t][i]`.
    pub sources: [Vec<i64>; 4],
    pub base: i64,
}

impl FourSumInstance {
    /// Zero-sum tuple → the 4-AP terms `(a₁, a₂, a₃, a₄)`.
    pub fn to_ap(&self, b: [i64; 4]) -> Option<[i64; 4]> {
        let mut out = [0; 4];
        for t in 0..4 {
            let i = self.lists[t].iter().position(|&x| x == b[t])?;
            out[t] = self.sources[t][i];
        }
        Some(out)
    }
}

fn pack(x: i64, y: i64, base: i64) -> i64 {
    x + y * base
}

pub fn fourap_to_foursum(sets: &[IntSet]) -> Result<FourSumInstance, ReduceError> {
    if sets.len() != 4 {
        return Err(ReduceError::ArityMismatch { expected: 4, got: sets.len() });
    }
    let n = sets.iter().map(IntSet::bound).max().unwrap_or(0).max(1);
    let base = 10 * n;
    let vecs: [fn(i64) -> (i64, i64); 4] = [|a| (a, 2 * a), |a| (-2 * a, -3 * a), |a| (a, 0), |a| (0, a)];
    let mut lists: [Vec<i64>; 4] = Default::default();
    let mut sources: [Vec<i64>; 4] = Default::default();
    for t in 0..4 {
        for &a in sets[t].members() {
            let (x, y) = vecs[t](a);
            lists[t].push(pack(x, y, base));
            sources[t].push(a);
        }
    }
    Ok(FourSumInstance { lists, sources, base })
}
