//! Colour-coding between monochromatic and multichromatic k-AP.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detect::IntSet;

use super::behrend::best_behrend_partition;
use super::ReduceError;

/// Monochromatic k-AP → `trials` multichromatic instances. Each trial
/// colours `A` uniformly with `k` colours and lets `A_t` be colour class
/// `t`; a fixed AP survives one trial with probability `k^{-k}`.
pub fn colorize_kap(a: &IntSet, k: usize, trials: usize, seed: u64) -> Result<Vec<Vec<IntSet>>, ReduceError> {
    if k < 3 {
        return Err(ReduceError::InvalidParameter(format!("progression length {k} must be at least 3")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    for _ in 0..trials {
        let mut classes = vec![Vec::new(); k];
        for &x in a.members() {
            classes[rng.gen_range(0..k)].push(x);
        }
        out.push(classes.into_iter().map(|c| IntSet::new(a.bound(), c).expect("subset of A")).collect());
    }
    Ok(out)
}

/// One monochromatic instance; `tuple[t]` is the 3-AP-free class used for
/// `A_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoApInstance {
    pub tuple: Vec<usize>,
    pub set: IntSet,
    /// Shift unit: `A_t` is placed at `t·unit` (`t` from 1).
    pub unit: i64,
}

impl MonoApInstance {
    /// Monochromatic `(start, step)` → multichromatic `(start, step)`.
    pub fn to_multi(&self, (start, step): (i64, i64)) -> (i64, i64) {
        (start - self.unit, step - self.unit)
    }
}

/// Multichromatic k-AP → monochromatic instances
/// `B = ⋃ₜ (Aₜ ∩ F_{ℓₜ}) + t·10n`, one per class tuple. Tuples with an empty
/// intersection are skipped.
///
/// Inside `B` the shifts force any k-AP to take its `t`-th term from block
/// `t`; a zero-step multichromatic AP becomes a step-`10n` one, and the
/// 3-AP-free masks rule out terms drawn from a single block.
pub fn monochromatize_kap(sets: &[IntSet]) -> Result<Vec<MonoApInstance>, ReduceError> {
    let k = sets.len();
    if k < 3 {
        return Err(ReduceError::ArityMismatch { expected: 3, got: k });
    }
    let n = sets.iter().map(IntSet::bound).max().unwrap_or(0).max(1);
    let part = best_behrend_partition(n);
    let unit = 10 * n;
    let bound = n + k as i64 * unit;
    let pieces: Vec<Vec<Vec<i64>>> = sets
        .iter()
        .map(|a| part.classes.iter().map(|f| a.members().iter().copied().filter(|&x| f.contains(x)).collect()).collect())
        .collect();
    let options: Vec<Vec<usize>> =
        pieces.iter().map(|p| (0..part.len()).filter(|&l| !p[l].is_empty()).collect()).collect();
    let mut out = Vec::new();
    if options.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut idx = vec![0; k];
    loop {
        let tuple: Vec<usize> = (0..k).map(|t| options[t][idx[t]]).collect();
        let members =
            (0..k).flat_map(|t| pieces[t][tuple[t]].iter().map(move |&x| x + (t as i64 + 1) * unit)).collect::<Vec<_>>();
        out.push(MonoApInstance { tuple, set: IntSet::new(bound, members)?, unit });
        // odometer
        let mut t = k;
        loop {
            if t == 0 {
                return Ok(out);
            }
            t -= 1;
            idx[t] += 1;
            if idx[t] < options[t].len() {
                break;
            }
            idx[t] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{detect_kap, detect_multichromatic_kap, is_kap};

    #[test]
    fn colorize_partitions_and_finds_ap() {
        let a = IntSet::new(20, [1, 4, 7, 10, 15]).unwrap();
        let trials = colorize_kap(&a, 4, 400, 9).unwrap();
        let mut hit = false;
        for t in &trials {
            assert_eq!(t.iter().map(IntSet::len).sum::<usize>(), a.len());
            if let Some((s, d)) = detect_multichromatic_kap(t).unwrap() {
                let refs: Vec<&IntSet> = t.iter().collect();
                assert!(is_kap(&refs, s, d));
                // a distinct-term AP in the colouring is one in A
                if d != 0 {
                    assert!(is_kap(&[&a, &a, &a, &a], s, d));
                }
                hit |= d != 0;
            }
        }
        assert!(hit, "1,4,7,10 survives some colouring");
    }

    #[test]
    fn monochromatize_is_exact() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let n = rng.gen_range(1..=20);
            let d = rng.gen_range(0.05..0.4);
            let sets: Vec<IntSet> = (0..4).map(|_| IntSet::new(n, (0..=n).filter(|_| rng.gen_bool(d))).unwrap()).collect();
            let expect = detect_multichromatic_kap(&sets).unwrap();
            let insts = monochromatize_kap(&sets).unwrap();
            let mut found = false;
            for inst in &insts {
                if let Some(w) = detect_kap(&inst.set, 4).unwrap() {
                    let (s, step) = inst.to_multi(w);
                    let refs: Vec<&IntSet> = sets.iter().collect();
                    assert!(is_kap(&refs, s, step));
                    found = true;
                }
            }
            assert_eq!(found, expect.is_some());
        }
    }
}
