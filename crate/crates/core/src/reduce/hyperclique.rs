//! Multichromatic k-AP → `(k, k−1)`-hyperclique via ruler sets.
//!
//! Write `a₁, a₂` in base `q` with `k` digits. Each part `j` gets a value
//! `x_j` built from at most two digit positions of `a₁` and `a₂` such that
//! `Σ_j (i − j)·x_j = (k − 1)·a_i` for every term `a_i = a₁ + (i−1)(a₂ − a₁)`.
//! The omitted part `i` of an edge is exactly the one whose coefficient
//! vanishes, so edges test membership of `a_i` without seeing `x_i`.

use std::collections::HashMap;

use crate::detect::{Hypergraph, IntSet};

use super::ReduceError;

/// Least `q ≥ 2` with `q^k > n`.
pub fn ruler_base(n: i64, k: usize) -> i64 {
    let mut q = 2i64;
    while q.checked_pow(k as u32).is_some_and(|p| p <= n) {
        q += 1;
    }
    q
}

fn digits(a: i64, q: i64, k: usize) -> Vec<i64> {
    let mut a = a;
    (0..k)
        .map(|_| {
            let d = a % q;
            a /= q;
            d
        })
        .collect()
}

fn x_from_digits(j: usize, k: usize, q: i64, d: &[i64], e: &[i64]) -> i64 {
    let (ki, ji) = (k as i64, j as i64);
    let pw = |l: usize| q.pow(l as u32);
    if j == 1 {
        -(ki - 2) * d[0] + (ki - 1) * e[0] + (ki - 1) * e[1] * q
    } else if j < k {
        (ki - 1)
            * ((ji - 3) * d[j - 1] * pw(j - 1) - (ji - 2) * e[j - 1] * pw(j - 1) - (ji - 1) * d[j] * pw(j)
                + ji * e[j] * pw(j))
    } else {
        (ki - 1) * ((ki - 3) * d[k - 1] - (ki - 2) * e[k - 1]) * pw(k - 1) - d[0]
    }
}

/// The vector `x` (parts `1..=k`) encoding the progression that starts
/// `a1, a2`.
pub fn ruler_vector(a1: i64, a2: i64, k: usize, q: i64) -> Vec<i64> {
    let (d, e) = (digits(a1, q, k), digits(a2, q, k));
    (1..=k).map(|j| x_from_digits(j, k, q, &d, &e)).collect()
}

/// Digit positions part `j` reads (of both `a₁` and `a₂`).
fn positions(j: usize, k: usize) -> Vec<usize> {
    if j == 1 {
        vec![0, 1]
    } else if j < k {
        vec![j - 1, j]
    } else {
        vec![k - 1, 0]
    }
}

/// All values `x_j` can take, sorted.
fn part_values(j: usize, k: usize, q: i64) -> Vec<i64> {
    let pos = positions(j, k);
    let mut out = Vec::new();
    let combos = q.pow(2 * pos.len() as u32);
    let (mut d, mut e) = (vec![0; k], vec![0; k]);
    for mut c in 0..combos {
        for &p in &pos {
            d[p] = c % q;
            c /= q;
            e[p] = c % q;
            c /= q;
        }
        out.push(x_from_digits(j, k, q, &d, &e));
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Full ruler set: integers with at most two nonzero base-`q` digits, each
/// of absolute value at most `(k−1)²·q`. Every part's values lie in it.
pub fn ruler_set(n: i64, k: usize) -> Vec<i64> {
    let q = ruler_base(n, k);
    let b = (k as i64 - 1).pow(2) * q;
    let mut out = Vec::new();
    for p1 in 0..k {
        for p2 in p1..k {
            for c1 in -b..=b {
                for c2 in -b..=b {
                    out.push(c1 * q.pow(p1 as u32) + c2 * q.pow(p2 as u32));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Clone)]
pub struct HypercliqueInstance {
    pub hypergraph: Hypergraph,
    pub q: i64,
    pub k: usize,
}

impl HypercliqueInstance {
    /// Hyperclique (vertex index per part) → the k-AP terms.
    pub fn to_ap(&self, clique: &[usize]) -> Vec<i64> {
        let x: Vec<i64> = clique.iter().enumerate().map(|(p, &v)| self.hypergraph.part(p)[v]).collect();
        let k = self.k as i64;
        (1..=k).map(|i| (1..=k).map(|j| (i - j) * x[j as usize - 1]).sum::<i64>() / (k - 1)).collect()
    }
}

pub fn ap_to_hyperclique(sets: &[IntSet]) -> Result<HypercliqueInstance, ReduceError> {
    let k = sets.len();
    if k < 3 {
        return Err(ReduceError::ArityMismatch { expected: 3, got: k });
    }
    let n = sets.iter().map(IntSet::bound).max().unwrap_or(0);
    let q = ruler_base(n, k);
    let labels: Vec<Vec<i64>> = (1..=k).map(|j| part_values(j, k, q)).collect();
    let lookup: Vec<HashMap<i64, usize>> =
        labels.iter().map(|l| l.iter().enumerate().map(|(i, &x)| (x, i)).collect()).collect();
    let mut h = Hypergraph::new(labels.clone())?;
    let km1 = k as i64 - 1;
    for omit in 0..k {
        let parts: Vec<usize> = (0..k).filter(|&p| p != omit).collect();
        let (&last, free) = parts.split_last().expect("k >= 3");
        let coef = |p: usize| omit as i64 - p as i64;
        let mut idx = vec![0usize; free.len()];
        'odometer: loop {
            let partial: i64 = free.iter().zip(&idx).map(|(&p, &v)| coef(p) * labels[p][v]).sum();
            for &a in sets[omit].members() {
                let need = km1 * a - partial;
                if need % coef(last) != 0 {
                    continue;
                }
                if let Some(&v) = lookup[last].get(&(need / coef(last))) {
                    let mut tuple = idx.clone();
                    tuple.push(v);
                    h.add_edge(omit, &tuple)?;
                }
            }
            let mut t = free.len();
            loop {
                if t == 0 {
                    break 'odometer;
                }
                t -= 1;
                idx[t] += 1;
                if idx[t] < labels[free[t]].len() {
                    break;
                }
                idx[t] = 0;
            }
        }
    }
    Ok(HypercliqueInstance { hypergraph: h, q, k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{detect_hyperclique, detect_multichromatic_kap};
    use rand::{Rng, SeedableRng};

    #[test]
    fn ruler_identity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(51);
        for _ in 0..300 {
            let k = rng.gen_range(3..=6);
            let n = rng.gen_range(1..=500);
            let q = ruler_base(n, k);
            let (a1, a2) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
            let x = ruler_vector(a1, a2, k, q);
            for i in 1..=k as i64 {
                let s: i64 = (1..=k as i64).map(|j| (i - j) * x[j as usize - 1]).sum();
                assert_eq!(s, (k as i64 - 1) * (a1 + (i - 1) * (a2 - a1)));
            }
        }
    }

    #[test]
    fn parts_inside_ruler_set() {
        let (n, k) = (100, 4);
        let q = ruler_base(n, k);
        assert_eq!(q, 4);
        let full = ruler_set(n, k);
        for j in 1..=k {
            assert!(part_values(j, k, q).iter().all(|x| full.binary_search(x).is_ok()));
        }
    }

    #[test]
    fn reduction_is_exact() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(52);
        for round in 0..30 {
            let k = if round % 3 == 0 { 3 } else { 4 };
            let n = rng.gen_range(1..=60);
            let d = rng.gen_range(0.05..0.4);
            let sets: Vec<IntSet> = (0..k).map(|_| IntSet::new(n, (0..=n).filter(|_| rng.gen_bool(d))).unwrap()).collect();
            let inst = ap_to_hyperclique(&sets).unwrap();
            let got = detect_hyperclique(&inst.hypergraph);
            assert_eq!(got.is_some(), detect_multichromatic_kap(&sets).unwrap().is_some());
            if let Some(c) = got {
                let ap = inst.to_ap(&c);
                assert!(ap.iter().zip(&sets).all(|(&a, s)| s.contains(a)));
                assert!(ap.windows(3).all(|w| w[1] - w[0] == w[2] - w[1]));
            }
        }
    }
}
