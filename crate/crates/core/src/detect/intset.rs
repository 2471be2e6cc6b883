use std::collections::HashMap;

use serde::Serialize;

use super::DetectError;

/// Sorted set of integers drawn from `[0, bound]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntSet {
    bound: i64,
    members: Vec<i64>,
}

impl IntSet {
    pub fn new(bound: i64, members: impl IntoIterator<Item = i64>) -> Result<Self, DetectError> {
        let mut members: Vec<i64> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&x| x < 0 || x > bound) {
            return Err(DetectError::OutOfRange { value: bad, bound });
        }
        Ok(IntSet { bound, members })
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn members(&self) -> &[i64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Membership bitmap over `[0, bound]`.
    pub fn bitmap(&self) -> Vec<bool> {
        let mut out = vec![false; self.bound as usize + 1];
        for &x in &self.members {
            out[x as usize] = true;
        }
        out
    }
}

/// Whether `start + t·step ∈ sets[t]` for every `t`.
pub fn is_kap(sets: &[&IntSet], start: i64, step: i64) -> bool {
    sets.iter().enumerate().all(|(t, a)| a.contains(start + t as i64 * step))
}

/// Least `(start, step)` with `step > 0` such that the `k` terms all lie in
/// `a`.
pub fn detect_kap(a: &IntSet, k: usize) -> Result<Option<(i64, i64)>, DetectError> {
    if k < 3 {
        return Err(DetectError::InvalidLength(k));
    }
    let m = a.members();
    for (i, &x) in m.iter().enumerate() {
        for &y in &m[i + 1..] {
            let step = y - x;
            if x + (k as i64 - 1) * step > a.bound() {
                break;
            }
            if (2..k).all(|t| a.contains(x + t as i64 * step)) {
                return Ok(Some((x, step)));
            }
        }
    }
    Ok(None)
}

/// Least `(start, step)`, any sign of `step` including zero, with the
/// `t`-th term in `sets[t]`.
pub fn detect_multichromatic_kap(sets: &[IntSet]) -> Result<Option<(i64, i64)>, DetectError> {
    if sets.len() < 3 {
        return Err(DetectError::ArityMismatch { expected: 3, got: sets.len() });
    }
    let refs: Vec<&IntSet> = sets.iter().collect();
    for &x in sets[0].members() {
        for &y in sets[1].members() {
            if is_kap(&refs[2..], y + (y - x), y - x) {
                return Ok(Some((x, y - x)));
            }
        }
    }
    Ok(None)
}

/// Lexicographically least `(b₁, b₂, b₃, b₄)` with `bᵢ ∈ lists[i]` and zero
/// sum, by a hash table of `b₃ + b₄`.
pub fn detect_foursum(lists: &[Vec<i64>]) -> Result<Option<[i64; 4]>, DetectError> {
    if lists.len() != 4 {
        return Err(DetectError::ArityMismatch { expected: 4, got: lists.len() });
    }
    let sorted: Vec<Vec<i64>> = lists
        .iter()
        .map(|l| {
            let mut v = l.clone();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    let mut pairs: HashMap<i64, (i64, i64)> = HashMap::new();
    for &c in &sorted[2] {
        for &d in &sorted[3] {
            pairs.entry(c + d).or_insert((c, d));
        }
    }
    for &a in &sorted[0] {
        for &b in &sorted[1] {
            if let Some(&(c, d)) = pairs.get(&-(a + b)) {
                return Ok(Some([a, b, c, d]));
            }
        }
    }
    Ok(None)
}
