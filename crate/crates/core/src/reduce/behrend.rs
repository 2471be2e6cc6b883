//! Partition of `{0..n}` into 3-AP-free classes.
//!
//! Write `x` in base `q` (even). The class of `x` is the set `p` of digit
//! positions holding a digit `≥ q/2`, together with the squared norm of the
//! digit vector after subtracting `q/2` at the positions in `p`. Inside one
//! class all shifted digits are below `q/2`, so `a + c = 2b` adds digitwise
//! without carries; equal norms then force `a = c`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::detect::IntSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BehrendPartition {
    pub n: i64,
    pub q: u64,
    /// `(pattern bitmask, squared norm)` per class, ascending.
    pub keys: Vec<(u64, u64)>,
    pub classes: Vec<IntSet>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

/// Class key of `x` for base `q`.
pub fn behrend_key(x: u64, q: u64) -> (u64, u64) {
    let half = q / 2;
    let (mut x, mut pos, mut pattern, mut norm) = (x, 0, 0u64, 0u64);
    while x > 0 {
        let mut d = x % q;
        if d >= half {
            pattern |= 1 << pos;
            d -= half;
        }
        norm += d * d;
        x /= q;
        pos += 1;
    }
    (pattern, norm)
}

/// Behrend-style partition of `{0..n}` with digit base `q` (even, `≥ 4`).
pub fn behrend_partition(n: i64, q: u64) -> BehrendPartition {
    assert!(q >= 4 && q % 2 == 0, "base must be even and at least 4");
    assert!(n >= 0, "universe bound must be nonnegative");
    let mut groups: BTreeMap<(u64, u64), Vec<i64>> = BTreeMap::new();
    for x in 0..=n {
        groups.entry(behrend_key(x as u64, q)).or_default().push(x);
    }
    let mut class_of = vec![0; n as usize + 1];
    let mut keys = Vec::with_capacity(groups.len());
    let mut classes = Vec::with_capacity(groups.len());
    for (idx, (key, members)) in groups.into_iter().enumerate() {
        for &x in &members {
            class_of[x as usize] = idx;
        }
        keys.push(key);
        classes.push(IntSet::new(n, members).expect("members lie in [0, n]"));
    }
    BehrendPartition { n, q, keys, classes, class_of }
}

/// The partition with the fewest classes over even bases `4..=64` (least
/// base on ties).
pub fn best_behrend_partition(n: i64) -> BehrendPartition {
    (4..=64u64)
        .step_by(2)
        .map(|q| behrend_partition(n, q))
        .min_by_key(|p| p.len())
        .expect("nonempty range")
}

impl BehrendPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `x`.
    pub fn class_index(&self, x: i64) -> usize {
        self.class_of[x as usize]
    }
}
