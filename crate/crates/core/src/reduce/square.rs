//! 4-AP to multichromatic square / T, and multichromatic to monochromatic
//! square via squarefree masks.
//!
//! Both 4-AP reductions scale the sets (by 6 for squares, 3 for T) so that
//! the witness arithmetic stays integral, pick `N ≈ √(scaled bound)`, and
//! emit one instance per shift `δ` in a window `[-W, W]`, `W = ⌈c·N⌉`.
//! Matrix indices run over the same window.

use crate::detect::{BinaryMatrix, DetectError, IntSet};

use super::behrend::{best_behrend_partition, BehrendPartition};
use super::ReduceError;

/// Default window factor `c`. Exhaustive search over all 4-APs for bounds up
/// to a few hundred never needed more than `1.27·N`.
pub const DEFAULT_WINDOW: f64 = 2.0;

fn four_sets(sets: &[IntSet]) -> Result<(i64, [Vec<bool>; 4]), ReduceError> {
    if sets.len() != 4 {
        return Err(ReduceError::ArityMismatch { expected: 4, got: sets.len() });
    }
    let n = sets.iter().map(IntSet::bound).max().unwrap_or(0).max(1);
    let maps = std::array::from_fn(|t| sets[t].bitmap());
    Ok((n, maps))
}

fn half_width(c: f64, big_n: i64) -> Result<i64, ReduceError> {
    if !(c.is_finite() && c > 0.0) {
        return Err(ReduceError::InvalidParameter(format!("window factor {c} must be positive")));
    }
    Ok((c * big_n as f64).ceil() as i64)
}

#[inline]
fn scaled_member(map: &[bool], scale: i64, v: i64) -> bool {
    v >= 0 && v % scale == 0 && map.get((v / scale) as usize).copied().unwrap_or(false)
}

fn isqrt_ceil(x: i64) -> i64 {
    let mut r = (x as f64).sqrt() as i64;
    while r * r < x {
        r += 1;
    }
    while r > 1 && (r - 1) * (r - 1) >= x {
        r -= 1;
    }
    r.max(1)
}

/// Multichromatic 4-AP → family of multichromatic-square instances.
#[derive(Debug, Clone)]
pub struct SquareReduction {
    maps: [Vec<bool>; 4],
    pub n: i64,
    /// `N`, the digit base of the encoding.
    pub big_n: i64,
    /// Half width `W` of the index and shift window.
    pub half: i64,
}

pub fn fourap_to_square(sets: &[IntSet], c: f64) -> Result<SquareReduction, ReduceError> {
    let (n, maps) = four_sets(sets)?;
    let big_n = isqrt_ceil(6 * n);
    Ok(SquareReduction { maps, n, big_n, half: half_width(c, big_n)? })
}

impl SquareReduction {
    const SCALE: i64 = 6;

    pub fn deltas(&self) -> std::ops::RangeInclusive<i64> {
        -self.half..=self.half
    }

    pub fn size(&self) -> usize {
        (2 * self.half + 1) as usize
    }

    /// The four matrices for shift `delta`.
    pub fn instance(&self, delta: i64) -> [BinaryMatrix; 4] {
        let (nn, s) = (self.big_n, Self::SCALE);
        let m = &self.maps;
        let (size, off) = (self.size(), -self.half);
        [
            BinaryMatrix::from_fn(size, off, |i, j| scaled_member(&m[0], s, 6 * nn * i - 3 * j)),
            BinaryMatrix::from_fn(size, off, |i, j| {
                scaled_member(&m[2], s, nn * (2 * i + 2 * j) + 2 * delta - 4 * i - j)
            }),
            BinaryMatrix::from_fn(size, off, |i, j| scaled_member(&m[3], s, 3 * nn * j + 3 * delta - 6 * i)),
            BinaryMatrix::from_fn(size, off, |i, j| scaled_member(&m[1], s, nn * (4 * i + j) + delta - 2 * i - 2 * j)),
        ]
    }

    pub fn instances(&self) -> Vec<(i64, [BinaryMatrix; 4])> {
        self.deltas().map(|d| (d, self.instance(d))).collect()
    }

    /// Multichromatic square `(i, j, k)` of the `delta` instance → 4-AP
    /// `(start, step)` in the original sets.
    pub fn witness_to_ap(&self, delta: i64, (i, j, k): (i64, i64, i64)) -> Option<(i64, i64)> {
        let nn = self.big_n;
        let a1 = 6 * nn * i - 3 * j;
        let step = nn * (-2 * i + j + k) + (delta - 2 * i + j - 2 * k);
        (a1 % 6 == 0 && step % 6 == 0).then_some((a1 / 6, step / 6))
    }

    /// Some `(delta, (i, j, k))` whose witness maps to `(start, step)`, by
    /// search over the window.
    pub fn ap_to_witness(&self, start: i64, step: i64) -> Option<(i64, (i64, i64, i64))> {
        let nn = self.big_n;
        let w = self.half;
        for i in -w..=w {
            let rest = 6 * nn * i - 6 * start;
            if rest % 3 != 0 {
                continue;
            }
            let j = rest / 3;
            if j.abs() > w {
                continue;
            }
            for delta in -w..=w {
                // step·6 = k·(N − 2) + N(−2i + j) + δ − 2i + j
                let num = 6 * step - nn * (-2 * i + j) - delta + 2 * i - j;
                if nn == 2 || num % (nn - 2) != 0 {
                    continue;
                }
                let k = num / (nn - 2);
                let fits = |x: i64| x.abs() <= w;
                if fits(k) && fits(i + k) && fits(j + k) {
                    return Some((delta, (i, j, k)));
                }
            }
        }
        None
    }
}

/// Multichromatic 4-AP → family of multichromatic-T instances.
#[derive(Debug, Clone)]
pub struct TReduction {
    maps: [Vec<bool>; 4],
    pub n: i64,
    pub big_n: i64,
    pub half: i64,
}

pub fn fourap_to_t(sets: &[IntSet], c: f64) -> Result<TReduction, ReduceError> {
    let (n, maps) = four_sets(sets)?;
    let mut big_n = isqrt_ceil(3 * n);
    if big_n % 3 == 0 {
        big_n += 1;
    }
    Ok(TReduction { maps, n, big_n, half: half_width(c, big_n)? })
}

impl TReduction {
    const SCALE: i64 = 3;

    pub fn deltas(&self) -> std::ops::RangeInclusive<i64> {
        -self.half..=self.half
    }

    pub fn size(&self) -> usize {
        (2 * self.half + 1) as usize
    }

    pub fn instance(&self, delta: i64) -> [BinaryMatrix; 4] {
        let (nn, s) = (self.big_n, Self::SCALE);
        let m = &self.maps;
        let (size, off) = (self.size(), -self.half);
        [
            BinaryMatrix::from_fn(size, off, |i, j| scaled_member(&m[2], s, nn * (2 * delta + i) + 4 * i + 3 * j)),
            BinaryMatrix::from_fn(size, off, |i, j| scaled_member(&m[0], s, 3 * nn * i + 3 * j)),
            BinaryMatrix::from_fn(size, off, |i, j| scaled_member(&m[3], s, 3 * nn * delta + 6 * i + 3 * j)),
            BinaryMatrix::from_fn(size, off, |i, j| scaled_member(&m[1], s, nn * (delta + 2 * i) + 2 * i + 3 * j)),
        ]
    }

    pub fn instances(&self) -> Vec<(i64, [BinaryMatrix; 4])> {
        self.deltas().map(|d| (d, self.instance(d))).collect()
    }

    /// Multichromatic T `(i, j, k)` of the `delta` instance → 4-AP.
    pub fn witness_to_ap(&self, delta: i64, (i, j, k): (i64, i64, i64)) -> Option<(i64, i64)> {
        let nn = self.big_n;
        let a1 = 3 * nn * i + 3 * (j - k);
        let step = nn * (delta - i) + 2 * i + 3 * k;
        (a1 % 3 == 0 && step % 3 == 0).then_some((a1 / 3, step / 3))
    }
}

/// Squarefree masks on `[offset, offset + size)²`: `S_ℓ(i,j) = 1` iff
/// `i − j + size` falls in Behrend class `ℓ` of `{0..2·size}`. A square in
/// one mask would put a 3-AP on its diagonal offsets.
pub fn squarefree_window(size: usize, offset: i64) -> (BehrendPartition, Vec<BinaryMatrix>) {
    let n = size as i64;
    let part = best_behrend_partition(2 * n);
    let ms = (0..part.len())
        .map(|l| BinaryMatrix::from_fn(size, offset, |i, j| part.class_index(i - j + n) == l))
        .collect();
    (part, ms)
}

/// Squarefree masks covering the `n×n` grid indexed from 1.
pub fn squarefree_matrices(n: usize) -> Vec<BinaryMatrix> {
    squarefree_window(n, 1).1
}

/// One monochromatic instance produced from a multichromatic one. `tuple`
/// names the mask class used for each of the four input matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoSquareInstance {
    pub tuple: [usize; 4],
    pub matrix: BinaryMatrix,
}

impl MonoSquareInstance {
    /// Monochromatic square → multichromatic square of the input.
    pub fn to_multi(&self, (i, j, k): (i64, i64, i64)) -> (i64, i64, i64) {
        let n = self.matrix.rows() as i64 / 3;
        (i, j, k - 2 * n)
    }
}

/// Multichromatic square → monochromatic square witness.
pub fn multi_to_mono_witness(n: usize, (i, j, k): (i64, i64, i64)) -> (i64, i64, i64) {
    (i, j, k + 2 * n as i64)
}

/// Each instance is the `3n×3n` block layout
/// `[[M₁∩S, 0, M₄∩S], [0, 0, 0], [M₂∩S, 0, M₃∩S]]` for one choice of mask
/// classes. Tuples with an empty block are skipped since they cannot hold a
/// square.
pub fn multi_to_mono_square(ms: &[BinaryMatrix]) -> Result<Vec<MonoSquareInstance>, ReduceError> {
    if ms.len() != 4 {
        return Err(ReduceError::ArityMismatch { expected: 4, got: ms.len() });
    }
    if ms[0].rows() != ms[0].cols() || ms.iter().any(|m| !m.same_shape(&ms[0])) {
        return Err(ReduceError::Detect(DetectError::ShapeMismatch));
    }
    let n = ms[0].rows();
    let off = ms[0].offset();
    let (_, masks) = squarefree_window(n, off);
    // masked[t][l] = M_t ∩ S_l, or None when empty
    let masked: Vec<Vec<Option<BinaryMatrix>>> = ms
        .iter()
        .map(|m| {
            masks
                .iter()
                .map(|s| {
                    let x = m.and(s);
                    (x.count_ones() > 0).then_some(x)
                })
                .collect()
        })
        .collect();
    let nonempty = |t: usize| -> Vec<usize> { (0..masks.len()).filter(|&l| masked[t][l].is_some()).collect() };
    let (c1, c2, c3, c4) = (nonempty(0), nonempty(1), nonempty(2), nonempty(3));
    let ni = n as i64;
    let mut out = Vec::new();
    for &l1 in &c1 {
        for &l2 in &c2 {
            for &l3 in &c3 {
                for &l4 in &c4 {
                    let blocks = [
                        (0, 0, masked[0][l1].as_ref().unwrap()),
                        (2, 0, masked[1][l2].as_ref().unwrap()),
                        (2, 2, masked[2][l3].as_ref().unwrap()),
                        (0, 2, masked[3][l4].as_ref().unwrap()),
                    ];
                    let mut big = BinaryMatrix::zeros(3 * n, 3 * n, off);
                    for (br, bc, b) in blocks {
                        for i in b.row_range() {
                            for j in b.col_range() {
                                if b.get(i, j) {
                                    big.set(i + br * ni, j + bc * ni, true);
                                }
                            }
                        }
                    }
                    out.push(MonoSquareInstance { tuple: [l1, l2, l3, l4], matrix: big });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{
        detect_multichromatic_kap, detect_multichromatic_square, detect_multichromatic_t, detect_square, is_kap,
        is_multichromatic_square,
    };
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_sets(rng: &mut ChaCha8Rng, n: i64, d: f64) -> Vec<IntSet> {
        (0..4).map(|_| IntSet::new(n, (0..=n).filter(|_| rng.gen_bool(d))).unwrap()).collect()
    }

    fn refs(s: &[IntSet]) -> Vec<&IntSet> {
        s.iter().collect()
    }

    #[test]
    fn square_reduction_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..25 {
            let n = rng.gen_range(1..=24);
            let d = rng.gen_range(0.05..0.4);
            let sets = random_sets(&mut rng, n, d);
            let expect = detect_multichromatic_kap(&sets).unwrap().is_some();
            let red = fourap_to_square(&sets, DEFAULT_WINDOW).unwrap();
            let mut found = false;
            for (delta, ms) in red.instances() {
                if let Some(w) = detect_multichromatic_square(&ms).unwrap() {
                    let (a, s) = red.witness_to_ap(delta, w).expect("integral");
                    assert!(is_kap(&refs(&sets), a, s), "bad witness {w:?} at delta {delta}");
                    found = true;
                }
            }
            assert_eq!(found, expect);
        }
    }

    #[test]
    fn every_ap_has_a_square() {
        let n = 30;
        let red = fourap_to_square(&vec![IntSet::new(n, 0..=n).unwrap(); 4], DEFAULT_WINDOW).unwrap();
        for start in 0..=n {
            for step in -(start / 3)..=((n - start) / 3) {
                let (delta, (i, j, k)) = red.ap_to_witness(start, step).expect("covered by the window");
                assert_eq!(red.witness_to_ap(delta, (i, j, k)), Some((start, step)));
                let sets: Vec<IntSet> = (0..4).map(|t| IntSet::new(n, [start + t * step]).unwrap()).collect();
                let one = fourap_to_square(&sets, DEFAULT_WINDOW).unwrap();
                assert!(is_multichromatic_square(&one.instance(delta), i, j, k));
            }
        }
    }

    #[test]
    fn t_reduction_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..25 {
            let n = rng.gen_range(1..=24);
            let d = rng.gen_range(0.05..0.4);
            let sets = random_sets(&mut rng, n, d);
            let expect = detect_multichromatic_kap(&sets).unwrap().is_some();
            let red = fourap_to_t(&sets, DEFAULT_WINDOW).unwrap();
            assert_ne!(red.big_n % 3, 0);
            let mut found = false;
            for (delta, ms) in red.instances() {
                if let Some(w) = detect_multichromatic_t(&ms).unwrap() {
                    let (a, s) = red.witness_to_ap(delta, w).expect("integral");
                    assert!(is_kap(&refs(&sets), a, s));
                    found = true;
                }
            }
            assert_eq!(found, expect);
        }
    }

    #[test]
    fn masks_are_squarefree_partitions() {
        for n in [1, 5, 12, 30] {
            let ms = squarefree_matrices(n);
            let mut total = 0;
            for m in &ms {
                assert_eq!(detect_square(m).unwrap(), None);
                total += m.count_ones();
            }
            assert_eq!(total, n * n);
        }
    }

    #[test]
    fn multi_to_mono_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let n = rng.gen_range(1..=7);
            let off = rng.gen_range(-2..=1);
            let d = rng.gen_range(0.1..0.5);
            let ms: Vec<BinaryMatrix> = (0..4).map(|_| BinaryMatrix::from_fn(n, off, |_, _| rng.gen_bool(d))).collect();
            let multi = detect_multichromatic_square(&ms).unwrap();
            let monos = multi_to_mono_square(&ms).unwrap();
            let mut any = false;
            for inst in &monos {
                if let Some(w) = detect_square(&inst.matrix).unwrap() {
                    let (i, j, k) = inst.to_multi(w);
                    assert!(is_multichromatic_square(&ms, i, j, k));
                    any = true;
                }
            }
            assert_eq!(any, multi.is_some());
            if let Some(w) = multi {
                let (i, j, k) = multi_to_mono_witness(n, w);
                assert!(monos.iter().any(|inst| {
                    let m = &inst.matrix;
                    m.get(i, j) && m.get(i + k, j) && m.get(i, j + k) && m.get(i + k, j + k)
                }));
            }
        }
    }
}
