use super::DetectError;

/// 0/1 matrix whose row and column indices both start at `offset`. Reads
/// outside the stored window are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    offset: i64,
    words: usize,
    bits: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize, offset: i64) -> Self {
        let words = cols.div_ceil(64).max(1);
        BinaryMatrix { rows, cols, offset, words, bits: vec![0; rows * words] }
    }

    /// Square matrix on `[offset, offset + size)²`.
    pub fn from_fn(size: usize, offset: i64, mut f: impl FnMut(i64, i64) -> bool) -> Self {
        let mut m = Self::zeros(size, size, offset);
        for r in 0..size {
            for c in 0..size {
                if f(offset + r as i64, offset + c as i64) {
                    m.bits[r * m.words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        m
    }

    /// Parses rows of `0`/`1` characters, indexed from 1.
    pub fn from_strs(rows: &[&str]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols, 1);
        for (r, line) in rows.iter().enumerate() {
            for (c, ch) in line.chars().enumerate() {
                if ch == '1' {
                    m.bits[r * m.words + c / 64] |= 1 << (c % 64);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Index range `lo..hi` along rows.
    pub fn row_range(&self) -> std::ops::Range<i64> {
        self.offset..self.offset + self.rows as i64
    }

    pub fn col_range(&self) -> std::ops::Range<i64> {
        self.offset..self.offset + self.cols as i64
    }

    fn local(&self, i: i64, j: i64) -> Option<(usize, usize)> {
        let (r, c) = (i - self.offset, j - self.offset);
        (r >= 0 && c >= 0 && (r as usize) < self.rows && (c as usize) < self.cols).then_some((r as usize, c as usize))
    }

    #[inline]
    pub fn get(&self, i: i64, j: i64) -> bool {
        self.local(i, j).is_some_and(|(r, c)| self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1)
    }

    /// Sets an entry; panics outside the window.
    pub fn set(&mut self, i: i64, j: i64, v: bool) {
        let (r, c) = self.local(i, j).expect("index inside the window");
        let w = &mut self.bits[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Entrywise AND of two matrices with the same window.
    pub fn and(&self, other: &BinaryMatrix) -> BinaryMatrix {
        assert!(self.same_shape(other), "window mismatch");
        let mut out = self.clone();
        out.bits.iter_mut().zip(&other.bits).for_each(|(a, b)| *a &= b);
        out
    }

    pub fn same_shape(&self, other: &BinaryMatrix) -> bool {
        (self.rows, self.cols, self.offset) == (other.rows, other.cols, other.offset)
    }

    /// Row `i` as a bitset (all zero outside the window).
    fn row_bits(&self, i: i64) -> &[u64] {
        const EMPTY: [u64; 0] = [];
        let r = i - self.offset;
        if r < 0 || r as usize >= self.rows {
            return &EMPTY;
        }
        let r = r as usize;
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    /// Rows as strings of `0`/`1`.
    pub fn to_strings(&self) -> Vec<String> {
        self.row_range().map(|i| self.col_range().map(|j| if self.get(i, j) { '1' } else { '0' }).collect()).collect()
    }
}

fn word(bits: &[u64], w: usize) -> u64 {
    bits.get(w).copied().unwrap_or(0)
}

/// 64 bits of `bits` starting at bit `start` (which may be negative).
fn window(bits: &[u64], start: i64) -> u64 {
    if start <= -64 {
        return 0;
    }
    if start < 0 {
        return word(bits, 0) << (-start);
    }
    let (w, s) = ((start / 64) as usize, (start % 64) as u32);
    if s == 0 {
        word(bits, w)
    } else {
        word(bits, w) >> s | word(bits, w + 1) << (64 - s)
    }
}

/// Least column position `c` with `x[c]` and `y[c + shift]` both set.
fn first_pair(x: &[u64], y: &[u64], shift: i64, cols: usize) -> Option<usize> {
    for w in 0..cols.div_ceil(64) {
        let hit = word(x, w) & window(y, w as i64 * 64 + shift);
        if hit != 0 {
            let c = w * 64 + hit.trailing_zeros() as usize;
            return (c < cols).then_some(c);
        }
    }
    None
}

fn and_rows(a: &[u64], b: &[u64], words: usize) -> Vec<u64> {
    (0..words).map(|w| word(a, w) & word(b, w)).collect()
}

/// Least `(i, j, k)` with `k > 0` and ones at `(i,j)`, `(i+k,j)`, `(i,j+k)`,
/// `(i+k,j+k)`.
pub fn detect_square(m: &BinaryMatrix) -> Result<Option<(i64, i64, i64)>, DetectError> {
    if m.rows != m.cols {
        return Err(DetectError::ShapeMismatch);
    }
    let n = m.rows as i64;
    let o = m.offset;
    for i in o..o + n {
        let mut best: Option<(usize, i64)> = None;
        for k in 1..n - (i - o) {
            let both = and_rows(m.row_bits(i), m.row_bits(i + k), m.words);
            if let Some(c) = first_pair(&both, &both, k, m.cols) {
                if best.is_none_or(|(bc, _)| c < bc) {
                    best = Some((c, k));
                }
            }
        }
        if let Some((c, k)) = best {
            return Ok(Some((i, o + c as i64, k)));
        }
    }
    Ok(None)
}

fn check_four(ms: &[BinaryMatrix]) -> Result<(), DetectError> {
    if ms.len() != 4 {
        return Err(DetectError::ArityMismatch { expected: 4, got: ms.len() });
    }
    if ms[0].rows != ms[0].cols || ms.iter().any(|m| !m.same_shape(&ms[0])) {
        return Err(DetectError::ShapeMismatch);
    }
    Ok(())
}

pub fn is_multichromatic_square(ms: &[BinaryMatrix], i: i64, j: i64, k: i64) -> bool {
    ms[0].get(i, j) && ms[1].get(i + k, j) && ms[2].get(i + k, j + k) && ms[3].get(i, j + k)
}

pub fn is_multichromatic_t(ms: &[BinaryMatrix], i: i64, j: i64, k: i64) -> bool {
    ms[0].get(i, j + k) && ms[1].get(i, j - k) && ms[2].get(i + k, j) && ms[3].get(i, j)
}

/// Least `(i, j, k)`, `k` of any sign, with `M₁(i,j) = M₂(i+k,j) =
/// M₃(i+k,j+k) = M₄(i,j+k) = 1`.
pub fn detect_multichromatic_square(ms: &[BinaryMatrix]) -> Result<Option<(i64, i64, i64)>, DetectError> {
    check_four(ms)?;
    let n = ms[0].rows as i64;
    let o = ms[0].offset;
    let words = ms[0].words;
    for i in o..o + n {
        let mut best: Option<(usize, i64)> = None;
        for k in (o - i)..(o + n - i) {
            let left = and_rows(ms[0].row_bits(i), ms[1].row_bits(i + k), words);
            let right = and_rows(ms[3].row_bits(i), ms[2].row_bits(i + k), words);
            if let Some(c) = first_pair(&left, &right, k, ms[0].cols) {
                if best.is_none_or(|(bc, _)| c < bc) {
                    best = Some((c, k));
                }
            }
        }
        if let Some((c, k)) = best {
            return Ok(Some((i, o + c as i64, k)));
        }
    }
    Ok(None)
}

/// Least `(i, j, k)` with `M₁(i,j+k) = M₂(i,j−k) = M₃(i+k,j) = M₄(i,j) = 1`.
pub fn detect_multichromatic_t(ms: &[BinaryMatrix]) -> Result<Option<(i64, i64, i64)>, DetectError> {
    check_four(ms)?;
    let n = ms[0].rows as i64;
    let o = ms[0].offset;
    for i in o..o + n {
        for j in o..o + n {
            if !ms[3].get(i, j) {
                continue;
            }
            for k in -(n - 1)..n {
                if is_multichromatic_t(ms, i, j, k) {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng, n: usize, offset: i64, density: f64) -> BinaryMatrix {
        BinaryMatrix::from_fn(n, offset, |_, _| rng.gen_bool(density))
    }

    fn brute_square(m: &BinaryMatrix) -> Option<(i64, i64, i64)> {
        let r = m.row_range();
        for i in r.clone() {
            for j in r.clone() {
                for k in 1..m.rows() as i64 {
                    if m.get(i, j) && m.get(i + k, j) && m.get(i, j + k) && m.get(i + k, j + k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn brute_multi(ms: &[BinaryMatrix], t: bool) -> Option<(i64, i64, i64)> {
        let r = ms[0].row_range();
        let n = ms[0].rows() as i64;
        for i in r.clone() {
            for j in r.clone() {
                for k in -n..=n {
                    let hit = if t { is_multichromatic_t(ms, i, j, k) } else { is_multichromatic_square(ms, i, j, k) };
                    if hit {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn square_examples() {
        assert_eq!(detect_square(&BinaryMatrix::from_strs(&["11", "11"])).unwrap(), Some((1, 1, 1)));
        assert_eq!(detect_square(&BinaryMatrix::from_strs(&["10", "01"])).unwrap(), None);
        let one = BinaryMatrix::from_strs(&["1"]);
        assert_eq!(detect_multichromatic_square(&vec![one.clone(); 4]).unwrap(), Some((1, 1, 0)));
        assert_eq!(detect_multichromatic_t(&vec![one.clone(); 4]).unwrap(), Some((1, 1, 0)));
        let zero = BinaryMatrix::from_strs(&["0"]);
        assert_eq!(detect_multichromatic_t(&[one.clone(), one.clone(), one.clone(), zero]).unwrap(), None);
        assert_eq!(detect_square(&BinaryMatrix::zeros(2, 3, 0)), Err(DetectError::ShapeMismatch));
    }

    #[test]
    fn t_example() {
        // (i,j,k) = (1,2,1): cells (1,3), (1,1), (2,2), (1,2)
        let mut ms: Vec<BinaryMatrix> = (0..4).map(|_| BinaryMatrix::zeros(3, 3, 1)).collect();
        ms[0].set(1, 3, true);
        ms[1].set(1, 1, true);
        ms[2].set(2, 2, true);
        ms[3].set(1, 2, true);
        assert_eq!(detect_multichromatic_t(&ms).unwrap(), Some((1, 2, 1)));
        assert_eq!(brute_multi(&ms, true), Some((1, 2, 1)));
    }

    #[test]
    fn out_of_window_reads_zero() {
        let m = BinaryMatrix::from_fn(3, -1, |_, _| true);
        assert!(m.get(-1, 1) && !m.get(2, 0) && !m.get(-2, 0));
        assert_eq!(m.count_ones(), 9);
    }

    #[test]
    fn detectors_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for round in 0..300 {
            let n = rng.gen_range(1..=if round % 10 == 0 { 90 } else { 9 });
            let off = rng.gen_range(-5..=2);
            let d = rng.gen_range(0.05..0.6);
            let m = random(&mut rng, n, off, d);
            assert_eq!(detect_square(&m).unwrap(), brute_square(&m));
            let ms: Vec<BinaryMatrix> = (0..4).map(|_| random(&mut rng, n, off, d)).collect();
            assert_eq!(detect_multichromatic_square(&ms).unwrap(), brute_multi(&ms, false));
            assert_eq!(detect_multichromatic_t(&ms).unwrap(), brute_multi(&ms, true));
        }
    }
}
