//! Dense matrices over a prime field.

use thiserror::Error;

use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot multiply {0}x{1} by {2}x{3}")]
pub struct DimensionMismatch(pub usize, pub usize, pub usize, pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FpMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        FpMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FpMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn add_at(&mut self, field: &PrimeField, i: usize, j: usize, v: u64) {
        let c = self.cols;
        self.data[i * c + j] = field.add(self.data[i * c + j], v);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn trace(&self, field: &PrimeField) -> u64 {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| field.add(acc, self.get(i, i)))
    }

    fn combine(&self, other: &FpMatrix, f: impl Fn(u64, u64) -> u64) -> FpMatrix {
        FpMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect() }
    }

    fn block(&self, r0: usize, c0: usize, size: usize) -> FpMatrix {
        FpMatrix::from_fn(size, size, |i, j| {
            let (r, c) = (r0 + i, c0 + j);
            if r < self.rows && c < self.cols {
                self.get(r, c)
            } else {
                0
            }
        })
    }
}

/// Schoolbook product, kept as a reference.
pub fn mm_naive(field: &PrimeField, a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix, DimensionMismatch> {
    if a.cols != b.rows {
        return Err(DimensionMismatch(a.rows, a.cols, b.rows, b.cols));
    }
    Ok(FpMatrix::from_fn(a.rows, b.cols, |i, j| (0..a.cols).fold(0, |acc, k| field.add(acc, field.mul(a.get(i, k), b.get(k, j))))))
}

const BLOCK: usize = 64;

fn mm_blocked(field: &PrimeField, a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
    let (n, m, q) = (a.rows, a.cols, b.cols);
    let lazy = field.lazy_terms();
    let mut out = FpMatrix::zeros(n, q);
    let mut acc = vec![0u128; q];
    for i in 0..n {
        acc.iter_mut().for_each(|x| *x = 0);
        let arow = a.row(i);
        let mut pending = 0;
        for kb in (0..m).step_by(BLOCK) {
            for k in kb..(kb + BLOCK).min(m) {
                let aik = arow[k] as u128;
                if aik == 0 {
                    continue;
                }
                for (x, &bkj) in acc.iter_mut().zip(b.row(k)) {
                    *x += aik * bkj as u128;
                }
                pending += 1;
                if pending + 1 >= lazy {
                    acc.iter_mut().for_each(|x| *x = field.reduce(*x) as u128);
                    pending = 0;
                }
            }
        }
        for (j, &x) in acc.iter().enumerate() {
            out.data[i * q + j] = field.reduce(x);
        }
    }
    out
}

fn strassen(field: &PrimeField, a: &FpMatrix, b: &FpMatrix, threshold: usize) -> FpMatrix {
    let n = a.rows;
    if n <= threshold || n % 2 == 1 {
        return mm_blocked(field, a, b);
    }
    let h = n / 2;
    let (a11, a12, a21, a22) = (a.block(0, 0, h), a.block(0, h, h), a.block(h, 0, h), a.block(h, h, h));
    let (b11, b12, b21, b22) = (b.block(0, 0, h), b.block(0, h, h), b.block(h, 0, h), b.block(h, h, h));
    let add = |x: &FpMatrix, y: &FpMatrix| x.combine(y, |p, q| field.add(p, q));
    let sub = |x: &FpMatrix, y: &FpMatrix| x.combine(y, |p, q| field.sub(p, q));
    let rec = |x: &FpMatrix, y: &FpMatrix| strassen(field, x, y, threshold);
    let m1 = rec(&add(&a11, &a22), &add(&b11, &b22));
    let m2 = rec(&add(&a21, &a22), &b11);
    let m3 = rec(&a11, &sub(&b12, &b22));
    let m4 = rec(&a22, &sub(&b21, &b11));
    let m5 = rec(&add(&a11, &a12), &b22);
    let m6 = rec(&sub(&a21, &a11), &add(&b11, &b12));
    let m7 = rec(&sub(&a12, &a22), &add(&b21, &b22));
    let c11 = add(&sub(&add(&m1, &m4), &m5), &m7);
    let c12 = add(&m3, &m5);
    let c21 = add(&m2, &m4);
    let c22 = add(&add(&sub(&m1, &m2), &m3), &m6);
    FpMatrix::from_fn(n, n, |i, j| match (i < h, j < h) {
        (true, true) => c11.get(i, j),
        (true, false) => c12.get(i, j - h),
        (false, true) => c21.get(i - h, j),
        (false, false) => c22.get(i - h, j - h),
    })
}

/// Exact product mod `p` by blocked multiplication with lazy reduction.
pub fn mm_fp(field: &PrimeField, a: &FpMatrix, b: &FpMatrix) -> Result<FpMatrix, DimensionMismatch> {
    mm_fp_with(field, a, b, None)
}

/// As [`mm_fp`], switching to Strassen recursion for square operands larger
/// than `strassen_threshold`.
pub fn mm_fp_with(
    field: &PrimeField,
    a: &FpMatrix,
    b: &FpMatrix,
    strassen_threshold: Option<usize>,
) -> Result<FpMatrix, DimensionMismatch> {
    if a.cols != b.rows {
        return Err(DimensionMismatch(a.rows, a.cols, b.rows, b.cols));
    }
    match strassen_threshold {
        Some(t) if a.rows == a.cols && b.rows == b.cols && a.rows > t.max(1) => {
            let n = a.rows;
            let padded = n.next_power_of_two();
            let (pa, pb) = (a.block(0, 0, padded), b.block(0, 0, padded));
            Ok(strassen(field, &pa, &pb, t.max(1)).block(0, 0, n))
        }
        _ => Ok(mm_blocked(field, a, b)),
    }
}
