//! Weighted sums `P_f = Σ x_a y_b z_c w_{f(a,b,c)}` by regime-specific routes.

use crate::expr::{matrix_shape, quadratic_shape, Expression, Regime, Var};
use crate::field::PrimeField;
use crate::matrix::{mm_fp, FpMatrix};
use crate::structure::{ElementId, Structure};

use super::program::Program;
use super::VerifyError;

/// The four weight vectors; `x`, `y`, `z` weight the values of `a`, `b`, `c`,
/// and `w` weights the value of `f`.
#[derive(Debug, Clone)]
pub struct Weights {
    pub x: Vec<u64>,
    pub y: Vec<u64>,
    pub z: Vec<u64>,
    pub w: Vec<u64>,
}

impl Weights {
    pub fn uniform<R: rand::Rng + ?Sized>(field: &PrimeField, rng: &mut R, n: usize) -> Self {
        Weights { x: field.random_vec(rng, n), y: field.random_vec(rng, n), z: field.random_vec(rng, n), w: field.random_vec(rng, n) }
    }

    fn of(&self, v: Var) -> &[u64] {
        match v {
            Var::A => &self.x,
            Var::B => &self.y,
            Var::C => &self.z,
        }
    }
}

fn others(v: Var) -> (Var, Var) {
    match v {
        Var::A => (Var::B, Var::C),
        Var::B => (Var::A, Var::C),
        Var::C => (Var::A, Var::B),
    }
}

/// Table of `e` over all `n²` assignments of two slots, where a subtree equal
/// to `slots[0]` (resp. `slots[1]`) reads the row (resp. column) index.
pub(crate) fn slot_table(s: &Structure, e: &Expression, slots: [&Expression; 2]) -> Result<Vec<ElementId>, VerifyError> {
    let n = s.n();
    if e == slots[0] {
        return Ok((0..n * n).map(|k| (k / n) as ElementId).collect());
    }
    if e == slots[1] {
        return Ok((0..n * n).map(|k| (k % n) as ElementId).collect());
    }
    match e {
        Expression::Leaf(_) => Err(VerifyError::ShapeMismatch),
        Expression::Node { op, left, right } => {
            let t = s.table(op)?;
            let l = slot_table(s, left, slots)?;
            let r = slot_table(s, right, slots)?;
            Ok(l.iter().zip(&r).map(|(&x, &y)| t.get(x, y)).collect())
        }
    }
}

fn quadratic_route(field: &PrimeField, s: &Structure, f: &Expression, wt: &Weights) -> Result<u64, VerifyError> {
    let shape = quadratic_shape(f).ok_or(VerifyError::RouteTooWeak)?;
    let n = s.n();
    let v = shape.outer;
    let (p, q) = others(v);
    let g = slot_table(s, &shape.inner, [&Expression::Leaf(p), &Expression::Leaf(q)])?;
    let h = slot_table(s, f, [&shape.inner, &Expression::Leaf(v)])?;
    let (wp, wq, wv) = (wt.of(p), wt.of(q), wt.of(v));

    let mut e = vec![0u64; n];
    for u in 0..n {
        let row = &g[u * n..(u + 1) * n];
        for (w, &t) in row.iter().enumerate() {
            e[t as usize] = field.add(e[t as usize], field.mul(wp[u], wq[w]));
        }
    }
    let lazy = field.lazy_terms();
    let mut total = 0u64;
    for t in 0..n {
        if e[t] == 0 {
            continue;
        }
        let row = &h[t * n..(t + 1) * n];
        let mut acc = 0u128;
        for (k, (&hv, &zv)) in row.iter().zip(wv).enumerate() {
            acc += zv as u128 * wt.w[hv as usize] as u128;
            if k % lazy == lazy - 1 {
                acc = field.reduce(acc) as u128;
            }
        }
        total = field.add(total, field.mul(e[t], field.reduce(acc)));
    }
    Ok(total)
}

fn matrix_route(field: &PrimeField, s: &Structure, f: &Expression, wt: &Weights) -> Result<u64, VerifyError> {
    let shape = matrix_shape(f).ok_or(VerifyError::RouteTooWeak)?;
    let n = s.n();
    let v = shape.outer;
    let (p, q) = others(v);
    let (lp, lq, lv) = (Expression::Leaf(p), Expression::Leaf(q), Expression::Leaf(v));
    let h = slot_table(s, &shape.left, [&lp, &lq])?;
    let g = slot_table(s, &shape.right, [&lp, &lq])?;
    let i = slot_table(s, &shape.middle, [&shape.left, &lv])?;
    let j = slot_table(s, f, [&shape.middle, &shape.right])?;
    let (wp, wq, wv) = (wt.of(p), wt.of(q), wt.of(v));

    // Tripartite graph on H-values, G-values and I-values.
    let mut pq = FpMatrix::zeros(n, n);
    for u in 0..n {
        for w in 0..n {
            let k = u * n + w;
            pq.add_at(field, h[k] as usize, g[k] as usize, field.mul(wp[u], wq[w]));
        }
    }
    let qr = FpMatrix::from_fn(n, n, |gv, iv| wt.w[j[iv * n + gv] as usize]);
    let mut rp = FpMatrix::zeros(n, n);
    for hv in 0..n {
        for (x, &wx) in wv.iter().enumerate() {
            rp.add_at(field, i[hv * n + x] as usize, hv, wx);
        }
    }
    let pqr = mm_fp(field, &pq, &qr).expect("square operands");
    let mut total = 0u64;
    for hv in 0..n {
        for iv in 0..n {
            total = field.add(total, field.mul(pqr.get(hv, iv), rp.get(iv, hv)));
        }
    }
    Ok(total)
}

fn cubic_route(field: &PrimeField, s: &Structure, f: &Expression, wt: &Weights) -> Result<u64, VerifyError> {
    let prog = Program::compile(s, &[f])?;
    let n = s.n();
    let lazy = field.lazy_terms();
    let mut regs = prog.registers();
    let mut total = 0u64;
    for a in 0..n {
        regs[0] = a as ElementId;
        prog.run_level(0, &mut regs);
        let mut sum_b = 0u64;
        for b in 0..n {
            regs[1] = b as ElementId;
            prog.run_level(1, &mut regs);
            let mut acc = 0u128;
            for c in 0..n {
                regs[2] = c as ElementId;
                prog.run_level(2, &mut regs);
                acc += wt.z[c] as u128 * wt.w[prog.output(0, &regs) as usize] as u128;
                if c % lazy == lazy - 1 {
                    acc = field.reduce(acc) as u128;
                }
            }
            sum_b = field.add(sum_b, field.mul(wt.y[b], field.reduce(acc)));
        }
        total = field.add(total, field.mul(wt.x[a], sum_b));
    }
    Ok(total)
}

/// `P_f` modulo `p` via the given route. Fails with `RouteTooWeak` if `f`
/// does not have the shape the route needs.
pub fn evaluate_weighted_sum(
    field: &PrimeField,
    s: &Structure,
    f: &Expression,
    weights: &Weights,
    route: Regime,
) -> Result<u64, VerifyError> {
    let n = s.n();
    if [&weights.x, &weights.y, &weights.z, &weights.w].iter().any(|v| v.len() != n) {
        return Err(VerifyError::WeightLength(n));
    }
    for op in f.ops() {
        s.table(op)?;
    }
    match route {
        Regime::Quadratic => quadratic_route(field, s, f, weights),
        Regime::Matrix => matrix_route(field, s, f, weights),
        Regime::Cubic => cubic_route(field, s, f, weights),
    }
}
