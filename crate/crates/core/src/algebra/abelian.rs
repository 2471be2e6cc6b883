//! Cyclic decomposition of finite abelian groups and `O(√n)` bases.

use std::collections::BTreeSet;

use crate::structure::{ElementId, OpTable, Structure};

use super::group::find_inverses;
use super::{AlgebraError, Basis};

fn not_group(msg: &str) -> AlgebraError {
    AlgebraError::NotAGroup(msg.to_string())
}

fn identity_of(t: &OpTable) -> Option<ElementId> {
    let n = t.n() as ElementId;
    (0..n).find(|&e| (0..n).all(|x| t.get(e, x) == x && t.get(x, e) == x))
}

/// Order of every element under `t`.
pub fn element_orders(s: &Structure, op: &str) -> Result<Vec<usize>, AlgebraError> {
    let t = s.table(op)?;
    let e = identity_of(t).ok_or_else(|| not_group("no identity"))?;
    orders(t, e)
}

fn orders(t: &OpTable, e: ElementId) -> Result<Vec<usize>, AlgebraError> {
    let n = t.n();
    (0..n as ElementId)
        .map(|x| {
            let mut y = x;
            for k in 1..=n {
                if y == e {
                    return Ok(k);
                }
                y = t.get(y, x);
            }
            Err(not_group("element of infinite order"))
        })
        .collect()
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Independent cyclic generators `(g, order)` whose internal direct sum is
/// the group. Works one primary component at a time: repeatedly take the
/// element of largest order modulo the current span (least index on ties),
/// shift it by a span element so its own order equals that quotient order,
/// and extend the span.
pub fn abelian_decomposition(s: &Structure, op: &str) -> Result<Vec<(ElementId, usize)>, AlgebraError> {
    let t = s.table(op)?;
    let n = s.n();
    let e = identity_of(t).ok_or_else(|| not_group("no identity"))?;
    find_inverses(t, e).ok_or_else(|| not_group("missing inverse"))?;
    if !t.is_commutative() {
        return Err(not_group("operation is not commutative"));
    }
    let ord = orders(t, e)?;
    let mut out = Vec::new();
    for p in prime_factors(n) {
        let is_p_power = |mut m: usize| {
            while m % p == 0 {
                m /= p;
            }
            m == 1
        };
        let component: Vec<ElementId> = (0..n as ElementId).filter(|&x| is_p_power(ord[x as usize])).collect();
        let mut in_span = vec![false; n];
        in_span[e as usize] = true;
        let mut span = vec![e];
        while span.len() < component.len() {
            // Order of x modulo the span.
            let quotient_order = |x: ElementId| {
                let mut y = x;
                let mut k = 1;
                while !in_span[y as usize] {
                    y = t.get(y, x);
                    k += 1;
                }
                k
            };
            let (x, m) = component
                .iter()
                .filter(|&&x| !in_span[x as usize])
                .map(|&x| (x, quotient_order(x)))
                .fold(None, |best: Option<(ElementId, usize)>, cur| match best {
                    Some(b) if b.1 >= cur.1 => Some(b),
                    _ => Some(cur),
                })
                .expect("component larger than span");
            let g = span
                .iter()
                .map(|&h| t.get(x, h))
                .find(|&g| ord[g as usize] == m)
                .ok_or_else(|| not_group("no complement for cyclic factor"))?;
            let mut next = Vec::with_capacity(span.len() * m);
            let mut power = e;
            for _ in 0..m {
                for &h in &span {
                    let y = t.get(h, power);
                    if in_span[y as usize] && power != e {
                        return Err(not_group("cyclic factor meets the span"));
                    }
                    next.push(y);
                }
                power = t.get(power, g);
            }
            for &y in &next {
                in_span[y as usize] = true;
            }
            span = next;
            out.push((g, m));
        }
    }
    if out.iter().map(|&(_, m)| m).product::<usize>() != n {
        return Err(not_group("cyclic factors do not multiply to n"));
    }
    Ok(out)
}

/// Basis with `B op B = G` and `|B| ≤ 4⌈√n⌉`.
///
/// Writes elements in mixed radix over the cyclic factors. The leading
/// positions with radix product `P ≤ √n` go to one side, the next position
/// is split into a low digit below `s = ⌈√n / P⌉` and a high digit counting
/// multiples of `s`, and everything after goes to the other side.
pub fn abelian_basis(s: &Structure, op: &str) -> Result<Basis, AlgebraError> {
    let t = s.table(op)?;
    let n = s.n();
    let factors = abelian_decomposition(s, op)?;
    let e = identity_of(t).expect("decomposition found an identity");
    let mut elements = BTreeSet::new();
    if factors.is_empty() {
        elements.insert(e);
        return Ok(Basis { elements, op: op.to_string() });
    }
    // Position t: prefix product P with P² ≤ n < (P·r_t)².
    let mut prefix = 1usize;
    let mut split = 0;
    while split < factors.len() && (prefix * factors[split].1).pow(2) <= n {
        prefix *= factors[split].1;
        split += 1;
    }
    let split = split.min(factors.len() - 1);
    let (g_t, r_t) = factors[split];
    let mut step = 1;
    while (step * prefix).pow(2) < n {
        step += 1;
    }
    let step = step.min(r_t);
    let power = |g: ElementId, k: usize| (0..k).fold(e, |acc, _| t.get(acc, g));
    let span = |gens: &[(ElementId, usize)]| {
        let mut set = vec![e];
        for &(g, r) in gens {
            let mut next = Vec::with_capacity(set.len() * r);
            let mut p = e;
            for _ in 0..r {
                next.extend(set.iter().map(|&h| t.get(h, p)));
                p = t.get(p, g);
            }
            set = next;
        }
        set
    };
    let mut low = factors[..split].to_vec();
    low.push((g_t, step));
    let mut high = vec![(power(g_t, step), r_t.div_ceil(step))];
    high.extend_from_slice(&factors[split + 1..]);
    elements.extend(span(&low));
    elements.extend(span(&high));
    Ok(Basis { elements, op: op.to_string() })
}
