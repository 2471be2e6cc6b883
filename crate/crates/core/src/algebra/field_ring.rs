//! Field and ring verification in `O(n²)`-ish time.

use serde::Serialize;

use crate::field::FieldConfig;
use crate::structure::{ElementId, OpTable, Structure};
use crate::verify::Verdict;

use super::abelian::abelian_basis;
use super::group::{find_identity_element, find_inverses, generator_bound, greedy_generators, light_unchecked, rs_associativity_test};
use super::AlgebraError;

/// Checks that `op` is an abelian group; returns its identity or the failed
/// axiom.
fn abelian_group(s: &Structure, op: &str, what: &str) -> Result<Result<ElementId, String>, AlgebraError> {
    let t = s.table(op)?;
    let Some(e) = find_identity_element(s, op)? else {
        return Ok(Err(format!("{what}: no identity")));
    };
    if find_inverses(t, e).is_none() {
        return Ok(Err(format!("{what}: missing inverse")));
    }
    if !t.is_commutative() {
        return Ok(Err(format!("{what}: not commutative")));
    }
    let gens = greedy_generators(s, op)?;
    if gens.len() > generator_bound(s.n()) || !light_unchecked(t, &gens) {
        return Ok(Err(format!("{what}: not associative")));
    }
    Ok(Ok(e))
}

fn left_dist(add: &OpTable, mul: &OpTable, x: ElementId, y: ElementId, z: ElementId) -> bool {
    mul.get(x, add.get(y, z)) == add.get(mul.get(x, y), mul.get(x, z))
}

fn right_dist(add: &OpTable, mul: &OpTable, x: ElementId, y: ElementId, z: ElementId) -> bool {
    mul.get(add.get(y, z), x) == add.get(mul.get(y, x), mul.get(z, x))
}

/// Decides whether `(S, +, *)` is a field. Deterministic; `Reject` names the
/// first axiom that fails.
pub fn field_verify(s: &Structure) -> Result<Verdict, AlgebraError> {
    let add = s.table("+")?;
    let mul = s.table("*")?;
    let n = s.n();
    if n < 2 {
        return Ok(Verdict::reject("a field needs at least two elements"));
    }
    let zero = match abelian_group(s, "+", "addition")? {
        Ok(z) => z,
        Err(r) => return Ok(Verdict::reject(r)),
    };
    let nonzero: Vec<ElementId> = (0..n as ElementId).filter(|&x| x != zero).collect();
    for &x in &nonzero {
        for &y in &nonzero {
            if mul.get(x, y) == zero {
                return Ok(Verdict::reject(format!("zero divisor: {x}*{y} = 0")));
            }
        }
    }
    let units = s.restrict_op("*", &nonzero)?;
    if let Err(r) = abelian_group(&units, "*", "multiplication on nonzero elements")? {
        return Ok(Verdict::reject(r));
    }
    for x in 0..n as ElementId {
        if mul.get(zero, x) != zero || mul.get(x, zero) != zero {
            return Ok(Verdict::reject("zero is not absorbing"));
        }
    }
    for x in 0..n as ElementId {
        for y in 0..n as ElementId {
            if !(left_dist(add, mul, zero, x, y) && left_dist(add, mul, x, zero, y) && left_dist(add, mul, x, y, zero)) {
                return Ok(Verdict::reject("distributivity fails with a zero coordinate"));
            }
        }
    }
    let s_m: Vec<ElementId> = abelian_basis(&units, "*")?.elements.iter().map(|&i| nonzero[i as usize]).collect();
    let s_a = abelian_basis(s, "+")?.elements;
    for &x in &s_m {
        for &y in &s_a {
            for z in 0..n as ElementId {
                if !left_dist(add, mul, x, y, z) {
                    return Ok(Verdict::reject("not distributive"));
                }
            }
        }
    }
    Ok(Verdict::exact())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RingReport {
    pub verdict: Verdict,
    /// Multiplicative identity, if one exists.
    pub unit: Option<ElementId>,
    pub commutative: bool,
}

/// Non-unital ring check; see [`ring_check`].
pub fn ring_verify(s: &Structure, cfg: &FieldConfig) -> Result<Verdict, AlgebraError> {
    Ok(ring_check(s, cfg, false)?.verdict)
}

/// Decides whether `(S, +, *)` is a ring: abelian `+`, associative `*`
/// (randomized, so `Holds` carries an error bound) and both distributive
/// laws, checked through the four restricted laws over an additive basis.
/// With `require_unital` a multiplicative identity is also required.
pub fn ring_check(s: &Structure, cfg: &FieldConfig, require_unital: bool) -> Result<RingReport, AlgebraError> {
    let add = s.table("+")?;
    let mul = s.table("*")?;
    let n = s.n() as ElementId;
    let unit = find_identity_element(s, "*")?;
    let commutative = mul.is_commutative();
    let report = |verdict| Ok(RingReport { verdict, unit, commutative });
    if let Err(r) = abelian_group(s, "+", "addition")? {
        return report(Verdict::reject(r));
    }
    let basis = abelian_basis(s, "+")?.elements;
    for &a in &basis {
        for &b in &basis {
            for c in 0..n {
                // a(b+c), b(a+c) with a, b basic; then the mirrored laws
                if !left_dist(add, mul, a, b, c) || !left_dist(add, mul, c, a, b) {
                    return report(Verdict::reject("not left distributive"));
                }
                if !right_dist(add, mul, a, b, c) || !right_dist(add, mul, c, a, b) {
                    return report(Verdict::reject("not right distributive"));
                }
            }
        }
    }
    let verdict = rs_associativity_test(s, "*", cfg)?;
    if !verdict.holds() {
        return report(Verdict::reject("multiplication not associative"));
    }
    if require_unital && unit.is_none() {
        return report(Verdict::reject("no multiplicative identity"));
    }
    report(verdict)
}
