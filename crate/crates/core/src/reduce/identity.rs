//! Multichromatic square / T instances → constant-term identities in the
//! six cubic families.
//!
//! The carrier is `{−L..L} ∪ {∞}` with `L = 10·max(size, |index|)`. Each
//! operation reads one matrix entry at coordinates derived from its two
//! operands and returns `∞` when the entry is 0, so the family expression
//! evaluates to something other than `∞` exactly on triples that encode a
//! square (or T). Values that leave the carrier also become `∞`.

use serde::Serialize;

use crate::detect::{BinaryMatrix, DetectError};
use crate::expr::{parse_expression, Expression, Identity};
use crate::structure::{ElementId, OpTable, Structure};

use super::ReduceError;

const SCALE: i64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
}

type Rule = fn(&[BinaryMatrix], i64, i64) -> Option<i64>;

impl Family {
    pub const ALL: [Family; 6] = [Family::F1, Family::F2, Family::F3, Family::F4, Family::F5, Family::F6];

    pub fn name(self) -> &'static str {
        match self {
            Family::F1 => "f1",
            Family::F2 => "f2",
            Family::F3 => "f3",
            Family::F4 => "f4",
            Family::F5 => "f5",
            Family::F6 => "f6",
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    /// f5 and f6 encode T patterns; the rest encode squares.
    pub fn is_t(self) -> bool {
        matches!(self, Family::F5 | Family::F6)
    }

    fn text(self) -> &'static str {
        match self {
            Family::F1 => "((a o1 b) o3 (a o2 c)) o4 c",
            Family::F2 => "(a o1 b) o4 ((a o2 c) o3 b)",
            Family::F3 => "(((a o1 b) o2 c) o3 a) o4 b",
            Family::F4 => "(((a o1 b) o2 c) o3 a) o4 c",
            Family::F5 => "((a o1 b) o3 (a o2 c)) o4 a",
            Family::F6 => "(a o1 b) o4 (a o3 (c o2 (a o1 b)))",
        }
    }

    fn rules(self) -> [Rule; 4] {
        fn g(m: &[BinaryMatrix], t: usize, i: i64, j: i64) -> bool {
            m[t].get(i, j)
        }
        match self {
            Family::F1 => [
                |m, x, y| g(m, 0, x + y, x).then_some(y),
                |m, x, y| g(m, 1, y - x, x).then_some(y - x),
                |m, x, y| g(m, 2, y, y - x).then_some(y - x),
                |m, x, y| g(m, 3, y - x, x).then_some(0),
            ],
            Family::F2 => [
                |m, x, y| g(m, 0, x + y, x).then_some(x + y),
                |m, x, y| g(m, 1, y - x, x).then_some(y - x),
                |m, x, y| g(m, 2, x, x - y).then_some(x - y),
                |m, x, y| g(m, 3, x, y).then_some(0),
            ],
            Family::F3 => [
                |m, x, y| g(m, 0, y, y - x).then_some(y - x),
                |m, x, y| g(m, 1, y - x, x).then_some(y - x),
                |m, x, y| g(m, 2, x, x - y).then_some(x - y),
                |m, x, y| g(m, 3, y, x).then_some(0),
            ],
            Family::F4 => [
                |m, x, y| g(m, 0, y, y - x).then_some(y - x),
                |m, x, y| g(m, 1, y - x, x).then_some(y - x),
                |m, x, y| g(m, 2, x, x - y).then_some(x - y),
                |m, x, y| g(m, 3, y - x, x).then_some(0),
            ],
            Family::F5 => [
                |m, x, y| g(m, 0, x, y).then_some(x + y),
                |m, x, y| g(m, 1, x, y).then_some(x - y),
                |m, x, y| ((x - y) % 2 == 0 && g(m, 2, (x + y) / 2, (x - y) / 2)).then_some((x - y) / 2),
                |m, x, y| g(m, 3, y, x).then_some(0),
            ],
            Family::F6 => [
                |m, x, y| g(m, 3, y - x, x).then_some(y - x),
                |m, x, y| g(m, 1, y, y - x).then_some(x),
                |m, x, y| g(m, 2, x + y, x).then_some(y + 2 * x),
                |m, x, y| g(m, 0, x, y - x).then_some(0),
            ],
        }
    }

    /// Operand values `(x_a, x_b, x_c)` for the pattern `(i, j, k)`.
    pub fn encode(self, (i, j, k): (i64, i64, i64)) -> [i64; 3] {
        match self {
            Family::F1 | Family::F2 => [j, i - j, i + j + k],
            Family::F3 | Family::F4 => [i - j, i, i + j + k],
            Family::F5 => [i, j + k, j - k],
            Family::F6 => [j, i + j, i - j + k],
        }
    }

    /// Inverse of [`Family::encode`].
    pub fn decode(self, [a, b, c]: [i64; 3]) -> Option<(i64, i64, i64)> {
        Some(match self {
            Family::F1 | Family::F2 => (a + b, a, c - 2 * a - b),
            Family::F3 | Family::F4 => (b, b - a, c - 2 * b + a),
            Family::F5 => {
                if (b + c) % 2 != 0 {
                    return None;
                }
                (a, (b + c) / 2, (b - c) / 2)
            }
            Family::F6 => (b - a, a, c - b + 2 * a),
        })
    }
}

/// The family's defining expression over `o1..o4`.
pub fn family_expression(f: Family) -> Expression {
    parse_expression(f.text(), None).expect("family formulas are well formed")
}

/// A generated structure with the constant-term identity it should (or
/// should not) satisfy.
#[derive(Debug, Clone)]
pub struct IdentityInstance {
    pub structure: Structure,
    pub identity: Identity,
    pub family: Family,
    /// Largest absolute carrier value; `∞` is the last element.
    pub half: i64,
}

impl IdentityInstance {
    pub fn infinity(&self) -> ElementId {
        (2 * self.half + 1) as ElementId
    }

    pub fn element(&self, v: i64) -> Option<ElementId> {
        (v.abs() <= self.half).then_some((v + self.half) as ElementId)
    }

    pub fn value(&self, e: ElementId) -> Option<i64> {
        (e != self.infinity()).then_some(e as i64 - self.half)
    }

    /// Pattern `(i, j, k)` → element triple `(a, b, c)`.
    pub fn encode_witness(&self, w: (i64, i64, i64)) -> Option<[ElementId; 3]> {
        let v = self.family.encode(w);
        Some([self.element(v[0])?, self.element(v[1])?, self.element(v[2])?])
    }

    /// Element triple → pattern `(i, j, k)`.
    pub fn decode_witness(&self, t: [ElementId; 3]) -> Option<(i64, i64, i64)> {
        self.family.decode([self.value(t[0])?, self.value(t[1])?, self.value(t[2])?])
    }
}

fn build(ms: &[BinaryMatrix], family: Family) -> Result<IdentityInstance, ReduceError> {
    if ms.len() != 4 {
        return Err(ReduceError::ArityMismatch { expected: 4, got: ms.len() });
    }
    if ms[0].rows() != ms[0].cols() || ms.iter().any(|m| !m.same_shape(&ms[0])) {
        return Err(ReduceError::Detect(DetectError::ShapeMismatch));
    }
    let size = ms[0].rows() as i64;
    let r = ms[0].row_range();
    let reach = size.max(r.start.abs()).max((r.end - 1).abs()).max(1);
    let half = SCALE * reach;
    let n = (2 * half + 2) as usize;
    let inf = (n - 1) as ElementId;
    let ops = family
        .rules()
        .iter()
        .enumerate()
        .map(|(t, rule)| {
            let table = OpTable::from_fn(n, |x, y| {
                if x as ElementId == inf || y as ElementId == inf {
                    return inf;
                }
                match rule(ms, x as i64 - half, y as i64 - half) {
                    Some(v) if v.abs() <= half => (v + half) as ElementId,
                    _ => inf,
                }
            });
            (format!("o{}", t + 1), table)
        })
        .collect();
    let structure = Structure::new(n, ops)?.with_constant("inf", inf)?;
    Ok(IdentityInstance { structure, identity: Identity::ConstantTerm(family_expression(family)), family, half })
}

/// Multichromatic-square instance → identity in family f1..f4.
pub fn square_to_identity(ms: &[BinaryMatrix], family: Family) -> Result<IdentityInstance, ReduceError> {
    if family.is_t() {
        return Err(ReduceError::InvalidParameter(format!("{} encodes T patterns", family.name())));
    }
    build(ms, family)
}

/// Multichromatic-T instance → identity in family f5 or f6.
pub fn t_to_identity(ms: &[BinaryMatrix], family: Family) -> Result<IdentityInstance, ReduceError> {
    if !family.is_t() {
        return Err(ReduceError::InvalidParameter(format!("{} encodes squares", family.name())));
    }
    build(ms, family)
}
