//! Tag every element with a subexpression of `f` so that evaluation can only
//! avoid `∞` along the parse tree of `f`.

use std::collections::HashMap;

use crate::expr::{Expression, Identity};
use crate::structure::{ElementId, OpTable, Structure};

use super::ReduceError;

#[derive(Debug, Clone)]
pub struct Embedding {
    pub structure: Structure,
    pub identity: Identity,
    /// Subexpressions of `f`; element `(x, t)` has id `x·|tags| + t`.
    pub tags: Vec<Expression>,
}

impl Embedding {
    pub fn element(&self, x: ElementId, tag: usize) -> ElementId {
        x * self.tags.len() as ElementId + tag as ElementId
    }

    /// Index of the tag that is the bare variable `v`.
    pub fn leaf_tag(&self, v: crate::expr::Var) -> Option<usize> {
        self.tags.iter().position(|t| *t == Expression::Leaf(v))
    }
}

/// `S̃ = (S × subexpressions(f)) ∪ {∞}` with
/// `(x,t₁) ⊕ (y,t₂) = (x⊕y, t₁⊕t₂)` when `x⊕y ≠ ∞` and `t₁⊕t₂` is again a
/// subexpression, `∞` otherwise. `S` must carry an absorbing constant `inf`.
///
/// The value component always follows `S`, so `f` is constantly `∞` on `S̃`
/// iff it is on `S`; untagged evaluation in `S` lifts along leaf tags.
pub fn subexpression_embedding(s: &Structure, f: &Expression) -> Result<Embedding, ReduceError> {
    let inf = s.constant("inf").ok_or_else(|| ReduceError::MissingConstant("inf".into()))?;
    for op in f.ops() {
        s.table(op)?;
    }
    let tags: Vec<Expression> = f.subexpressions().into_iter().cloned().collect();
    let index: HashMap<&Expression, usize> = tags.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let nt = tags.len();
    let size = s.n() * nt + 1;
    let big_inf = (size - 1) as ElementId;
    let mut ops = Vec::new();
    for (sym, table) in s.ops() {
        // combine[t1][t2] = tag of t1 sym t2, if present
        let combine: Vec<Option<usize>> = (0..nt * nt)
            .map(|c| {
                let e = Expression::node(sym, tags[c / nt].clone(), tags[c % nt].clone());
                index.get(&e).copied()
            })
            .collect();
        let out = OpTable::from_fn(size, |u, v| {
            if u as ElementId == big_inf || v as ElementId == big_inf {
                return big_inf;
            }
            let (x, t1, y, t2) = (u / nt, u % nt, v / nt, v % nt);
            let z = table.get(x as ElementId, y as ElementId);
            match combine[t1 * nt + t2] {
                Some(t) if z != inf => (z as usize * nt + t) as ElementId,
                _ => big_inf,
            }
        });
        ops.push((sym.to_string(), out));
    }
    let structure = Structure::new(size, ops)?.with_constant("inf", big_inf)?;
    Ok(Embedding { structure, identity: Identity::ConstantTerm(f.clone()), tags })
}
