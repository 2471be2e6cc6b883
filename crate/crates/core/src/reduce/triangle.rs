//! Triangle and zero-weight-triangle instances → distributivity-type
//! questions.

use crate::detect::{Graph, WeightedGraph};
use crate::expr::{parse_expression, Identity};
use crate::structure::{ElementId, OpTable, Structure};

use super::ReduceError;

/// Constant-term instance built from a weighted graph.
#[derive(Debug, Clone)]
pub struct ZeroTriangleInstance {
    pub structure: Structure,
    pub identity: Identity,
    pub n: usize,
}

impl ZeroTriangleInstance {
    pub fn vertex_element(&self, u: usize) -> ElementId {
        (u + 2) as ElementId
    }

    /// Element triple → vertex triple, when all three are vertices.
    pub fn decode_witness(&self, t: [ElementId; 3]) -> Option<(usize, usize, usize)> {
        let v = |e: ElementId| (e >= 2 && (e as usize) < self.n + 2).then(|| e as usize - 2);
        Some((v(t[0])?, v(t[1])?, v(t[2])?))
    }
}

/// Graph → structure on `V ∪ {Δ, ∞}` that is left-distributive iff the
/// graph is triangle-free.
///
/// `u + v = Δ` and `u * v = v` on edges, `∞` everywhere else. The left side
/// `x*(y+z)` is always `∞` because `y+z ∈ {Δ, ∞}`; the right side
/// `(x*y)+(x*z) = y + z` is `Δ` exactly on triangles.
pub fn triangle_to_distributivity(g: &Graph) -> Result<Structure, ReduceError> {
    let n = g.n();
    let (delta, inf) = (n as ElementId, n as ElementId + 1);
    let size = n + 2;
    let edge = |x: usize, y: usize| x < n && y < n && g.has_edge(x, y);
    let add = OpTable::from_fn(size, |x, y| if edge(x, y) { delta } else { inf });
    let mul = OpTable::from_fn(size, |x, y| if edge(x, y) { y as ElementId } else { inf });
    Ok(Structure::new(size, vec![("+".into(), add), ("*".into(), mul)])?
        .with_constant("delta", delta)?
        .with_constant("inf", inf)?)
}

fn check_weights(g: &WeightedGraph, bound: i64) -> Result<(), ReduceError> {
    match g.edges().into_iter().find(|&(_, _, w)| w.abs() > bound) {
        Some((_, _, weight)) => Err(ReduceError::WeightOutOfRange { weight, bound }),
        None => Ok(()),
    }
}

/// Weighted graph with weights in `[−n, n]` → structure of size `7n + 4`
/// where `((a*b)+(a*c))+(b*c)` is constant iff there is no zero triangle.
///
/// Elements, in order: `∞`, `Δ`, the vertices, `(w, 1)` for
/// `w ∈ [−n, n]`, `(w, 2)` for `w ∈ [−2n, 2n]`. Vertices multiply to the
/// edge weight at level 1; two weights add at level 2, and a level-2 value
/// plus the negated third weight is `Δ` when the sum vanishes.
pub fn zero_triangle_to_constant_identity(g: &WeightedGraph) -> Result<ZeroTriangleInstance, ReduceError> {
    let n = g.n() as i64;
    check_weights(g, n)?;
    let size = (7 * n + 4) as usize;
    let (inf, delta) = (0 as ElementId, 1 as ElementId);
    let vert = |x: usize| (x >= 2 && (x as i64) < 2 + n).then(|| x - 2);
    let lvl1_base = 2 + n;
    let lvl2_base = lvl1_base + 2 * n + 1;
    let lvl1 = |x: usize| {
        let x = x as i64;
        (x >= lvl1_base && x < lvl2_base).then(|| x - lvl1_base - n)
    };
    let lvl2 = |x: usize| {
        let x = x as i64;
        (x >= lvl2_base).then(|| x - lvl2_base - 2 * n)
    };
    let lvl2_id = |w: i64| (w + 2 * n + lvl2_base) as ElementId;
    let mul = OpTable::from_fn(size, |x, y| match (vert(x), vert(y)) {
        (Some(u), Some(v)) => match g.weight(u, v) {
            Some(w) => (w + n + lvl1_base) as ElementId,
            None => inf,
        },
        _ => inf,
    });
    let add = OpTable::from_fn(size, |x, y| {
        if let (Some(w1), Some(w2)) = (lvl1(x), lvl1(y)) {
            return lvl2_id(w1 + w2);
        }
        let (s, w) = match (lvl2(x), lvl1(y), lvl1(x), lvl2(y)) {
            (Some(s), Some(w), _, _) | (_, _, Some(w), Some(s)) => (s, w),
            _ => return inf,
        };
        if s + w == 0 {
            delta
        } else {
            inf
        }
    });
    let structure = Structure::new(size, vec![("*".into(), mul), ("+".into(), add)])?
        .with_constant("inf", inf)?
        .with_constant("delta", delta)?;
    let expr = parse_expression("((a*b)+(a*c))+(b*c)", None).expect("fixed formula");
    Ok(ZeroTriangleInstance { structure, identity: Identity::ConstantTerm(expr), n: g.n() })
}

/// Weighted graph with weights in `[−n, n]` → structure of size `61n + 4`
/// whose number of distributive triples is `|S|³ − n³ + z`, `z` the number
/// of ordered vertex triples `(a, b, c)` with
/// `w(a,b) + w(a,c) + w(b,c) = 0` (missing edges and repeated vertices
/// weigh `3n + 1`, which never cancels).
pub fn zero_triangle_to_counting(g: &WeightedGraph) -> Result<Structure, ReduceError> {
    let n = g.n() as i64;
    check_weights(g, n)?;
    let span = 20 * n + 1;
    let size = (n + 3 * span + 1) as usize;
    let inf = (size - 1) as ElementId;
    let big = 3 * n + 1;
    let w = |u: usize, v: usize| if u == v { big } else { g.weight(u, v).unwrap_or(big) };
    let id = |w: i64, tag: i64| (n + tag * span + w.clamp(-10 * n, 10 * n) + 10 * n) as ElementId;
    let decode = |x: usize| -> Option<(i64, i64)> {
        let x = x as i64;
        (x >= n && x < n + 3 * span).then(|| ((x - n) % span - 10 * n, (x - n) / span))
    };
    let is_vert = |x: usize| (x as i64) < n;
    let add = OpTable::from_fn(size, |x, y| {
        if is_vert(x) && is_vert(y) {
            return id(w(x, y), 1);
        }
        match (decode(x), decode(y)) {
            (Some((w1, 2)), Some((w2, 2))) => id(w1 + w2, 0),
            _ => inf,
        }
    });
    let mul = OpTable::from_fn(size, |x, y| {
        if is_vert(x) && is_vert(y) {
            return id(w(x, y), 2);
        }
        let tagged = if is_vert(x) { decode(y) } else if is_vert(y) { decode(x) } else { None };
        match tagged {
            Some((wt, 1)) => id(-wt, 0),
            _ => inf,
        }
    });
    Ok(Structure::new(size, vec![("+".into(), add), ("*".into(), mul)])?.with_constant("inf", inf)?)
}
