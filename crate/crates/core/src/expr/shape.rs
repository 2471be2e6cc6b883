//! Shape matching for the three verification regimes.
//!
//! With `v` one variable and `x`, `y` the other two:
//!
//! * quadratic: `f = H(G(x, y), v)`
//! * matrix:    `f = J(I(H(x, y), v), G(x, y))`
//!
//! Holes bind to fixed subexpressions of `f` and may be degenerate (a bare
//! placeholder). Matching enumerates candidate bindings and checks that `f`
//! is generated from them by some outer skeleton.

use serde::Serialize;

use super::{is_subexpression, ExprError, Expression, Identity, Var, VarSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Quadratic,
    Matrix,
    Cubic,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Quadratic => "quadratic",
            Regime::Matrix => "matrix",
            Regime::Cubic => "cubic",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// `f = H(inner(x, y), outer)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticShape {
    pub outer: Var,
    pub inner: Expression,
}

/// `f = J(middle, right)` with `middle = I(left(x, y), outer)` and
/// `right = G(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixShape {
    pub outer: Var,
    pub left: Expression,
    pub middle: Expression,
    pub right: Expression,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Quadratic(QuadraticShape),
    Matrix(MatrixShape),
    Cubic,
}

impl Shape {
    pub fn regime(&self) -> Regime {
        match self {
            Shape::Quadratic(_) => Regime::Quadratic,
            Shape::Matrix(_) => Regime::Matrix,
            Shape::Cubic => Regime::Cubic,
        }
    }
}

/// Whether `e` is built from occurrences of `tokens` by operation nodes.
/// A subtree equal to a token is always cut there.
pub fn expressible(e: &Expression, tokens: &[&Expression]) -> bool {
    if tokens.contains(&e) {
        return true;
    }
    match e {
        Expression::Leaf(_) => false,
        Expression::Node { left, right, .. } => expressible(left, tokens) && expressible(right, tokens),
    }
}

fn others(v: Var) -> (Var, Var) {
    match v {
        Var::A => (Var::B, Var::C),
        Var::B => (Var::A, Var::C),
        Var::C => (Var::A, Var::B),
    }
}

/// Subexpressions of `f` avoiding `v`, plus the two bare leaves `x`, `y`;
/// largest first.
fn two_var_candidates(f: &Expression, v: Var) -> Vec<Expression> {
    let (x, y) = others(v);
    let allowed = VarSet::of(&[x, y]);
    let mut out: Vec<Expression> = f.subexpressions().into_iter().filter(|t| t.vars().is_subset(allowed)).cloned().collect();
    for leaf in [Expression::Leaf(x), Expression::Leaf(y)] {
        if !out.contains(&leaf) {
            out.push(leaf);
        }
    }
    out.sort_by_key(|t| std::cmp::Reverse(t.size()));
    out
}

pub fn quadratic_shape(f: &Expression) -> Option<QuadraticShape> {
    for v in Var::ALL {
        let leaf = Expression::Leaf(v);
        for g in two_var_candidates(f, v) {
            if expressible(f, &[&g, &leaf]) {
                return Some(QuadraticShape { outer: v, inner: g });
            }
        }
    }
    None
}

pub fn matrix_shape(f: &Expression) -> Option<MatrixShape> {
    let subs = f.subexpressions();
    for v in Var::ALL {
        let leaf = Expression::Leaf(v);
        let cands = two_var_candidates(f, v);
        for h in &cands {
            let middles: Vec<&Expression> = subs.iter().copied().filter(|t| expressible(t, &[h, &leaf])).collect();
            for &i in middles.iter().rev() {
                for g in &cands {
                    if expressible(f, &[i, g]) {
                        return Some(MatrixShape { outer: v, left: h.clone(), middle: i.clone(), right: g.clone() });
                    }
                }
            }
        }
    }
    None
}

/// The cheapest shape `f` matches.
pub fn shape_of(f: &Expression) -> Shape {
    if let Some(q) = quadratic_shape(f) {
        Shape::Quadratic(q)
    } else if let Some(m) = matrix_shape(f) {
        Shape::Matrix(m)
    } else {
        Shape::Cubic
    }
}

pub fn classify_shape(f: &Expression) -> Regime {
    shape_of(f).regime()
}

/// Dispatch regime of an identity: the weaker of the two sides. Equations
/// where one side contains the other are outside the classification.
pub fn classify_identity(id: &Identity) -> Result<Regime, ExprError> {
    match id {
        Identity::Equation(l, r) => {
            if is_subexpression(l, r) || is_subexpression(r, l) {
                return Err(ExprError::SubexpressionPair);
            }
            Ok(classify_shape(l).max(classify_shape(r)))
        }
        Identity::ConstantTerm(f) => Ok(classify_shape(f)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_expression, parse_identity_any};

    fn e(text: &str) -> Expression {
        parse_expression(text, None).unwrap()
    }

    #[test]
    fn shapes_of_basic_expressions() {
        let q = quadratic_shape(&e("a*(b+c)")).unwrap();
        assert_eq!(q.outer, Var::A);
        assert_eq!(q.inner, e("b+c"));
        assert_eq!(classify_shape(&e("(a*b)+(a*c)")), Regime::Matrix);
        assert_eq!(classify_shape(&e("((a*b)+(a*c))+(b*c)")), Regime::Cubic);
        assert_eq!(classify_shape(&e("a")), Regime::Quadratic);
        assert_eq!(classify_shape(&e("a*a")), Regime::Quadratic);
    }

    #[test]
    fn matrix_witness_for_distributivity() {
        let m = matrix_shape(&e("(a*b)+(a*c)")).unwrap();
        assert!(expressible(&m.middle, &[&m.left, &Expression::Leaf(m.outer)]));
        assert!(expressible(&e("(a*b)+(a*c)"), &[&m.middle, &m.right]));
        assert!(!m.left.vars().contains(m.outer));
        assert!(!m.right.vars().contains(m.outer));
    }

    #[test]
    fn identities() {
        let r = |t: &str| classify_identity(&parse_identity_any(t).unwrap());
        assert_eq!(r("(a*b)*c = a*(b*c)"), Ok(Regime::Quadratic));
        assert_eq!(r("a*(b+c) = (a*b)+(a*c)"), Ok(Regime::Matrix));
        assert_eq!(r("((a*b)+(a*c))+b = _const"), Ok(Regime::Cubic));
        assert_eq!(r("(c*((a*b)*(b*a)))*(c+c) = (b*a)+(a*b)"), Ok(Regime::Quadratic));
        assert_eq!(r("a*b = (a*b)+c"), Err(ExprError::SubexpressionPair));
    }

    #[test]
    fn quadratic_implies_matrix() {
        for t in ["a*(b+c)", "(a*b)*c", "a", "(c*((a*b)*(b*a)))*(c+c)", "(a+b)*(a+b)", "c*c"] {
            assert!(matrix_shape(&e(t)).is_some(), "{t}");
        }
    }
}
