//! Expression trees over the variables `a`, `b`, `c`, identities, and the
//! structural relations between expressions.

mod parse;
mod shape;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

pub use parse::{parse_expression, parse_identity, parse_identity_any};
pub use shape::{
    classify_identity, classify_shape, expressible, matrix_shape, quadratic_shape, shape_of, MatrixShape,
    QuadraticShape, Regime, Shape,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown operation symbol `{0}`")]
    UnknownSymbol(String),
    #[error("unbound variable `{0}` (only a, b, c are allowed)")]
    UnboundVariable(String),
    #[error("one side of the equation is a subexpression of the other")]
    SubexpressionPair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    C,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::A, Var::B, Var::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> char {
        (b'a' + self as u8) as char
    }
}

/// A subset of `{a, b, c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u8);

impl VarSet {
    pub fn empty() -> Self {
        VarSet(0)
    }

    pub fn of(vars: &[Var]) -> Self {
        VarSet(vars.iter().fold(0, |m, v| m | 1 << v.index()))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & 1 << v.index() != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expression {
    Leaf(Var),
    Node { op: String, left: Box<Expression>, right: Box<Expression> },
}

impl Expression {
    pub fn var(v: Var) -> Self {
        Expression::Leaf(v)
    }

    pub fn node(op: &str, left: Expression, right: Expression) -> Self {
        Expression::Node { op: op.to_string(), left: Box::new(left), right: Box::new(right) }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Expression::Leaf(_))
    }

    pub fn vars(&self) -> VarSet {
        match self {
            Expression::Leaf(v) => VarSet::of(&[*v]),
            Expression::Node { left, right, .. } => left.vars().union(right.vars()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Expression::Leaf(_) => 0,
            Expression::Node { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// Number of nodes, leaves included.
    pub fn size(&self) -> usize {
        match self {
            Expression::Leaf(_) => 1,
            Expression::Node { left, right, .. } => 1 + left.size() + right.size(),
        }
    }

    pub fn ops(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_ops(&mut out);
        out
    }

    fn collect_ops<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        if let Expression::Node { op, left, right } = self {
            out.insert(op);
            left.collect_ops(out);
            right.collect_ops(out);
        }
    }

    /// Distinct subexpressions in post-order (children before parents; the
    /// expression itself is last).
    pub fn subexpressions(&self) -> Vec<&Expression> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        self.collect_subs(&mut seen, &mut out);
        out
    }

    fn collect_subs<'a>(&'a self, seen: &mut HashSet<&'a Expression>, out: &mut Vec<&'a Expression>) {
        if let Expression::Node { left, right, .. } = self {
            left.collect_subs(seen, out);
            right.collect_subs(seen, out);
        }
        if seen.insert(self) {
            out.push(self);
        }
    }

    /// Applies a renaming of variables.
    pub fn rename(&self, map: &dyn Fn(Var) -> Var) -> Expression {
        match self {
            Expression::Leaf(v) => Expression::Leaf(map(*v)),
            Expression::Node { op, left, right } => Expression::node(op, left.rename(map), right.rename(map)),
        }
    }

    /// Fully parenthesized text without the outermost pair.
    pub fn to_text(&self) -> String {
        let s = self.to_string();
        match self {
            Expression::Leaf(_) => s,
            Expression::Node { .. } => s[1..s.len() - 1].to_string(),
        }
    }
}

fn word_like(op: &str) -> bool {
    op.chars().all(|c| c.is_alphanumeric() || c == '_')
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Leaf(v) => write!(f, "{}", v.name()),
            Expression::Node { op, left, right } => {
                if word_like(op) {
                    write!(f, "({left} {op} {right})")
                } else {
                    write!(f, "({left}{op}{right})")
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Identity {
    Equation(Expression, Expression),
    /// The expression must take a single value on all inputs.
    ConstantTerm(Expression),
}

impl Identity {
    pub fn ops(&self) -> BTreeSet<&str> {
        match self {
            Identity::Equation(l, r) => l.ops().union(&r.ops()).copied().collect(),
            Identity::ConstantTerm(f) => f.ops(),
        }
    }

    pub fn sides(&self) -> Vec<&Expression> {
        match self {
            Identity::Equation(l, r) => vec![l, r],
            Identity::ConstantTerm(f) => vec![f],
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::Equation(l, r) => write!(f, "{} = {}", l.to_text(), r.to_text()),
            Identity::ConstantTerm(e) => write!(f, "{} = _const", e.to_text()),
        }
    }
}

pub fn vars(e: &Expression) -> VarSet {
    e.vars()
}

pub fn depth(e: &Expression) -> usize {
    e.depth()
}

/// Whether `f` occurs as a subtree of `g`.
pub fn is_subexpression(f: &Expression, g: &Expression) -> bool {
    if f == g {
        return true;
    }
    match g {
        Expression::Leaf(_) => false,
        Expression::Node { left, right, .. } => is_subexpression(f, left) || is_subexpression(f, right),
    }
}

/// Whether `f = F(h)` for some expression `F` over a single placeholder.
pub fn is_decomposable(f: &Expression, h: &Expression) -> bool {
    if f == h {
        return true;
    }
    match f {
        Expression::Leaf(_) => false,
        Expression::Node { left, right, .. } => is_decomposable(left, h) && is_decomposable(right, h),
    }
}

/// Whether `f` and `g` both decompose into a common expression.
pub fn is_similar(f: &Expression, g: &Expression) -> bool {
    f.subexpressions().into_iter().any(|h| is_decomposable(f, h) && is_decomposable(g, h))
}
