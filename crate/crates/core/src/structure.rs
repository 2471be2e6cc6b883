//! Finite structures given by Cayley tables, and the `magma v1` text format.
//!
//! Elements are dense indices `0..n`. Each declared operation owns one
//! row-major `n × n` table where row = left operand, column = right operand.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

/// Index of an element of a [`Structure`], always `< n`.
pub type ElementId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("element {index} out of range for n = {n}")]
    IndexOutOfRange { index: u64, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: entry {value} out of range for n = {n}")]
    EntryOutOfRange { line: usize, value: u64, n: usize },
    #[error("operation `{0}` declared twice")]
    DuplicateOperation(String),
    #[error("structure size must be at least 1")]
    InvalidSize,
    #[error("at least one operation must be declared")]
    NoOperations,
    #[error("invalid operation symbol `{0}`")]
    InvalidSymbol(String),
    #[error("table for `{op}` has {got} entries, expected {expected}")]
    TableShape { op: String, got: usize, expected: usize },
    #[error("subset is not closed under `{0}`")]
    NotClosed(String),
}

/// One binary operation as an `n × n` lookup table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    n: usize,
    entries: Vec<ElementId>,
}

impl OpTable {
    /// Builds a table from `f(row, col)`. Entries are validated when the
    /// table is placed in a [`Structure`].
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ElementId) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(f(x, y));
            }
        }
        OpTable { n, entries }
    }

    pub fn from_entries(n: usize, entries: Vec<ElementId>) -> Self {
        OpTable { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: ElementId, y: ElementId) -> ElementId {
        self.entries[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn row(&self, x: ElementId) -> &[ElementId] {
        let start = x as usize * self.n;
        &self.entries[start..start + self.n]
    }

    pub fn entries(&self) -> &[ElementId] {
        &self.entries
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.entries[x * self.n + y] == self.entries[y * self.n + x]))
    }
}

/// A finite set `{0..n}` with named binary operations and optional named
/// constants. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    n: usize,
    ops: Vec<(String, OpTable)>,
    constants: BTreeMap<String, ElementId>,
}

fn valid_symbol(sym: &str) -> bool {
    !sym.is_empty() && !sym.chars().any(|c| c.is_whitespace() || c == ',' || c == '=' || c == '(' || c == ')')
}

impl Structure {
    pub fn new(n: usize, ops: Vec<(String, OpTable)>) -> Result<Self, StructureError> {
        if n == 0 {
            return Err(StructureError::InvalidSize);
        }
        if ops.is_empty() {
            return Err(StructureError::NoOperations);
        }
        for (i, (sym, table)) in ops.iter().enumerate() {
            if !valid_symbol(sym) {
                return Err(StructureError::InvalidSymbol(sym.clone()));
            }
            if ops[..i].iter().any(|(s, _)| s == sym) {
                return Err(StructureError::DuplicateOperation(sym.clone()));
            }
            if table.n != n || table.entries.len() != n * n {
                return Err(StructureError::TableShape { op: sym.clone(), got: table.entries.len(), expected: n * n });
            }
            if let Some(&bad) = table.entries.iter().find(|&&e| e as usize >= n) {
                return Err(StructureError::IndexOutOfRange { index: bad as u64, n });
            }
        }
        Ok(Structure { n, ops, constants: BTreeMap::new() })
    }

    pub fn with_constant(mut self, name: &str, id: ElementId) -> Result<Self, StructureError> {
        self.check(id)?;
        if !valid_symbol(name) {
            return Err(StructureError::InvalidSymbol(name.to_string()));
        }
        self.constants.insert(name.to_string(), id);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> impl Iterator<Item = (&str, &OpTable)> {
        self.ops.iter().map(|(s, t)| (s.as_str(), t))
    }

    pub fn op_symbols(&self) -> Vec<&str> {
        self.ops.iter().map(|(s, _)| s.as_str()).collect()
    }

    pub fn has_op(&self, op: &str) -> bool {
        self.ops.iter().any(|(s, _)| s == op)
    }

    pub fn table(&self, op: &str) -> Result<&OpTable, StructureError> {
        self.ops
            .iter()
            .find(|(s, _)| s == op)
            .map(|(_, t)| t)
            .ok_or_else(|| StructureError::UnknownOperation(op.to_string()))
    }

    pub fn constant(&self, name: &str) -> Option<ElementId> {
        self.constants.get(name).copied()
    }

    pub fn constants(&self) -> &BTreeMap<String, ElementId> {
        &self.constants
    }

    fn check(&self, x: ElementId) -> Result<(), StructureError> {
        if (x as usize) < self.n {
            Ok(())
        } else {
            Err(StructureError::IndexOutOfRange { index: x as u64, n: self.n })
        }
    }

    /// `x op y`.
    pub fn apply(&self, op: &str, x: ElementId, y: ElementId) -> Result<ElementId, StructureError> {
        let t = self.table(op)?;
        self.check(x)?;
        self.check(y)?;
        Ok(t.get(x, y))
    }

    /// Copy with the single entry `(i, j)` of `op` replaced by `v`.
    pub fn mutate_entry(&self, op: &str, i: ElementId, j: ElementId, v: ElementId) -> Result<Structure, StructureError> {
        self.table(op)?;
        self.check(i)?;
        self.check(j)?;
        self.check(v)?;
        let mut out = self.clone();
        let n = self.n;
        let (_, t) = out.ops.iter_mut().find(|(s, _)| s == op).expect("checked above");
        t.entries[i as usize * n + j as usize] = v;
        Ok(out)
    }

    /// Substructure on `elements` (re-indexed in the given order). Fails if
    /// the subset is not closed under some operation. Constants outside the
    /// subset are dropped.
    pub fn restrict(&self, elements: &[ElementId]) -> Result<Structure, StructureError> {
        let mut pos = vec![u32::MAX; self.n];
        for (k, &e) in elements.iter().enumerate() {
            self.check(e)?;
            pos[e as usize] = k as u32;
        }
        let m = elements.len();
        if m == 0 {
            return Err(StructureError::InvalidSize);
        }
        let mut ops = Vec::with_capacity(self.ops.len());
        for (sym, t) in &self.ops {
            let mut entries = Vec::with_capacity(m * m);
            for &x in elements {
                for &y in elements {
                    let p = pos[t.get(x, y) as usize];
                    if p == u32::MAX {
                        return Err(StructureError::NotClosed(sym.clone()));
                    }
                    entries.push(p);
                }
            }
            ops.push((sym.clone(), OpTable::from_entries(m, entries)));
        }
        let mut out = Structure::new(m, ops)?;
        for (name, &id) in &self.constants {
            if pos[id as usize] != u32::MAX {
                out.constants.insert(name.clone(), pos[id as usize]);
            }
        }
        Ok(out)
    }
}

impl Structure {
    /// Like [`Structure::restrict`], keeping only the operation `op`.
    pub fn restrict_op(&self, op: &str, elements: &[ElementId]) -> Result<Structure, StructureError> {
        let t = self.table(op)?.clone();
        let only = Structure { n: self.n, ops: vec![(op.to_string(), t)], constants: self.constants.clone() };
        only.restrict(elements)
    }
}

/// `Z_n` under addition, optionally with multiplication mod `n`; constant
/// `zero = 0`.
pub fn make_zn(n: usize, with_multiplication: bool) -> Result<Structure, StructureError> {
    if n == 0 {
        return Err(StructureError::InvalidSize);
    }
    let mut ops = vec![("+".to_string(), OpTable::from_fn(n, |x, y| ((x + y) % n) as ElementId))];
    if with_multiplication {
        ops.push(("*".to_string(), OpTable::from_fn(n, |x, y| ((x * y) % n) as ElementId)));
    }
    Structure::new(n, ops)?.with_constant("zero", 0)
}

pub fn mutate_entry(s: &Structure, op: &str, i: ElementId, j: ElementId, v: ElementId) -> Result<Structure, StructureError> {
    s.mutate_entry(op, i, j, v)
}

const MAGIC: &str = "magma v1";

/// Canonical `magma v1` text.
pub fn save_structure(s: &Structure) -> String {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    let _ = writeln!(out, "n={}", s.n);
    let _ = writeln!(out, "ops={}", s.op_symbols().join(","));
    for (name, id) in &s.constants {
        let _ = writeln!(out, "const {name}={id}");
    }
    for (_, t) in &s.ops {
        for row in t.entries.chunks(s.n) {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

fn perr(line: usize, msg: impl Into<String>) -> StructureError {
    StructureError::Parse { line, msg: msg.into() }
}

/// Parses `magma v1` text. Blank lines are skipped; line numbers in errors
/// are 1-based positions in the original text.
pub fn load_structure(text: &str) -> Result<Structure, StructureError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r'))).filter(|(_, l)| !l.trim().is_empty());

    let (ln, magic) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
    if magic.trim() != MAGIC {
        return Err(perr(ln, format!("expected `{MAGIC}`")));
    }
    let (ln, nline) = lines.next().ok_or_else(|| perr(ln + 1, "missing `n=` line"))?;
    let n: usize = nline
        .trim()
        .strip_prefix("n=")
        .ok_or_else(|| perr(ln, "expected `n=<int>`"))?
        .parse()
        .map_err(|_| perr(ln, "invalid element count"))?;
    if n == 0 {
        return Err(StructureError::InvalidSize);
    }
    let (ln, opsline) = lines.next().ok_or_else(|| perr(ln + 1, "missing `ops=` line"))?;
    let syms: Vec<String> = opsline
        .trim()
        .strip_prefix("ops=")
        .ok_or_else(|| perr(ln, "expected `ops=<tok>,...`"))?
        .split(',')
        .map(|s| s.trim().to_string())
        .collect();
    for (i, s) in syms.iter().enumerate() {
        if !valid_symbol(s) {
            return Err(perr(ln, format!("invalid operation symbol `{s}`")));
        }
        if syms[..i].contains(s) {
            return Err(StructureError::DuplicateOperation(s.clone()));
        }
    }

    let mut constants = Vec::new();
    let mut pending = None;
    for (ln, line) in lines.by_ref() {
        if let Some(rest) = line.trim().strip_prefix("const ") {
            let (name, val) = rest.split_once('=').ok_or_else(|| perr(ln, "expected `const <name>=<int>`"))?;
            let val: u64 = val.trim().parse().map_err(|_| perr(ln, "invalid constant value"))?;
            if val >= n as u64 {
                return Err(StructureError::EntryOutOfRange { line: ln, value: val, n });
            }
            constants.push((name.trim().to_string(), val as ElementId));
        } else {
            pending = Some((ln, line));
            break;
        }
    }

    let mut ops = Vec::with_capacity(syms.len());
    let mut rows = pending.into_iter().chain(lines);
    let mut last = ln;
    for sym in &syms {
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n {
            let (ln, line) = rows.next().ok_or_else(|| perr(last + 1, format!("table for `{sym}` is truncated")))?;
            last = ln;
            let before = entries.len();
            for tok in line.split_whitespace() {
                let v: u64 = tok.parse().map_err(|_| perr(ln, format!("invalid entry `{tok}`")))?;
                if v >= n as u64 {
                    return Err(StructureError::EntryOutOfRange { line: ln, value: v, n });
                }
                entries.push(v as ElementId);
            }
            if entries.len() - before != n {
                return Err(perr(ln, format!("expected {n} entries, found {}", entries.len() - before)));
            }
        }
        ops.push((sym.clone(), OpTable::from_entries(n, entries)));
    }
    if let Some((ln, _)) = rows.next() {
        return Err(perr(ln, "unexpected trailing content"));
    }
    let mut s = Structure::new(n, ops)?;
    for (name, id) in constants {
        s = s.with_constant(&name, id)?;
    }
    Ok(s)
}
