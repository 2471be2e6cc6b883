//! Expressions compiled to flat register programs for the triple loops.
//!
//! Registers 0, 1, 2 hold `a`, `b`, `c`; every distinct subexpression gets one
//! more register. Instructions are grouped by the last variable they read, so
//! loops over `a`, `b`, `c` only recompute what changed.

use std::collections::HashMap;

use crate::expr::{Expression, Var};
use crate::structure::{ElementId, OpTable, Structure, StructureError};

#[derive(Debug, Clone, Copy)]
struct Instr {
    table: usize,
    left: usize,
    right: usize,
    dst: usize,
}

pub(crate) struct Program<'s> {
    tables: Vec<&'s OpTable>,
    instrs: Vec<Instr>,
    /// `instrs[level_start[l]..level_start[l + 1]]` depend on the first `l + 1` variables.
    level_start: [usize; 4],
    outputs: Vec<usize>,
    registers: usize,
}

impl<'s> Program<'s> {
    pub fn compile(s: &'s Structure, exprs: &[&Expression]) -> Result<Self, StructureError> {
        let mut tables: Vec<&OpTable> = Vec::new();
        let mut table_ids: HashMap<&str, usize> = HashMap::new();
        let mut regs: HashMap<&Expression, usize> = HashMap::new();
        let mut instrs: Vec<(usize, Instr)> = Vec::new();
        let mut next = 3;
        let mut outputs = Vec::new();

        fn walk<'e, 's>(
            e: &'e Expression,
            s: &'s Structure,
            tables: &mut Vec<&'s OpTable>,
            table_ids: &mut HashMap<&'e str, usize>,
            regs: &mut HashMap<&'e Expression, usize>,
            instrs: &mut Vec<(usize, Instr)>,
            next: &mut usize,
        ) -> Result<usize, StructureError> {
            match e {
                Expression::Leaf(v) => Ok(v.index()),
                Expression::Node { op, left, right } => {
                    if let Some(&r) = regs.get(e) {
                        return Ok(r);
                    }
                    let l = walk(left, s, tables, table_ids, regs, instrs, next)?;
                    let r = walk(right, s, tables, table_ids, regs, instrs, next)?;
                    let table = match table_ids.get(op.as_str()) {
                        Some(&t) => t,
                        None => {
                            tables.push(s.table(op)?);
                            table_ids.insert(op, tables.len() - 1);
                            tables.len() - 1
                        }
                    };
                    let level = e.vars().iter().map(Var::index).max().unwrap_or(0);
                    let dst = *next;
                    *next += 1;
                    instrs.push((level, Instr { table, left: l, right: r, dst }));
                    regs.insert(e, dst);
                    Ok(dst)
                }
            }
        }

        for e in exprs {
            outputs.push(walk(e, s, &mut tables, &mut table_ids, &mut regs, &mut instrs, &mut next)?);
        }
        instrs.sort_by_key(|(level, _)| *level);
        let mut level_start = [0; 4];
        for l in 0..3 {
            level_start[l + 1] = level_start[l] + instrs.iter().filter(|(lv, _)| *lv == l).count();
        }
        Ok(Program { tables, instrs: instrs.into_iter().map(|(_, i)| i).collect(), level_start, outputs, registers: next })
    }

    pub fn registers(&self) -> Vec<ElementId> {
        vec![0; self.registers]
    }

    /// Recomputes the instructions that depend on variable `level`.
    #[inline]
    pub fn run_level(&self, level: usize, regs: &mut [ElementId]) {
        for ins in &self.instrs[self.level_start[level]..self.level_start[level + 1]] {
            regs[ins.dst] = self.tables[ins.table].get(regs[ins.left], regs[ins.right]);
        }
    }

    pub fn output(&self, k: usize, regs: &[ElementId]) -> ElementId {
        regs[self.outputs[k]]
    }

    /// Evaluates every output at one point.
    pub fn eval(&self, a: ElementId, b: ElementId, c: ElementId) -> Vec<ElementId> {
        let mut regs = self.registers();
        regs[0] = a;
        regs[1] = b;
        regs[2] = c;
        for l in 0..3 {
            self.run_level(l, &mut regs);
        }
        self.outputs.iter().map(|&o| regs[o]).collect()
    }

    #[cfg(test)]
    /// Calls `visit(a, b, c, regs)` for every triple in lexicographic order
    /// until it returns `false`.
    pub fn for_each(&self, n: usize, mut visit: impl FnMut(ElementId, ElementId, ElementId, &[ElementId]) -> bool) {
        let mut regs = self.registers();
        for a in 0..n as ElementId {
            regs[0] = a;
            self.run_level(0, &mut regs);
            for b in 0..n as ElementId {
                regs[1] = b;
                self.run_level(1, &mut regs);
                for c in 0..n as ElementId {
                    regs[2] = c;
                    self.run_level(2, &mut regs);
                    if !visit(a, b, c, &regs) {
                        return;
                    }
                }
            }
        }
    }
}

/// Column buffers for [`Program::for_each_column`]: one vector over `c` per
/// register that depends on `c`.
struct Columns {
    varies: Vec<bool>,
    cols: Vec<Vec<ElementId>>,
}

impl<'s> Program<'s> {
    fn columns(&self, n: usize) -> Columns {
        let mut varies = vec![false; self.registers];
        varies[2] = true;
        for ins in &self.instrs[self.level_start[2]..] {
            varies[ins.dst] = true;
        }
        let cols = (0..self.registers)
            .map(|r| if r == 2 { (0..n as ElementId).collect() } else if varies[r] { vec![0; n] } else { Vec::new() })
            .collect();
        Columns { varies, cols }
    }

    /// Calls `visit(a, b, outputs)` for every `(a, b)` in lexicographic
    /// order, where `outputs[k][c]` is output `k` at `(a, b, c)`. Stops when
    /// `visit` returns `false`. The innermost loop runs as straight table
    /// gathers.
    pub fn for_each_column(&self, n: usize, mut visit: impl FnMut(ElementId, ElementId, &[&[ElementId]]) -> bool) {
        let mut regs = self.registers();
        let mut cs = self.columns(n);
        let mut consts: Vec<Vec<ElementId>> = vec![Vec::new(); self.outputs.len()];
        for a in 0..n as ElementId {
            regs[0] = a;
            self.run_level(0, &mut regs);
            for b in 0..n as ElementId {
                regs[1] = b;
                self.run_level(1, &mut regs);
                for ins in &self.instrs[self.level_start[2]..] {
                    let t = self.tables[ins.table];
                    let mut dst = std::mem::take(&mut cs.cols[ins.dst]);
                    match (cs.varies[ins.left], cs.varies[ins.right]) {
                        (false, true) => {
                            let row = t.row(regs[ins.left]);
                            for (d, &y) in dst.iter_mut().zip(&cs.cols[ins.right]) {
                                *d = row[y as usize];
                            }
                        }
                        (true, false) => {
                            let (e, y) = (t.entries(), regs[ins.right] as usize);
                            for (d, &x) in dst.iter_mut().zip(&cs.cols[ins.left]) {
                                *d = e[x as usize * n + y];
                            }
                        }
                        _ => {
                            let e = t.entries();
                            for ((d, &x), &y) in dst.iter_mut().zip(&cs.cols[ins.left]).zip(&cs.cols[ins.right]) {
                                *d = e[x as usize * n + y as usize];
                            }
                        }
                    }
                    cs.cols[ins.dst] = dst;
                }
                for (k, &o) in self.outputs.iter().enumerate() {
                    if !cs.varies[o] {
                        consts[k].clear();
                        consts[k].resize(n, regs[o]);
                    }
                }
                let outs: Vec<&[ElementId]> = self
                    .outputs
                    .iter()
                    .enumerate()
                    .map(|(k, &o)| if cs.varies[o] { cs.cols[o].as_slice() } else { consts[k].as_slice() })
                    .collect();
                if !visit(a, b, &outs) {
                    return;
                }
            }
        }
    }
}

/// Evaluates `e` at one point.
pub fn evaluate(s: &Structure, e: &Expression, a: ElementId, b: ElementId, c: ElementId) -> Result<ElementId, StructureError> {
    Ok(Program::compile(s, &[e])?.eval(a, b, c)[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expression;
    use crate::structure::make_zn;

    #[test]
    fn matches_direct_evaluation() {
        let s = make_zn(7, true).unwrap();
        let f = parse_expression("(a*(b+c))+((c*c)*a)", None).unwrap();
        let p = Program::compile(&s, &[&f]).unwrap();
        let mut count = 0;
        p.for_each(7, |a, b, c, regs| {
            let expect = (a * ((b + c) % 7) + c * c % 7 * a) % 7;
            assert_eq!(p.output(0, regs), expect);
            count += 1;
            true
        });
        assert_eq!(count, 343);
        assert_eq!(evaluate(&s, &f, 2, 3, 4).unwrap(), (2 * 7 + 16 * 2) % 7);
    }

    #[test]
    fn columns_match_pointwise() {
        let s = make_zn(6, true).unwrap();
        for text in ["(a*(b+c))+((c*c)*a)", "a*b", "c", "(a+b)*(b*a)", "(c+a)*c"] {
            let f = parse_expression(text, None).unwrap();
            let g = parse_expression("(b*c)+a", None).unwrap();
            let p = Program::compile(&s, &[&f, &g]).unwrap();
            let mut seen = 0;
            p.for_each_column(6, |a, b, outs| {
                for c in 0..6 {
                    assert_eq!(p.eval(a, b, c), vec![outs[0][c as usize], outs[1][c as usize]], "{text}");
                }
                seen += 1;
                true
            });
            assert_eq!(seen, 36);
        }
    }

    #[test]
    fn shared_subexpressions_get_one_register() {
        let s = make_zn(3, true).unwrap();
        let f = parse_expression("(a*b)+(a*b)", None).unwrap();
        let p = Program::compile(&s, &[&f]).unwrap();
        assert_eq!(p.instrs.len(), 2);
        assert_eq!(p.level_start, [0, 0, 2, 2]);
    }

    #[test]
    fn unknown_operation() {
        let s = make_zn(3, false).unwrap();
        let f = parse_expression("a*b", None).unwrap();
        assert!(matches!(Program::compile(&s, &[&f]), Err(StructureError::UnknownOperation(_))));
    }
}
