use std::collections::{HashMap, HashSet};

use super::DetectError;

/// `k`-partite `(k−1)`-uniform hypergraph. Part `p` has vertices
/// `0..labels[p].len()`; an edge omitting part `i` picks one vertex from
/// every other part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    labels: Vec<Vec<i64>>,
    edges: Vec<HashSet<u64>>,
}

impl Hypergraph {
    pub fn new(labels: Vec<Vec<i64>>) -> Result<Self, DetectError> {
        let k = labels.len();
        if k < 2 {
            return Err(DetectError::InvalidHypergraph(format!("need at least two parts, got {k}")));
        }
        let mut code_space: u128 = 1;
        for part in &labels {
            code_space = code_space.saturating_mul(part.len().max(1) as u128);
        }
        if code_space > u64::MAX as u128 {
            return Err(DetectError::InvalidHypergraph("too many vertices to index".into()));
        }
        Ok(Hypergraph { edges: vec![HashSet::new(); k], labels })
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn part(&self, p: usize) -> &[i64] {
        &self.labels[p]
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    fn code(&self, omit: usize, tuple: &[usize]) -> u64 {
        let mut code = 0u64;
        let mut t = tuple.iter();
        for (p, part) in self.labels.iter().enumerate() {
            if p != omit {
                code = code * part.len() as u64 + *t.next().expect("tuple length k-1") as u64;
            }
        }
        code
    }

    fn check(&self, omit: usize, tuple: &[usize]) -> Result<(), DetectError> {
        if omit >= self.k() || tuple.len() + 1 != self.k() {
            return Err(DetectError::InvalidHypergraph(format!("edge omitting {omit} has {} vertices", tuple.len())));
        }
        let parts = (0..self.k()).filter(|&p| p != omit);
        for (p, &v) in parts.zip(tuple) {
            if v >= self.labels[p].len() {
                return Err(DetectError::InvalidHypergraph(format!("vertex {v} not in part {p}")));
            }
        }
        Ok(())
    }

    /// Adds the edge on `tuple` (vertices of every part except `omit`, in
    /// part order).
    pub fn add_edge(&mut self, omit: usize, tuple: &[usize]) -> Result<(), DetectError> {
        self.check(omit, tuple)?;
        let c = self.code(omit, tuple);
        self.edges[omit].insert(c);
        Ok(())
    }

    pub fn has_edge(&self, omit: usize, tuple: &[usize]) -> bool {
        self.check(omit, tuple).is_ok() && self.edges[omit].contains(&self.code(omit, tuple))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(HashSet::len).sum()
    }

    /// All edges as `(omit, tuple)`, sorted.
    pub fn edges(&self) -> Vec<(usize, Vec<usize>)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (omit, set) in self.edges.iter().enumerate() {
            let sizes: Vec<u64> = (0..self.k()).filter(|&p| p != omit).map(|p| self.labels[p].len() as u64).collect();
            for &code in set {
                let mut c = code;
                let mut tuple = vec![0; sizes.len()];
                for (slot, &s) in tuple.iter_mut().zip(&sizes).rev() {
                    *slot = (c % s) as usize;
                    c /= s;
                }
                out.push((omit, tuple));
            }
        }
        out.sort();
        out
    }

    fn omit_tuple(chosen: &[usize], omit: usize) -> Vec<usize> {
        chosen.iter().enumerate().filter(|&(p, _)| p != omit).map(|(_, &v)| v).collect()
    }
}

/// Lexicographically least vertex tuple (one per part) all of whose
/// omit-one sub-tuples are edges. Every edge omitting the last part is a
/// candidate prefix; the admissible last vertices are the intersection of
/// per-part indexes built from the remaining edge sets.
pub fn detect_hyperclique(h: &Hypergraph) -> Option<Vec<usize>> {
    let k = h.k();
    let last = k - 1;
    let all = h.edges();
    let mut index: Vec<HashMap<Vec<usize>, Vec<usize>>> = vec![HashMap::new(); last];
    for (omit, tuple) in &all {
        if *omit < last {
            let (v, key) = tuple.split_last().expect("k >= 2");
            index[*omit].entry(key.to_vec()).or_default().push(*v);
        }
    }
    for (_, prefix) in all.iter().filter(|(omit, _)| *omit == last) {
        let mut cands: Option<Vec<usize>> = None;
        for (omit, idx) in index.iter().enumerate() {
            let key = Hypergraph::omit_tuple(prefix, omit);
            let Some(list) = idx.get(&key) else {
                cands = Some(Vec::new());
                break;
            };
            cands = Some(match cands {
                None => list.clone(),
                Some(c) => c.into_iter().filter(|v| list.binary_search(v).is_ok()).collect(),
            });
        }
        if let Some(&v) = cands.as_ref().and_then(|c| c.first()) {
            let mut out = prefix.clone();
            out.push(v);
            return Some(out);
        }
    }
    None
}
