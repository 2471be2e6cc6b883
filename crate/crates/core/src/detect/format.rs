//! Text formats for detector instances.
//!
//! Every file starts with a `<kind> v1` header line. Blank lines and lines
//! starting with `#` are ignored.
//!
//! ```text
//! intset v1          bitmat v1          tripartite v1     hypergraph v1
//! 400                2 2 1              2 5               part 0 1 2
//! 0 1 2 3            11                 1 .               part 3 4 5
//! 5 7                11                 . -2              part 6 7
//! -                                     ...               edge 0 1 0
//! ```
//!
//! * `intset`: universe bound `N`, then one set per line (`-` is empty).
//! * `bitmat`: one block per matrix, `rows cols offset` followed by rows.
//! * `tripartite`: `n M`, then three `n × n` blocks (`X×Y`, `Y×Z`, `Z×X`);
//!   `.` is a missing edge.
//! * `hypergraph`: one `part` line of labels per part, then `edge <omit>`
//!   lines listing one vertex index per remaining part.
//! * `graph`: `n`, then `u v` edge lines; `wgraph`: `n`, then `u v w`.
//! * `lists`: one list of (possibly negative) integers per line, `-` empty.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{BinaryMatrix, DetectError, Graph, Hypergraph, IntSet, WeightedGraph, WeightedTripartite};

fn err(line: usize, msg: impl Into<String>) -> DetectError {
    DetectError::Parse { line, msg: msg.into() }
}

/// Content lines with 1-based numbers, after checking the header.
fn lines<'a>(text: &'a str, kind: &str) -> Result<Vec<(usize, &'a str)>, DetectError> {
    let mut it = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let header = format!("{kind} v1");
    match it.next() {
        Some((_, h)) if h == header => Ok(it.collect()),
        Some((n, h)) => Err(err(n, format!("expected header `{header}`, found `{h}`"))),
        None => Err(err(0, format!("empty input, expected `{header}`"))),
    }
}

fn nums<T: FromStr>(line: usize, s: &str) -> Result<Vec<T>, DetectError> {
    s.split_whitespace().map(|t| t.parse().map_err(|_| err(line, format!("bad number `{t}`")))).collect()
}

/// Sniffs the header of a file.
pub fn kind_of(text: &str) -> Option<&str> {
    text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).and_then(|h| h.strip_suffix(" v1"))
}

pub fn parse_intsets(text: &str) -> Result<Vec<IntSet>, DetectError> {
    let ls = lines(text, "intset")?;
    let Some(&(n0, first)) = ls.first() else {
        return Err(err(0, "missing universe bound"));
    };
    let bound: i64 = first.parse().map_err(|_| err(n0, "bad universe bound"))?;
    ls[1..]
        .iter()
        .map(|&(n, l)| {
            let members = if l == "-" { Vec::new() } else { nums(n, l)? };
            IntSet::new(bound, members).map_err(|e| err(n, e.to_string()))
        })
        .collect()
}

pub fn write_intsets(sets: &[IntSet]) -> String {
    let bound = sets.iter().map(IntSet::bound).max().unwrap_or(0);
    let mut out = format!("intset v1\n{bound}\n");
    for s in sets {
        if s.is_empty() {
            out.push_str("-\n");
        } else {
            let m: Vec<String> = s.members().iter().map(i64::to_string).collect();
            let _ = writeln!(out, "{}", m.join(" "));
        }
    }
    out
}

pub fn parse_bitmats(text: &str) -> Result<Vec<BinaryMatrix>, DetectError> {
    let ls = lines(text, "bitmat")?;
    let mut out = Vec::new();
    let mut k = 0;
    while k < ls.len() {
        let (n, dims) = ls[k];
        let d: Vec<i64> = nums(n, dims)?;
        let [rows, cols, offset] = d[..] else {
            return Err(err(n, "expected `rows cols offset`"));
        };
        if rows < 0 || cols < 0 {
            return Err(err(n, "negative dimension"));
        }
        let mut m = BinaryMatrix::zeros(rows as usize, cols as usize, offset);
        for r in 0..rows {
            let Some(&(ln, row)) = ls.get(k + 1 + r as usize) else {
                return Err(err(n, "matrix ends early"));
            };
            if row.len() != cols as usize {
                return Err(err(ln, format!("expected {cols} columns")));
            }
            for (c, ch) in row.chars().enumerate() {
                match ch {
                    '1' => m.set(offset + r, offset + c as i64, true),
                    '0' => {}
                    _ => return Err(err(ln, format!("unexpected `{ch}`"))),
                }
            }
        }
        out.push(m);
        k += 1 + rows as usize;
    }
    Ok(out)
}

pub fn write_bitmats(ms: &[BinaryMatrix]) -> String {
    let mut out = String::from("bitmat v1\n");
    for m in ms {
        let _ = writeln!(out, "{} {} {}", m.rows(), m.cols(), m.offset());
        for row in m.to_strings() {
            out.push_str(&row);
            out.push('\n');
        }
    }
    out
}

pub fn parse_tripartite(text: &str) -> Result<WeightedTripartite, DetectError> {
    let ls = lines(text, "tripartite")?;
    let Some(&(n0, head)) = ls.first() else {
        return Err(err(0, "missing `n M` line"));
    };
    let h: Vec<i64> = nums(n0, head)?;
    let [n, bound] = h[..] else {
        return Err(err(n0, "expected `n M`"));
    };
    let n = usize::try_from(n).map_err(|_| err(n0, "negative size"))?;
    if ls.len() != 1 + 3 * n {
        return Err(err(n0, format!("expected {} weight rows, found {}", 3 * n, ls.len() - 1)));
    }
    let mut w: [Vec<Option<i64>>; 3] = Default::default();
    for (part, table) in w.iter_mut().enumerate() {
        for r in 0..n {
            let (ln, row) = ls[1 + part * n + r];
            let cells: Vec<&str> = row.split_whitespace().collect();
            if cells.len() != n {
                return Err(err(ln, format!("expected {n} entries")));
            }
            for c in cells {
                if c == "." {
                    table.push(None);
                } else {
                    let v: i64 = c.parse().map_err(|_| err(ln, format!("bad weight `{c}`")))?;
                    if v.abs() > bound {
                        return Err(err(ln, format!("weight {v} exceeds bound {bound}")));
                    }
                    table.push(Some(v));
                }
            }
        }
    }
    Ok(WeightedTripartite { n, bound, w })
}

pub fn write_tripartite(g: &WeightedTripartite) -> String {
    let mut out = format!("tripartite v1\n{} {}\n", g.n, g.bound);
    for table in &g.w {
        for row in table.chunks(g.n.max(1)) {
            let cells: Vec<String> = row.iter().map(|c| c.map_or(".".into(), |v| v.to_string())).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, DetectError> {
    let ls = lines(text, "hypergraph")?;
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for &(n, l) in &ls {
        if let Some(rest) = l.strip_prefix("part") {
            if !edges.is_empty() {
                return Err(err(n, "parts must precede edges"));
            }
            labels.push(nums::<i64>(n, rest)?);
        } else if let Some(rest) = l.strip_prefix("edge") {
            let v: Vec<usize> = nums(n, rest)?;
            let Some((&omit, tuple)) = v.split_first() else {
                return Err(err(n, "empty edge"));
            };
            edges.push((n, omit, tuple.to_vec()));
        } else {
            return Err(err(n, format!("unexpected line `{l}`")));
        }
    }
    let mut h = Hypergraph::new(labels).map_err(|e| err(0, e.to_string()))?;
    for (n, omit, tuple) in edges {
        h.add_edge(omit, &tuple).map_err(|e| err(n, e.to_string()))?;
    }
    Ok(h)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::from("hypergraph v1\n");
    for p in 0..h.k() {
        let l: Vec<String> = h.part(p).iter().map(i64::to_string).collect();
        let _ = writeln!(out, "part {}", l.join(" "));
    }
    for (omit, tuple) in h.edges() {
        let t: Vec<String> = tuple.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "edge {omit} {}", t.join(" "));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, DetectError> {
    let ls = lines(text, "graph")?;
    let Some(&(n0, head)) = ls.first() else {
        return Err(err(0, "missing vertex count"));
    };
    let n: usize = head.parse().map_err(|_| err(n0, "bad vertex count"))?;
    let mut g = Graph::new(n);
    for &(ln, l) in &ls[1..] {
        let e: Vec<usize> = nums(ln, l)?;
        match e[..] {
            [u, v] if u < n && v < n && u != v => g.add_edge(u, v),
            _ => return Err(err(ln, "expected `u v` with distinct vertices below n")),
        }
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph v1\n{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_wgraph(text: &str) -> Result<WeightedGraph, DetectError> {
    let ls = lines(text, "wgraph")?;
    let Some(&(n0, head)) = ls.first() else {
        return Err(err(0, "missing vertex count"));
    };
    let n: usize = head.parse().map_err(|_| err(n0, "bad vertex count"))?;
    let mut g = WeightedGraph::new(n);
    for &(ln, l) in &ls[1..] {
        let e: Vec<i64> = nums(ln, l)?;
        match e[..] {
            [u, v, w] if (0..n as i64).contains(&u) && (0..n as i64).contains(&v) && u != v => {
                g.set(u as usize, v as usize, w)
            }
            _ => return Err(err(ln, "expected `u v w` with distinct vertices below n")),
        }
    }
    Ok(g)
}

pub fn write_wgraph(g: &WeightedGraph) -> String {
    let mut out = format!("wgraph v1\n{}\n", g.n());
    for (u, v, w) in g.edges() {
        let _ = writeln!(out, "{u} {v} {w}");
    }
    out
}

pub fn parse_lists(text: &str) -> Result<Vec<Vec<i64>>, DetectError> {
    lines(text, "lists")?.into_iter().map(|(n, l)| if l == "-" { Ok(Vec::new()) } else { nums(n, l) }).collect()
}

pub fn write_lists(lists: &[Vec<i64>]) -> String {
    let mut out = String::from("lists v1\n");
    for l in lists {
        if l.is_empty() {
            out.push_str("-\n");
        } else {
            let m: Vec<String> = l.iter().map(i64::to_string).collect();
            let _ = writeln!(out, "{}", m.join(" "));
        }
    }
    out
}
