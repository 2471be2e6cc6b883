use rand::Rng;

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Adds `{u, v}`; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v))).collect()
    }
}

/// Least triangle `u < v < w`.
pub fn detect_triangle(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                continue;
            }
            if let Some(w) = (v + 1..n).find(|&w| g.has_edge(u, w) && g.has_edge(v, w)) {
                return Some((u, v, w));
            }
        }
    }
    None
}

/// Undirected graph with integer edge weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    w: Vec<Option<i64>>,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Self {
        WeightedGraph { n, w: vec![None; n * n] }
    }

    /// Each pair becomes an edge with probability `p`, weight uniform in
    /// `[-bound, bound]`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, bound: i64, rng: &mut R) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.set(u, v, rng.gen_range(-bound..=bound));
                }
            }
        }
        g
    }

    pub fn set(&mut self, u: usize, v: usize, weight: i64) {
        assert!(u != v, "no self-loops");
        self.w[u * self.n + v] = Some(weight);
        self.w[v * self.n + u] = Some(weight);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, u: usize, v: usize) -> Option<i64> {
        self.w[u * self.n + v]
    }

    pub fn max_abs_weight(&self) -> i64 {
        self.w.iter().flatten().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(w) = self.weight(u, v) {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    /// Three copies of the vertex set with the edge weights between copies.
    /// Zero triangles correspond exactly (up to the six orderings).
    pub fn to_tripartite(&self) -> WeightedTripartite {
        let table = self.w.clone();
        WeightedTripartite { n: self.n, bound: self.max_abs_weight(), w: [table.clone(), table.clone(), table] }
    }
}

/// Least zero triangle `u < v < w` in a general weighted graph.
pub fn detect_zero_triangle_graph(g: &WeightedGraph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let Some(a) = g.weight(u, v) else { continue };
            for w in v + 1..n {
                if let (Some(b), Some(c)) = (g.weight(v, w), g.weight(u, w)) {
                    if a + b + c == 0 {
                        return Some((u, v, w));
                    }
                }
            }
        }
    }
    None
}

/// Tripartite graph on `X, Y, Z` (each of size `n`) with weight tables
/// `w[0] = X×Y`, `w[1] = Y×Z`, `w[2] = Z×X`; `None` marks a missing edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTripartite {
    pub n: usize,
    pub bound: i64,
    pub w: [Vec<Option<i64>>; 3],
}

impl WeightedTripartite {
    pub fn weight(&self, part: usize, u: usize, v: usize) -> Option<i64> {
        self.w[part][u * self.n + v]
    }
}

/// Least `(x, y, z)` with `w(x,y) + w(y,z) + w(z,x) = 0`.
pub fn detect_zero_triangle(g: &WeightedTripartite) -> Option<(usize, usize, usize)> {
    let n = g.n;
    for x in 0..n {
        for y in 0..n {
            let Some(a) = g.weight(0, x, y) else { continue };
            for z in 0..n {
                if let (Some(b), Some(c)) = (g.weight(1, y, z), g.weight(2, z, x)) {
                    if a + b + c == 0 {
                        return Some((x, y, z));
                    }
                }
            }
        }
    }
    None
}
