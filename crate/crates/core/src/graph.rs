//! Graphical arrangements at the level of graded dimensions.
//!
//! For a connected graph of rank `r = n - 1` with characteristic polynomial
//! `χ(t) = P(t)/t`, the broken-circuit `f`-polynomial is
//! `f(q) = (-q)^r χ(-1/q)` and the `h`-polynomial is
//! `h(q) = (1-q)^r f(q/(1-q))`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::QSeries;

/// Integer polynomial, coefficients in ascending degree.
pub type IntPoly = Vec<BigInt>;

type MemoKey = (usize, Vec<u64>);

pub const MAX_VERTICES: usize = 64;

/// A simple graph on vertices `0..n`, stored as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Graph(format!(
                "graphs are limited to {MAX_VERTICES} vertices, got {n}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from 0-indexed edges. Repeated edges collapse; loops are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Graph(format!(
                    "edge {}-{} references a vertex outside 1..={n}",
                    a + 1,
                    b + 1
                )));
            }
            if a == b {
                return Err(Error::Graph(format!("loop at vertex {}", a + 1)));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    /// Parses one `i j` pair per line, 1-indexed. Pairs may also be separated
    /// by `,` or `;` and written `i-j`, so `1-2,2-3` is a path. Blank lines and
    /// text after `#` are ignored. The vertex count is the largest index seen unless
    /// `vertices` is given.
    pub fn parse_edge_list(text: &str, vertices: Option<usize>) -> Result<Self> {
        let mut edges = Vec::new();
        let records = text.lines().enumerate().flat_map(|(lineno, line)| {
            let body = line.split('#').next().unwrap_or("");
            body.split([',', ';']).map(move |r| (lineno, r.trim()))
        });
        for (lineno, line) in records {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line
                .split(|c: char| c.is_whitespace() || c == '-')
                .filter(|s| !s.is_empty())
                .collect();
            let parse = |s: &str| -> Result<usize> {
                match s.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::Graph(format!(
                        "line {}: expected a 1-indexed vertex, found {s:?}",
                        lineno + 1
                    ))),
                }
            };
            match fields.as_slice() {
                [a, b] => edges.push((parse(a)?, parse(b)?)),
                _ => {
                    return Err(Error::Graph(format!(
                        "line {}: expected `i j`, found {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        let seen = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
        let n = vertices.unwrap_or(seen.max(1));
        Self::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.adj[v] = mask_below(n) & !(1 << v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    /// Edges `(a, b)` with `a < b`, 0-indexed, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push((0..self.n).filter(|&v| comp >> v & 1 == 1).collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn require_connected(&self) -> Result<()> {
        let comps = self.components();
        if comps.len() <= 1 && self.n > 0 {
            return Ok(());
        }
        let shown: Vec<String> = comps
            .iter()
            .map(|c| {
                let vs: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        Err(Error::Graph(format!(
            "graph is disconnected; components: {}",
            shown.join(" ")
        )))
    }

    /// Adds vertex `n` adjacent to every existing vertex.
    pub fn cone(&self) -> Result<Graph> {
        let mut g = Self::empty(self.n + 1)?;
        for v in 0..self.n {
            g.adj[v] = self.adj[v] | 1 << self.n;
        }
        g.adj[self.n] = mask_below(self.n);
        Ok(g)
    }

    fn without_edge(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        g.adj[a] &= !(1 << b);
        g.adj[b] &= !(1 << a);
        g
    }

    /// Identifies `b` with `a`, keeping the graph simple.
    fn contract(&self, a: usize, b: usize) -> Graph {
        let mut merged = self.adj.clone();
        merged[a] |= merged[b];
        merged[a] &= !(1 << a) & !(1 << b);
        for row in merged.iter_mut().take(self.n) {
            if *row >> b & 1 == 1 {
                *row = (*row & !(1 << b)) | (1 << a);
            }
        }
        merged[a] &= !(1 << a);
        let adj = (0..self.n)
            .filter(|&v| v != b)
            .map(|v| drop_bit(merged[v], b))
            .collect();
        Graph { n: self.n - 1, adj }
    }

    fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph {
            n: vertices.len(),
            adj: vec![0; vertices.len()],
        };
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                if self.has_edge(a, b) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Relabeling by a degree-refined vertex order. Isomorphic graphs usually,
    /// but not always, map to the same key; only the memo hit rate depends on it.
    fn canonical_key(&self) -> (usize, Vec<u64>) {
        let mut order: Vec<usize> = (0..self.n).collect();
        let signature = |v: usize| {
            let mut nbr: Vec<usize> = (0..self.n)
                .filter(|&w| self.has_edge(v, w))
                .map(|w| self.degree(w))
                .collect();
            nbr.sort_unstable();
            (self.degree(v), nbr)
        };
        let sigs: Vec<_> = (0..self.n).map(signature).collect();
        order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]).then(a.cmp(&b)));
        let mut pos = vec![0; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; self.n];
        for (i, &v) in order.iter().enumerate() {
            for (w, &p) in pos.iter().enumerate().take(self.n) {
                if self.has_edge(v, w) {
                    adj[i] |= 1 << p;
                }
            }
        }
        (self.n, adj)
    }
}

impl fmt::Display for Graph {
    /// 1-indexed edge list such as `1-2,2-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
            .collect();
        write!(f, "n={} [{}]", self.n, edges.join(","))
    }
}

fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn drop_bit(mask: u64, b: usize) -> u64 {
    let low = mask & mask_below(b);
    let high = if b >= 63 { 0 } else { (mask >> (b + 1)) << b };
    low | high
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn ints(c: &[i64]) -> IntPoly {
    c.iter().map(|&x| BigInt::from(x)).collect()
}

/// `t(t-1)...(t-n+1)`.
fn falling_factorial(n: usize) -> IntPoly {
    (0..n).fold(ints(&[1]), |acc, k| poly_mul(&acc, &ints(&[-(k as i64), 1])))
}

/// Deletion–contraction with a memo on degree-refined labelings. Safe to
/// share across threads.
#[derive(Default)]
pub struct ChromaticMemo {
    table: RwLock<HashMap<MemoKey, Arc<IntPoly>>>,
}

impl ChromaticMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `P(Γ, t)`, coefficients ascending in `t`.
    pub fn chromatic(&self, g: &Graph) -> IntPoly {
        (*self.chromatic_arc(g)).clone()
    }

    fn chromatic_arc(&self, g: &Graph) -> Arc<IntPoly> {
        let m = g.edge_count();
        let n = g.n;
        if m == 0 {
            let mut p = vec![BigInt::zero(); n + 1];
            p[n] = BigInt::one();
            return Arc::new(p);
        }
        if m == n * (n - 1) / 2 {
            return Arc::new(falling_factorial(n));
        }
        let comps = g.components();
        if comps.len() > 1 {
            let p = comps.iter().fold(ints(&[1]), |acc, c| {
                poly_mul(&acc, &self.chromatic_arc(&g.induced(c)))
            });
            return Arc::new(p);
        }
        if m == n - 1 {
            // tree: t (t-1)^{n-1}
            let p = (1..n).fold(ints(&[0, 1]), |acc, _| poly_mul(&acc, &ints(&[-1, 1])));
            return Arc::new(p);
        }
        let key = g.canonical_key();
        if let Some(p) = self.table.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return p.clone();
        }
        let a = (0..n)
            .filter(|&v| g.degree(v) > 0)
            .min_by_key(|&v| g.degree(v))
            .expect("graph has edges");
        let b = g.adj[a].trailing_zeros() as usize;
        let deleted = self.chromatic_arc(&g.without_edge(a, b));
        let contracted = self.chromatic_arc(&g.contract(a, b));
        let p = Arc::new(poly_sub(&deleted, &contracted));
        self.table
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .entry(key)
            .or_insert(p)
            .clone()
    }

    /// Exact broken-circuit `f`-polynomial, degree `n - 1`.
    pub fn f_polynomial(&self, g: &Graph) -> Result<IntPoly> {
        g.require_connected()?;
        let p = self.chromatic_arc(g);
        let r = g.n - 1;
        // χ(t) = P(t)/t: drop the vanishing constant term.
        debug_assert!(p[0].is_zero());
        Ok((0..=r)
            .map(|k| {
                let a = &p[r - k + 1];
                if k % 2 == 0 {
                    a.clone()
                } else {
                    -a
                }
            })
            .collect())
    }

    /// Exact broken-circuit `h`-polynomial.
    pub fn h_polynomial(&self, g: &Graph) -> Result<IntPoly> {
        let f = self.f_polynomial(g)?;
        let r = f.len() - 1;
        let mut h = vec![BigInt::zero()];
        for (k, fk) in f.iter().enumerate() {
            let mut term = vec![BigInt::zero(); k + 1];
            term[k] = fk.clone();
            for _ in 0..r - k {
                term = poly_mul(&term, &ints(&[1, -1]));
            }
            h = poly_sub(&h, &term.iter().map(|x| -x).collect::<Vec<_>>());
        }
        while h.len() > 1 && h.last().is_some_and(Zero::is_zero) {
            h.pop();
        }
        Ok(h)
    }

    pub fn f_poly(&self, g: &Graph, cap: usize) -> Result<QSeries> {
        Ok(QSeries::from_ints(self.f_polynomial(g)?, cap))
    }

    pub fn h_poly(&self, g: &Graph, cap: usize) -> Result<QSeries> {
        Ok(QSeries::from_ints(self.h_polynomial(g)?, cap))
    }

    /// `h` of the cone equals `f` of the graph.
    pub fn cone_identity(&self, g: &Graph) -> Result<bool> {
        Ok(self.h_polynomial(&g.cone()?)? == self.f_polynomial(g)?)
    }
}

fn shared() -> &'static ChromaticMemo {
    static MEMO: LazyLock<ChromaticMemo> = LazyLock::new(ChromaticMemo::new);
    &MEMO
}

/// `P(Γ, t)` using the process-wide memo.
pub fn chromatic_polynomial(g: &Graph) -> IntPoly {
    shared().chromatic(g)
}

pub fn f_poly(g: &Graph, cap: usize) -> Result<QSeries> {
    shared().f_poly(g, cap)
}

pub fn h_poly(g: &Graph, cap: usize) -> Result<QSeries> {
    shared().h_poly(g, cap)
}

pub fn f_polynomial(g: &Graph) -> Result<IntPoly> {
    shared().f_polynomial(g)
}

pub fn h_polynomial(g: &Graph) -> Result<IntPoly> {
    shared().h_polynomial(g)
}

pub fn cone(g: &Graph) -> Result<Graph> {
    g.cone()
}

/// Every connected labeled graph on `n` vertices, by edge-subset bitmask.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "exhaustive enumeration is limited to 8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).filter_map(move |bits| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("valid edges");
        g.is_connected().then_some(g)
    })
}

/// Formats an integer polynomial in `q` like `1 + 2q + q^2`.
pub fn format_poly(p: &[BigInt]) -> String {
    let mut out = String::new();
    for (d, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        let mono = match d {
            0 => String::new(),
            1 => "q".into(),
            _ => format!("q^{d}"),
        };
        if mag.is_one() && d > 0 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
