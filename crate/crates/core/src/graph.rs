//! Simple undirected graphs on at most 62 vertices, stored as one `u64`
//! neighbourhood mask per vertex.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order (one graph6 size byte).
pub const MAX_ORDER: usize = 62;

/// Immutable simple undirected graph with vertices `0..n`.
///
/// Row `i` holds the neighbourhood of vertex `i` as a bit mask; the matrix is
/// symmetric with an empty diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { rows: vec![0; n] })
    }

    /// Builds a graph from an edge list. Loops are rejected, repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameters(format!("self-loop at vertex {u}")));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { rows })
    }

    /// Builds a graph from neighbourhood masks, checking symmetry and the diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let valid = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::InvalidParameters(format!(
                    "row {i} has bits beyond vertex {}",
                    n - 1
                )));
            }
            if row >> i & 1 == 1 {
                return Err(Error::InvalidParameters(format!("self-loop at vertex {i}")));
            }
            let mut bits = row;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::InvalidParameters(format!(
                        "adjacency not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Graph { rows })
    }

    /// Unchecked constructor for hot loops that build symmetric rows by construction.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { rows }
    }

    /// Bipartite graph with left vertices `0..a` and right vertices `a..a+b`;
    /// `bits[i][j]` adds the edge `(i, a + j)`.
    pub fn from_biadjacency(a: usize, b: usize, bits: &[Vec<bool>]) -> Result<Self> {
        let n = a + b;
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let shape_ok = bits.len() == a && bits.iter().all(|r| r.len() == b);
        if !shape_ok {
            return Err(Error::BiadjacencyShape {
                rows: bits.len(),
                cols: bits.first().map_or(0, Vec::len),
                expected_rows: a,
                expected_cols: b,
            });
        }
        let mut rows = vec![0u64; n];
        for (i, row) in bits.iter().enumerate() {
            for (j, &set) in row.iter().enumerate() {
                if set {
                    rows[i] |= 1 << (a + j);
                    rows[a + j] |= 1 << i;
                }
            }
        }
        Ok(Graph { rows })
    }

    /// Same as [`Graph::from_biadjacency`] with the bits packed row-major into
    /// an integer: bit `i * b + j` is the pair `(i, a + j)`. Requires `a * b <= 64`.
    pub fn from_biadjacency_mask(a: usize, b: usize, mask: u64) -> Result<Self> {
        let n = a + b;
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        if a * b > 64 || (a * b < 64 && mask >> (a * b) != 0) {
            return Err(Error::InvalidParameters(format!(
                "mask {mask:#x} does not fit a {a}x{b} biadjacency"
            )));
        }
        Ok(Graph { rows: biadjacency_rows(a, b, mask) })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.rows[v])
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in BitIter(self.rows[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn all_vertices_mask(&self) -> u64 {
        low_mask(self.order())
    }

    /// Copy with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        if u == v {
            return Err(Error::InvalidParameters(format!("self-loop at vertex {u}")));
        }
        let mut rows = self.rows.clone();
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        Ok(Graph { rows })
    }

    /// Copy with vertex `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(Error::InvalidParameters("permutation length differs from order".into()));
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { rows })
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.order() + other.order();
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let shift = self.order();
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << shift));
        Ok(Graph { rows })
    }

    /// Vertices reachable from `start` without entering `removed`.
    pub(crate) fn reach_within(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True when the subgraph induced on `allowed` is connected (vacuously true if empty).
    pub(crate) fn is_connected_within(&self, allowed: u64) -> bool {
        if allowed == 0 {
            return true;
        }
        let start = allowed.trailing_zeros() as usize;
        self.reach_within(start, allowed) == allowed
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.all_vertices_mask())
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut left = self.all_vertices_mask();
        let mut count = 0;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            left &= !self.reach_within(start, left);
            count += 1;
        }
        count
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
        set.iter().all(|&v| self.rows[v] & mask == 0)
    }

    /// Dense 0/1 adjacency as `f64`, row-major.
    pub fn adjacency_f64(&self) -> Vec<f64> {
        let n = self.order();
        let mut a = vec![0.0; n * n];
        for (i, &row) in self.rows.iter().enumerate() {
            for j in BitIter(row) {
                a[i * n + j] = 1.0;
            }
        }
        a
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Two-colouring of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_x: Vec<usize>,
    pub side_y: Vec<usize>,
}

impl Bipartition {
    pub fn x_mask(&self) -> u64 {
        self.side_x.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn y_mask(&self) -> u64 {
        self.side_y.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// Breadth-first two-colouring. Within each component the side holding the
/// lowest-index vertex becomes `side_x`. Returns `None` on an odd cycle.
pub fn find_bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (x, y): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| color[v] == Some(false));
    Some(Bipartition { side_x: x, side_y: y })
}

pub fn is_bipartite(g: &Graph) -> bool {
    find_bipartition(g).is_some()
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Neighbourhood masks of the bipartite graph encoded by a row-major biadjacency mask.
#[inline]
pub(crate) fn biadjacency_rows(a: usize, b: usize, mask: u64) -> Vec<u64> {
    let mut rows = vec![0u64; a + b];
    let row_mask = low_mask(b);
    for i in 0..a {
        let bits = (mask >> (i * b)) & row_mask;
        rows[i] = bits << a;
        for j in BitIter(bits) {
            rows[a + j] |= 1 << i;
        }
    }
    rows
}

/// Iterator over set bit positions, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}
