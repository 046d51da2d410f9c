//! Constructors for the named bipartite families: complete bipartite graphs,
//! the one-sided joins `O_s v1 (K_1 u K_{p,q})` and `O_s v1 (K_{n1,n2} u K_{m1,m2})`,
//! and the cover-partition graphs `G*` and `G**`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{find_bipartition, Graph, MAX_ORDER};
use crate::invariants::covering_number;
use crate::walks::IdentificationScheme;

/// `K_{p,q}` with the `p` side first.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    let n = p + q;
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut edges = Vec::with_capacity(p * q);
    for x in 0..p {
        for y in p..n {
            edges.push((x, y));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Parameters of `O_s v1 (K_1 u K_{p,q})`: an empty graph on `s` vertices
/// joined to a single vertex `u` and to the `p` side of `K_{p,q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JoinFamilyParams {
    pub s: usize,
    pub p: usize,
    pub q: usize,
}

impl JoinFamilyParams {
    pub fn new(s: usize, p: usize, q: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameters("join set size s must be at least 1".into()));
        }
        let params = JoinFamilyParams { s, p, q };
        if params.order() > MAX_ORDER {
            return Err(Error::OrderOutOfRange(params.order()));
        }
        Ok(params)
    }

    pub fn order(&self) -> usize {
        self.s + self.p + self.q + 1
    }

    pub fn edge_count(&self) -> usize {
        self.s + self.s * self.p + self.p * self.q
    }
}

/// `O_s v1 (K_1 u K_{p,q})`. Vertex order: `u`, then `O_s`, then the `p`
/// side, then the `q` side. With `q = 0` this is `K_{s, p+1}`.
pub fn join_family(params: JoinFamilyParams) -> Graph {
    let JoinFamilyParams { s, p, q } = params;
    let n = params.order();
    let o = 1..1 + s;
    let p_side = 1 + s..1 + s + p;
    let q_side = 1 + s + p..n;
    let mut edges = Vec::with_capacity(params.edge_count());
    for x in o.clone() {
        edges.push((0, x));
        for y in p_side.clone() {
            edges.push((x, y));
        }
    }
    for x in p_side {
        for y in q_side.clone() {
            edges.push((x, y));
        }
    }
    debug_assert_eq!(edges.len(), s + s * p + p * q);
    Graph::from_edges(n, &edges).expect("order validated by JoinFamilyParams")
}

/// `O_s v1 (K_{n1,n2} u K_{m1,m2})`: `O_s` is joined to the `n1` side and the
/// `m1` side. Vertex order: `n1` side, `n2` side, `O_s`, `m1` side, `m2` side,
/// so `(s, 1, 0, m1, m2)` reproduces the labelling of `join_family(s, m1, m2)`.
pub fn join_family_double(s: usize, n1: usize, n2: usize, m1: usize, m2: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::InvalidParameters("join set size s must be at least 1".into()));
    }
    let n = s + n1 + n2 + m1 + m2;
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let a = 0..n1;
    let b = n1..n1 + n2;
    let o = n1 + n2..n1 + n2 + s;
    let c = o.end..o.end + m1;
    let d = c.end..n;
    let mut edges = Vec::new();
    let mut complete = |xs: std::ops::Range<usize>, ys: std::ops::Range<usize>| {
        for x in xs {
            for y in ys.clone() {
                edges.push((x, y));
            }
        }
    };
    complete(a.clone(), b);
    complete(c.clone(), d);
    complete(o.clone(), a);
    complete(o, c);
    Graph::from_edges(n, &edges)
}

/// The four sets `X1, X2, Y1, Y2` obtained from a minimum cover `S` of a
/// bipartite graph `G[X, Y]`: `X1 = S n X`, `Y1 = S n Y` and the complements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverPartition {
    pub x1: Vec<usize>,
    pub x2: Vec<usize>,
    pub y1: Vec<usize>,
    pub y2: Vec<usize>,
}

impl CoverPartition {
    /// Validates disjointness, that the sets exhaust `0..n` for some `n`, and `|X1| >= |Y1|`.
    pub fn new(x1: Vec<usize>, x2: Vec<usize>, y1: Vec<usize>, y2: Vec<usize>) -> Result<Self> {
        if x1.len() < y1.len() {
            return Err(Error::CoverImbalance { x1: x1.len(), y1: y1.len() });
        }
        let n = x1.len() + x2.len() + y1.len() + y2.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut seen = 0u64;
        for &v in x1.iter().chain(&x2).chain(&y1).chain(&y2) {
            if v >= n || seen >> v & 1 == 1 {
                return Err(Error::InvalidParameters(format!(
                    "cover partition sets must be disjoint and cover 0..{n} (vertex {v})"
                )));
            }
            seen |= 1 << v;
        }
        Ok(CoverPartition { x1, x2, y1, y2 })
    }

    /// Canonical layout: `X1`, `X2`, `Y1`, `Y2` as consecutive label ranges.
    pub fn from_sizes(x1: usize, x2: usize, y1: usize, y2: usize) -> Result<Self> {
        let mut next = 0;
        let mut take = |k: usize| {
            let r: Vec<usize> = (next..next + k).collect();
            next += k;
            r
        };
        let (a, b, c, d) = (take(x1), take(x2), take(y1), take(y2));
        CoverPartition::new(a, b, c, d)
    }

    /// Partition induced on `g` by a minimum vertex cover. Sides are swapped
    /// when needed so that `|X1| >= |Y1|`.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let bp = find_bipartition(g).ok_or(Error::NotBipartite)?;
        let (_, cover) = covering_number(g)?;
        let in_cover = cover.iter().fold(0u64, |m, &v| m | 1 << v);
        let split = |side: &[usize]| -> (Vec<usize>, Vec<usize>) {
            side.iter().partition(|&&v| in_cover >> v & 1 == 1)
        };
        let (mut x1, mut x2) = split(&bp.side_x);
        let (mut y1, mut y2) = split(&bp.side_y);
        if x1.len() < y1.len() {
            std::mem::swap(&mut x1, &mut y1);
            std::mem::swap(&mut x2, &mut y2);
        }
        CoverPartition::new(x1, x2, y1, y2)
    }

    pub fn order(&self) -> usize {
        self.x1.len() + self.x2.len() + self.y1.len() + self.y2.len()
    }

    pub fn sizes(&self) -> (usize, usize, usize, usize) {
        (self.x1.len(), self.x2.len(), self.y1.len(), self.y2.len())
    }
}

fn complete_between(edges: &mut Vec<(usize, usize)>, xs: &[usize], ys: &[usize]) {
    for &x in xs {
        for &y in ys {
            edges.push((x, y));
        }
    }
}

/// `G*`: edges `X1 x (Y1 u Y2)` and `X2 x Y1`.
pub fn g_star(part: &CoverPartition) -> Graph {
    let mut edges = Vec::new();
    complete_between(&mut edges, &part.x1, &part.y1);
    complete_between(&mut edges, &part.x1, &part.y2);
    complete_between(&mut edges, &part.x2, &part.y1);
    Graph::from_edges(part.order(), &edges).expect("validated partition")
}

/// `G** = G* - X2 x Y1 + X2 x X1`, i.e. edges `X1 x (Y1 u Y2 u X2)`; isomorphic
/// to `K_{|X1|, n - |X1|}`.
pub fn g_double_star(part: &CoverPartition) -> Graph {
    let mut edges = Vec::new();
    complete_between(&mut edges, &part.x1, &part.y1);
    complete_between(&mut edges, &part.x1, &part.y2);
    complete_between(&mut edges, &part.x1, &part.x2);
    Graph::from_edges(part.order(), &edges).expect("validated partition")
}

/// Decompositions `G* = G1 u_s G2` and `G** = G1 u_s G2'` along `S = X1`, where
/// `G1 = K_{|X1|,|Y2|}`, `G2 = K_{|X1|+|X2|, |Y1|}` and `G2' = K_{|X1|, |Y1|+|X2|}`.
pub fn cover_partition_schemes(
    part: &CoverPartition,
) -> Result<(IdentificationScheme, IdentificationScheme)> {
    let (x1, x2, y1, y2) = part.sizes();
    if x1 == 0 {
        return Err(Error::InvalidParameters("X1 must be nonempty to identify along it".into()));
    }
    let shared: Vec<usize> = (0..x1).collect();
    let g1 = complete_bipartite(x1, y2)?;
    let g2 = complete_bipartite(x1 + x2, y1)?;
    let g2_prime = complete_bipartite(x1, y1 + x2)?;
    let star = IdentificationScheme::new(g1.clone(), shared.clone(), g2, shared.clone())?;
    let double = IdentificationScheme::new(g1, shared.clone(), g2_prime, shared)?;
    Ok((star, double))
}

/// Decomposition of `O_s v1 (K_1 u K_{p,q})` as `K_{1,s} u_s K_{s+q,p}`,
/// identifying the leaves of the star with the `O_s` part of the `s+q` side.
pub fn join_family_scheme(params: JoinFamilyParams) -> Result<IdentificationScheme> {
    let JoinFamilyParams { s, p, q } = params;
    let star = complete_bipartite(1, s)?;
    let body = complete_bipartite(s + q, p)?;
    IdentificationScheme::new(star, (1..=s).collect(), body, (0..s).collect())
}

/// Predicted extremal member of the connectivity classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum JoinSplit {
    /// `p = floor((n-1)/2)`, `q = ceil((n-1)/2) - s`.
    #[default]
    FloorFirst,
    /// `p = ceil((n-1)/2)`, `q = floor((n-1)/2) - s`, falling back to
    /// `K_{s, n-s}` when that `q` would be negative and `s <= n/2`.
    CeilFirst,
}

impl JoinSplit {
    /// Join parameters for order `n` and join size `s`, or `None` when the
    /// formula leaves the valid range.
    pub fn params(self, n: usize, s: usize) -> Option<JoinFamilyParams> {
        if s == 0 || n < s + 1 {
            return None;
        }
        let floor = (n - 1) / 2;
        let ceil = n / 2;
        let (p, q) = match self {
            JoinSplit::FloorFirst => (floor, ceil.checked_sub(s)?),
            JoinSplit::CeilFirst => match floor.checked_sub(s) {
                Some(q) => (ceil, q),
                None if s <= n / 2 => (n - 1 - s, 0),
                None => return None,
            },
        };
        JoinFamilyParams::new(s, p, q).ok().filter(|jp| jp.order() == n)
    }
}
