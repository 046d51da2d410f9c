//! Matching number, covering number, vertex and edge connectivity, and the
//! graph classes defined by them.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{find_bipartition, BitIter, Bipartition, Graph};

/// Largest non-bipartite order handled by the exhaustive matching fallback.
pub const NON_BIPARTITE_MATCHING_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// Bipartite graphs with matching number `value`.
    Matching,
    /// Bipartite graphs with vertex connectivity `value`.
    VertexConnectivity,
    /// Bipartite graphs with edge connectivity `value`.
    EdgeConnectivity,
}

impl ClassKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Matching => "matching",
            ClassKind::VertexConnectivity => "vertex-connectivity",
            ClassKind::EdgeConnectivity => "edge-connectivity",
        }
    }

    /// The class parameter of `g` for this kind.
    pub fn parameter(self, g: &Graph) -> Result<usize> {
        match self {
            ClassKind::Matching => matching_number(g),
            ClassKind::VertexConnectivity => Ok(vertex_connectivity(g)),
            ClassKind::EdgeConnectivity => Ok(edge_connectivity(g)),
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the graph classes `M(n,p)`, `C(n,s)`, `D(n,s)`: bipartite graphs of
/// order `n` whose matching number / connectivity / edge connectivity is `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassDescriptor {
    pub kind: ClassKind,
    pub n: usize,
    pub value: usize,
}

impl ClassDescriptor {
    pub fn new(kind: ClassKind, n: usize, value: usize) -> Result<Self> {
        let ok = match kind {
            ClassKind::Matching => value >= 1 && value <= n / 2,
            ClassKind::VertexConnectivity | ClassKind::EdgeConnectivity => value >= 1 && n >= 2,
        };
        if !ok {
            return Err(Error::InvalidParameters(format!(
                "{kind} class with n={n} and parameter {value} is not defined"
            )));
        }
        Ok(ClassDescriptor { kind, n, value })
    }
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            ClassKind::Matching => 'M',
            ClassKind::VertexConnectivity => 'C',
            ClassKind::EdgeConnectivity => 'D',
        };
        write!(f, "{letter}({},{})", self.n, self.value)
    }
}

/// Size of a maximum matching.
///
/// Bipartite graphs use augmenting paths. Other graphs fall back to an
/// exhaustive search, available up to [`NON_BIPARTITE_MATCHING_LIMIT`] vertices.
pub fn matching_number(g: &Graph) -> Result<usize> {
    match find_bipartition(g) {
        Some(bp) => Ok(bipartite_matching(g, &bp).len()),
        None if g.order() <= NON_BIPARTITE_MATCHING_LIMIT => Ok(matching_exhaustive(g)),
        None => Err(Error::MatchingTooLarge(g.order())),
    }
}

/// Maximum matching of a bipartite graph as `(x, y)` pairs with `x` in `side_x`.
pub fn bipartite_matching(g: &Graph, bp: &Bipartition) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for &x in &bp.side_x {
        let mut visited = 0u64;
        augment(g, x, &mut mate, &mut visited);
    }
    bp.side_x
        .iter()
        .filter_map(|&x| mate[x].map(|y| (x, y)))
        .collect()
}

fn augment(g: &Graph, x: usize, mate: &mut [Option<usize>], visited: &mut u64) -> bool {
    for y in BitIter(g.neighbors_mask(x) & !*visited) {
        *visited |= 1 << y;
        let free = match mate[y] {
            None => true,
            Some(x2) => augment(g, x2, mate, visited),
        };
        if free {
            mate[y] = Some(x);
            mate[x] = Some(y);
            return true;
        }
    }
    false
}

/// Maximum matching by exhaustive recursion over vertex subsets.
fn matching_exhaustive(g: &Graph) -> usize {
    let n = g.order();
    let mut memo = vec![u8::MAX; 1 << n];
    fn solve(g: &Graph, set: u64, memo: &mut [u8]) -> u8 {
        if set.count_ones() < 2 {
            return 0;
        }
        if memo[set as usize] != u8::MAX {
            return memo[set as usize];
        }
        let v = set.trailing_zeros() as usize;
        let rest = set & !(1 << v);
        let mut best = solve(g, rest, memo);
        for w in BitIter(g.neighbors_mask(v) & rest) {
            best = best.max(1 + solve(g, rest & !(1 << w), memo));
        }
        memo[set as usize] = best;
        best
    }
    solve(g, g.all_vertices_mask(), &mut memo) as usize
}

/// Minimum vertex cover of a bipartite graph, derived from a maximum matching
/// by alternating reachability. Returns `(size, cover)` with the cover sorted.
pub fn covering_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let bp = find_bipartition(g).ok_or(Error::NotBipartite)?;
    let matching = bipartite_matching(g, &bp);
    let n = g.order();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    for &(x, y) in &matching {
        mate[x] = Some(y);
        mate[y] = Some(x);
    }

    let mut reached = 0u64;
    let mut queue: VecDeque<usize> = bp.side_x.iter().copied().filter(|&x| mate[x].is_none()).collect();
    for &x in &queue {
        reached |= 1 << x;
    }
    while let Some(x) = queue.pop_front() {
        for y in BitIter(g.neighbors_mask(x) & !reached) {
            if mate[x] == Some(y) {
                continue;
            }
            reached |= 1 << y;
            if let Some(x2) = mate[y] {
                if reached >> x2 & 1 == 0 {
                    reached |= 1 << x2;
                    queue.push_back(x2);
                }
            }
        }
    }

    let cover_mask = (bp.x_mask() & !reached) | (bp.y_mask() & reached);
    let cover: Vec<usize> = BitIter(cover_mask).collect();
    debug_assert_eq!(cover.len(), matching.len());
    Ok((cover.len(), cover))
}

/// True when every edge of `g` has an endpoint in `set`.
pub fn is_vertex_cover(g: &Graph, set: &[usize]) -> bool {
    let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
    g.edges().iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
}

/// Vertex connectivity: the size of a smallest vertex cut, or `n - 1` when no
/// cut exists. Zero for disconnected graphs and for `n = 1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    // delta bounds kappa, and equals n - 1 for complete graphs
    let mut best = g.min_degree();
    let mut network = UnitFlow::new(2 * n);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_vertex_connectivity(g, i, j, best, &mut network));
            }
        }
        i += 1;
    }
    best
}

/// Number of internally disjoint `s`-`t` paths for non-adjacent `s`, `t`, capped at `limit`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize, net: &mut UnitFlow) -> usize {
    let n = g.order();
    net.reset(2 * n);
    // vertex v splits into v_in = 2v and v_out = 2v + 1
    for v in 0..n {
        let through = if v == s || v == t { n as i32 } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, through);
        for w in g.neighbors(v) {
            net.add_arc(2 * v + 1, 2 * w, 1);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Edge connectivity: the size of a smallest edge cut. Zero when disconnected or `n = 1`.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    let mut net = UnitFlow::new(n);
    for t in 1..n {
        net.reset(n);
        for (u, v) in g.edges() {
            net.add_arc(u, v, 1);
            net.add_arc(v, u, 1);
        }
        best = best.min(net.max_flow(0, t, best));
    }
    best
}

/// Dense residual network with small integer capacities.
struct UnitFlow {
    nodes: usize,
    cap: Vec<i32>,
    out: Vec<Vec<usize>>,
}

impl UnitFlow {
    fn new(nodes: usize) -> Self {
        UnitFlow { nodes, cap: vec![0; nodes * nodes], out: vec![Vec::new(); nodes] }
    }

    fn reset(&mut self, nodes: usize) {
        self.nodes = nodes;
        self.cap.clear();
        self.cap.resize(nodes * nodes, 0);
        self.out.resize(nodes, Vec::new());
        for list in &mut self.out {
            list.clear();
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, c: i32) {
        let n = self.nodes;
        if self.cap[u * n + v] == 0 && self.cap[v * n + u] == 0 {
            self.out[u].push(v);
            self.out[v].push(u);
        }
        self.cap[u * n + v] += c;
    }

    /// Edmonds-Karp, stopping once `limit` units are routed.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.nodes;
        let mut flow = 0;
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        while flow < limit {
            parent.fill(usize::MAX);
            parent[s] = s;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                for &v in &self.out[u] {
                    if parent[v] == usize::MAX && self.cap[u * n + v] > 0 {
                        parent[v] = u;
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.cap[u * n + v] -= 1;
                self.cap[v * n + u] += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, join_family, JoinFamilyParams};

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len()).map(move |code| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    fn brute_matching(g: &Graph) -> usize {
        let edges = g.edges();
        (0u64..1 << edges.len())
            .filter(|&sel| {
                let mut used = 0u64;
                BitIter(sel).all(|i| {
                    let (u, v) = edges[i];
                    let ok = used >> u & 1 == 0 && used >> v & 1 == 0;
                    used |= 1 << u | 1 << v;
                    ok
                })
            })
            .map(|sel| sel.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Smallest vertex subset whose removal disconnects `g`, or n - 1.
    fn brute_vertex_connectivity(g: &Graph) -> usize {
        let n = g.order();
        if n == 1 || !g.is_connected() {
            return 0;
        }
        let all = g.all_vertices_mask();
        (0u64..1 << n)
            .filter(|&cut| {
                let rest = all & !cut;
                rest.count_ones() >= 2 && !g.is_connected_within(rest)
            })
            .map(|cut| cut.count_ones() as usize)
            .min()
            .unwrap_or(n - 1)
    }

    fn brute_edge_connectivity(g: &Graph) -> usize {
        let n = g.order();
        if n == 1 || !g.is_connected() {
            return 0;
        }
        // min over vertex bipartitions of the crossing edge count
        let all = g.all_vertices_mask();
        (1u64..all)
            .filter(|s| s & 1 == 1)
            .map(|s| {
                (0..n)
                    .filter(|&v| s >> v & 1 == 1)
                    .map(|v| (g.neighbors_mask(v) & !s & all).count_ones() as usize)
                    .sum::<usize>()
            })
            .min()
            .unwrap()
    }

    #[test]
    fn matching_examples() {
        assert_eq!(matching_number(&complete_bipartite(2, 3).unwrap()), Ok(2));
        assert_eq!(matching_number(&path(4)), Ok(2));
        assert_eq!(matching_number(&Graph::empty(5).unwrap()), Ok(0));
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(matching_number(&triangle), Ok(1));
    }

    #[test]
    fn matching_rejects_large_non_bipartite() {
        let mut edges: Vec<_> = (1..21).map(|i| (i - 1, i)).collect();
        edges.push((0, 2));
        let g = Graph::from_edges(21, &edges).unwrap();
        assert_eq!(matching_number(&g), Err(Error::MatchingTooLarge(21)));
    }

    #[test]
    fn matching_matches_brute_force() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                assert_eq!(matching_number(&g).unwrap(), brute_matching(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn covering_examples() {
        let (size, witness) = covering_number(&complete_bipartite(2, 3).unwrap()).unwrap();
        assert_eq!((size, witness), (2, vec![0, 1]));
        let three = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(covering_number(&three).unwrap().0, 3);
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(covering_number(&triangle), Err(Error::NotBipartite));
    }

    #[test]
    fn konig_equality_all_bipartite_up_to_seven() {
        for n in 1..=7 {
            for g in all_graphs(n).filter(|g| find_bipartition(g).is_some()) {
                let (beta, cover) = covering_number(&g).unwrap();
                assert!(is_vertex_cover(&g, &cover));
                assert_eq!(beta, matching_number(&g).unwrap(), "{g:?}");
            }
        }
    }

    #[test]
    fn cover_witness_is_minimum_on_small_graphs() {
        for n in 1..=5 {
            for g in all_graphs(n).filter(|g| find_bipartition(g).is_some()) {
                let (beta, _) = covering_number(&g).unwrap();
                let brute = (0u64..1 << n)
                    .filter(|&s| is_vertex_cover(&g, &BitIter(s).collect::<Vec<_>>()))
                    .map(|s| s.count_ones() as usize)
                    .min()
                    .unwrap();
                assert_eq!(beta, brute);
            }
        }
    }

    #[test]
    fn connectivity_examples() {
        let k34 = complete_bipartite(3, 4).unwrap();
        assert_eq!(vertex_connectivity(&k34), 3);
        assert_eq!(edge_connectivity(&k34), 3);
        assert_eq!(brute_edge_connectivity(&k34), 3);
        assert_eq!(vertex_connectivity(&path(4)), 1);
        assert_eq!(edge_connectivity(&path(4)), 1);
        assert_eq!(vertex_connectivity(&Graph::empty(1).unwrap()), 0);
        assert_eq!(vertex_connectivity(&complete_bipartite(1, 1).unwrap()), 1);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&k4), 3);
    }

    #[test]
    fn join_family_connectivity_example() {
        let g = join_family(JoinFamilyParams::new(2, 3, 2).unwrap());
        assert_eq!(g.order(), 8);
        assert_eq!(brute_vertex_connectivity(&g), 2);
        assert_eq!(vertex_connectivity(&g), 2);
    }

    #[test]
    fn connectivity_matches_brute_force_and_whitney_chain() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                let kappa = vertex_connectivity(&g);
                let lambda = edge_connectivity(&g);
                assert_eq!(kappa, brute_vertex_connectivity(&g), "{g:?}");
                assert_eq!(lambda, brute_edge_connectivity(&g), "{g:?}");
                if g.is_connected() {
                    assert!(kappa <= lambda && lambda <= g.min_degree(), "{g:?}");
                }
            }
        }
    }

    #[test]
    fn class_descriptor_validation() {
        assert!(ClassDescriptor::new(ClassKind::Matching, 6, 3).is_ok());
        assert!(ClassDescriptor::new(ClassKind::Matching, 6, 4).is_err());
        assert!(ClassDescriptor::new(ClassKind::Matching, 6, 0).is_err());
        assert!(ClassDescriptor::new(ClassKind::VertexConnectivity, 6, 0).is_err());
        assert!(ClassDescriptor::new(ClassKind::EdgeConnectivity, 6, 5).is_ok());
        let c = ClassDescriptor::new(ClassKind::VertexConnectivity, 7, 1).unwrap();
        assert_eq!(c.to_string(), "C(7,1)");
    }
}
