//! Exact vertex-to-vertex walk counts, twin vertices, identification of
//! independent sets (`G1 u_s G2`) and a checker for moment dominance across
//! such identifications.
//!
//! Everything here is exact integer arithmetic.

use std::cmp::Ordering;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::spectral::{BigMatrix, MOMENT_BUDGET};

/// `counts[k][u][v]` is the number of `u`-`v` walks of length `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCountTable {
    pub n: usize,
    pub counts: Vec<BigMatrix>,
}

impl WalkCountTable {
    pub fn cutoff(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, k: usize, u: usize, v: usize) -> &BigUint {
        self.counts[k].get(u, v)
    }

    /// Closed walks of length `k`.
    pub fn moment(&self, k: usize) -> BigUint {
        self.counts[k].trace()
    }
}

/// Tables for all lengths `0..=cutoff`, by repeated multiplication with the adjacency.
pub fn walk_counts(g: &Graph, cutoff: usize) -> Result<WalkCountTable> {
    if cutoff > MOMENT_BUDGET {
        return Err(Error::WalkBudget { k: cutoff, max: MOMENT_BUDGET });
    }
    let mut counts = Vec::with_capacity(cutoff + 1);
    counts.push(BigMatrix::identity(g.order()));
    for k in 0..cutoff {
        let next = counts[k].times_adjacency(g);
        counts.push(next);
    }
    Ok(WalkCountTable { n: g.order(), counts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwinVerdict {
    pub cutoff: usize,
    /// First length at which the four anchored counts disagree.
    pub first_violation: Option<usize>,
}

/// For `u`, `v` with identical neighbourhoods, checks
/// `M_k(u,u) = M_k(v,v) = M_k(u,v) = M_k(v,u)` for every `k` in `1..=cutoff`.
pub fn twin_check(g: &Graph, u: usize, v: usize, cutoff: usize) -> Result<TwinVerdict> {
    let n = g.order();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(Error::InvalidParameters("twin check needs two distinct vertices".into()));
    }
    if g.has_edge(u, v) {
        return Err(Error::TwinsAdjacent { u, v });
    }
    let diff = g.neighbors_mask(u) ^ g.neighbors_mask(v);
    if diff != 0 {
        return Err(Error::NotTwins { u, v, witness: diff.trailing_zeros() as usize });
    }
    let table = walk_counts(g, cutoff)?;
    let first_violation = (1..=cutoff).find(|&k| {
        let uu = table.get(k, u, u);
        uu != table.get(k, v, v) || uu != table.get(k, u, v) || uu != table.get(k, v, u)
    });
    Ok(TwinVerdict { cutoff, first_violation })
}

/// Data for `G1 u_s G2`: vertex `s1[i]` of `g1` is identified with `s2[i]` of `g2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentificationScheme {
    pub g1: Graph,
    pub s1: Vec<usize>,
    pub g2: Graph,
    pub s2: Vec<usize>,
}

impl IdentificationScheme {
    pub fn new(g1: Graph, s1: Vec<usize>, g2: Graph, s2: Vec<usize>) -> Result<Self> {
        if s1.len() != s2.len() {
            return Err(Error::SizeMismatch(s1.len(), s2.len()));
        }
        if s1.is_empty() {
            return Err(Error::InvalidParameters("identification needs s >= 1".into()));
        }
        check_independent(&g1, &s1, "G1")?;
        check_independent(&g2, &s2, "G2")?;
        let n = g1.order() + g2.order() - s1.len();
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(IdentificationScheme { g1, s1, g2, s2 })
    }

    pub fn s(&self) -> usize {
        self.s1.len()
    }

    pub fn order(&self) -> usize {
        self.g1.order() + self.g2.order() - self.s()
    }
}

fn check_independent(g: &Graph, set: &[usize], graph: &'static str) -> Result<()> {
    let mut seen = 0u64;
    for &v in set {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
        }
        if seen >> v & 1 == 1 {
            return Err(Error::RepeatedVertex { graph, vertex: v });
        }
        seen |= 1 << v;
    }
    for &v in set {
        let clash = g.neighbors_mask(v) & seen;
        if clash != 0 {
            return Err(Error::NotIndependent { graph, u: v, v: clash.trailing_zeros() as usize });
        }
    }
    Ok(())
}

/// Position of each `g2` vertex in `G1 u_s G2`: identified vertices map onto
/// their `g1` partners, the rest are appended after `g1` in `g2` order.
fn g2_labels(scheme: &IdentificationScheme) -> Vec<usize> {
    let mut label = vec![usize::MAX; scheme.g2.order()];
    for (&a, &b) in scheme.s1.iter().zip(&scheme.s2) {
        label[b] = a;
    }
    let mut next = scheme.g1.order();
    for l in label.iter_mut().filter(|l| **l == usize::MAX) {
        *l = next;
        next += 1;
    }
    label
}

/// `G1 u_s G2`. `G1` keeps its labels; the unidentified `G2` vertices follow in `G2` order.
pub fn identify_union(scheme: &IdentificationScheme) -> Graph {
    let label = g2_labels(scheme);
    let mut edges = scheme.g1.edges();
    edges.extend(scheme.g2.edges().into_iter().map(|(u, v)| (label[u], label[v])));
    Graph::from_edges(scheme.order(), &edges).expect("scheme order validated")
}

/// Outcome of [`dominance_check`], all with exact counts over `k = 1..=cutoff`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominanceReport {
    pub cutoff: usize,
    /// `M_k(G1) <= M_k(G1')` and `M_k(G2) <= M_k(G2')`.
    pub whole_graph_premise: bool,
    /// `M_k(G1; v_i, v_j) <= M_k(G1'; v_i', v_j')` and likewise for `G2`, all `i, j`.
    pub anchored_premise: bool,
    /// Some premise inequality is strict.
    pub premise_strict: bool,
    /// First `k` with `M_k(G) > M_k(G')`.
    pub conclusion_violation: Option<usize>,
    /// First `k` with `M_k(G) < M_k(G')`.
    pub conclusion_strict_at: Option<usize>,
}

impl DominanceReport {
    pub fn premises_hold(&self) -> bool {
        self.whole_graph_premise && self.anchored_premise
    }
}

/// Compares `G = G1 u_s G2` (from `lhs`) with `G' = G1' u_s G2'` (from `rhs`).
pub fn dominance_check(
    lhs: &IdentificationScheme,
    rhs: &IdentificationScheme,
    cutoff: usize,
) -> Result<DominanceReport> {
    if lhs.s() != rhs.s() {
        return Err(Error::SizeMismatch(lhs.s(), rhs.s()));
    }
    let tables = |scheme: &IdentificationScheme| -> Result<(WalkCountTable, WalkCountTable)> {
        Ok((walk_counts(&scheme.g1, cutoff)?, walk_counts(&scheme.g2, cutoff)?))
    };
    let (l1, l2) = tables(lhs)?;
    let (r1, r2) = tables(rhs)?;

    let mut whole = true;
    let mut anchored = true;
    let mut strict = false;
    let mut note = |ord: Ordering, flag: &mut bool| match ord {
        Ordering::Greater => *flag = false,
        Ordering::Less => strict = true,
        Ordering::Equal => {}
    };
    let s = lhs.s();
    for k in 1..=cutoff {
        note(l1.moment(k).cmp(&r1.moment(k)), &mut whole);
        note(l2.moment(k).cmp(&r2.moment(k)), &mut whole);
        for i in 0..s {
            for j in 0..s {
                let a = l1.get(k, lhs.s1[i], lhs.s1[j]).cmp(r1.get(k, rhs.s1[i], rhs.s1[j]));
                note(a, &mut anchored);
                let b = l2.get(k, lhs.s2[i], lhs.s2[j]).cmp(r2.get(k, rhs.s2[i], rhs.s2[j]));
                note(b, &mut anchored);
            }
        }
    }

    let g = walk_counts(&identify_union(lhs), cutoff)?;
    let h = walk_counts(&identify_union(rhs), cutoff)?;
    let mut violation = None;
    let mut strict_at = None;
    for k in 1..=cutoff {
        match g.moment(k).cmp(&h.moment(k)) {
            Ordering::Greater if violation.is_none() => violation = Some(k),
            Ordering::Less if strict_at.is_none() => strict_at = Some(k),
            _ => {}
        }
    }
    Ok(DominanceReport {
        cutoff,
        whole_graph_premise: whole,
        anchored_premise: anchored,
        premise_strict: strict,
        conclusion_violation: violation,
        conclusion_strict_at: strict_at,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        complete_bipartite, cover_partition_schemes, join_family_scheme, CoverPartition,
        JoinFamilyParams,
    };
    use crate::spectral::spectral_moment_exact;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn table_basics() {
        let g = path(5);
        let t = walk_counts(&g, 6).unwrap();
        for u in 0..5 {
            assert_eq!(t.get(2, u, u), &BigUint::from(g.degree(u)));
            for v in 0..5 {
                assert_eq!(t.get(0, u, v), &BigUint::from((u == v) as u8));
                assert_eq!(t.get(1, u, v), &BigUint::from(g.has_edge(u, v) as u8));
                for k in 0..=6 {
                    assert_eq!(t.get(k, u, v), t.get(k, v, u));
                }
            }
        }
        for k in 0..=6 {
            assert_eq!(t.moment(k), spectral_moment_exact(&g, k).unwrap());
        }
        assert!(walk_counts(&g, 65).is_err());
    }

    #[test]
    fn complete_bipartite_anchored_example() {
        // K_{2,3}, two left vertices, k = 2: 2^(k-1) 3^k = 18
        let t = walk_counts(&complete_bipartite(2, 3).unwrap(), 4).unwrap();
        assert_eq!(t.get(4, 0, 1), &BigUint::from(18u32));
        assert_eq!(t.get(4, 2, 4), &BigUint::from(12u32));
    }

    #[test]
    fn twin_examples() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(twin_check(&k23, 0, 1, 12).unwrap().first_violation, None);
        let star = complete_bipartite(1, 5).unwrap();
        assert_eq!(twin_check(&star, 2, 5, 12).unwrap().first_violation, None);
        assert_eq!(
            twin_check(&path(4), 0, 3, 12),
            Err(Error::NotTwins { u: 0, v: 3, witness: 1 })
        );
        assert_eq!(twin_check(&path(4), 1, 2, 4), Err(Error::TwinsAdjacent { u: 1, v: 2 }));
    }

    #[test]
    fn identify_single_edges_gives_path() {
        let e = complete_bipartite(1, 1).unwrap();
        let scheme = IdentificationScheme::new(e.clone(), vec![1], e, vec![0]).unwrap();
        let g = identify_union(&scheme);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn identification_validation() {
        let k22 = complete_bipartite(2, 2).unwrap();
        let e = Graph::empty(3).unwrap();
        assert!(matches!(
            IdentificationScheme::new(k22.clone(), vec![0, 2], e.clone(), vec![0, 1]),
            Err(Error::NotIndependent { graph: "G1", .. })
        ));
        assert_eq!(
            IdentificationScheme::new(k22.clone(), vec![0, 1], e.clone(), vec![0]),
            Err(Error::SizeMismatch(2, 1))
        );
        assert!(matches!(
            IdentificationScheme::new(k22, vec![0, 0], e, vec![0, 1]),
            Err(Error::RepeatedVertex { .. })
        ));
    }

    #[test]
    fn dominance_identical_schemes() {
        let params = JoinFamilyParams::new(2, 3, 1).unwrap();
        let scheme = join_family_scheme(params).unwrap();
        let r = dominance_check(&scheme, &scheme, 16).unwrap();
        assert!(r.premises_hold() && !r.premise_strict);
        assert_eq!((r.conclusion_violation, r.conclusion_strict_at), (None, None));
    }

    #[test]
    fn dominance_cover_partition_example() {
        let part = CoverPartition::from_sizes(2, 1, 1, 1).unwrap();
        let (star, double) = cover_partition_schemes(&part).unwrap();
        let r = dominance_check(&star, &double, 20).unwrap();
        assert!(r.premises_hold() && r.premise_strict);
        assert_eq!(r.conclusion_violation, None);
        let k = r.conclusion_strict_at.unwrap();
        assert_eq!(k % 2, 0);
    }

    #[test]
    fn dominance_join_shift_example() {
        let lhs = join_family_scheme(JoinFamilyParams::new(1, 2, 2).unwrap()).unwrap();
        let rhs = join_family_scheme(JoinFamilyParams::new(1, 3, 1).unwrap()).unwrap();
        let r = dominance_check(&lhs, &rhs, 20).unwrap();
        assert!(r.premises_hold() && r.premise_strict);
        assert_eq!(r.conclusion_violation, None);
        // (s+q)^(k-1) p^k < (s+q)^k p^(k-1) on the anchored pair, exactly
        let a = walk_counts(&lhs.g2, 8).unwrap();
        let b = walk_counts(&rhs.g2, 8).unwrap();
        for k in 1..=4u32 {
            let l = BigUint::from(3u32.pow(k - 1) * 2u32.pow(k));
            let r = BigUint::from(3u32.pow(k) * 2u32.pow(k - 1));
            assert_eq!(a.get(2 * k as usize, lhs.s2[0], lhs.s2[0]), &l);
            assert_eq!(b.get(2 * k as usize, rhs.s2[0], rhs.s2[0]), &r);
        }
    }

    #[test]
    fn dominance_rejects_mismatched_s() {
        let a = join_family_scheme(JoinFamilyParams::new(1, 2, 2).unwrap()).unwrap();
        let b = join_family_scheme(JoinFamilyParams::new(2, 2, 1).unwrap()).unwrap();
        assert_eq!(dominance_check(&a, &b, 4), Err(Error::SizeMismatch(1, 2)));
    }
}
