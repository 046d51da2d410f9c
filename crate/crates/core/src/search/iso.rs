//! Exact isomorphism test for small graphs: joint colour refinement followed
//! by backtracking over colour-compatible bijections.

use std::collections::BTreeMap;

use crate::graph::{BitIter, Graph};

/// Stable colouring of both graphs in a shared colour space. `None` when the
/// colour histograms diverge, which already rules out an isomorphism.
fn refine(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let mut cg: Vec<usize> = g.degrees();
    let mut ch: Vec<usize> = h.degrees();
    let mut classes = 0;
    loop {
        let sig = |graph: &Graph, colour: &[usize], v: usize| {
            let mut around: Vec<usize> = BitIter(graph.neighbors_mask(v)).map(|w| colour[w]).collect();
            around.sort_unstable();
            (colour[v], around)
        };
        let sg: Vec<_> = (0..n).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| sig(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        // renumber by sorted signature so colours do not depend on vertex order
        for (i, id) in ids.values_mut().enumerate() {
            *id = i;
        }
        let ng: Vec<usize> = sg.iter().map(|s| ids[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| ids[s]).collect();
        let mut hist_g = vec![0usize; ids.len()];
        let mut hist_h = vec![0usize; ids.len()];
        ng.iter().for_each(|&c| hist_g[c] += 1);
        nh.iter().for_each(|&c| hist_h[c] += 1);
        if hist_g != hist_h {
            return None;
        }
        let stable = ids.len() == classes;
        classes = ids.len();
        cg = ng;
        ch = nh;
        if stable {
            return Some((cg, ch));
        }
    }
}

/// True when `g` and `h` are isomorphic.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    if g == h {
        return true;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let Some((cg, ch)) = refine(g, h) else {
        return false;
    };
    // place vertices from the smallest colour classes first
    let n = g.order();
    let mut class_size = vec![0usize; n.max(1) * 2 + 1];
    for &c in &cg {
        if c >= class_size.len() {
            class_size.resize(c + 1, 0);
        }
        class_size[c] += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[cg[v]], cg[v], v));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let placed = &order[..depth];
    for w in 0..h.order() {
        if *used >> w & 1 == 1 || ch[w] != cg[v] {
            continue;
        }
        let consistent = placed.iter().all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete_bipartite;
    use crate::spectral::moment_series;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn fingerprint(g: &Graph) -> (Vec<usize>, Vec<num_bigint::BigUint>) {
        let mut d = g.degrees();
        d.sort_unstable();
        (d, moment_series(g, 8).moments)
    }

    #[test]
    fn relabelings_are_isomorphic() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.4) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert!(is_isomorphic(&g, &g.relabel(&perm).unwrap()));
        }
    }

    #[test]
    fn star_is_not_path() {
        let star = complete_bipartite(1, 3).unwrap();
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_isomorphic(&star, &path));
    }

    #[test]
    fn hexagon_from_two_biadjacency_masks() {
        // rows {0,1},{1,2},{2,0} and {0,2},{0,1},{1,2} over a 3x3 biadjacency
        let a = Graph::from_biadjacency_mask(3, 3, 0b101_110_011).unwrap();
        let b = Graph::from_biadjacency_mask(3, 3, 0b110_011_101).unwrap();
        assert_ne!(a, b);
        assert!(is_isomorphic(&a, &cycle(6)));
        assert!(is_isomorphic(&a, &b));
        assert_eq!(fingerprint(&a), fingerprint(&b));
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C6 and two triangles share degree sequence and are 2-regular
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&cycle(6), &two_triangles));
        // cospectral star and square-plus-vertex
        let star = complete_bipartite(1, 4).unwrap();
        let c4k1 = cycle(4).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert!(!is_isomorphic(&star, &c4k1));
    }

    #[test]
    fn agrees_with_permutation_search() {
        let mut rng = StdRng::seed_from_u64(11);
        let perms = permutations(5);
        for _ in 0..300 {
            let random = |rng: &mut StdRng| {
                let mut edges = Vec::new();
                for u in 0..5 {
                    for v in u + 1..5 {
                        if rng.gen_bool(0.5) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(5, &edges).unwrap()
            };
            let g = random(&mut rng);
            let h = random(&mut rng);
            let brute = perms.iter().any(|p| g.relabel(p).unwrap() == h);
            assert_eq!(is_isomorphic(&g, &h), brute);
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
}
