//! Exhaustive search for the graphs of maximum Estrada index in the classes
//! `M(n,p)`, `C(n,s)` and `D(n,s)`, with uniqueness up to isomorphism.
//!
//! One scan over the enumeration stream serves every class of a given kind
//! and order. Graphs that cannot reach a class's current leaders are skipped
//! using `EE <= n - 2 + 2 cosh(sqrt(m))`, valid for bipartite graphs with `m`
//! edges. The skip thresholds come from a fixed sequential seed pass, so the
//! set of evaluated graphs does not depend on the worker count or chunking.

pub mod enumerate;
pub mod iso;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{complete_bipartite, join_family, JoinSplit};
use crate::graph::{biadjacency_rows, is_bipartite, Graph};
use crate::invariants::{ClassDescriptor, ClassKind};
use crate::spectral::{compare_ee_exact, estrada_series, EigenWorkspace, MOMENT_BUDGET};

pub use enumerate::{enumerate_bipartite, splits, stream_size, BipartiteStream, StreamKey};
pub use iso::is_isomorphic;

/// Graphs whose Estrada indices differ by less than this are near ties.
pub const NEAR_TIE: f64 = 1e-6;
/// Largest order searched without the explicit opt-in.
pub const DEFAULT_MAX_ORDER: usize = 9;
/// Masks per work unit.
pub const DEFAULT_CHUNK: u64 = 1 << 12;
/// Masks per split visited by the seed pass.
const SEED_SIZE: u64 = 1 << 12;
/// Candidates closer than this are tested for isomorphism before being kept apart.
const ISO_WINDOW: f64 = 1e-9;
/// Safety margin between the edge bound and a threshold.
const PRUNE_SLACK: f64 = 1e-7;

/// How candidates are scored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ranking {
    /// Jacobi eigenvalues, `sum exp(lambda)`.
    #[default]
    Float,
    /// The exact moment series `sum M_k / k!`, rounded once.
    ExactMoments,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub threads: usize,
    pub near_tie: f64,
    pub k_max: usize,
    pub allow_n10: bool,
    pub split: JoinSplit,
    pub ranking: Ranking,
    pub chunk_size: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            threads: 1,
            near_tie: NEAR_TIE,
            k_max: MOMENT_BUDGET,
            allow_n10: false,
            split: JoinSplit::default(),
            ranking: Ranking::default(),
            chunk_size: DEFAULT_CHUNK,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassStatus {
    /// Every near-maximal graph is isomorphic to the maximizer.
    Unique,
    /// A non-isomorphic graph agrees with the maximizer on all compared moments.
    Undecided,
    /// No graph of the order lies in the class.
    Empty,
}

impl ClassStatus {
    pub fn name(self) -> &'static str {
        match self {
            ClassStatus::Unique => "unique",
            ClassStatus::Undecided => "undecided",
            ClassStatus::Empty => "empty",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalReport {
    pub class: ClassDescriptor,
    pub predicted: Option<Graph>,
    /// Human-readable name of the predicted graph.
    pub prediction: Option<String>,
    pub maximizer: Option<Graph>,
    pub maximizer_key: Option<StreamKey>,
    pub max_ee: Option<f64>,
    /// `max_ee` minus the best value of any non-isomorphic class member.
    pub runner_up_gap: Option<f64>,
    pub status: ClassStatus,
    pub unique: bool,
    pub matches_prediction: bool,
    /// The maximizer's class membership, recomputed from scratch.
    pub revalidated: bool,
    /// Isomorphism classes within the near-tie band, maximizer included.
    pub near_maximizers: usize,
    pub graphs_scanned: u64,
    pub candidates_evaluated: u64,
    pub duration: Duration,
}

impl ExtremalReport {
    /// Matches the prediction and is unique, or the class is empty and nothing was predicted.
    pub fn verified(&self) -> bool {
        match self.status {
            ClassStatus::Empty => self.predicted.is_none(),
            _ => self.unique && self.matches_prediction && self.revalidated,
        }
    }
}

/// Class parameters scanned for a kind: `1..=n/2` for matchings, `1..n` otherwise.
pub fn class_values(kind: ClassKind, n: usize) -> Vec<usize> {
    match kind {
        ClassKind::Matching => (1..=n / 2).collect(),
        _ => (1..n).collect(),
    }
}

/// Membership of `g` in the class.
pub fn classify(g: &Graph, class: &ClassDescriptor) -> Result<bool> {
    if g.order() != class.n || !is_bipartite(g) {
        return Ok(false);
    }
    Ok(class.kind.parameter(g)? == class.value)
}

/// The graph predicted to be extremal, with a readable name.
pub fn predicted_graph(class: &ClassDescriptor, split: JoinSplit) -> Option<(Graph, String)> {
    let n = class.n;
    match class.kind {
        ClassKind::Matching => {
            let p = class.value;
            Some((complete_bipartite(p, n - p).ok()?, format!("K({p},{})", n - p)))
        }
        _ => {
            let params = split.params(n, class.value)?;
            let name = format!("join(s={},p={},q={})", params.s, params.p, params.q);
            Some((join_family(params), name))
        }
    }
}

#[derive(Debug, Clone)]
struct Entry {
    key: StreamKey,
    graph: Graph,
    ee: f64,
}

/// Near-maximal isomorphism classes of one class plus the best graph below the band.
#[derive(Debug, Clone, Default)]
struct Accumulator {
    band: Vec<Entry>,
    below: Option<Entry>,
    evaluated: u64,
}

fn better(x: &Entry, y: &Entry) -> bool {
    x.ee > y.ee || (x.ee == y.ee && x.key < y.key)
}

impl Accumulator {
    fn top(&self) -> f64 {
        self.band.iter().map(|e| e.ee).fold(f64::NEG_INFINITY, f64::max)
    }

    fn offer_below(&mut self, e: Entry) {
        match &mut self.below {
            Some(b) if (b.ee - e.ee).abs() < ISO_WINDOW && is_isomorphic(&b.graph, &e.graph) => {
                if e.key < b.key {
                    *b = e;
                }
            }
            Some(b) if !better(&e, b) => {}
            _ => self.below = Some(e),
        }
    }

    fn insert(&mut self, e: Entry, near_tie: f64) {
        let top = self.top();
        if e.ee > top {
            let floor = e.ee - near_tie;
            let (keep, drop): (Vec<Entry>, Vec<Entry>) =
                std::mem::take(&mut self.band).into_iter().partition(|x| x.ee >= floor);
            self.band = keep;
            for x in drop {
                self.offer_below(x);
            }
        } else if e.ee < top - near_tie {
            self.offer_below(e);
            return;
        }
        for x in &mut self.band {
            if (x.ee - e.ee).abs() < ISO_WINDOW && is_isomorphic(&x.graph, &e.graph) {
                if e.key < x.key {
                    *x = e;
                }
                return;
            }
        }
        self.band.push(e);
    }

    fn merge(&mut self, other: Accumulator, near_tie: f64) {
        self.evaluated += other.evaluated;
        for e in other.band.into_iter().chain(other.below) {
            self.insert(e, near_tie);
        }
    }

    /// Sorted candidates, best first, by float value then stream key.
    fn ranked(&self) -> Vec<&Entry> {
        let mut all: Vec<&Entry> = self.band.iter().chain(&self.below).collect();
        all.sort_by(|x, y| y.ee.total_cmp(&x.ee).then(x.key.cmp(&y.key)));
        all
    }
}

/// Smallest edge count whose bound `n - 2 + 2 cosh(sqrt(m))` reaches `threshold`.
fn required_edges(n: usize, threshold: f64, max_edges: usize) -> usize {
    if !threshold.is_finite() {
        return 0;
    }
    (0..=max_edges)
        .find(|&m| n as f64 - 2.0 + 2.0 * (m as f64).sqrt().cosh() >= threshold - PRUNE_SLACK)
        .unwrap_or(max_edges + 1)
}

struct Scanner<'c> {
    kind: ClassKind,
    n: usize,
    /// Slot of each class value, indexed by value.
    slot: Vec<Option<usize>>,
    values: Vec<usize>,
    /// Per slot.
    required: Vec<usize>,
    config: &'c SearchConfig,
}

impl Scanner<'_> {
    fn slot_of(&self, v: usize) -> Option<usize> {
        self.slot.get(v).copied().flatten()
    }

    /// Least edge count any graph of split `a` must have to matter.
    fn split_floor(&self, a: usize) -> usize {
        self.values
            .iter()
            .zip(&self.required)
            .filter(|(&v, _)| v <= a)
            .map(|(_, &r)| r)
            .min()
            .unwrap_or(usize::MAX)
    }

    fn score(&self, ws: &mut EigenWorkspace, g: &Graph) -> Result<f64> {
        match self.config.ranking {
            Ranking::Float => ws.estrada(g),
            Ranking::ExactMoments => Ok(estrada_series(g).0),
        }
    }

    /// Visits masks `lo..hi` of split `(a, b)` in descending order.
    fn scan(
        &self,
        (a, b, hi, lo): (usize, usize, u64, u64),
        accs: &mut [Accumulator],
        ws: &mut EigenWorkspace,
    ) -> Result<()> {
        let floor = self.split_floor(a);
        if floor == usize::MAX {
            return Ok(());
        }
        for mask in (lo..hi).rev() {
            let m = mask.count_ones() as usize;
            if m < floor {
                continue;
            }
            let g = Graph::from_rows_unchecked(biadjacency_rows(a, b, mask));
            if self.kind != ClassKind::Matching {
                if !g.is_connected() {
                    continue;
                }
                let delta = g.min_degree();
                let reachable = self
                    .values
                    .iter()
                    .zip(&self.required)
                    .any(|(&v, &r)| v <= delta && r <= m);
                if !reachable {
                    continue;
                }
            }
            let value = self.kind.parameter(&g)?;
            let Some(slot) = self.slot_of(value) else {
                continue;
            };
            if m < self.required[slot] {
                continue;
            }
            let ee = self.score(ws, &g)?;
            let acc = &mut accs[slot];
            acc.evaluated += 1;
            acc.insert(Entry { key: StreamKey { a, b, mask }, graph: g, ee }, self.config.near_tie);
        }
        Ok(())
    }
}

fn check_order(n: usize, config: &SearchConfig) -> Result<()> {
    let max = if config.allow_n10 { enumerate::MAX_ENUMERATION_ORDER } else { DEFAULT_MAX_ORDER };
    if (2..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::EnumerationRange(n))
    }
}

/// Maximizer reports for the given class values of one kind and order,
/// from a single pass over the enumeration stream.
pub fn find_maximizers(
    kind: ClassKind,
    n: usize,
    values: &[usize],
    config: &SearchConfig,
) -> Result<Vec<ExtremalReport>> {
    let start = Instant::now();
    check_order(n, config)?;
    if config.threads == 0 || config.chunk_size == 0 {
        return Err(Error::InvalidParameters("threads and chunk size must be positive".into()));
    }
    if !(config.near_tie >= 0.0) || config.k_max > MOMENT_BUDGET {
        return Err(Error::InvalidParameters("near-tie width or k_max out of range".into()));
    }
    let classes: Vec<ClassDescriptor> =
        values.iter().map(|&v| ClassDescriptor::new(kind, n, v)).collect::<Result<_>>()?;
    let mut slot = vec![None; n + 1];
    for (i, &v) in values.iter().enumerate() {
        slot[v] = Some(i);
    }
    let mut scanner = Scanner {
        kind,
        n,
        slot,
        values: values.to_vec(),
        required: vec![0; values.len()],
        config,
    };
    let split_list = splits(n);

    // seed pass: the densest masks of every split, sequentially
    let mut seeds = vec![Accumulator::default(); values.len()];
    let mut ws = EigenWorkspace::new();
    for &(a, b) in &split_list {
        let total = 1u64 << (a * b);
        scanner.scan((a, b, total, total.saturating_sub(SEED_SIZE)), &mut seeds, &mut ws)?;
    }
    let max_edges = (n / 2) * (n - n / 2);
    for (i, acc) in seeds.iter().enumerate() {
        let ranked = acc.ranked();
        let threshold = match ranked.as_slice() {
            [first, second, ..] => second.ee.min(first.ee - config.near_tie),
            _ => f64::NEG_INFINITY,
        };
        scanner.required[i] = required_edges(scanner.n, threshold, max_edges);
    }

    let mut chunks = Vec::new();
    for &(a, b) in &split_list {
        let total = 1u64 << (a * b);
        let mut hi = total;
        while hi > 0 {
            let lo = hi.saturating_sub(config.chunk_size);
            chunks.push((a, b, hi, lo));
            hi = lo;
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    let scanner = &scanner;
    let partials: Vec<Vec<Accumulator>> = pool.install(|| {
        chunks
            .par_iter()
            .map(|&chunk| {
                let mut accs = vec![Accumulator::default(); values.len()];
                let mut ws = EigenWorkspace::new();
                scanner.scan(chunk, &mut accs, &mut ws)?;
                Ok(accs)
            })
            .collect::<Result<_>>()
    })?;
    let mut totals = vec![Accumulator::default(); values.len()];
    for part in partials {
        for (acc, p) in totals.iter_mut().zip(part) {
            acc.merge(p, config.near_tie);
        }
    }

    let scanned = stream_size(n)?;
    let duration = start.elapsed();
    classes
        .iter()
        .zip(totals)
        .map(|(class, acc)| finalize(class, acc, config, scanned, duration))
        .collect()
}

/// Report for a single class.
pub fn find_maximizer(class: &ClassDescriptor, config: &SearchConfig) -> Result<ExtremalReport> {
    let mut reports = find_maximizers(class.kind, class.n, &[class.value], config)?;
    Ok(reports.remove(0))
}

fn finalize(
    class: &ClassDescriptor,
    acc: Accumulator,
    config: &SearchConfig,
    graphs_scanned: u64,
    duration: Duration,
) -> Result<ExtremalReport> {
    let (predicted, prediction) = match predicted_graph(class, config.split) {
        Some((g, name)) => (Some(g), Some(name)),
        None => (None, None),
    };
    let mut report = ExtremalReport {
        class: *class,
        predicted,
        prediction,
        maximizer: None,
        maximizer_key: None,
        max_ee: None,
        runner_up_gap: None,
        status: ClassStatus::Empty,
        unique: false,
        matches_prediction: false,
        revalidated: false,
        near_maximizers: acc.band.len(),
        graphs_scanned,
        candidates_evaluated: acc.evaluated,
        duration,
    };
    if acc.band.is_empty() {
        return Ok(report);
    }
    let k_max = config.k_max;
    let mut band = acc.band.clone();
    band.sort_by(|x, y| y.ee.total_cmp(&x.ee).then(x.key.cmp(&y.key)));
    if band.len() > 1 {
        // near ties are ordered by exact moments first
        let mut exact = Vec::with_capacity(band.len());
        for e in &band {
            exact.push(crate::spectral::moment_series(&e.graph, k_max).moments);
        }
        let mut idx: Vec<usize> = (0..band.len()).collect();
        idx.sort_by(|&i, &j| {
            exact[j].cmp(&exact[i]).then(band[j].ee.total_cmp(&band[i].ee)).then(band[i].key.cmp(&band[j].key))
        });
        band = idx.into_iter().map(|i| band[i].clone()).collect();
    }
    let top = &band[0];
    let mut status = ClassStatus::Unique;
    for other in &band[1..] {
        if compare_ee_exact(&top.graph, &other.graph, k_max)?.equal_up_to_cutoff() {
            status = ClassStatus::Undecided;
        }
    }
    let runner_up = band[1..].iter().chain(&acc.below).map(|e| e.ee).fold(f64::NEG_INFINITY, f64::max);
    report.runner_up_gap = runner_up.is_finite().then_some(top.ee - runner_up);
    report.max_ee = Some(top.ee);
    report.status = status;
    report.unique = status == ClassStatus::Unique;
    report.matches_prediction =
        report.predicted.as_ref().is_some_and(|p| is_isomorphic(p, &top.graph));
    report.revalidated = classify(&top.graph, class)?;
    report.maximizer_key = Some(top.key);
    report.maximizer = Some(top.graph.clone());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::JoinFamilyParams;
    use crate::spectral::{estrada, EstradaMethod};

    fn config(threads: usize) -> SearchConfig {
        SearchConfig { threads, ..SearchConfig::default() }
    }

    #[test]
    fn classify_examples() {
        let m62 = ClassDescriptor::new(ClassKind::Matching, 6, 2).unwrap();
        assert!(classify(&complete_bipartite(2, 4).unwrap(), &m62).unwrap());
        let c71 = ClassDescriptor::new(ClassKind::VertexConnectivity, 7, 1).unwrap();
        let g = join_family(JoinFamilyParams::new(1, 3, 2).unwrap());
        assert!(classify(&g, &c71).unwrap());
        let c42 = ClassDescriptor::new(ClassKind::VertexConnectivity, 4, 2).unwrap();
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!classify(&p4, &c42).unwrap());
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let m31 = ClassDescriptor::new(ClassKind::Matching, 3, 1).unwrap();
        assert!(!classify(&triangle, &m31).unwrap());
    }

    #[test]
    fn matching_six_two() {
        let class = ClassDescriptor::new(ClassKind::Matching, 6, 2).unwrap();
        let r = find_maximizer(&class, &config(1)).unwrap();
        assert_eq!(r.status, ClassStatus::Unique);
        assert!(r.matches_prediction && r.revalidated && r.verified());
        let want = 4.0 + 2.0 * 8f64.sqrt().cosh();
        assert!((r.max_ee.unwrap() - want).abs() < 1e-9);
        assert!(r.runner_up_gap.unwrap() > NEAR_TIE);
    }

    #[test]
    fn connectivity_seven_one() {
        let class = ClassDescriptor::new(ClassKind::VertexConnectivity, 7, 1).unwrap();
        let r = find_maximizer(&class, &config(1)).unwrap();
        let predicted = join_family(JoinFamilyParams::new(1, 3, 2).unwrap());
        assert!(is_isomorphic(r.maximizer.as_ref().unwrap(), &predicted));
        assert!(r.verified());
        let ee = estrada(&predicted, EstradaMethod::Eigen).unwrap().value;
        assert!((r.max_ee.unwrap() - ee).abs() < 1e-9);
    }

    #[test]
    fn edge_connectivity_six_two_against_family() {
        let class = ClassDescriptor::new(ClassKind::EdgeConnectivity, 6, 2).unwrap();
        let r = find_maximizer(&class, &config(1)).unwrap();
        let stated = join_family(JoinSplit::FloorFirst.params(6, 2).unwrap());
        assert_eq!(JoinSplit::FloorFirst.params(6, 2), JoinFamilyParams::new(2, 2, 1).ok());
        let found = r.maximizer.clone().unwrap();
        // the report records whichever way the comparison goes
        assert_eq!(r.matches_prediction, is_isomorphic(&found, &stated));
        assert!(r.revalidated);
    }

    #[test]
    fn empty_classes_are_reported() {
        let class = ClassDescriptor::new(ClassKind::VertexConnectivity, 5, 3).unwrap();
        let r = find_maximizer(&class, &config(1)).unwrap();
        assert_eq!(r.status, ClassStatus::Empty);
        assert!(r.maximizer.is_none() && r.verified());
    }

    #[test]
    fn order_limits() {
        let class = ClassDescriptor::new(ClassKind::Matching, 10, 2).unwrap();
        assert_eq!(find_maximizer(&class, &config(1)), Err(Error::EnumerationRange(10)));
    }

    #[test]
    fn worker_count_and_chunking_do_not_change_reports() {
        let run = |threads: usize, chunk_size: u64| {
            let cfg = SearchConfig { threads, chunk_size, ..SearchConfig::default() };
            let mut r = find_maximizers(ClassKind::VertexConnectivity, 7, &class_values(ClassKind::VertexConnectivity, 7), &cfg)
                .unwrap();
            r.iter_mut().for_each(|x| x.duration = Duration::ZERO);
            r
        };
        let base = run(1, DEFAULT_CHUNK);
        assert_eq!(base, run(2, DEFAULT_CHUNK));
        assert_eq!(base, run(3, 97));
        assert_eq!(base, run(8, 1 << 20));
    }

    #[test]
    fn exact_ranking_agrees() {
        let cfg = SearchConfig { ranking: Ranking::ExactMoments, ..SearchConfig::default() };
        for kind in [ClassKind::Matching, ClassKind::VertexConnectivity] {
            let values = class_values(kind, 6);
            let float = find_maximizers(kind, 6, &values, &config(1)).unwrap();
            let exact = find_maximizers(kind, 6, &values, &cfg).unwrap();
            for (f, e) in float.iter().zip(&exact) {
                assert_eq!(f.status, e.status);
                if let (Some(a), Some(b)) = (&f.maximizer, &e.maximizer) {
                    assert!(is_isomorphic(a, b));
                    assert!((f.max_ee.unwrap() - e.max_ee.unwrap()).abs() < 1e-8);
                }
            }
        }
    }

    #[test]
    fn pruning_matches_unpruned_scan() {
        // brute force over the full stream without any bound
        for kind in [ClassKind::Matching, ClassKind::EdgeConnectivity] {
            let n = 6;
            let values = class_values(kind, n);
            let reports = find_maximizers(kind, n, &values, &config(1)).unwrap();
            for r in reports {
                let mut best: Option<(f64, Graph)> = None;
                for (_, g) in enumerate_bipartite(n, false).unwrap() {
                    if classify(&g, &r.class).unwrap() {
                        let ee = estrada(&g, EstradaMethod::Eigen).unwrap().value;
                        if best.as_ref().map_or(true, |(b, _)| ee > *b) {
                            best = Some((ee, g));
                        }
                    }
                }
                match best {
                    None => assert_eq!(r.status, ClassStatus::Empty),
                    Some((ee, g)) => {
                        assert!((r.max_ee.unwrap() - ee).abs() < 1e-9);
                        assert!(is_isomorphic(r.maximizer.as_ref().unwrap(), &g));
                    }
                }
            }
        }
    }

    #[test]
    fn accumulator_merge_is_order_free() {
        let graphs: Vec<Entry> = enumerate_bipartite(5, true)
            .unwrap()
            .map(|(key, g)| {
                let ee = estrada(&g, EstradaMethod::Eigen).unwrap().value;
                Entry { key, graph: g, ee }
            })
            .collect();
        let mut forward = Accumulator::default();
        graphs.iter().cloned().for_each(|e| forward.insert(e, 0.5));
        let mut backward = Accumulator::default();
        graphs.iter().rev().cloned().for_each(|e| backward.insert(e, 0.5));
        let keys = |a: &Accumulator| {
            let mut k: Vec<StreamKey> = a.band.iter().map(|e| e.key).collect();
            k.sort();
            (k, a.below.as_ref().map(|e| e.key))
        };
        assert_eq!(keys(&forward), keys(&backward));
    }
}
