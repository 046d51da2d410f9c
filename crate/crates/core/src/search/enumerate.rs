//! Labelled enumeration of bipartite graphs by biadjacency masks.
//!
//! For each split `(a, b)` with `1 <= a <= b`, `a + b = n`, every mask in
//! `0..2^(ab)` is visited in descending order, so the densest graphs of a split
//! come first. Every bipartite graph on `n >= 2` vertices appears at least once.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the enumerator.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Position of a graph in the enumeration stream. Orders as the stream does:
/// by split, then by descending mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamKey {
    pub a: usize,
    pub b: usize,
    pub mask: u64,
}

impl StreamKey {
    pub fn graph(&self) -> Graph {
        Graph::from_biadjacency_mask(self.a, self.b, self.mask).expect("key built from a valid split")
    }
}

impl PartialOrd for StreamKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StreamKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.a.cmp(&other.a).then(other.mask.cmp(&self.mask))
    }
}

/// Splits `(a, n - a)` for `a = 1..=n/2`.
pub fn splits(n: usize) -> Vec<(usize, usize)> {
    (1..=n / 2).map(|a| (a, n - a)).collect()
}

fn check_order(n: usize) -> Result<()> {
    if (2..=MAX_ENUMERATION_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::EnumerationRange(n))
    }
}

/// Total number of masks in the stream for order `n`.
pub fn stream_size(n: usize) -> Result<u64> {
    check_order(n)?;
    Ok(splits(n).iter().map(|&(a, b)| 1u64 << (a * b)).sum())
}

/// Iterator over the stream; see [`enumerate_bipartite`].
pub struct BipartiteStream {
    splits: Vec<(usize, usize)>,
    split: usize,
    /// Next mask plus one within the current split; zero when exhausted.
    next: u64,
    connected_only: bool,
}

impl Iterator for BipartiteStream {
    type Item = (StreamKey, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let &(a, b) = self.splits.get(self.split)?;
            if self.next == 0 {
                self.split += 1;
                if let Some(&(a, b)) = self.splits.get(self.split) {
                    self.next = 1u64 << (a * b);
                }
                continue;
            }
            self.next -= 1;
            let key = StreamKey { a, b, mask: self.next };
            let g = key.graph();
            if !self.connected_only || g.is_connected() {
                return Some((key, g));
            }
        }
    }
}

/// Every bipartite graph of order `n` (with repetitions across labellings),
/// optionally restricted to connected graphs.
pub fn enumerate_bipartite(n: usize, connected_only: bool) -> Result<BipartiteStream> {
    check_order(n)?;
    let splits = splits(n);
    let next = 1u64 << (splits[0].0 * splits[0].1);
    Ok(BipartiteStream { splits, split: 0, next, connected_only })
}
