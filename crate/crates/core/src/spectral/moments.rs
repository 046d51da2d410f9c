//! Exact powers of the adjacency matrix.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::graph::{BitIter, Graph};

/// Dense square matrix of big naturals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigMatrix {
    pub n: usize,
    pub data: Vec<BigUint>,
}

impl BigMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigUint::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigUint::from(1u8);
        }
        BigMatrix { n, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.data[i * self.n + j]
    }

    pub fn trace(&self) -> BigUint {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `self * A(g)`; only additions are needed because `A` is 0/1.
    pub fn times_adjacency(&self, g: &Graph) -> BigMatrix {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for u in 0..n {
            let row = &self.data[u * n..(u + 1) * n];
            for v in 0..n {
                let mut acc = BigUint::zero();
                for w in BitIter(g.neighbors_mask(v)) {
                    acc += &row[w];
                }
                data.push(acc);
            }
        }
        BigMatrix { n, data }
    }

    /// `sum_ij self[i][j] * other[i][j]`, i.e. `tr(self * other)` for symmetric operands.
    pub fn frobenius_dot(&self, other: &BigMatrix) -> BigUint {
        self.data.iter().zip(&other.data).map(|(x, y)| x * y).sum()
    }
}

/// Lazily yields `M_0, M_1, M_2, ...` (closed-walk counts) of a graph.
///
/// Uses `M_{2j} = <A^j, A^j>` and `M_{2j+1} = <A^j, A^{j+1}>`, so only about
/// half as many matrix steps as moments are needed.
pub struct MomentStream<'g> {
    graph: &'g Graph,
    k: usize,
    lower: BigMatrix,
    upper: BigMatrix,
}

impl<'g> MomentStream<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let lower = BigMatrix::identity(graph.order());
        let upper = lower.times_adjacency(graph);
        MomentStream { graph, k: 0, lower, upper }
    }
}

impl Iterator for MomentStream<'_> {
    type Item = BigUint;

    fn next(&mut self) -> Option<BigUint> {
        let value = if self.k % 2 == 0 {
            self.lower.frobenius_dot(&self.lower)
        } else {
            let v = self.lower.frobenius_dot(&self.upper);
            let next = self.upper.times_adjacency(self.graph);
            self.lower = std::mem::replace(&mut self.upper, next);
            v
        };
        self.k += 1;
        Some(value)
    }
}
