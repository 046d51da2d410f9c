//! Adjacency spectra, exact spectral moments and the Estrada index.
//!
//! The Estrada index is available through three independent routes: the sum
//! of exponentials of the eigenvalues, the hyperbolic-cosine form for
//! bipartite graphs (which needs the exact nullity), and the truncated moment
//! series `sum M_k / k!` evaluated in exact rational arithmetic with a
//! rigorous truncation bound.

pub mod jacobi;
pub mod moments;

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{find_bipartition, Graph};

pub use jacobi::{DEFAULT_TOLERANCE, MAX_SWEEPS};
pub use moments::{BigMatrix, MomentStream};

/// Eigenvalues closer to zero than this are counted by the floating-point nullity hint.
pub const NULLITY_THRESHOLD: f64 = 1e-6;
/// Largest walk length accepted by [`spectral_moment_exact`].
pub const MOMENT_BUDGET: usize = 64;
/// Truncation bound targeted by the moment-series method.
pub const SERIES_TARGET_ERROR: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumResult {
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    /// Exact nullity from integer rank.
    pub nullity: usize,
    /// Count of eigenvalues within [`NULLITY_THRESHOLD`] of zero.
    pub nullity_hint: usize,
    pub tolerance: f64,
    pub sweeps: usize,
}

impl SpectrumResult {
    /// Positive eigenvalues of a bipartite graph, using the exact nullity to
    /// decide which near-zero values are zeros.
    pub fn positive_part(&self) -> &[f64] {
        let nonzero = self.eigenvalues.len() - self.nullity;
        &self.eigenvalues[..nonzero / 2]
    }
}

/// Full spectrum by cyclic Jacobi with off-diagonal threshold `tol`.
pub fn eigenvalues(g: &Graph, tol: f64) -> Result<SpectrumResult> {
    let n = g.order();
    let mut a = g.adjacency_f64();
    let sweeps = jacobi::diagonalize(&mut a, n, tol, MAX_SWEEPS)?;
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    let nullity_hint = eigenvalues.iter().filter(|x| x.abs() < NULLITY_THRESHOLD).count();
    Ok(SpectrumResult {
        eigenvalues,
        nullity: nullity_exact(g),
        nullity_hint,
        tolerance: tol,
        sweeps,
    })
}

/// Reusable scratch space for repeated Estrada evaluations in hot loops.
#[derive(Debug, Default)]
pub struct EigenWorkspace {
    matrix: Vec<f64>,
}

impl EigenWorkspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// `sum exp(lambda_i)` without allocating or computing the exact nullity.
    pub fn estrada(&mut self, g: &Graph) -> Result<f64> {
        let n = g.order();
        self.matrix.clear();
        self.matrix.resize(n * n, 0.0);
        for (i, &row) in g.rows().iter().enumerate() {
            let mut bits = row;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.matrix[i * n + j] = 1.0;
            }
        }
        jacobi::diagonalize(&mut self.matrix, n, DEFAULT_TOLERANCE, MAX_SWEEPS)?;
        let mut diag: Vec<f64> = (0..n).map(|i| self.matrix[i * n + i]).collect();
        // fixed summation order makes the value independent of rotation order noise
        diag.sort_by(|x, y| y.total_cmp(x));
        Ok(diag.iter().map(|x| x.exp()).sum())
    }
}

/// `n - rank(A)` with the rank from fraction-free integer elimination.
pub fn nullity_exact(g: &Graph) -> usize {
    g.order() - integer_rank(g)
}

/// Rank of the adjacency matrix by Bareiss elimination over the integers.
fn integer_rank(g: &Graph) -> usize {
    let n = g.order();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(g.has_edge(i, j) as u8)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..n {
            for j in col + 1..n {
                let v = (&m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Number of closed walks of length `k`, i.e. `tr(A^k)`.
pub fn spectral_moment_exact(g: &Graph, k: usize) -> Result<BigUint> {
    if k > MOMENT_BUDGET {
        return Err(Error::WalkBudget { k, max: MOMENT_BUDGET });
    }
    Ok(MomentStream::new(g).nth(k).expect("moment stream is infinite"))
}

/// Exact closed-walk counts `M_0..=M_K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSeries {
    pub moments: Vec<BigUint>,
}

impl MomentSeries {
    pub fn cutoff(&self) -> usize {
        self.moments.len() - 1
    }
}

/// Moments `M_0..=M_cutoff`. Unlike [`spectral_moment_exact`] there is no
/// budget: the series evaluation may need long walks on dense graphs.
pub fn moment_series(g: &Graph, cutoff: usize) -> MomentSeries {
    MomentSeries { moments: MomentStream::new(g).take(cutoff + 1).collect() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EstradaMethod {
    Eigen,
    Cosh,
    MomentSeries,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstradaValue {
    pub value: f64,
    pub method: EstradaMethod,
    /// Truncation bound; only the moment-series method has one.
    pub error_bound: Option<f64>,
}

pub fn estrada(g: &Graph, method: EstradaMethod) -> Result<EstradaValue> {
    match method {
        EstradaMethod::Eigen => {
            let spec = eigenvalues(g, DEFAULT_TOLERANCE)?;
            Ok(EstradaValue {
                value: spec.eigenvalues.iter().map(|x| x.exp()).sum(),
                method,
                error_bound: None,
            })
        }
        EstradaMethod::Cosh => {
            find_bipartition(g).ok_or(Error::NotBipartite)?;
            let spec = eigenvalues(g, DEFAULT_TOLERANCE)?;
            Ok(EstradaValue { value: estrada_cosh(&spec), method, error_bound: None })
        }
        EstradaMethod::MomentSeries => {
            let (value, bound) = estrada_series(g);
            Ok(EstradaValue { value, method, error_bound: Some(bound) })
        }
    }
}

/// `n0 + 2 sum_{lambda > 0} cosh(lambda)` for a bipartite spectrum.
pub fn estrada_cosh(spec: &SpectrumResult) -> f64 {
    spec.nullity as f64 + 2.0 * spec.positive_part().iter().map(|x| x.cosh()).sum::<f64>()
}

/// Truncation bound `n * d^(K+1) * e^d / (K+1)!` with `d` the maximum degree,
/// an upper bound on the spectral radius.
pub fn series_truncation_bound(n: usize, max_degree: usize, cutoff: usize) -> f64 {
    if max_degree == 0 {
        return 0.0;
    }
    let d = max_degree as f64;
    let log = (n as f64).ln() + (cutoff as f64 + 1.0) * d.ln() + d - ln_factorial(cutoff + 1);
    log.exp()
}

/// Smallest cutoff whose truncation bound is below [`SERIES_TARGET_ERROR`].
pub fn series_cutoff(n: usize, max_degree: usize) -> usize {
    (0..)
        .find(|&k| series_truncation_bound(n, max_degree, k) < SERIES_TARGET_ERROR)
        .expect("factorial eventually dominates")
}

fn ln_factorial(k: usize) -> f64 {
    (2..=k).map(|i| (i as f64).ln()).sum()
}

/// Moment-series Estrada index: returns `(value, truncation bound)`.
///
/// The partial sum is formed exactly as `(sum_k M_k K!/k!) / K!` and rounded once.
pub fn estrada_series(g: &Graph) -> (f64, f64) {
    let n = g.order();
    let cutoff = series_cutoff(n, g.max_degree());
    let moments = moment_series(g, cutoff).moments;
    let mut numerator = BigUint::zero();
    let mut weight = BigUint::one(); // K!/k!, built from k = K downwards
    for k in (0..=cutoff).rev() {
        numerator += &moments[k] * &weight;
        weight *= BigUint::from(k.max(1));
    }
    let denominator: BigUint = (1..=cutoff).map(BigUint::from).product();
    (ratio_to_f64(&numerator, &denominator), series_truncation_bound(n, g.max_degree(), cutoff))
}

/// Correctly scaled `num / den` as `f64` (within one ulp).
pub(crate) fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let shift = den.bits() as i64 - num.bits() as i64 + 64;
    let quotient = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    scale_pow2(quotient.to_f64().expect("quotient has about 64 bits"), -shift)
}

fn scale_pow2(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}

/// Result of comparing two graphs by their exact moment sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactComparison {
    /// Ordering of the first graph relative to the second.
    pub ordering: Ordering,
    /// Index of the first differing moment; `None` when all compared moments agree.
    pub decided_at: Option<usize>,
    pub k_max: usize,
}

impl ExactComparison {
    /// Equal on `M_0..=M_{k_max}`; the graphs may be cospectral.
    pub fn equal_up_to_cutoff(&self) -> bool {
        self.decided_at.is_none()
    }
}

/// Lexicographic comparison of `M_0..=M_{k_max}`, stopping at the first difference.
pub fn compare_ee_exact(g: &Graph, h: &Graph, k_max: usize) -> Result<ExactComparison> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch(g.order(), h.order()));
    }
    if g == h {
        return Ok(ExactComparison { ordering: Ordering::Equal, decided_at: None, k_max });
    }
    for (k, (a, b)) in MomentStream::new(g).zip(MomentStream::new(h)).take(k_max + 1).enumerate() {
        match a.cmp(&b) {
            Ordering::Equal => continue,
            ord => return Ok(ExactComparison { ordering: ord, decided_at: Some(k), k_max }),
        }
    }
    Ok(ExactComparison { ordering: Ordering::Equal, decided_at: None, k_max })
}

/// `sum lambda_i^k` from a floating spectrum, for cross-checks against exact counts.
pub fn power_sum(eigenvalues: &[f64], k: usize) -> f64 {
    eigenvalues.iter().map(|x| x.powi(k as i32)).sum()
}

/// Relative difference between an exact count and a float estimate.
pub fn relative_gap(exact: &BigUint, approx: f64) -> f64 {
    let ef = exact.to_f64().unwrap_or(f64::INFINITY);
    if ef == 0.0 {
        approx.abs()
    } else {
        ((ef - approx) / ef).abs()
    }
}
