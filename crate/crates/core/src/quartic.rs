//! Closed-form spectrum of `O_s v1 (K_1 u K_{p,q})`.
//!
//! Its nonzero eigenvalues are `+-x1, +-x2` where `x1^2, x2^2` solve
//! `t^2 - (s + pq + ps) t + pqs = 0`, so `EE = n - 4 + 2 cosh x1 + 2 cosh x2`.
//! This module also carries the inequality checks comparing members of the
//! family with each other and with `K_{s,n-s}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuarticForm {
    pub p: usize,
    pub q: usize,
    pub s: usize,
    /// `s + pq + ps`.
    pub c2: u64,
    /// `pqs`.
    pub c0: u64,
    pub x1: f64,
    pub x2: f64,
    /// `x1`.
    pub r: f64,
    /// `x1 * x2`.
    pub k: f64,
}

impl QuarticForm {
    pub fn order(&self) -> usize {
        self.s + self.p + self.q + 1
    }
}

fn coefficients(p: u64, q: u64, s: u64) -> (u64, u64) {
    (s + p * q + p * s, p * q * s)
}

/// Positive roots of `x^4 - c2 x^2 + c0`. The smaller square root is taken
/// as `c0 / t1` to avoid cancellation.
pub fn quartic_roots(p: usize, q: usize, s: usize) -> Result<QuarticForm> {
    if s == 0 || p == 0 {
        return Err(Error::InvalidParameters(format!(
            "quartic needs s >= 1 and p >= 1 (got s={s}, p={p})"
        )));
    }
    let (c2, c0) = coefficients(p as u64, q as u64, s as u64);
    let (c2f, c0f) = (c2 as f64, c0 as f64);
    let disc = (c2 * c2 - 4 * c0) as f64;
    let t1 = 0.5 * (c2f + disc.sqrt());
    let t2 = c0f / t1;
    let (x1, x2) = (t1.sqrt(), t2.sqrt());
    Ok(QuarticForm { p, q, s, c2, c0, x1, x2, r: x1, k: x1 * x2 })
}

/// `n - 4 + 2 cosh(x1) + 2 cosh(x2)`.
pub fn ee_closed_form(p: usize, q: usize, s: usize) -> Result<f64> {
    let f = quartic_roots(p, q, s)?;
    Ok(f.order() as f64 - 4.0 + 2.0 * f.x1.cosh() + 2.0 * f.x2.cosh())
}

/// `EE(K_{a,b}) = a + b - 2 + 2 cosh(sqrt(ab))`.
pub fn ee_complete_bipartite(a: usize, b: usize) -> f64 {
    (a + b) as f64 - 2.0 + 2.0 * ((a * b) as f64).sqrt().cosh()
}

/// `f(r, k) = n - 4 + 2 cosh(r) + 2 cosh(k / r)`.
pub fn f_rk(n: usize, r: f64, k: f64) -> f64 {
    n as f64 - 4.0 + 2.0 * r.cosh() + 2.0 * (k / r).cosh()
}

/// Partial derivatives `(df/dr, df/dk)` of [`f_rk`]; requires `r > sqrt(k) > 0`.
pub fn monotonicity_witness(r: f64, k: f64) -> Result<(f64, f64)> {
    if !(k > 0.0 && r > k.sqrt() && r.is_finite()) {
        return Err(Error::InvalidParameters(format!("need r > sqrt(k) > 0 (got r={r}, k={k})")));
    }
    let u = k / r;
    let dr = (r.exp() - (-r).exp()) - k / (r * r) * (u.exp() - (-u).exp());
    let dk = (u.exp() - (-u).exp()) / r;
    Ok((dr, dk))
}

/// `g(x, p, q, s) = x^4 - x^2 (s + pq + ps) + pqs` at `x^2 = x_sq`, exactly.
pub fn g_exact(x_sq: i128, p: i128, q: i128, s: i128) -> i128 {
    x_sq * x_sq - x_sq * (s + p * q + p * s) + p * q * s
}

/// Sign of `g(x1(p,q,s), p-1, q+1, s)`, decided exactly.
///
/// With `t = x1(p,q,s)^2` we have `t^2 = c2 t - c0`, so the value reduces to
/// `(q + s + 1 - p) t + s (p - q - 1)`, and `t = (c2 + sqrt(D)) / 2` is compared
/// through squares of integers.
pub fn shifted_root_sign(p: usize, q: usize, s: usize) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    let (p, q, s) = (p as i128, q as i128, s as i128);
    let c2 = s + p * q + p * s;
    let c0 = p * q * s;
    let d = c2 * c2 - 4 * c0;
    // value * 2 = a (c2 + sqrt d) + 2b
    let a = q + s + 1 - p;
    let b = s * (p - q - 1);
    let lhs = a * c2 + 2 * b; // value*2 = lhs + a sqrt(d)
    sign_of_sum_with_root(lhs, a, d).unwrap_or(Equal)
}

/// Sign of `x + a sqrt(d)` for `d >= 0`.
fn sign_of_sum_with_root(x: i128, a: i128, d: i128) -> Option<std::cmp::Ordering> {
    use std::cmp::Ordering::*;
    let sa = a.signum() * (d > 0) as i128;
    match (x.signum(), sa) {
        (0, 0) => Some(Equal),
        (sx, 0) => Some(sx.cmp(&0)),
        (0, sr) => Some(sr.cmp(&0)),
        (sx, sr) if sx == sr => Some(sx.cmp(&0)),
        (sx, _) => {
            // opposite signs: compare x^2 with a^2 d
            let lhs = x.checked_mul(x)?;
            let rhs = a.checked_mul(a)?.checked_mul(d)?;
            Some(match lhs.cmp(&rhs) {
                Equal => Equal,
                Greater => sx.cmp(&0),
                Less => (-sx).cmp(&0),
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lemma {
    /// `(s,p,q) -> (s, q+s, p-s)` when `p < q + s`.
    #[serde(rename = "4.1")]
    L41,
    /// `(s,p,q) -> (s, p-1, q+1)` when `p > q + s + 1`, `q > 0`.
    #[serde(rename = "4.2")]
    L42,
    /// `K_{s,n-s}` against `(s, n-s-2, 1)` when `s <= ceil((n-1)/2) - 1`.
    #[serde(rename = "4.3")]
    L43,
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::L41 => "4.1",
            Lemma::L42 => "4.2",
            Lemma::L43 => "4.3",
        })
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "4.1" => Ok(Lemma::L41),
            "4.2" => Ok(Lemma::L42),
            "4.3" => Ok(Lemma::L43),
            other => Err(Error::InvalidParameters(format!("unknown lemma {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Skipped => "skipped",
        })
    }
}

/// One grid point of an inequality check: `lhs < rhs` is the claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaVerdict {
    pub lemma: Lemma,
    pub n: usize,
    pub s: usize,
    pub p: usize,
    pub q: usize,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    /// `rhs - lhs`.
    pub gap: Option<f64>,
    /// Exact auxiliary sign check, where the argument has one.
    pub exact_check: Option<bool>,
    pub verdict: Verdict,
    pub reason: Option<String>,
}

impl LemmaVerdict {
    fn skipped(lemma: Lemma, n: usize, s: usize, p: usize, q: usize, reason: String) -> Self {
        LemmaVerdict {
            lemma,
            n,
            s,
            p,
            q,
            lhs: None,
            rhs: None,
            gap: None,
            exact_check: None,
            verdict: Verdict::Skipped,
            reason: Some(reason),
        }
    }

    fn compared(
        lemma: Lemma,
        (n, s, p, q): (usize, usize, usize, usize),
        lhs: f64,
        rhs: f64,
        exact_check: Option<bool>,
    ) -> Self {
        let holds = lhs < rhs && exact_check != Some(false);
        LemmaVerdict {
            lemma,
            n,
            s,
            p,
            q,
            lhs: Some(lhs),
            rhs: Some(rhs),
            gap: Some(rhs - lhs),
            exact_check,
            verdict: if holds { Verdict::Holds } else { Verdict::Fails },
            reason: None,
        }
    }
}

/// `EE(s, p, q) < EE(s, q + s, p - s)`; admissible when `p < q + s` and `p >= s`.
pub fn verify_lemma_41(p: usize, q: usize, s: usize) -> LemmaVerdict {
    let n = s + p + q + 1;
    if s == 0 || p == 0 {
        return LemmaVerdict::skipped(Lemma::L41, n, s, p, q, "needs s >= 1 and p >= 1".into());
    }
    if p >= q + s {
        return LemmaVerdict::skipped(Lemma::L41, n, s, p, q, "needs p < q + s".into());
    }
    if p < s {
        return LemmaVerdict::skipped(Lemma::L41, n, s, p, q, "needs p >= s".into());
    }
    let lhs = ee_closed_form(p, q, s).expect("checked parameters");
    let rhs = ee_closed_form(q + s, p - s, s).expect("q + s >= 1");
    LemmaVerdict::compared(Lemma::L41, (n, s, p, q), lhs, rhs, None)
}

/// `EE(s, p, q) < EE(s, p - 1, q + 1)`; admissible when `p > q + s + 1` and `q > 0`.
pub fn verify_lemma_42(p: usize, q: usize, s: usize) -> LemmaVerdict {
    let n = s + p + q + 1;
    if s == 0 {
        return LemmaVerdict::skipped(Lemma::L42, n, s, p, q, "needs s >= 1".into());
    }
    if q == 0 {
        return LemmaVerdict::skipped(Lemma::L42, n, s, p, q, "needs q > 0".into());
    }
    if p <= q + s + 1 {
        return LemmaVerdict::skipped(Lemma::L42, n, s, p, q, "needs p > q + s + 1".into());
    }
    let lhs = ee_closed_form(p, q, s).expect("checked parameters");
    let rhs = ee_closed_form(p - 1, q + 1, s).expect("p - 1 >= 1");
    let exact = shifted_root_sign(p, q, s) == std::cmp::Ordering::Less;
    LemmaVerdict::compared(Lemma::L42, (n, s, p, q), lhs, rhs, Some(exact))
}

/// `EE(K_{s,n-s}) < EE(s, n - s - 2, 1)`; admissible when `1 <= s <= ceil((n-1)/2) - 1`.
///
/// The exact check is `g(sqrt(s(n-s)), n-s-2, 1, s) = -s((n-2s-3)(n-s)+2) < 0`:
/// both the identity and the sign are evaluated in integers.
pub fn verify_lemma_43(n: usize, s: usize) -> LemmaVerdict {
    let (p, q) = (n.saturating_sub(s + 2), 1);
    if s == 0 || n < 4 {
        return LemmaVerdict::skipped(Lemma::L43, n, s, p, q, "needs s >= 1 and n >= 4".into());
    }
    if s + 1 > n / 2 {
        return LemmaVerdict::skipped(
            Lemma::L43,
            n,
            s,
            p,
            q,
            "needs s <= ceil((n-1)/2) - 1".into(),
        );
    }
    let lhs = ee_complete_bipartite(s, n - s);
    let rhs = ee_closed_form(p, q, s).expect("p = n - s - 2 >= 1");
    let (ni, si) = (n as i128, s as i128);
    let value = g_exact(si * (ni - si), p as i128, 1, si);
    let identity = -si * ((ni - 2 * si - 3) * (ni - si) + 2);
    let exact = value == identity && value < 0;
    LemmaVerdict::compared(Lemma::L43, (n, s, p, q), lhs, rhs, Some(exact))
}

/// Every grid point `1 <= p <= max_p`, `0 <= q <= max_q`, `1 <= s <= max_s`, in
/// `(s, p, q)` lexicographic order.
pub fn lemma_grid(lemma: Lemma, max_p: usize, max_q: usize, max_s: usize) -> Vec<LemmaVerdict> {
    let mut out = Vec::new();
    for s in 1..=max_s {
        for p in 1..=max_p {
            for q in 0..=max_q {
                out.push(match lemma {
                    Lemma::L41 => verify_lemma_41(p, q, s),
                    Lemma::L42 => verify_lemma_42(p, q, s),
                    Lemma::L43 => unreachable!("use lemma_43_grid"),
                });
            }
        }
    }
    out
}

/// Every `(n, s)` with `4 <= n <= max_n`, `1 <= s <= min(max_s, n - 1)`.
pub fn lemma_43_grid(max_n: usize, max_s: usize) -> Vec<LemmaVerdict> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        for s in 1..=max_s.min(n - 1) {
            out.push(verify_lemma_43(n, s));
        }
    }
    out
}
