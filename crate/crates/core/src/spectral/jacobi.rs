//! Cyclic Jacobi rotations for dense symmetric matrices.

use crate::error::{Error, Result};

/// Default off-diagonal threshold.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
/// Sweep budget before giving up.
pub const MAX_SWEEPS: usize = 100;

/// Diagonalises the symmetric row-major `n x n` matrix `a` in place.
///
/// On success the diagonal of `a` holds the eigenvalues (unsorted) and every
/// off-diagonal entry is below `tol` in magnitude. Returns the number of sweeps.
pub fn diagonalize(a: &mut [f64], n: usize, tol: f64, max_sweeps: usize) -> Result<usize> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    debug_assert_eq!(a.len(), n * n);
    for sweep in 0..=max_sweeps {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(a[p * n + q].abs());
            }
        }
        if off < tol {
            return Ok(sweep);
        }
        if sweep == max_sweeps {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(a, n, p, q, sweep >= 4);
            }
        }
    }
    Err(Error::NoConvergence { sweeps: max_sweeps })
}

#[inline]
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, allow_flush: bool) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let g = 100.0 * apq.abs();
    // once the off-diagonal is below the diagonal's precision, drop it
    if allow_flush && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        return;
    }
    let h = aqq - app;
    let t = if h.abs() + g == h.abs() {
        apq / h
    } else {
        let theta = 0.5 * h / apq;
        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = arp - s * (arq + arp * tau);
        let new_rq = arq + s * (arp - arq * tau);
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(mut a: Vec<f64>, n: usize) -> Vec<f64> {
        diagonalize(&mut a, n, DEFAULT_TOLERANCE, MAX_SWEEPS).unwrap();
        let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
        d.sort_by(|x, y| y.partial_cmp(x).unwrap());
        d
    }

    #[test]
    fn two_by_two() {
        let d = eig(vec![2.0, 1.0, 1.0, 2.0], 2);
        assert!((d[0] - 3.0).abs() < 1e-14 && (d[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn already_diagonal_takes_no_sweeps() {
        let mut a = vec![1.0, 0.0, 0.0, -4.0];
        assert_eq!(diagonalize(&mut a, 2, 1e-12, 100).unwrap(), 0);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let mut a = vec![0.0, 1.0, 1.0, 0.0];
        assert_eq!(diagonalize(&mut a, 2, 1e-12, 0), Err(Error::NoConvergence { sweeps: 0 }));
        assert_eq!(diagonalize(&mut a, 2, 0.0, 10), Err(Error::InvalidTolerance(0.0)));
    }

    #[test]
    fn preserves_trace_and_frobenius_norm() {
        let n = 7;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = ((i * 31 + j * 17) % 11) as f64 - 5.0;
                a[i * n + j] = v;
                a[j * n + i] = v;
            }
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        let frob: f64 = a.iter().map(|x| x * x).sum();
        let d = eig(a, n);
        assert!((d.iter().sum::<f64>() - trace).abs() < 1e-10);
        assert!((d.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-9);
    }
}
