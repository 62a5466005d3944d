//! Small shared numerical kernels.

use crate::{Error, Result};

/// Composite Simpson rule over `[a, b]` with `n` subintervals.
///
/// An odd `n` is rounded up to even. Fourth-order accurate for smooth
/// integrands.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let n = n + n % 2;
    let n = n.max(2);
    let h = (b - a) / n as f64;
    let mut odd = 0.0;
    for i in (1..n).step_by(2) {
        odd += f(a + i as f64 * h);
    }
    let mut even = 0.0;
    for i in (2..n).step_by(2) {
        even += f(a + i as f64 * h);
    }
    h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even)
}

/// Second-order central difference for df/dx at `x`.
pub fn central_diff(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Bisection root finder on `[lo, hi]`; the interval must bracket a sign
/// change.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> Result<f64> {
    let (flo, fhi) = (f(lo), f(hi));
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::InvalidInput(format!(
            "bisection interval [{lo}, {hi}] does not bracket a sign change"
        )));
    }
    for _ in 0..iters {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
