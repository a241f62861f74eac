//! Closed-form bounds: the black-position bound, fragment partitioning and
//! the weight-ratio condition for expected sublinear search.

use crate::error::{Error, Result};
use crate::weighted::{Threshold, LOG_TOLERANCE};

/// Distance from an integer within which the ceiling is decided by a
/// direct log-space comparison instead of trusting the quotient.
const CEIL_GUARD: f64 = 1e-9;

/// Upper bound `ceil(log z / log(z / (z - 1)))` on the number of black
/// positions inside any valid window.
pub fn black_bound(t: Threshold) -> usize {
    let z = t.z();
    // log2(z / (z - 1)) = -log2(1 - 1/z), evaluated through ln_1p for accuracy.
    let step = -(-1.0 / z).ln_1p() / std::f64::consts::LN_2;
    let ratio = z.log2() / step;
    let k = ratio.round();
    let ell = if (ratio - k).abs() <= CEIL_GUARD {
        // (1 - 1/z)^k <= 1/z  <=>  ratio <= k
        if -k * step <= t.log_inv_z() + LOG_TOLERANCE {
            k
        } else {
            k + 1.0
        }
    } else {
        ratio.ceil()
    };
    ell.max(1.0) as usize
}

/// Self-check `black_bound(z) <= z log2 z`.
pub fn ell_refined_ok(t: Threshold) -> bool {
    black_bound(t) as f64 <= t.z() * t.z().log2()
}

/// Splits `0..m` into `ell + 1` contiguous fragments whose lengths differ
/// by at most one, longer fragments first. Returns `(start, length)` pairs.
pub fn partition_fragments(m: usize, ell: usize) -> Result<Vec<(usize, usize)>> {
    let parts = ell + 1;
    let base = m / parts;
    if base == 0 {
        return Err(Error::FragmentTooShort { m, parts });
    }
    let longer = m % parts;
    let mut out = Vec::with_capacity(parts);
    let mut start = 0;
    for k in 0..parts {
        let len = base + usize::from(k < longer);
        out.push((start, len));
        start += len;
    }
    Ok(out)
}

/// `z/m < min{1/log z, log sigma / (log z (log m + log log sigma))}`, base 2.
///
/// This is the condition under which both searches run in expected
/// sublinear time. It is reported, never enforced.
pub fn weight_ratio_ok(z: f64, m: usize, sigma: usize) -> bool {
    let ratio = z / m as f64;
    let log_z = z.log2();
    let log_sigma = (sigma as f64).log2();
    let first = 1.0 / log_z;
    let second = log_sigma / (log_z * ((m as f64).log2() + log_sigma.log2()));
    ratio < first.min(second)
}
