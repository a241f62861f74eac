//! Brute-force reference answers.
//!
//! Written against the raw position entries only: no colouring, no filters,
//! no engine code. The sole shared policy is [`LOG_TOLERANCE`].

use crate::alphabet::Letter;
use crate::weighted::{Threshold, WeightedString, LOG_TOLERANCE};

fn lookup(w: &WeightedString, i: usize, letter: Letter) -> f64 {
    for (l, p) in w.position(i).iter() {
        if l == letter {
            return p;
        }
    }
    0.0
}

fn valid(w: &WeightedString, u: &[Letter], at: usize, z: f64) -> bool {
    let mut log_p = 0.0;
    for (j, &c) in u.iter().enumerate() {
        let p = lookup(w, at + j, c);
        if p == 0.0 {
            return false;
        }
        log_p += p.log2();
    }
    log_p >= -z.log2() - LOG_TOLERANCE
}

/// Windows `i` of the plain text `y` whose letters have probability at least
/// `1/z` under the weighted pattern `x`.
pub fn oracle_wpm(x: &WeightedString, y: &[Letter], t: Threshold) -> Vec<usize> {
    let (m, n) = (x.len(), y.len());
    if m == 0 || m > n {
        return Vec::new();
    }
    (0..=n - m)
        .filter(|&i| valid(x, &y[i..i + m], 0, t.z()))
        .collect()
}

/// Windows `i` of the weighted text `y` where `x` occurs with probability at
/// least `1/z`.
pub fn oracle_wtm(x: &[Letter], y: &WeightedString, t: Threshold) -> Vec<usize> {
    let (m, n) = (x.len(), y.len());
    if m == 0 || m > n {
        return Vec::new();
    }
    (0..=n - m).filter(|&i| valid(y, x, i, t.z())).collect()
}
