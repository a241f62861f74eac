//! Random instances under the uniform-subset model: each uncertain position
//! draws a uniformly random non-empty subset of the alphabet, then spreads
//! probability over it with a flat Dirichlet.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::alphabet::{Alphabet, Letter};
use crate::error::Result;
use crate::weighted::{PlainString, WeightedString, WeightedStringBuilder};

/// Uniformly random non-empty subset of `0..sigma`, in increasing order.
pub fn draw_subset<R: Rng + ?Sized>(rng: &mut R, sigma: usize, out: &mut Vec<Letter>) {
    loop {
        out.clear();
        for a in 0..sigma {
            if rng.random::<bool>() {
                out.push(a as Letter);
            }
        }
        if !out.is_empty() {
            return;
        }
    }
}

/// Weighted string of length `n`. With probability `solid_bias` a position
/// is a single uniform letter, otherwise a random subset with Dirichlet(1)
/// probabilities.
pub fn gen_weighted(n: usize, sigma: usize, seed: u64, solid_bias: f64) -> Result<WeightedString> {
    let alphabet = Alphabet::with_size(sigma)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(gen_weighted_with(&mut rng, alphabet, n, solid_bias))
}

pub fn gen_weighted_with<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: Alphabet,
    n: usize,
    solid_bias: f64,
) -> WeightedString {
    let sigma = alphabet.size();
    let mut b = WeightedStringBuilder::with_capacity(alphabet, n);
    let mut subset = Vec::with_capacity(sigma);
    let mut entries = Vec::with_capacity(sigma);
    for _ in 0..n {
        if rng.random_bool(solid_bias.clamp(0.0, 1.0)) {
            b.push_solid(rng.random_range(0..sigma) as Letter)
                .expect("letter in range");
            continue;
        }
        draw_subset(rng, sigma, &mut subset);
        entries.clear();
        entries.extend(subset.iter().map(|&a| (a, rng.sample::<f64, _>(Exp1))));
        let total: f64 = entries.iter().map(|e| e.1).sum();
        for e in &mut entries {
            e.1 /= total;
        }
        b.push(&entries).expect("normalized distribution");
    }
    b.finish()
}

/// Uniform i.i.d. plain string of length `n`.
pub fn gen_solid(n: usize, sigma: usize, seed: u64) -> Result<PlainString> {
    let alphabet = Alphabet::with_size(sigma)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(gen_solid_with(&mut rng, alphabet, n))
}

pub fn gen_solid_with<R: Rng + ?Sized>(rng: &mut R, alphabet: Alphabet, n: usize) -> PlainString {
    let sigma = alphabet.size();
    let letters = (0..n)
        .map(|_| rng.random_range(0..sigma) as Letter)
        .collect();
    PlainString::new(alphabet, letters).expect("letters in range")
}

/// Probability that a uniform letter lies in a uniform non-empty subset:
/// `2^(sigma-1) / (2^sigma - 1)`.
pub fn match_probability(sigma: usize) -> f64 {
    let half = 2f64.powi(sigma as i32 - 1);
    half / (2.0 * half - 1.0)
}

/// Expected matching-prefix length `r / (1 - r)` for i.i.d. positions.
pub fn expected_prefix_length(sigma: usize) -> f64 {
    let r = match_probability(sigma);
    r / (1.0 - r)
}

/// Mean length of the longest prefix on which a uniform plain string and an
/// uncertain string (seen as its sets of occurring letters) intersect
/// position by position. Positions are drawn lazily until the first miss.
pub fn lcp_experiment(sigma: usize, trials: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut subset = Vec::with_capacity(sigma);
    let mut total = 0u64;
    for _ in 0..trials {
        loop {
            let u = rng.random_range(0..sigma) as Letter;
            draw_subset(&mut rng, sigma, &mut subset);
            if !subset.contains(&u) {
                break;
            }
            total += 1;
        }
    }
    total as f64 / trials as f64
}
