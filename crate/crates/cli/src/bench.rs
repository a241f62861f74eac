//! Benchmark suites: inspected letters per text letter as the pattern
//! grows, observed versus predicted filter hits, and the matching-prefix
//! experiment.

use std::fmt::Write as _;

use weightmatch::genmodel::{
    expected_prefix_length, gen_solid, gen_weighted, lcp_experiment, match_probability,
};
use weightmatch::{Result, Threshold, WpmQuery, WtmQuery};

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n: usize,
    pub sigma: usize,
    pub z: f64,
    pub seeds: u64,
    pub seed: u64,
    /// Solid-position rate of generated weighted patterns and texts.
    pub solid_bias: f64,
    pub lengths: Vec<usize>,
    pub trials: usize,
    pub lcp_sigmas: Vec<usize>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            n: 1_000_000,
            sigma: 4,
            z: 4.0,
            seeds: 10,
            seed: 0,
            solid_bias: 0.9,
            lengths: vec![16, 32, 64],
            trials: 100_000,
            lcp_sigmas: vec![2, 3, 4, 8],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Wpm,
    Wtm,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Wpm => "wpm",
            Algorithm::Wtm => "wtm",
        }
    }
}

/// Averages over seeds for one algorithm and pattern length.
#[derive(Debug, Clone)]
pub struct SearchPoint {
    pub algorithm: Algorithm,
    pub m: usize,
    pub sigma: usize,
    pub z: f64,
    pub n: usize,
    pub seeds: u64,
    pub chars_per_n: f64,
    pub candidates_per_n: f64,
    /// Expected filter hits per text letter: `sigma^-floor(m/(l'+1))` for
    /// the pattern-side search, `(l+1) sigma^-floor(m/(l+1))` for the
    /// text-side search.
    pub predicted_per_n: f64,
    /// Black positions of the pattern (`l'`) or the bound `l`.
    pub mean_black: f64,
    pub mean_filter_len: f64,
    pub fallback_runs: u64,
    pub gate_satisfied: bool,
}

impl SearchPoint {
    pub const SUBLINEARITY_HEADER: &'static str =
        "algorithm,m,sigma,z,n,seeds,mean_chars_per_n,mean_candidates_per_n,gate_satisfied,fallback_runs";
    pub const OCCURRENCES_HEADER: &'static str =
        "algorithm,m,sigma,z,n,seeds,mean_black,mean_filter_len,observed_candidates_per_n,predicted_per_n,observed_over_predicted";

    pub fn sublinearity_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.6},{:.8},{},{}",
            self.algorithm.name(),
            self.m,
            self.sigma,
            self.z,
            self.n,
            self.seeds,
            self.chars_per_n,
            self.candidates_per_n,
            self.gate_satisfied,
            self.fallback_runs
        )
    }

    pub fn occurrences_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.3},{:.3},{:.8},{:.8},{:.4}",
            self.algorithm.name(),
            self.m,
            self.sigma,
            self.z,
            self.n,
            self.seeds,
            self.mean_black,
            self.mean_filter_len,
            self.candidates_per_n,
            self.predicted_per_n,
            self.candidates_per_n / self.predicted_per_n
        )
    }
}

fn derive_seed(base: u64, run: u64, salt: u64) -> u64 {
    // splitmix64 finalizer over the combined inputs
    let mut x = base
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(run.wrapping_mul(0xBF58_476D_1CE4_E5B9))
        .wrapping_add(salt.wrapping_mul(0x94D0_49BB_1331_11EB));
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

#[derive(Default, Clone)]
struct Acc {
    chars: f64,
    candidates: f64,
    predicted: f64,
    black: f64,
    filter_len: f64,
    fallbacks: u64,
    gate: bool,
}

/// Runs both searches on random instances for every configured length.
///
/// The pattern-side search scans uniform plain text with a generated
/// weighted pattern; the text-side search scans a generated weighted text
/// with a uniform plain pattern.
pub fn search_points(cfg: &BenchConfig) -> Result<Vec<SearchPoint>> {
    let t = Threshold::new(cfg.z)?;
    let lens = &cfg.lengths;
    let mut wpm = vec![Acc::default(); lens.len()];
    let mut wtm = vec![Acc::default(); lens.len()];
    let sigma = cfg.sigma as f64;
    for run in 0..cfg.seeds {
        let plain = gen_solid(cfg.n, cfg.sigma, derive_seed(cfg.seed, run, 1))?;
        let weighted = gen_weighted(
            cfg.n,
            cfg.sigma,
            derive_seed(cfg.seed, run, 2),
            cfg.solid_bias,
        )?;
        for (k, &m) in lens.iter().enumerate() {
            let x = gen_weighted(
                m,
                cfg.sigma,
                derive_seed(cfg.seed, run, 3 + 2 * m as u64),
                cfg.solid_bias,
            )?;
            let q = WpmQuery::new(&x, t)?;
            let r = q.search(&plain)?;
            let blacks = q.colouring().black_count();
            let acc = &mut wpm[k];
            acc.chars += r.counters.chars_inspected as f64 / cfg.n as f64;
            acc.candidates += r.counters.candidates as f64 / cfg.n as f64;
            acc.predicted += sigma.powi(-((m / (blacks + 1)) as i32));
            acc.black += blacks as f64;
            acc.filter_len += q.plan().map_or(0, |p| p.filters[0].letters.len()) as f64;
            acc.fallbacks += u64::from(r.used_fallback);
            acc.gate = r.gate_satisfied;

            let xs = gen_solid(m, cfg.sigma, derive_seed(cfg.seed, run, 4 + 2 * m as u64))?;
            let q = WtmQuery::new(&xs, t)?;
            let r = q.search(&weighted)?;
            let ell = q.ell();
            let acc = &mut wtm[k];
            acc.chars += r.counters.chars_inspected as f64 / cfg.n as f64;
            acc.candidates += r.counters.candidates as f64 / cfg.n as f64;
            acc.predicted += (ell + 1) as f64 * sigma.powi(-((m / (ell + 1)) as i32));
            acc.black += ell as f64;
            acc.filter_len += q
                .plan()
                .and_then(|p| p.filters.iter().map(|f| f.letters.len()).min())
                .unwrap_or(0) as f64;
            acc.fallbacks += u64::from(r.used_fallback);
            acc.gate = r.gate_satisfied;
        }
    }
    let runs = cfg.seeds.max(1) as f64;
    let mut out = Vec::new();
    for (algorithm, accs) in [(Algorithm::Wpm, wpm), (Algorithm::Wtm, wtm)] {
        for (acc, &m) in accs.into_iter().zip(lens) {
            out.push(SearchPoint {
                algorithm,
                m,
                sigma: cfg.sigma,
                z: cfg.z,
                n: cfg.n,
                seeds: cfg.seeds,
                chars_per_n: acc.chars / runs,
                candidates_per_n: acc.candidates / runs,
                predicted_per_n: acc.predicted / runs,
                mean_black: acc.black / runs,
                mean_filter_len: acc.filter_len / runs,
                fallback_runs: acc.fallbacks,
                gate_satisfied: acc.gate,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct LcpPoint {
    pub sigma: usize,
    pub trials: usize,
    pub mean: f64,
    pub predicted: f64,
    pub match_probability: f64,
}

impl LcpPoint {
    pub const HEADER: &'static str = "sigma,trials,mean_prefix_length,predicted,match_probability";

    pub fn row(&self) -> String {
        format!(
            "{},{},{:.6},{:.6},{:.6}",
            self.sigma, self.trials, self.mean, self.predicted, self.match_probability
        )
    }
}

pub fn lcp_points(cfg: &BenchConfig) -> Vec<LcpPoint> {
    cfg.lcp_sigmas
        .iter()
        .map(|&sigma| LcpPoint {
            sigma,
            trials: cfg.trials,
            mean: lcp_experiment(sigma, cfg.trials, derive_seed(cfg.seed, sigma as u64, 5)),
            predicted: expected_prefix_length(sigma),
            match_probability: match_probability(sigma),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Sublinearity,
    Occurrences,
    Lcp,
}

/// CSV text for a suite, header first, LF line endings.
pub fn run_suite(suite: Suite, cfg: &BenchConfig) -> Result<String> {
    let mut out = String::new();
    match suite {
        Suite::Sublinearity | Suite::Occurrences => {
            let points = search_points(cfg)?;
            let sub = suite == Suite::Sublinearity;
            out.push_str(if sub {
                SearchPoint::SUBLINEARITY_HEADER
            } else {
                SearchPoint::OCCURRENCES_HEADER
            });
            out.push('\n');
            for p in &points {
                let row = if sub {
                    p.sublinearity_row()
                } else {
                    p.occurrences_row()
                };
                let _ = writeln!(out, "{row}");
            }
        }
        Suite::Lcp => {
            let _ = writeln!(out, "{}", LcpPoint::HEADER);
            for p in lcp_points(cfg) {
                let _ = writeln!(out, "{}", p.row());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> BenchConfig {
        BenchConfig {
            n: 20_000,
            seeds: 2,
            trials: 10_000,
            ..Default::default()
        }
    }

    #[test]
    fn csv_shapes() {
        let csv = run_suite(Suite::Sublinearity, &small()).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 7);
        let cols = lines[0].split(',').count();
        assert!(lines.iter().all(|l| l.split(',').count() == cols));
        assert!(lines[1].starts_with("wpm,16,4,4,20000,2,"));

        let csv = run_suite(Suite::Occurrences, &small()).unwrap();
        assert_eq!(csv.lines().count(), 7);

        let csv = run_suite(Suite::Lcp, &small()).unwrap();
        assert_eq!(csv.lines().count(), 5);
        assert!(csv.lines().nth(1).unwrap().starts_with("2,10000,"));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn seeds_are_distinct() {
        assert_ne!(derive_seed(0, 0, 1), derive_seed(0, 0, 2));
        assert_ne!(derive_seed(0, 0, 1), derive_seed(0, 1, 1));
        assert_eq!(derive_seed(3, 4, 5), derive_seed(3, 4, 5));
    }
}
