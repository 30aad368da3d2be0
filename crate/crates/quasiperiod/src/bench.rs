//! Average-case scaling experiment for [`pcind`](crate::indet::pcind).
//!
//! Every trial draws its input from its own ChaCha8 generator, seeded with 32
//! bytes: the little-endian `u64`s `seed`, `n` and `trial`, then eight zero
//! bytes. Reports are therefore identical across runs, machines and thread counts.

use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::indet::pcind_with_count;
use crate::prefix::{prefix_table_indet, PrefixTable};
use crate::strings::{IndeterminateString, Symbol, SymbolSet};

/// Where the benchmark's prefix tables come from.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Distribution {
    /// Prefix tables of random indeterminate strings over `{a,b,c,d}`, each
    /// position a uniformly chosen nonempty subset.
    #[default]
    Strings,
    /// Arrays with `y[1] = n` and each `y[i]` uniform on `0..=n-i+1`.
    /// The expected number of candidate lengths grows like `ln n` here.
    Uniform,
    /// The prefix table of `a^n`, the worst case.
    Unary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub lengths: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub distribution: Distribution,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    /// Mean number of candidate-loop iterations per trial.
    pub mean: f64,
    pub min: u64,
    pub max: u64,
    /// `mean / n`.
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

pub fn trial_rng(seed: u64, n: usize, trial: usize) -> ChaCha8Rng {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    bytes[8..16].copy_from_slice(&(n as u64).to_le_bytes());
    bytes[16..24].copy_from_slice(&(trial as u64).to_le_bytes());
    ChaCha8Rng::from_seed(bytes)
}

/// A feasible array with every free entry drawn independently and uniformly.
pub fn random_feasible_array<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PrefixTable {
    let mut y = Vec::with_capacity(n);
    y.push(n);
    y.extend((2..=n).map(|i| rng.gen_range(0..=n - i + 1)));
    PrefixTable::new(y).expect("feasible by construction")
}

/// A random string whose positions are nonempty subsets of the first
/// `alphabet` lowercase letters, each subset equally likely.
pub fn random_indeterminate<R: Rng + ?Sized>(n: usize, alphabet: usize, rng: &mut R) -> IndeterminateString {
    assert!((1..=26).contains(&alphabet), "alphabet size must be in 1..=26");
    let letters: Vec<Symbol> = (b'a'..b'a' + alphabet as u8).map(|b| Symbol::new(b as char).unwrap()).collect();
    let sets = (0..n)
        .map(|_| {
            let mask: u32 = rng.gen_range(1..1 << alphabet);
            SymbolSet::from_symbols(letters.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &s)| s))
                .unwrap()
        })
        .collect();
    IndeterminateString::new(sets).expect("n >= 1")
}

fn unary_table(n: usize) -> PrefixTable {
    PrefixTable::new((1..=n).rev().collect()).expect("feasible")
}

fn trial_input(cfg: &BenchConfig, n: usize, trial: usize) -> PrefixTable {
    let mut rng = trial_rng(cfg.seed, n, trial);
    match cfg.distribution {
        Distribution::Strings => prefix_table_indet(&random_indeterminate(n, 4, &mut rng)),
        Distribution::Uniform => random_feasible_array(n, &mut rng),
        Distribution::Unary => unary_table(n),
    }
}

pub fn run_benchmark(cfg: &BenchConfig) -> Result<BenchReport> {
    if cfg.lengths.is_empty() {
        return Err(Error::InvalidConfig("no lengths given".into()));
    }
    if let Some(&n) = cfg.lengths.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidConfig(format!("length {n} is below 2")));
    }
    if cfg.trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".into()));
    }
    let rows = cfg
        .lengths
        .iter()
        .map(|&n| {
            let counts: Vec<u64> =
                (0..cfg.trials).into_par_iter().map(|t| pcind_with_count(&trial_input(cfg, n, t)).1).collect();
            let mean = counts.iter().sum::<u64>() as f64 / counts.len() as f64;
            BenchRow {
                n,
                mean,
                min: *counts.iter().min().unwrap(),
                max: *counts.iter().max().unwrap(),
                ratio: mean / n as f64,
            }
        })
        .collect();
    Ok(BenchReport { rows })
}

/// Writes `n,mean,min,max,ratio` and one line per row.
pub fn emit_csv<W: Write>(report: &BenchReport, mut out: W) -> io::Result<()> {
    writeln!(out, "n,mean,min,max,ratio")?;
    for r in &report.rows {
        writeln!(out, "{},{:.2},{},{},{:.6}", r.n, r.mean, r.min, r.max, r.ratio)?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prefix::validate_feasible;

    fn config(lengths: Vec<usize>, trials: usize, distribution: Distribution) -> BenchConfig {
        BenchConfig { lengths, trials, seed: 7, distribution }
    }

    #[test]
    fn small_arrays_are_feasible() {
        let mut seen = [false; 2];
        for t in 0..64 {
            let y = random_feasible_array(2, &mut trial_rng(1, 2, t));
            assert_eq!(y.at(1), 2);
            seen[y.at(2)] = true;
        }
        assert_eq!(seen, [true, true]);
        for t in 0..20 {
            assert!(validate_feasible(random_feasible_array(300, &mut trial_rng(3, 300, t)).values()));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = random_feasible_array(50, &mut trial_rng(42, 50, 0));
        let b = random_feasible_array(50, &mut trial_rng(42, 50, 0));
        assert_eq!(a, b);
        assert_ne!(a, random_feasible_array(50, &mut trial_rng(42, 50, 1)));
        let s = random_indeterminate(30, 4, &mut trial_rng(42, 30, 0));
        assert_eq!(s, random_indeterminate(30, 4, &mut trial_rng(42, 30, 0)));
        assert!(s.alphabet().len() <= 4);
    }

    #[test]
    fn single_row_report() {
        let report = run_benchmark(&config(vec![2], 1, Distribution::Uniform)).unwrap();
        assert_eq!(report.rows.len(), 1);
        let mut out = Vec::new();
        emit_csv(&report, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 2);
    }

    #[test]
    fn reports_are_byte_stable() {
        let cfg = config(vec![100, 200, 400], 10, Distribution::Strings);
        let render = || {
            let mut out = Vec::new();
            emit_csv(&run_benchmark(&cfg).unwrap(), &mut out).unwrap();
            out
        };
        let first = render();
        assert_eq!(first, render());
        let text = String::from_utf8(first).unwrap();
        let ns: Vec<usize> = text.lines().skip(1).map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
        assert_eq!(ns, vec![100, 200, 400]);
    }

    #[test]
    fn unary_counts_are_triangular() {
        let report = run_benchmark(&config(vec![100, 200], 2, Distribution::Unary)).unwrap();
        assert_eq!(report.rows[0].min, 4950);
        assert_eq!(report.rows[1].max, 19900);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(run_benchmark(&config(vec![], 1, Distribution::Uniform)).is_err());
        assert!(run_benchmark(&config(vec![1], 1, Distribution::Uniform)).is_err());
        assert!(run_benchmark(&config(vec![5], 0, Distribution::Uniform)).is_err());
    }
}
