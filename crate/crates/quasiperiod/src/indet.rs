//! Rooted and sliding covers of indeterminate strings.
//!
//! [`pcind`] finds every rooted cover of the whole string from its prefix table
//! alone. The checks and [`rooted_covers_oracle`] work on the string itself.

use crate::error::{Error, Result};
use crate::prefix::{whole_string_borders, PrefixTable};
use crate::strings::{sets_match, IndeterminateString};

int_array!(
    /// Ascending lengths of the rooted covers of a whole string.
    RootedCoverSet
);

/// State after one position, as recorded by [`pcind_trace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcindRow {
    pub i: usize,
    /// `maxlive[1..n]`: 0 untouched, -1 dead, otherwise the rightmost position covered.
    pub maxlive: Vec<isize>,
    /// Lengths still in the running, ascending.
    pub candidates: Vec<usize>,
}

/// Rooted covers of the string whose prefix table is `pi`.
pub fn pcind(pi: &PrefixTable) -> RootedCoverSet {
    run(pi, None).0
}

/// Also returns how many times the candidate loop body ran.
pub fn pcind_with_count(pi: &PrefixTable) -> (RootedCoverSet, u64) {
    run(pi, None)
}

/// One row per position `2..=n`, taken after dead lengths have been dropped.
pub fn pcind_trace(pi: &PrefixTable) -> Vec<PcindRow> {
    let mut rows = Vec::new();
    run(pi, Some(&mut rows));
    rows
}

fn run(pi: &PrefixTable, mut trace: Option<&mut Vec<PcindRow>>) -> (RootedCoverSet, u64) {
    let n = pi.len();
    let mut maxlive = vec![0isize; n + 1];
    // Only a border can cover, and only the borders visible in pi are candidates.
    let mut candidates = whole_string_borders(pi);
    let mut dead = Vec::new();
    let mut count = 0;
    for i in 2..=n {
        for &v in &candidates {
            if v > pi.at(i) {
                break;
            }
            count += 1;
            let t = (i + v - 1) as isize;
            let m = maxlive[v];
            if (m == 0 && t <= 2 * v as isize) || m >= t - v as isize {
                maxlive[v] = t;
            } else {
                maxlive[v] = -1;
                dead.push(v);
            }
        }
        while let Some(v) = dead.pop() {
            if let Ok(k) = candidates.binary_search(&v) {
                candidates.remove(k);
            }
        }
        if let Some(rows) = trace.as_deref_mut() {
            rows.push(PcindRow { i, maxlive: maxlive[1..].to_vec(), candidates: candidates.clone() });
        }
    }
    let covers = (1..n).filter(|&v| maxlive[v] == n as isize).collect();
    (RootedCoverSet(covers), count)
}

fn check_cover_length(x: &IndeterminateString, k: usize) -> Result<()> {
    if k == 0 || k >= x.len() {
        return Err(Error::CoverLengthOutOfRange { k, len: x.len() });
    }
    Ok(())
}

/// Whether every position lies inside a block matching the first `k` positions,
/// with such blocks at both ends.
pub fn rooted_cover_check(x: &IndeterminateString, k: usize) -> Result<bool> {
    check_cover_length(x, k)?;
    let s = x.sets();
    let n = s.len();
    let root = &s[..k];
    if !sets_match(&s[n - k..], root) {
        return Ok(false);
    }
    // Start of the last matching block found so far, 0-based.
    let mut last = 0;
    for p in 1..=n - k {
        if p - last > k {
            return Ok(false);
        }
        if sets_match(&s[p..p + k], root) {
            last = p;
        }
    }
    Ok(last == n - k)
}

/// Whether `x` has a sliding cover of length `k`: a chain of length-`k` blocks
/// from the start to the end of `x`, each overlapping or abutting the previous
/// one and matching it.
///
/// `ok[m]` says whether `x[1..m]` is coverable this way, ending with the block
/// `x[m-k+1..m]`.
pub fn sliding_cover_check(x: &IndeterminateString, k: usize) -> Result<bool> {
    check_cover_length(x, k)?;
    let s = x.sets();
    let n = s.len();
    let suffix = |m: usize| &s[m - k..m];
    let mut ok = vec![false; n + 1];
    ok[k] = true;
    for m in k + 1..=n {
        ok[m] = (m.saturating_sub(k).max(k)..m).any(|mp| ok[mp] && sets_match(suffix(mp), suffix(m)));
    }
    Ok(ok[n])
}

/// All rooted cover lengths, by trying each length with [`rooted_cover_check`].
pub fn rooted_covers_oracle(x: &IndeterminateString) -> RootedCoverSet {
    RootedCoverSet((1..x.len()).filter(|&k| rooted_cover_check(x, k).unwrap()).collect())
}
