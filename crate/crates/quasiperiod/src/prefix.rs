//! Prefix tables, feasibility, and borders read off a prefix table.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::strings::{IndeterminateString, RegularString};

int_array!(
    /// `π[i]` is the length of the longest substring starting at `i` that matches a
    /// prefix of the string, with `π[1] = n`. Always feasible.
    PrefixTable
);

int_array!(
    /// `β[i]` is the length of the longest proper border of `x[1..i]`.
    BorderArray
);

impl PrefixTable {
    /// Accepts any feasible array.
    pub fn new(values: Vec<usize>) -> Result<PrefixTable> {
        check_feasible(&values)?;
        Ok(PrefixTable(values))
    }
}

impl FromStr for PrefixTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PrefixTable::new(parse_csv(s)?)
    }
}

/// Finds the first entry breaking feasibility: `y[1] = n` and `0 <= y[i] <= n - i + 1`.
pub fn check_feasible(y: &[usize]) -> Result<()> {
    let n = y.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if y[0] != n {
        return Err(Error::Infeasible { position: 1 });
    }
    match (2..=n).find(|&i| y[i - 1] > n - i + 1) {
        Some(position) => Err(Error::Infeasible { position }),
        None => Ok(()),
    }
}

pub fn validate_feasible(y: &[usize]) -> bool {
    check_feasible(y).is_ok()
}

/// Linear-time prefix table of a regular string (Z-algorithm).
pub fn prefix_table_regular(x: &RegularString) -> PrefixTable {
    let s = x.symbols();
    let n = s.len();
    let mut z = vec![0; n];
    z[0] = n;
    // [l, r) is the rightmost window known to match a prefix.
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        let mut k = if i < r { z[i - l].min(r - i) } else { 0 };
        while i + k < n && s[k] == s[i + k] {
            k += 1;
        }
        z[i] = k;
        if i + k > r {
            l = i;
            r = i + k;
        }
    }
    PrefixTable(z)
}

/// Prefix table under the match relation, by direct extension at each position.
/// Quadratic in the worst case.
pub fn prefix_table_indet(x: &IndeterminateString) -> PrefixTable {
    let s = x.sets();
    let n = s.len();
    let mut pi = vec![0; n];
    pi[0] = n;
    for i in 1..n {
        let mut k = 0;
        while i + k < n && s[k].matches(s[i + k]) {
            k += 1;
        }
        pi[i] = k;
    }
    PrefixTable(pi)
}

/// Ascending lengths `v` in `1..n` with `π[n - v + 1] = v`: the nonempty proper
/// borders of the whole string.
pub fn whole_string_borders(pi: &PrefixTable) -> Vec<usize> {
    let n = pi.len();
    (1..n).filter(|&v| pi.at(n - v + 1) == v).collect()
}

/// Border array of the regular string with prefix table `pi`.
///
/// Each range `i..i+π[i]-1` is walked right to left, recording the prefix length
/// reaching each endpoint; the walk stops at the first endpoint already claimed
/// by an earlier (hence longer) match.
pub fn border_array_from_prefix_table(pi: &PrefixTable) -> BorderArray {
    let n = pi.len();
    let mut beta = vec![0; n];
    for i in 2..=n {
        for j in (0..pi.at(i)).rev() {
            let end = i + j;
            if beta[end - 1] > 0 {
                break;
            }
            beta[end - 1] = j + 1;
        }
    }
    BorderArray(beta)
}

/// Parses comma-separated non-negative integers.
pub fn parse_csv(text: &str) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    text.split(',')
        .enumerate()
        .map(|(k, field)| {
            let field = field.trim();
            field.parse().map_err(|_| Error::InvalidInteger { position: k + 1, text: field.to_string() })
        })
        .collect()
}

pub fn format_csv(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
