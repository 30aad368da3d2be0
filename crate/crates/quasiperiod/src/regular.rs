//! Cover arrays of regular strings.
//!
//! [`pcr`] computes the cover array from a prefix table by scanning connected
//! ranges left to right. [`cover_array_oracle`] computes it from the string by
//! brute force.

use crate::error::{Error, Result};
use crate::prefix::PrefixTable;
use crate::strings::RegularString;

int_array!(
    /// `γ[i]` is the length of the longest proper cover of `x[1..i]`, or 0.
    CoverArray
);

impl CoverArray {
    /// All cover lengths of `x[1..i]`, longest first: `γ[i], γ[γ[i]], ...`.
    pub fn covers_of_prefix(&self, i: usize) -> Result<Vec<usize>> {
        if i == 0 || i > self.len() {
            return Err(Error::PositionOutOfRange { position: i, len: self.len() });
        }
        let mut chain = Vec::new();
        let mut c = self.at(i);
        while c > 0 {
            chain.push(c);
            c = self.at(c);
        }
        Ok(chain)
    }
}

pub fn covers_of_prefix(gamma: &CoverArray, i: usize) -> Result<Vec<usize>> {
    gamma.covers_of_prefix(i)
}

/// The positions `start..=end()` where the prefix of length `len` recurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub start: usize,
    pub len: usize,
}

impl Range {
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }

    /// `later` starts inside or just after `self` and reaches past its end.
    pub fn is_connected_to(&self, later: &Range) -> bool {
        later.start <= self.start + self.len && self.start + self.len < later.start + later.len
    }
}

/// One range per position with a nonzero entry, in position order.
pub fn ranges(pi: &PrefixTable) -> Vec<Range> {
    (1..=pi.len()).filter(|&i| pi.at(i) > 0).map(|i| Range { start: i, len: pi.at(i) }).collect()
}

/// Work counters from one [`pcr`] run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PcrStats {
    /// Positions visited by the left-to-right pass.
    pub forward: u64,
    /// Positions visited by the right-to-left pass.
    pub backward: u64,
    /// Steps spent looking for a live ancestor of a dead length.
    pub ancestor_search: u64,
    /// Reach updates pushed up the cover tree.
    pub propagate: u64,
}

impl PcrStats {
    pub fn total(&self) -> u64 {
        self.forward + self.backward + self.ancestor_search + self.propagate
    }
}

/// State after one range has been processed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeSnapshot {
    pub start: usize,
    /// First position whose cover entry this range decided.
    pub first: usize,
    pub end: usize,
    /// `maxlive[1..n]`: 0 untouched, -1 dead, otherwise the rightmost position covered.
    pub maxlive: Vec<isize>,
    pub gamma: Vec<usize>,
}

/// Cover array of the regular string whose prefix table is `pi`.
///
/// Arrays that are feasible but come from no regular string give a
/// meaningless result, never a panic.
pub fn pcr(pi: &PrefixTable) -> CoverArray {
    Pcr::new(pi.len()).run(pi, None).0
}

pub fn pcr_with_stats(pi: &PrefixTable) -> (CoverArray, PcrStats) {
    let (gamma, stats) = Pcr::new(pi.len()).run(pi, None);
    (gamma, stats)
}

pub fn pcr_trace(pi: &PrefixTable) -> (CoverArray, Vec<RangeSnapshot>) {
    let mut trace = Vec::new();
    let (gamma, _) = Pcr::new(pi.len()).run(pi, Some(&mut trace));
    (gamma, trace)
}

/// Working storage. Both arrays are 1-based with an unused slot 0.
///
/// `maxlive[c] >= 0` is the reach of length `c` as in the public snapshots. A dead
/// length stores `-(d + 1)` where `d` is a shorter length to try in its place:
/// initially `γ[c]`, later shortened to the nearest ancestor not yet dead.
struct Pcr {
    gamma: Vec<usize>,
    maxlive: Vec<isize>,
    stats: PcrStats,
}

impl Pcr {
    fn new(n: usize) -> Pcr {
        Pcr { gamma: vec![0; n + 1], maxlive: vec![0; n + 1], stats: PcrStats::default() }
    }

    fn is_dead(&self, c: usize) -> bool {
        self.maxlive[c] < 0
    }

    fn kill(&mut self, c: usize) {
        if !self.is_dead(c) {
            self.maxlive[c] = -(self.gamma[c] as isize + 1);
        }
    }

    fn link(&self, c: usize) -> usize {
        (-self.maxlive[c] - 1) as usize
    }

    /// Whether length `c` can still extend a covering of a range starting at
    /// `start`: it must reach `start - 1`. An untouched length reaches itself.
    ///
    /// For `c = i' - start + 1` this is the usual test
    /// `(maxlive[c] = 0 and i' <= 2c) or maxlive[c] >= i' - c`.
    fn is_live(&self, c: usize, start: usize) -> bool {
        match self.maxlive[c] {
            m if m < 0 => false,
            0 => c + 1 >= start,
            m => m as usize + 1 >= start,
        }
    }

    /// Nearest ancestor-or-self of `c` that is not dead, compressing the links walked.
    fn undead(&mut self, c: usize) -> usize {
        let mut root = c;
        while root > 0 && self.is_dead(root) {
            self.stats.ancestor_search += 1;
            root = self.link(root);
        }
        let mut c = c;
        while c > 0 && self.is_dead(c) {
            let next = self.link(c);
            self.maxlive[c] = -(root as isize + 1);
            c = next;
        }
        root
    }

    fn run(mut self, pi: &PrefixTable, mut trace: Option<&mut Vec<RangeSnapshot>>) -> (CoverArray, PcrStats) {
        let n = pi.len();
        let mut lastlim = 1;
        let mut i = 2;
        while lastlim < n {
            let len = pi.at(i);
            if len == 0 {
                // Nothing reaches i, so every length shorter than i is dead from here on.
                if i > lastlim {
                    self.kill(i - 1);
                    lastlim = i;
                }
            } else {
                let lim = i + len - 1;
                if lim > lastlim {
                    self.forward(i, lastlim + 1, lim);
                    self.backward(i, lastlim + 1, lim);
                    if let Some(t) = trace.as_deref_mut() {
                        t.push(self.snapshot(i, lastlim + 1, lim));
                    }
                    lastlim = lim;
                }
            }
            i += 1;
        }
        self.gamma.remove(0);
        (CoverArray(self.gamma), self.stats)
    }

    fn forward(&mut self, start: usize, first: usize, lim: usize) {
        for ip in first..=lim {
            self.stats.forward += 1;
            let jp = ip - start + 1;
            if self.is_live(jp, start) {
                self.maxlive[jp] = ip as isize;
                self.gamma[ip] = jp;
                continue;
            }
            // jp cannot continue; the longest live cover of x[1..jp] can.
            self.kill(jp);
            let mut c = self.undead(self.gamma[jp]);
            while c > 0 && !self.is_live(c, start) {
                self.stats.ancestor_search += 1;
                self.kill(c);
                c = self.undead(self.gamma[c]);
            }
            self.gamma[ip] = c;
        }
    }

    /// Pushes each new reach up the cover tree. A cover of `x[1..c]` is also a
    /// cover of everything `c` covers.
    fn backward(&mut self, start: usize, first: usize, lim: usize) {
        for ip in (first..=lim).rev() {
            self.stats.backward += 1;
            let jp = ip - start + 1;
            let mut c = self.gamma[ip];
            if c == jp {
                c = self.gamma[jp];
            }
            let reach = ip as isize;
            while c > 0 && self.maxlive[c] >= 0 && self.maxlive[c] < reach {
                self.stats.propagate += 1;
                self.maxlive[c] = reach;
                c = self.gamma[c];
            }
        }
    }

    fn snapshot(&self, start: usize, first: usize, end: usize) -> RangeSnapshot {
        RangeSnapshot {
            start,
            first,
            end,
            maxlive: self.maxlive[1..].iter().map(|&m| m.max(-1)).collect(),
            gamma: self.gamma[1..].to_vec(),
        }
    }
}

/// Cover array computed straight from the definition.
///
/// For each prefix `x[1..i]`, border lengths are tried longest first; a border
/// is a cover when the positions inside its occurrences in `x[1..i]` span all
/// of `x[1..i]`. Cubic time.
pub fn cover_array_oracle(x: &RegularString) -> CoverArray {
    let s = x.symbols();
    let n = s.len();
    let mut gamma = vec![0; n];
    let mut covered = vec![false; n];
    for i in 1..=n {
        let prefix = &s[..i];
        for j in (1..i).rev() {
            if prefix[..j] != prefix[i - j..] {
                continue;
            }
            covered[..i].fill(false);
            for p in 0..=i - j {
                if prefix[p..p + j] == prefix[..j] {
                    covered[p..p + j].fill(true);
                }
            }
            if covered[..i].iter().all(|&c| c) {
                gamma[i - 1] = j;
                break;
            }
        }
    }
    CoverArray(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prefix::prefix_table_regular;
    use crate::strings::parse_regular;

    fn table(v: &[usize]) -> PrefixTable {
        PrefixTable::new(v.to_vec()).unwrap()
    }

    fn oracle(text: &str) -> CoverArray {
        cover_array_oracle(&parse_regular(text).unwrap())
    }

    fn via_pi(text: &str) -> CoverArray {
        pcr(&prefix_table_regular(&parse_regular(text).unwrap()))
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle("abababaaba"), [0, 0, 0, 2, 3, 4, 5, 0, 0, 3]);
        assert_eq!(oracle("abc"), [0, 0, 0]);
        assert_eq!(oracle("aaaa"), [0, 1, 2, 3]);
        assert_eq!(oracle("a"), [0]);
    }

    #[test]
    fn pcr_on_printed_tables() {
        assert_eq!(
            pcr(&table(&[19, 0, 5, 0, 3, 0, 1, 7, 0, 7, 0, 7, 0, 6, 0, 4, 0, 2, 0])),
            [0, 0, 0, 2, 3, 4, 5, 0, 0, 3, 0, 5, 0, 7, 0, 7, 0, 7, 0]
        );
        assert_eq!(
            pcr(&table(&[23, 0, 1, 3, 0, 6, 0, 1, 11, 0, 1, 3, 0, 8, 0, 1, 3, 0, 3, 0, 3, 0, 1])),
            [0, 0, 0, 0, 0, 3, 0, 3, 0, 5, 6, 0, 5, 6, 0, 8, 9, 10, 11, 0, 8, 0, 3]
        );
        assert_eq!(
            pcr(&table(&[22, 0, 5, 0, 3, 0, 1, 5, 0, 3, 0, 1, 7, 0, 5, 0, 3, 0, 1, 3, 0, 1])),
            [0, 0, 0, 2, 3, 4, 5, 0, 0, 3, 0, 5, 0, 0, 3, 0, 5, 0, 5, 0, 0, 3]
        );
        assert_eq!(pcr(&table(&[1])), [0]);
    }

    #[test]
    fn pcr_matches_oracle_on_small_cases() {
        for text in [
            "abababaaba",
            "ababaababa",
            "babababbabababababa",
            "babababbababbabababbab",
            "babababbababababbababbababab",
            "abaababaabaababaabababa",
            "babababbabababababbababababababab",
            "aabaabaaabaabaab",
        ] {
            assert_eq!(via_pi(text), oracle(text), "{text}");
        }
    }

    #[test]
    fn cover_chains() {
        let gamma = oracle("abababaaba");
        assert_eq!(gamma.covers_of_prefix(7).unwrap(), vec![5, 3]);
        assert_eq!(gamma.covers_of_prefix(9).unwrap(), Vec::<usize>::new());
        assert!(gamma.covers_of_prefix(11).is_err());
        let fib_like = oracle("abaababaabaababaabababa");
        assert_eq!(covers_of_prefix(&fib_like, 19).unwrap(), vec![11, 6, 3]);
    }

    #[test]
    fn range_examples() {
        let fib_like = table(&[23, 0, 1, 3, 0, 6, 0, 1, 11, 0, 1, 3, 0, 8, 0, 1, 3, 0, 3, 0, 3, 0, 1]);
        let rs = ranges(&fib_like);
        assert!(rs.contains(&Range { start: 9, len: 11 }));
        assert!(rs.contains(&Range { start: 14, len: 8 }));
        assert_eq!(ranges(&table(&[3, 0, 0])), vec![Range { start: 1, len: 3 }]);

        let connected = table(&[19, 0, 5, 0, 3, 0, 1, 7, 0, 7, 0, 7, 0, 6, 0, 4, 0, 2, 0]);
        let at = |i| Range { start: i, len: connected.at(i) };
        assert!(at(8).is_connected_to(&at(10)));
        assert!(at(8).is_connected_to(&at(12)));
        assert!(at(10).is_connected_to(&at(12)));
    }

    #[test]
    fn unary_costs_are_linear() {
        for n in [10, 100, 1000] {
            let pi = table(&(1..=n).rev().collect::<Vec<_>>());
            let (gamma, stats) = pcr_with_stats(&pi);
            assert_eq!(gamma.values(), (0..n).collect::<Vec<_>>());
            assert!(stats.total() <= 3 * n as u64, "{stats:?}");
        }
    }

    #[test]
    fn trace_records_each_range() {
        let (gamma, trace) = pcr_trace(&table(&[10, 0, 5, 0, 3, 0, 1, 3, 0, 1]));
        assert_eq!(gamma, [0, 0, 0, 2, 3, 4, 5, 0, 0, 3]);
        let spans: Vec<_> = trace.iter().map(|t| (t.start, t.first, t.end)).collect();
        assert_eq!(spans, vec![(3, 3, 7), (8, 8, 10)]);
        assert_eq!(trace[0].maxlive, vec![-1, 6, 7, 6, 7, 0, 0, 0, 0, 0]);
        assert_eq!(trace[1].maxlive, vec![-1, -1, 10, 6, 7, 0, 0, 0, 0, 0]);
    }
}
