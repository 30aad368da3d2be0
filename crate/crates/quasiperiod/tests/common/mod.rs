#![allow(dead_code)]

use quasiperiod::strings::{parse_indeterminate, parse_regular};
use quasiperiod::{IndeterminateString, RegularString};
use rand::Rng;

pub const LETTERS: &[u8] = b"abcd";

/// All strings of length `n` over the first `sigma` letters, in lexicographic order.
pub fn all_strings(n: usize, sigma: usize) -> impl Iterator<Item = String> {
    let total = sigma.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut s = vec![b'a'; n];
        for slot in s.iter_mut().rev() {
            *slot = LETTERS[code % sigma];
            code /= sigma;
        }
        String::from_utf8(s).unwrap()
    })
}

/// All indeterminate strings of length `n` whose positions are `a`, `b` or `[ab]`.
pub fn all_ab_indeterminate(n: usize) -> impl Iterator<Item = IndeterminateString> {
    const SETS: [&str; 3] = ["a", "b", "[ab]"];
    (0..3usize.pow(n as u32)).map(move |mut code| {
        let mut text = String::new();
        for _ in 0..n {
            text.push_str(SETS[code % 3]);
            code /= 3;
        }
        parse_indeterminate(&text).unwrap()
    })
}

pub fn random_regular<R: Rng>(rng: &mut R, n: usize, sigma: usize) -> RegularString {
    let text: String = (0..n).map(|_| LETTERS[rng.gen_range(0..sigma)] as char).collect();
    parse_regular(&text).unwrap()
}

/// Positions are random nonempty subsets of the first `sigma` letters with at most `max_set` members.
pub fn random_indeterminate<R: Rng>(rng: &mut R, n: usize, sigma: usize, max_set: usize) -> IndeterminateString {
    let mut text = String::new();
    for _ in 0..n {
        let size = rng.gen_range(1..=max_set.min(sigma));
        let mut pool: Vec<u8> = LETTERS[..sigma].to_vec();
        let mut members = Vec::new();
        for _ in 0..size {
            members.push(pool.swap_remove(rng.gen_range(0..pool.len())));
        }
        if size == 1 {
            text.push(members[0] as char);
        } else {
            text.push('[');
            text.extend(members.iter().map(|&b| b as char));
            text.push(']');
        }
    }
    parse_indeterminate(&text).unwrap()
}

/// Longest proper border of every prefix, by direct comparison.
pub fn naive_border_array(s: &[u8]) -> Vec<usize> {
    (1..=s.len()).map(|i| (0..i).rev().find(|&b| s[..b] == s[i - b..i]).unwrap()).collect()
}

/// Lengths `j` in `1..n` with `x[1..j] = x[n-j+1..n]`.
pub fn naive_whole_borders(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    (1..n).filter(|&j| s[..j] == s[n - j..]).collect()
}
