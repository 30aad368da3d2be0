//! Regular and indeterminate strings over the letters `[0-9A-Za-z]`.
//!
//! Text grammar for indeterminate strings: `position ::= letter | '[' letter+ ']'`.
//! A regular string is the special case where every position is a single letter.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single letter. Letters compare by identity, so strings built over different
/// alphabets can be matched against each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u8);

impl Symbol {
    /// Returns `None` for characters outside `[0-9A-Za-z]`.
    pub fn new(ch: char) -> Option<Symbol> {
        if ch.is_ascii_alphanumeric() {
            Some(Symbol(ch as u8))
        } else {
            None
        }
    }

    pub fn as_char(self) -> char {
        self.0 as char
    }

    // Bit positions follow ASCII order: digits, then upper case, then lower case.
    fn bit(self) -> u32 {
        match self.0 {
            b'0'..=b'9' => (self.0 - b'0') as u32,
            b'A'..=b'Z' => 10 + (self.0 - b'A') as u32,
            _ => 36 + (self.0 - b'a') as u32,
        }
    }

    fn from_bit(bit: u32) -> Symbol {
        let b = bit as u8;
        Symbol(match b {
            0..=9 => b'0' + b,
            10..=35 => b'A' + b - 10,
            _ => b'a' + b - 36,
        })
    }
}

/// A nonempty set of letters, stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymbolSet(u64);

impl SymbolSet {
    pub fn singleton(s: Symbol) -> SymbolSet {
        SymbolSet(1 << s.bit())
    }

    /// Builds a set from the given symbols, or `None` if there are none.
    pub fn from_symbols<I: IntoIterator<Item = Symbol>>(symbols: I) -> Option<SymbolSet> {
        let mask = symbols.into_iter().fold(0u64, |m, s| m | 1 << s.bit());
        (mask != 0).then_some(SymbolSet(mask))
    }

    pub fn contains(self, s: Symbol) -> bool {
        self.0 & (1 << s.bit()) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(self) -> bool {
        false
    }

    pub fn is_singleton(self) -> bool {
        self.0.is_power_of_two()
    }

    /// Members in ascending letter order.
    pub fn iter(self) -> impl Iterator<Item = Symbol> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                return None;
            }
            let bit = mask.trailing_zeros();
            mask &= mask - 1;
            Some(Symbol::from_bit(bit))
        })
    }

    pub fn union(self, other: SymbolSet) -> SymbolSet {
        SymbolSet(self.0 | other.0)
    }

    /// Two positions match when their sets share a letter.
    pub fn matches(self, other: SymbolSet) -> bool {
        self.0 & other.0 != 0
    }
}

impl fmt::Display for SymbolSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singleton() {
            return write!(f, "{}", self.iter().next().unwrap().as_char());
        }
        f.write_str("[")?;
        for s in self.iter() {
            write!(f, "{}", s.as_char())?;
        }
        f.write_str("]")
    }
}

pub fn symbols_match(a: SymbolSet, b: SymbolSet) -> bool {
    a.matches(b)
}

/// Positionwise match of two equal-length slices.
pub fn sets_match(x: &[SymbolSet], y: &[SymbolSet]) -> bool {
    x.len() == y.len() && x.iter().zip(y).all(|(a, b)| a.matches(*b))
}

pub fn strings_match(x: &IndeterminateString, y: &IndeterminateString) -> bool {
    sets_match(x.sets(), y.sets())
}

/// The distinct letters of a string, in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet(Vec<Symbol>);

impl Alphabet {
    fn from_set(set: SymbolSet) -> Alphabet {
        Alphabet(set.iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn index_of(&self, s: Symbol) -> Option<usize> {
        self.0.binary_search(&s).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegularString(Vec<Symbol>);

impl RegularString {
    pub fn new(symbols: Vec<Symbol>) -> Result<RegularString> {
        if symbols.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(RegularString(symbols))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false: construction rejects empty strings.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn alphabet(&self) -> Alphabet {
        let set = SymbolSet::from_symbols(self.0.iter().copied()).expect("nonempty string");
        Alphabet::from_set(set)
    }

    pub fn to_indeterminate(&self) -> IndeterminateString {
        IndeterminateString(self.0.iter().map(|&s| SymbolSet::singleton(s)).collect())
    }
}

pub fn parse_regular(text: &str) -> Result<RegularString> {
    let symbols = text
        .chars()
        .enumerate()
        .map(|(k, ch)| Symbol::new(ch).ok_or(Error::InvalidCharacter { position: k + 1, ch }))
        .collect::<Result<Vec<_>>>()?;
    RegularString::new(symbols)
}

impl FromStr for RegularString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_regular(s)
    }
}

impl fmt::Display for RegularString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndeterminateString(Vec<SymbolSet>);

impl IndeterminateString {
    pub fn new(sets: Vec<SymbolSet>) -> Result<IndeterminateString> {
        if sets.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(IndeterminateString(sets))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false: construction rejects empty strings.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sets(&self) -> &[SymbolSet] {
        &self.0
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::from_set(self.0.iter().fold(self.0[0], |acc, s| acc.union(*s)))
    }

    pub fn is_regular(&self) -> bool {
        self.0.iter().all(|s| s.is_singleton())
    }

    /// The regular string with the same letters, if every position is a singleton.
    pub fn to_regular(&self) -> Option<RegularString> {
        if !self.is_regular() {
            return None;
        }
        Some(RegularString(self.0.iter().map(|s| s.iter().next().unwrap()).collect()))
    }
}

impl From<&RegularString> for IndeterminateString {
    fn from(x: &RegularString) -> Self {
        x.to_indeterminate()
    }
}

pub fn parse_indeterminate(text: &str) -> Result<IndeterminateString> {
    let mut sets = Vec::new();
    let mut chars = text.chars();
    while let Some(ch) = chars.next() {
        let position = sets.len() + 1;
        if ch != '[' {
            let s = Symbol::new(ch).ok_or(Error::InvalidCharacter { position, ch })?;
            sets.push(SymbolSet::singleton(s));
            continue;
        }
        let mut members: Option<SymbolSet> = None;
        loop {
            match chars.next() {
                None => return Err(Error::UnclosedBracket { position }),
                Some(']') => break,
                Some(ch) => {
                    let s = Symbol::new(ch).ok_or(Error::InvalidCharacter { position, ch })?;
                    if members.is_some_and(|m| m.contains(s)) {
                        return Err(Error::DuplicateLetter { position, ch });
                    }
                    let single = SymbolSet::singleton(s);
                    members = Some(members.map_or(single, |m| m.union(single)));
                }
            }
        }
        sets.push(members.ok_or(Error::EmptySet { position })?);
    }
    IndeterminateString::new(sets)
}

impl FromStr for IndeterminateString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_indeterminate(s)
    }
}

impl fmt::Display for IndeterminateString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{s}"))
    }
}
