//! Permutations in one-line notation and classical pattern containment.
//!
//! Entries are stored 0-based; the text form is 1-based. Lengths up to 9 are
//! written as a plain digit string (`35624718`), longer ones comma separated.
//! Both forms are accepted when parsing.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("invalid token {0:?} in permutation")]
    InvalidToken(String),
    #[error("{0:?} is not a permutation of 1..n")]
    NotAPermutation(String),
    #[error("permutation length {0} exceeds the supported maximum of 255")]
    TooLong(usize),
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    values: Vec<u8>,
}

impl Permutation {
    /// Builds a permutation from 0-based entries.
    pub fn from_zero_based(values: Vec<u8>) -> Result<Self, PermError> {
        if values.len() > 255 {
            return Err(PermError::TooLong(values.len()));
        }
        let mut seen = vec![false; values.len()];
        for &v in &values {
            let v = v as usize;
            if v >= values.len() || seen[v] {
                return Err(PermError::NotAPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Builds a permutation from 1-based entries.
    pub fn from_one_based(values: &[usize]) -> Result<Self, PermError> {
        if values.len() > 255 {
            return Err(PermError::TooLong(values.len()));
        }
        let mut zero = Vec::with_capacity(values.len());
        for &v in values {
            if v == 0 || v > values.len() {
                return Err(PermError::NotAPermutation(format!("{values:?}")));
            }
            zero.push((v - 1) as u8);
        }
        Self::from_zero_based(zero)
    }

    pub(crate) fn from_raw(values: Vec<u8>) -> Self {
        debug_assert!(Self::from_zero_based(values.clone()).is_ok());
        Permutation { values }
    }

    /// The permutation order-isomorphic to `seq`, whose entries must be distinct.
    pub fn standardize<T: Ord>(seq: &[T]) -> Self {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
        let mut values = vec![0u8; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            values[i] = rank as u8;
        }
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (0..n as u8).collect(),
        }
    }

    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (0..n as u8).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 0-based entries.
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// The 1-based entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1] as usize + 1
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.values.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i)
    }

    /// Replaces each entry `w_i` with `n + 1 - w_i`.
    pub fn complement(&self) -> Self {
        let n = self.len() as u8;
        Permutation {
            values: self.values.iter().map(|&v| n - 1 - v).collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        Permutation {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { values: inv }
    }

    /// `self` followed by `other` shifted above it.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let shift = self.len() as u8;
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + shift));
        Permutation { values }
    }

    /// 1-based positions `i` with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// True when `w_1 < w_2 > w_3 < ...`.
    pub fn is_alternating(&self) -> bool {
        self.values
            .windows(2)
            .enumerate()
            .all(|(i, w)| (w[0] < w[1]) == (i % 2 == 0))
    }

    /// True when `w_1 > w_2 < w_3 > ...`.
    pub fn is_reverse_alternating(&self) -> bool {
        self.values
            .windows(2)
            .enumerate()
            .all(|(i, w)| (w[0] > w[1]) == (i % 2 == 0))
    }

    /// Classical containment of `pattern` in `self`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        Matcher::new(pattern).occurs_in(&self.values)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    /// Positions (0-based, increasing) of the leftmost-first occurrence of `pattern`.
    pub fn find_occurrence(&self, pattern: &Permutation) -> Option<Vec<usize>> {
        let mut found = None;
        Matcher::new(pattern).search(&self.values, &mut |pos| {
            found = Some(pos.to_vec());
            true
        });
        found
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for &v in &self.values {
                write!(f, "{}", v + 1)?;
            }
        } else {
            for (i, &v) in self.values.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", v as usize + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut entries = Vec::new();
        if s.contains(',') {
            for tok in s.split(',') {
                let tok = tok.trim();
                let v: usize = tok
                    .parse()
                    .map_err(|_| PermError::InvalidToken(tok.to_string()))?;
                entries.push(v);
            }
        } else {
            for c in s.chars() {
                match c.to_digit(10) {
                    Some(d) if d > 0 => entries.push(d as usize),
                    _ => return Err(PermError::InvalidToken(c.to_string())),
                }
            }
        }
        Permutation::from_one_based(&entries).map_err(|e| match e {
            PermError::NotAPermutation(_) => PermError::NotAPermutation(s.to_string()),
            other => other,
        })
    }
}

/// Precomputed order constraints for matching one pattern.
///
/// For each pattern index the matcher remembers which already-placed pattern
/// entries bound it from below and above, both for a left-to-right and a
/// right-to-left placement order.
#[derive(Clone, Debug)]
pub struct Matcher {
    k: usize,
    fwd: Vec<(Option<usize>, Option<usize>)>,
    bwd: Vec<(Option<usize>, Option<usize>)>,
}

fn neighbours(
    pattern: &[u8],
    j: usize,
    placed: impl Iterator<Item = usize>,
) -> (Option<usize>, Option<usize>) {
    let mut lo: Option<usize> = None;
    let mut hi: Option<usize> = None;
    for i in placed {
        if pattern[i] < pattern[j] {
            if lo.is_none_or(|l| pattern[i] > pattern[l]) {
                lo = Some(i);
            }
        } else if hi.is_none_or(|h| pattern[i] < pattern[h]) {
            hi = Some(i);
        }
    }
    (lo, hi)
}

impl Matcher {
    pub fn new(pattern: &Permutation) -> Self {
        let q = pattern.values();
        let k = q.len();
        let fwd = (0..k).map(|j| neighbours(q, j, 0..j)).collect();
        let bwd = (0..k).map(|j| neighbours(q, j, j + 1..k)).collect();
        Matcher { k, fwd, bwd }
    }

    pub fn pattern_len(&self) -> usize {
        self.k
    }

    /// True when the pattern occurs anywhere in `text`.
    pub fn occurs_in(&self, text: &[u8]) -> bool {
        self.search(text, &mut |_| true)
    }

    /// Depth-first search over occurrences in increasing position order.
    /// `accept` sees the 0-based positions of each complete occurrence; the
    /// search stops as soon as it returns true.
    pub fn search(&self, text: &[u8], accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.k == 0 {
            return accept(&[]);
        }
        if self.k > text.len() {
            return false;
        }
        let mut pos = vec![0usize; self.k];
        self.fwd_step(text, 0, 0, &mut pos, accept)
    }

    fn fwd_step(
        &self,
        text: &[u8],
        j: usize,
        start: usize,
        pos: &mut [usize],
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let (lo, hi) = self.fwd[j];
        let lo_v = lo.map(|l| text[pos[l]]);
        let hi_v = hi.map(|h| text[pos[h]]);
        let last = text.len() - (self.k - j);
        for p in start..=last {
            let v = text[p];
            if lo_v.is_some_and(|l| v < l) || hi_v.is_some_and(|h| v > h) {
                continue;
            }
            pos[j] = p;
            let done = if j + 1 == self.k {
                accept(pos)
            } else {
                self.fwd_step(text, j + 1, p + 1, pos, accept)
            };
            if done {
                return true;
            }
        }
        false
    }

    /// True when the pattern occurs in `text` with its last entry matched to
    /// the last position of `text`.
    pub fn occurs_ending_at_last(&self, text: &[u8]) -> bool {
        self.search_ending_at_last(text, &mut |_| true)
    }

    /// Like [`Matcher::search`], restricted to occurrences whose last entry
    /// sits at the last position of `text`. Positions are searched right to
    /// left.
    pub fn search_ending_at_last(
        &self,
        text: &[u8],
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = text.len();
        if self.k == 0 {
            return accept(&[]);
        }
        if self.k > n {
            return false;
        }
        let mut stack = [0usize; 32];
        let mut heap;
        let pos: &mut [usize] = if self.k <= 32 {
            &mut stack[..self.k]
        } else {
            heap = vec![0usize; self.k];
            &mut heap
        };
        pos[self.k - 1] = n - 1;
        if self.k == 1 {
            return accept(pos);
        }
        self.bwd_step(text, self.k - 2, n - 1, pos, accept)
    }

    fn bwd_step(
        &self,
        text: &[u8],
        j: usize,
        end: usize,
        pos: &mut [usize],
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let (lo, hi) = self.bwd[j];
        let lo_v = lo.map(|l| text[pos[l]]);
        let hi_v = hi.map(|h| text[pos[h]]);
        for p in (j..end).rev() {
            let v = text[p];
            if lo_v.is_some_and(|l| v < l) || hi_v.is_some_and(|h| v > h) {
                continue;
            }
            pos[j] = p;
            let done = if j == 0 {
                accept(pos)
            } else {
                self.bwd_step(text, j - 1, p, pos, accept)
            };
            if done {
                return true;
            }
        }
        false
    }
}
