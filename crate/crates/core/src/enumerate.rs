//! Exact enumeration of pattern-avoiding class members.
//!
//! Members are built position by position in lexicographic order. The class
//! constraint on each new entry is checked first; then only occurrences that
//! end at the new entry need to be looked for, because the prefix before it
//! already avoids the pattern.

use thiserror::Error;

use crate::class::PermClass;
use crate::par::{self, Parallelism};
use crate::perm::{Matcher, Permutation};

/// Largest length the enumerator accepts (values are tracked in a `u32` mask).
pub const MAX_LEN: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("length {0} exceeds the enumeration limit of {MAX_LEN}")]
    TooLong(usize),
    #[error("count overflowed 64 bits")]
    Overflow,
}

struct Search<'a> {
    class: &'a PermClass,
    matcher: Option<Matcher>,
    n: usize,
}

impl Search<'_> {
    fn admits(&self, prefix: &[u8], v: u8) -> bool {
        match prefix.last() {
            Some(&last) => self.class.step(prefix.len()).allows(last, v),
            None => true,
        }
    }

    fn completes_pattern(&self, prefix: &[u8]) -> bool {
        match &self.matcher {
            Some(m) => m.occurs_ending_at_last(prefix),
            None => false,
        }
    }

    /// Valid prefixes of length `depth`, in lexicographic order.
    fn prefixes(&self, depth: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(depth);
        self.collect_prefixes(&mut buf, 0, depth, &mut out);
        out
    }

    fn collect_prefixes(&self, buf: &mut Vec<u8>, used: u32, depth: usize, out: &mut Vec<Vec<u8>>) {
        if buf.len() == depth {
            out.push(buf.clone());
            return;
        }
        for v in 0..self.n as u8 {
            if used & (1 << v) != 0 || !self.admits(buf, v) {
                continue;
            }
            buf.push(v);
            if !self.completes_pattern(buf) {
                self.collect_prefixes(buf, used | (1 << v), depth, out);
            }
            buf.pop();
        }
    }

    fn count_from(&self, buf: &mut Vec<u8>, used: u32) -> Result<u64, EnumError> {
        if buf.len() == self.n {
            return Ok(1);
        }
        let mut total: u64 = 0;
        for v in 0..self.n as u8 {
            if used & (1 << v) != 0 || !self.admits(buf, v) {
                continue;
            }
            buf.push(v);
            if !self.completes_pattern(buf) {
                let sub = self.count_from(buf, used | (1 << v))?;
                total = total.checked_add(sub).ok_or(EnumError::Overflow)?;
            }
            buf.pop();
        }
        Ok(total)
    }

    fn visit_from(&self, buf: &mut Vec<u8>, used: u32, f: &mut dyn FnMut(&[u8])) {
        if buf.len() == self.n {
            f(buf);
            return;
        }
        for v in 0..self.n as u8 {
            if used & (1 << v) != 0 || !self.admits(buf, v) {
                continue;
            }
            buf.push(v);
            if !self.completes_pattern(buf) {
                self.visit_from(buf, used | (1 << v), f);
            }
            buf.pop();
        }
    }
}

fn mask_of(prefix: &[u8]) -> u32 {
    prefix.iter().fold(0, |m, &v| m | (1 << v))
}

fn search<'a>(
    pattern: Option<&Permutation>,
    class: &'a PermClass,
    n: usize,
) -> Result<Search<'a>, EnumError> {
    if n > MAX_LEN {
        return Err(EnumError::TooLong(n));
    }
    Ok(Search {
        class,
        matcher: pattern.map(Matcher::new),
        n,
    })
}

/// Calls `f` on every member of `class` of length `n` avoiding `pattern`
/// (all members when `pattern` is `None`), in lexicographic order. Entries
/// passed to `f` are 0-based.
pub fn visit(
    pattern: Option<&Permutation>,
    class: &PermClass,
    n: usize,
    f: &mut dyn FnMut(&[u8]),
) -> Result<(), EnumError> {
    let s = search(pattern, class, n)?;
    if !class.fits_length(n) {
        return Ok(());
    }
    if pattern.is_some_and(|q| q.is_empty()) {
        return Ok(());
    }
    let mut buf = Vec::with_capacity(n);
    s.visit_from(&mut buf, 0, f);
    Ok(())
}

/// All members of `class` of length `n`, in lexicographic order.
pub fn generate(class: &PermClass, n: usize) -> Result<Vec<Permutation>, EnumError> {
    let mut out = Vec::new();
    visit(None, class, n, &mut |w| {
        out.push(Permutation::from_raw(w.to_vec()))
    })?;
    Ok(out)
}

/// Members of `class` of length `n` avoiding `pattern`, in lexicographic order.
pub fn avoiders(
    pattern: &Permutation,
    class: &PermClass,
    n: usize,
) -> Result<Vec<Permutation>, EnumError> {
    let mut out = Vec::new();
    visit(Some(pattern), class, n, &mut |w| {
        out.push(Permutation::from_raw(w.to_vec()))
    })?;
    Ok(out)
}

/// Number of members of `class` of length `n` avoiding `pattern`.
pub fn count_avoiders(
    pattern: &Permutation,
    class: &PermClass,
    n: usize,
) -> Result<u64, EnumError> {
    count_avoiders_with(pattern, class, n, Parallelism::default())
}

/// Number of members of `class` of length `n`.
pub fn count_members(class: &PermClass, n: usize) -> Result<u64, EnumError> {
    count_inner(None, class, n, Parallelism::default())
}

pub fn count_avoiders_with(
    pattern: &Permutation,
    class: &PermClass,
    n: usize,
    mode: Parallelism,
) -> Result<u64, EnumError> {
    count_inner(Some(pattern), class, n, mode)
}

const SPLIT_DEPTH: usize = 2;

fn count_inner(
    pattern: Option<&Permutation>,
    class: &PermClass,
    n: usize,
    mode: Parallelism,
) -> Result<u64, EnumError> {
    let s = search(pattern, class, n)?;
    if !class.fits_length(n) || pattern.is_some_and(|q| q.is_empty()) {
        return Ok(0);
    }
    if n <= SPLIT_DEPTH {
        return s.count_from(&mut Vec::with_capacity(n), 0);
    }
    let roots = s.prefixes(SPLIT_DEPTH);
    let parts = par::map(mode, &roots, |prefix| {
        let mut buf = Vec::with_capacity(n);
        buf.extend_from_slice(prefix);
        s.count_from(&mut buf, mask_of(prefix))
    });
    parts.into_iter().try_fold(0u64, |acc, c| {
        acc.checked_add(c?).ok_or(EnumError::Overflow)
    })
}

/// `|class_n(pattern)|` for `n = 1..=n_max`.
pub fn sequence(
    pattern: &Permutation,
    class: &PermClass,
    n_max: usize,
) -> Result<Vec<u64>, EnumError> {
    (1..=n_max)
        .map(|n| count_avoiders(pattern, class, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(count_members(&PermClass::Alternating, 4).unwrap(), 5);
        assert_eq!(count_members(&PermClass::Alternating, 8).unwrap(), 1385);
        assert_eq!(count_members(&PermClass::All, 5).unwrap(), 120);
        assert_eq!(
            count_members(&PermClass::DescentSet([5].into()), 3).unwrap(),
            0
        );
    }

    #[test]
    fn known_counts() {
        assert_eq!(
            count_avoiders(&p("634521"), &PermClass::Alternating, 8).unwrap(),
            1385
        );
        assert_eq!(
            count_avoiders(&p("3124"), &PermClass::DescentType(3), 5).unwrap(),
            9
        );
        assert_eq!(
            sequence(&p("2134"), &PermClass::DescentType(3), 9).unwrap(),
            vec![1, 1, 1, 3, 9, 9, 44, 153, 153]
        );
        assert_eq!(sequence(&p("21"), &PermClass::All, 5).unwrap(), vec![1; 5]);
    }

    #[test]
    fn lexicographic_order() {
        let all = generate(&PermClass::Alternating, 4).unwrap();
        let text: Vec<String> = all.iter().map(|w| w.to_string()).collect();
        assert_eq!(text, ["1324", "1423", "2314", "2413", "3412"]);
    }

    #[test]
    fn empty_pattern_and_long_pattern() {
        assert_eq!(
            count_avoiders(&Permutation::default(), &PermClass::All, 3).unwrap(),
            0
        );
        assert_eq!(count_avoiders(&p("1234"), &PermClass::All, 3).unwrap(), 6);
        assert!(matches!(
            count_members(&PermClass::All, 40),
            Err(EnumError::TooLong(40))
        ));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for q in ["1234", "2143", "3412"] {
            let a = count_avoiders_with(&p(q), &PermClass::Alternating, 9, Parallelism::Sequential)
                .unwrap();
            let b = count_avoiders_with(&p(q), &PermClass::Alternating, 9, Parallelism::Parallel)
                .unwrap();
            assert_eq!(a, b);
        }
    }
}
