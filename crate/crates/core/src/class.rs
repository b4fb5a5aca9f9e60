//! Permutation classes defined by forced ascents and descents.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("unknown class {0:?} (expected all, alt, ralt, dk:K, dset:I,J,.. or aset:I,J,..)")]
    Unknown(String),
    #[error("descent type must be at least 1")]
    ZeroDescentType,
    #[error("invalid index {0:?} in class specification")]
    BadIndex(String),
}

/// A class of permutations. Index sets are 1-based positions `i` referring to
/// the pair `(w_i, w_{i+1})`; indices that do not fit a given length make the
/// class empty at that length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PermClass {
    All,
    /// `w_1 < w_2 > w_3 < ...`
    Alternating,
    /// `w_1 > w_2 < w_3 > ...`
    ReverseAlternating,
    /// Descents exactly at the multiples of `k` below `n`.
    DescentType(usize),
    /// Descent set exactly the given set.
    DescentSet(BTreeSet<usize>),
    /// Ascent set exactly the given set.
    AscentSet(BTreeSet<usize>),
}

/// What a class demands of the pair `(w_i, w_{i+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Up,
    Down,
    Free,
}

impl Step {
    pub fn allows(self, a: u8, b: u8) -> bool {
        match self {
            Step::Up => a < b,
            Step::Down => a > b,
            Step::Free => true,
        }
    }
}

impl PermClass {
    /// Constraint on the pair at 1-based boundary `i`.
    pub fn step(&self, i: usize) -> Step {
        match self {
            PermClass::All => Step::Free,
            PermClass::Alternating => {
                if i % 2 == 1 {
                    Step::Up
                } else {
                    Step::Down
                }
            }
            PermClass::ReverseAlternating => {
                if i % 2 == 1 {
                    Step::Down
                } else {
                    Step::Up
                }
            }
            PermClass::DescentType(k) => {
                if i.is_multiple_of(*k) {
                    Step::Down
                } else {
                    Step::Up
                }
            }
            PermClass::DescentSet(d) => {
                if d.contains(&i) {
                    Step::Down
                } else {
                    Step::Up
                }
            }
            PermClass::AscentSet(a) => {
                if a.contains(&i) {
                    Step::Up
                } else {
                    Step::Down
                }
            }
        }
    }

    /// False when an index of a descent or ascent set lies outside `[n-1]`.
    pub fn fits_length(&self, n: usize) -> bool {
        match self {
            PermClass::DescentSet(s) | PermClass::AscentSet(s) => {
                s.iter().all(|&i| i >= 1 && i < n)
            }
            _ => true,
        }
    }

    pub fn contains_perm(&self, w: &Permutation) -> bool {
        self.fits_length(w.len())
            && w.values()
                .windows(2)
                .enumerate()
                .all(|(i, pair)| self.step(i + 1).allows(pair[0], pair[1]))
    }
}

fn parse_indices(body: &str) -> Result<BTreeSet<usize>, ClassError> {
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(ClassError::BadIndex(t.to_string())),
        })
        .collect()
}

impl FromStr for PermClass {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "all" => return Ok(PermClass::All),
            "alt" => return Ok(PermClass::Alternating),
            "ralt" => return Ok(PermClass::ReverseAlternating),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("dk:") {
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| ClassError::BadIndex(k.to_string()))?;
            if k == 0 {
                return Err(ClassError::ZeroDescentType);
            }
            return Ok(PermClass::DescentType(k));
        }
        if let Some(body) = s.strip_prefix("dset:") {
            return Ok(PermClass::DescentSet(parse_indices(body)?));
        }
        if let Some(body) = s.strip_prefix("aset:") {
            return Ok(PermClass::AscentSet(parse_indices(body)?));
        }
        Err(ClassError::Unknown(s.to_string()))
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &BTreeSet<usize>| {
            s.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            PermClass::All => f.write_str("all"),
            PermClass::Alternating => f.write_str("alt"),
            PermClass::ReverseAlternating => f.write_str("ralt"),
            PermClass::DescentType(k) => write!(f, "dk:{k}"),
            PermClass::DescentSet(s) => write!(f, "dset:{}", join(s)),
            PermClass::AscentSet(s) => write!(f, "aset:{}", join(s)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn membership() {
        assert!(PermClass::DescentType(3).contains_perm(&p("24537816")));
        assert!(PermClass::Alternating.contains_perm(&p("36254718")));
        assert!(!PermClass::Alternating.contains_perm(&p("53624718")));
        assert!(PermClass::ReverseAlternating.contains_perm(&p("52413")));
        assert!(PermClass::DescentSet([2].into()).contains_perm(&p("1324")));
        assert!(!PermClass::DescentSet([5].into()).contains_perm(&p("1324")));
        assert!(PermClass::AscentSet([1, 3].into()).contains_perm(&p("1324")));
    }

    #[test]
    fn alternating_is_descent_type_two() {
        for s in ["1", "12", "132", "2413", "35624718", "21", "3412"] {
            let w = p(s);
            assert_eq!(
                PermClass::Alternating.contains_perm(&w),
                PermClass::DescentType(2).contains_perm(&w)
            );
        }
    }

    #[test]
    fn parse_round_trip() {
        for s in ["all", "alt", "ralt", "dk:3", "dset:1,3", "aset:2"] {
            assert_eq!(s.parse::<PermClass>().unwrap().to_string(), s);
        }
        assert!("dk:0".parse::<PermClass>().is_err());
        assert!("odd".parse::<PermClass>().is_err());
    }
}
