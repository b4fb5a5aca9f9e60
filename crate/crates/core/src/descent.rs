//! Injections between descent-type classes `D^k_n(q)` and `D^k_{n+1}(q)`.
//!
//! A permutation of descent type `k` is read in rows of `k` positions, each
//! row increasing, with a descent between consecutive rows; the last row may
//! be incomplete. Values are 1-based in this module.

use std::fmt;

use thiserror::Error;

use crate::class::PermClass;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error("{perm} does not have descent type {k}")]
    WrongDescentType { perm: Permutation, k: usize },
    #[error("value {v} is outside 1..={max}")]
    ValueOutOfRange { v: usize, max: usize },
    #[error("the block length is only defined when the last entry of {0} is its maximum")]
    NoBlock(Permutation),
    #[error("pattern {0} is excluded (length one, 21, or an increasing pattern no longer than k)")]
    ExcludedPattern(Permutation),
    #[error("{perm} contains {pattern}")]
    ContainsPattern {
        perm: Permutation,
        pattern: Permutation,
    },
    #[error("length {n} is outside the range this map is defined on")]
    LengthOutOfRange { n: usize },
    #[error("pattern {0} is not a non-identity repetitive pattern")]
    NotRepetitive(Permutation),
    #[error("descent type {k} is smaller than the pattern length minus one")]
    DescentTypeTooSmall { k: usize },
    #[error("entries at {pos} and {next} of {perm} are not consecutive values", next = .pos + 1)]
    NotAdjacent { perm: Permutation, pos: usize },
}

fn require_type(p: &Permutation, k: usize) -> Result<(), DescentError> {
    if k >= 1 && PermClass::DescentType(k).contains_perm(p) {
        Ok(())
    } else {
        Err(DescentError::WrongDescentType { perm: p.clone(), k })
    }
}

/// `v ↦ p`: raise every value `>= v`, append `v`, then restore descent type
/// `k` (sort an incomplete last row, or swap the last two entries when a
/// complete last row would otherwise gain an ascent). With `k = 1` only
/// `v = 1` keeps the type.
pub fn inject(v: usize, p: &Permutation, k: usize) -> Result<Permutation, DescentError> {
    require_type(p, k)?;
    let n = p.len();
    if v == 0 || v > n + 1 {
        return Err(DescentError::ValueOutOfRange { v, max: n + 1 });
    }
    let mut w: Vec<usize> = p
        .one_based()
        .into_iter()
        .map(|x| if x >= v { x + 1 } else { x })
        .collect();
    w.push(v);
    if !n.is_multiple_of(k) {
        let start = n - n % k;
        w[start..].sort_unstable();
    } else if n > 0 && v > p.at(n) {
        w.swap(n - 1, n);
    }
    let w = Permutation::from_one_based(&w).expect("injection yields a permutation");
    require_type(&w, k)?;
    Ok(w)
}

/// Length of the run of consecutive positions and consecutive values ending
/// at the last entry; defined only when the last entry is the maximum.
pub fn block_length(q: &Permutation) -> Result<usize, DescentError> {
    let b = q.len();
    if b == 0 || q.at(b) != b {
        return Err(DescentError::NoBlock(q.clone()));
    }
    let mut len = 1;
    while len < b && q.at(b - len) + len == b {
        len += 1;
    }
    Ok(len)
}

/// Patterns for which the child map is not defined.
pub fn is_excluded(q: &Permutation, k: usize) -> bool {
    q.len() <= 1 || *q == Permutation::decreasing(2) || (q.is_identity() && q.len() <= k.max(2))
}

/// Which branch of the child map picked the injected value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChildRule {
    /// Last entry of `q` is its maximum and the last row is shorter than `B(q)`: inject 1.
    MaxLastShortRow,
    /// Last entry of `q` is its maximum, last row has at least `B(q)` entries: inject `p_{n-B(q)+1}`.
    MaxLastLongRow,
    /// Incomplete last row: inject `n + 1`.
    OpenRow,
    /// Complete last row, `q` ends in 2,1: inject `n + 1`.
    ClosedRowEndsTwoOne,
    /// Complete last row, `q` ends in 1 but not 2,1: inject `p_{km}`.
    ClosedRowEndsOne,
    /// Complete last row, `q` does not end in 1: inject 1.
    ClosedRowOther,
}

impl fmt::Display for ChildRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ChildRule::MaxLastShortRow => "inject 1 (short final row)",
            ChildRule::MaxLastLongRow => "inject p[n-B(q)+1]",
            ChildRule::OpenRow => "inject n+1 (open final row)",
            ChildRule::ClosedRowEndsTwoOne => "inject n+1 (q ends 21)",
            ChildRule::ClosedRowEndsOne => "inject p[km] (q ends 1)",
            ChildRule::ClosedRowOther => "inject 1 (complete final row)",
        };
        f.write_str(s)
    }
}

/// The value the child map injects and the branch that chose it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InjectionPlan {
    pub value: usize,
    pub rule: ChildRule,
}

/// Chooses the injected value for `p ∈ D^k_n(q)`.
pub fn child_plan(
    p: &Permutation,
    q: &Permutation,
    k: usize,
) -> Result<InjectionPlan, DescentError> {
    if is_excluded(q, k) {
        return Err(DescentError::ExcludedPattern(q.clone()));
    }
    require_type(p, k)?;
    let n = p.len();
    let b = q.len();
    let s = n % k;
    let plan = |value, rule| Ok(InjectionPlan { value, rule });
    if q.at(b) == b {
        let blk = block_length(q)?;
        if s < blk {
            plan(1, ChildRule::MaxLastShortRow)
        } else {
            plan(p.at(n - blk + 1), ChildRule::MaxLastLongRow)
        }
    } else if s > 0 {
        plan(n + 1, ChildRule::OpenRow)
    } else if q.at(b) == 1 {
        if q.at(b - 1) == 2 {
            plan(n + 1, ChildRule::ClosedRowEndsTwoOne)
        } else if n == 0 {
            plan(1, ChildRule::ClosedRowEndsOne)
        } else {
            plan(p.at(n), ChildRule::ClosedRowEndsOne)
        }
    } else {
        plan(1, ChildRule::ClosedRowOther)
    }
}

/// The child `f(p)` of `p ∈ D^k_n(q)` in `D^k_{n+1}(q)`.
pub fn child(p: &Permutation, q: &Permutation, k: usize) -> Result<Permutation, DescentError> {
    if p.contains(q) {
        return Err(DescentError::ContainsPattern {
            perm: p.clone(),
            pattern: q.clone(),
        });
    }
    let plan = child_plan(p, q, k)?;
    inject(plan.value, p, k)
}

/// Avoids 321, 132 and 231.
pub fn is_repetitive(q: &Permutation) -> bool {
    ["321", "132", "231"]
        .iter()
        .all(|s| q.avoids(&s.parse().unwrap()))
}

/// For `q = t,1,2,…,t-1,t+1,…,b` with `t >= 2`, returns `t`; `None` for the
/// identity and for every other shape.
pub fn repetitive_form(q: &Permutation) -> Option<usize> {
    let b = q.len();
    if b < 2 || q.is_identity() {
        return None;
    }
    let t = q.at(1);
    let rest: Vec<usize> = (1..=b).filter(|&v| v != t).collect();
    if t >= 2 && q.one_based()[1..] == rest[..] {
        Some(t)
    } else {
        None
    }
}

/// Second injection at a complete final row for the length-four patterns
/// that avoid 123, 213, 312 or avoid 321, 213, 312. `None` for other
/// patterns.
pub fn secondary_injection_value(p: &Permutation, q: &Permutation, k: usize) -> Option<usize> {
    let n = p.len();
    if n == 0 || !n.is_multiple_of(k) {
        return None;
    }
    let last = p.at(n);
    match q.to_string().as_str() {
        "4321" | "3421" => Some(if last != n { n } else { n - 1 }),
        "1432" | "2431" => Some(n + 1),
        "1234" | "1243" => Some(2),
        "1342" => Some(last),
        "2341" => Some(if last == n { n - 1 } else { last + 2 }),
        _ => None,
    }
}

/// A run of cells in one row whose values go up by exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConsecutiveBlock {
    /// 1-based position of the first cell.
    pub start: usize,
    pub len: usize,
    /// Value of the last cell.
    pub anchor: usize,
}

fn require_avoids(p: &Permutation, q: &str) -> Result<(), DescentError> {
    let q: Permutation = q.parse().unwrap();
    if p.contains(&q) {
        Err(DescentError::ContainsPattern {
            perm: p.clone(),
            pattern: q,
        })
    } else {
        Ok(())
    }
}

/// Forward half of `|D^k_{km+1}(321)| = Σ_{i=k(m-1)+2}^{km} |D^k_i(321)|`:
/// the last row of `p` (length `i`) is refilled with the values `i+1..=km+1`
/// and its old last entry moves alone into a new row.
pub fn insert_block_321(
    p: &Permutation,
    k: usize,
) -> Result<(Permutation, ConsecutiveBlock), DescentError> {
    require_type(p, k)?;
    require_avoids(p, "321")?;
    let i = p.len();
    if k < 2 || i < 2 || i % k == 1 {
        return Err(DescentError::LengthOutOfRange { n: i });
    }
    let filled = if i.is_multiple_of(k) {
        i / k
    } else {
        i / k + 1
    };
    let target = k * filled + 1;
    let len = target - i;
    let mut w = p.one_based();
    let last = w.pop().unwrap();
    w.extend(i + 1..=target);
    w.push(last);
    let block = ConsecutiveBlock {
        start: target - len,
        len,
        anchor: target,
    };
    Ok((
        Permutation::from_one_based(&w).expect("block insertion yields a permutation"),
        block,
    ))
}

/// Backward half: removes the longest block of consecutive values ending at
/// position `km` (which holds the maximum) and merges the single entry of the
/// last row into the shortened row.
pub fn remove_block_321(
    p: &Permutation,
    k: usize,
) -> Result<(Permutation, ConsecutiveBlock), DescentError> {
    require_type(p, k)?;
    require_avoids(p, "321")?;
    let n = p.len();
    if k < 2 || n < k + 1 || n % k != 1 {
        return Err(DescentError::LengthOutOfRange { n });
    }
    let w = p.one_based();
    let end = n - 1;
    let row_start = end - k + 1;
    let mut len = 1;
    while end - len >= row_start && w[end - len - 1] + 1 == w[end - len] {
        len += 1;
    }
    let block = ConsecutiveBlock {
        start: end - len + 1,
        len,
        anchor: w[end - 1],
    };
    let mut out: Vec<usize> = w[..end - len].to_vec();
    out.push(w[n - 1]);
    let out =
        Permutation::from_one_based(&out).map_err(|_| DescentError::LengthOutOfRange { n })?;
    Ok((out, block))
}

/// Parameters shared by the plateau maps.
fn plateau_setup(q: &Permutation, k: usize) -> Result<(usize, usize), DescentError> {
    let b = q.len();
    let t = if q.at(1) == b && is_repetitive(q) && !q.is_identity() {
        b
    } else {
        repetitive_form(q).ok_or_else(|| DescentError::NotRepetitive(q.clone()))?
    };
    if k + 1 < b {
        return Err(DescentError::DescentTypeTooSmall { k });
    }
    Ok((b, t))
}

/// Forward plateau map `D^k_{km+x}(q) → D^k_{km+x+1}(q)` for `b-2 <= x <= k-1`.
pub fn plateau_forward(
    p: &Permutation,
    q: &Permutation,
    k: usize,
) -> Result<Permutation, DescentError> {
    let (b, t) = plateau_setup(q, k)?;
    require_type(p, k)?;
    let n = p.len();
    let (m, x) = (n / k, n % k);
    if x + 2 < b || x > k - 1 {
        return Err(DescentError::LengthOutOfRange { n });
    }
    let v = if t == b {
        n + 1
    } else {
        p.at(k * m + (x + t + 1 - b)) + 1
    };
    inject(v, p, k)
}

/// Backward plateau map `D^k_{km+x}(q) → D^k_{km+x-1}(q)` for `b-1 <= x <= k`.
pub fn plateau_backward(
    p: &Permutation,
    q: &Permutation,
    k: usize,
) -> Result<Permutation, DescentError> {
    let (b, t) = plateau_setup(q, k)?;
    require_type(p, k)?;
    let n = p.len();
    if n == 0 {
        return Err(DescentError::LengthOutOfRange { n });
    }
    // n = km + x with 1 <= x <= k.
    let m = (n - 1) / k;
    let x = n - k * m;
    if x + 1 < b {
        return Err(DescentError::LengthOutOfRange { n });
    }
    let pos = if t == b { n } else { k * m + (x + t + 1 - b) };
    let w = p.one_based();
    if t == b {
        if w[pos - 1] != n {
            return Err(DescentError::NotAdjacent {
                perm: p.clone(),
                pos: pos - 1,
            });
        }
    } else if pos < 2 || w[pos - 1] != w[pos - 2] + 1 {
        return Err(DescentError::NotAdjacent {
            perm: p.clone(),
            pos: pos - 1,
        });
    }
    let removed = w[pos - 1];
    let out: Vec<usize> = w
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pos - 1)
        .map(|(_, &v)| if v > removed { v - 1 } else { v })
        .collect();
    Ok(Permutation::from_one_based(&out).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn inject_example() {
        assert_eq!(inject(4, &p("35624718"), 3).unwrap(), p("367258149"));
        assert_eq!(inject(6, &p("23514"), 3).unwrap(), p("235146"));
        assert!(inject(1, &p("321"), 3).is_err());
        assert!(inject(5, &p("123"), 3).is_err());
    }

    #[test]
    fn block_lengths() {
        assert_eq!(block_length(&p("2134")).unwrap(), 2);
        assert_eq!(block_length(&p("1234")).unwrap(), 4);
        assert_eq!(block_length(&p("1324")).unwrap(), 1);
        assert!(block_length(&p("1243")).is_err());
    }

    #[test]
    fn child_example() {
        let q = p("2134");
        let c1 = child(&p("23514"), &q, 3).unwrap();
        assert_eq!(c1, p("346125"));
        assert_eq!(child(&c1, &q, 3).unwrap(), p("4572361"));
        assert!(child(&p("123"), &p("12"), 3).is_err());
    }

    #[test]
    fn repetitive_shapes() {
        assert!(is_repetitive(&p("2134")));
        assert_eq!(repetitive_form(&p("2134")), Some(2));
        assert!(is_repetitive(&p("1234")));
        assert_eq!(repetitive_form(&p("1234")), None);
        assert!(!is_repetitive(&p("321")));
        assert_eq!(repetitive_form(&p("4123")), Some(4));
    }

    #[test]
    fn block_figure() {
        let (back, block) = remove_block_321(&p("345617892"), 4).unwrap();
        assert_eq!(back, p("345612"));
        assert_eq!((block.len, block.anchor), (3, 9));
        let (fwd, block) = insert_block_321(&p("345612"), 4).unwrap();
        assert_eq!(fwd, p("345617892"));
        assert_eq!((block.start, block.len, block.anchor), (6, 3, 9));
    }
}
