//! Doubling sets and shortest alternating containers.
//!
//! An index `i` is doubled when `p_{i-1}, p_i, p_{i+1}` is monotone, with
//! `p_0` read as +infinity. A pattern of length `k` with `t` doubled indices
//! fits into an alternating permutation of length `k + t` and no shorter one.

use crate::perm::Permutation;

/// The doubled indices of `p`, 1-based and increasing.
pub fn doubling_set(p: &Permutation) -> Vec<usize> {
    let v = p.values();
    let k = v.len();
    let mut out = Vec::new();
    for i in 1..k {
        // 1-based i: p_{i-1}, p_i, p_{i+1} are v[i-2], v[i-1], v[i].
        let cur = v[i - 1];
        let next = v[i];
        let mono = if i == 1 {
            cur > next
        } else {
            let prev = v[i - 2];
            (prev > cur && cur > next) || (prev < cur && cur < next)
        };
        if mono {
            out.push(i);
        }
    }
    out
}

pub fn doubling_number(p: &Permutation) -> usize {
    doubling_set(p).len()
}

/// An alternating permutation of length `k + t` containing `p`.
///
/// Entry `p_m` goes to position `m + |d(p) ∩ [m-1]|`; the skipped positions
/// get fillers, the smallest values at odd positions (valleys) and the
/// largest values at even positions (peaks).
pub fn shortest_alternating_container(p: &Permutation) -> Permutation {
    let k = p.len();
    let d = doubling_set(p);
    let len = k + d.len();
    let mut in_s = vec![false; len + 1];
    let mut skipped = 0;
    let mut placed_at = vec![0usize];
    placed_at.extend((1..=k).map(|m| {
        while skipped < d.len() && d[skipped] < m {
            skipped += 1;
        }
        in_s[m + skipped] = true;
        m + skipped
    }));
    let low: Vec<usize> = (1..=len).filter(|&i| !in_s[i] && i % 2 == 1).collect();
    let high: Vec<usize> = (1..=len).filter(|&i| !in_s[i] && i % 2 == 0).collect();
    let mut w = vec![0usize; len + 1];
    for m in 1..=k {
        w[placed_at[m]] = p.at(m) + low.len();
    }
    for (j, &i) in low.iter().enumerate() {
        w[i] = j + 1;
    }
    for (j, &i) in high.iter().enumerate() {
        w[i] = len - j;
    }
    Permutation::from_one_based(&w[1..]).expect("filler construction yields a permutation")
}
