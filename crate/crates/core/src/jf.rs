//! The bijection between `F_3`-avoiding and `J_3`-avoiding transversals of
//! 1-alternating AD-Young diagrams, built from cyclic shifts.
//!
//! `J_3` is the pattern 321 and `F_3` is 213. One step `φ` removes a chosen
//! copy of `J_3` and creates a copy of `F_3`; `ψ` undoes it. Iterating `φ`
//! from an `F_3`-avoider until no `J_3` is left gives `Φ`, iterating `ψ`
//! gives `Ψ`.
//!
//! Rows, columns and triples are 1-based throughout this module.

use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;
use crate::young::{AdYoung, IndexSet, Transversal, YoungDiagram, YoungError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JfError {
    #[error("diagram {0} is not 1-alternating")]
    NotAlternating(String),
    #[error("diagram {0} is not 1-semialternating")]
    NotSemialternating(String),
    #[error("transversal {0} is not valid for the diagram")]
    InvalidTransversal(String),
    #[error("transversal {0} contains no copy of the pattern this step removes")]
    NothingToRemove(String),
    #[error("shift of rows {rows:?} over columns {lo}..={hi} leaves the diagram")]
    ShiftOutsideDiagram {
        rows: IndexSet,
        lo: usize,
        hi: usize,
    },
    #[error("{lemma} fails at step {step} on {transversal}: {detail}")]
    LemmaViolated {
        lemma: &'static str,
        step: usize,
        transversal: String,
        detail: String,
    },
    #[error("no fixed point within {0} steps")]
    BudgetExceeded(usize),
    #[error("first row of {0} is not in column 1")]
    NotEmbedded(String),
    #[error(transparent)]
    Young(#[from] YoungError),
}

pub fn j3() -> Permutation {
    Permutation::decreasing(3)
}

pub fn f3() -> Permutation {
    Permutation::from_one_based(&[2, 1, 3]).unwrap()
}

/// Row indices of a copy of a three-letter pattern.
pub type Triple = (usize, usize, usize);

/// Working copy of a transversal: `b[i]` is the column of row `i`, `b[0]` unused.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Word(Vec<usize>);

impl Word {
    fn of(t: &Transversal) -> Self {
        let mut b = vec![0];
        b.extend(t.columns());
        Word(b)
    }

    fn n(&self) -> usize {
        self.0.len() - 1
    }

    fn to_transversal(&self) -> Transversal {
        Transversal::from_columns(&self.0[1..]).expect("cyclic shifts permute columns")
    }
}

impl std::ops::Index<usize> for Word {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

/// Rows `i ∈ rows`, increasing, whose column lies in `lo..=hi`.
pub fn gamma(t: &Transversal, rows: IndexSet, lo: usize, hi: usize) -> Vec<usize> {
    gamma_word(&Word::of(t), rows, lo, hi)
}

fn gamma_word(b: &Word, rows: IndexSet, lo: usize, hi: usize) -> Vec<usize> {
    rows.iter()
        .filter(|&i| i >= 1 && i <= b.n() && b[i] >= lo && b[i] <= hi)
        .collect()
}

fn shift_word(
    y: &YoungDiagram,
    b: &Word,
    rows: IndexSet,
    lo: usize,
    hi: usize,
    forward: bool,
) -> Result<Word, JfError> {
    let g = gamma_word(b, rows, lo, hi);
    let mut out = b.clone();
    let k = g.len();
    for j in 0..k {
        let src = if forward {
            (j + k - 1) % k
        } else {
            (j + 1) % k
        };
        out.0[g[j]] = b[g[src]];
    }
    if g.iter().any(|&i| !y.contains_cell(i, out[i])) {
        return Err(JfError::ShiftOutsideDiagram { rows, lo, hi });
    }
    Ok(out)
}

/// `ω`: each selected row takes the column of the previous selected row, the
/// first takes the column of the last.
pub fn omega(
    y: &YoungDiagram,
    t: &Transversal,
    rows: IndexSet,
    lo: usize,
    hi: usize,
) -> Result<Transversal, JfError> {
    shift_word(y, &Word::of(t), rows, lo, hi, true).map(|w| w.to_transversal())
}

/// `θ`: each selected row takes the column of the next selected row, the
/// last takes the column of the first.
pub fn theta(
    y: &YoungDiagram,
    t: &Transversal,
    rows: IndexSet,
    lo: usize,
    hi: usize,
) -> Result<Transversal, JfError> {
    shift_word(y, &Word::of(t), rows, lo, hi, false).map(|w| w.to_transversal())
}

/// Copies `(a1, a2, a3)` of `J_3` with the bottom-right square inside `y`.
fn j3_copies(y: &YoungDiagram, b: &Word) -> Vec<Triple> {
    let n = b.n();
    let mut out = Vec::new();
    for a1 in 1..=n {
        for a2 in a1 + 1..=n {
            if b[a2] >= b[a1] {
                continue;
            }
            for a3 in a2 + 1..=n {
                if b[a3] < b[a2] && b[a1] <= y.row_len(a3) {
                    out.push((a1, a2, a3));
                }
            }
        }
    }
    out
}

/// Copies of `F_3` whose last row is not a forced ascent.
fn f3_copies(ady: &AdYoung, b: &Word) -> Vec<Triple> {
    let n = b.n();
    let mut out = Vec::new();
    for a1 in 1..=n {
        for a2 in a1 + 1..=n {
            if b[a2] >= b[a1] {
                continue;
            }
            for a3 in a2 + 1..=n {
                if b[a3] > b[a1] && !ady.ascents().contains(a3) {
                    out.push((a1, a2, a3));
                }
            }
        }
    }
    out
}

/// Which of the three step shapes applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepKind {
    One,
    Two,
    Three,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            StepKind::One => 1,
            StepKind::Two => 2,
            StepKind::Three => 3,
        };
        write!(f, "{n}")
    }
}

fn j_kind(ady: &AdYoung, b: &Word, (a1, _, a3): Triple) -> StepKind {
    let prev_desc = ady.descents().contains(a3 - 1);
    if prev_desc && b[a3 - 1] < b[a1] {
        StepKind::Two
    } else if ady.ascents().contains(a3) {
        StepKind::Three
    } else {
        StepKind::One
    }
}

fn f_kind(ady: &AdYoung, (_, a2, a3): Triple) -> StepKind {
    if !ady.ascents().contains(a3 - 1) {
        StepKind::One
    } else if a2 == a3 - 1 {
        StepKind::Two
    } else {
        StepKind::Three
    }
}

/// Ordering key of a `J_3` copy: `(a3, a1, a2)`.
pub fn j_key((a1, a2, a3): Triple) -> Triple {
    (a3, a1, a2)
}

/// Ordering key of an `F_3` copy, injective on copies of a fixed diagram.
fn f_key(ady: &AdYoung, a: Triple) -> Triple {
    let (a1, a2, a3) = a;
    match f_kind(ady, a) {
        StepKind::One => (a3, a1, a2),
        StepKind::Two => (a3 + 1, a1, 0),
        StepKind::Three => (a3 - 1, a1, a2),
    }
}

/// Recovers an `F_3` copy from its key.
pub fn f_key_inverse(ady: &AdYoung, (d1, d2, d3): Triple) -> Triple {
    if d3 == 0 {
        (d2, d1 - 2, d1 - 1)
    } else if ady.ascents().contains(d1) {
        (d2, d3, d1 + 1)
    } else {
        (d2, d3, d1)
    }
}

/// The `J_3` copy with the smallest key.
pub fn select_j(ady: &AdYoung, t: &Transversal) -> Option<Triple> {
    j3_copies(ady.diagram(), &Word::of(t))
        .into_iter()
        .min_by_key(|&a| j_key(a))
}

/// The `F_3` copy with the largest key.
pub fn select_f(ady: &AdYoung, t: &Transversal) -> Option<Triple> {
    let b = Word::of(t);
    f3_copies(ady, &b)
        .into_iter()
        .max_by_key(|&a| f_key(ady, a))
}

/// Every key of a `J_3` copy is at least every key of an `F_3` copy.
pub fn is_separable(ady: &AdYoung, t: &Transversal) -> bool {
    let b = Word::of(t);
    let min_j = j3_copies(ady.diagram(), &b).into_iter().map(j_key).min();
    let max_f = f3_copies(ady, &b).into_iter().map(|a| f_key(ady, a)).max();
    match (min_j, max_f) {
        (Some(j), Some(f)) => j >= f,
        _ => true,
    }
}

/// A final transversal with the steps that produced it.
pub type Traced = (Transversal, Vec<Step>);

/// One application of `φ` or `ψ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub index: usize,
    pub triple: Triple,
    pub kind: StepKind,
    pub before: Transversal,
    pub after: Transversal,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a1, a2, a3) = self.triple;
        write!(
            f,
            "step {} triple ({a1},{a2},{a3}) type {} {} -> {}",
            self.index, self.kind, self.before, self.after
        )
    }
}

fn violation(lemma: &'static str, step: usize, b: &Word, detail: String) -> JfError {
    JfError::LemmaViolated {
        lemma,
        step,
        transversal: b.to_transversal().to_string(),
        detail,
    }
}

fn strictly_increasing(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

/// Rows of `b` falling in the given row/column boxes.
fn occupied(b: &Word, boxes: &[(usize, usize, usize, usize)]) -> Option<(usize, usize)> {
    for i in 1..=b.n() {
        for &(r_lo, r_hi, c_lo, c_hi) in boxes {
            if i >= r_lo && i <= r_hi && b[i] >= c_lo && b[i] <= c_hi {
                return Some((i, b[i]));
            }
        }
    }
    None
}

const FAR: usize = usize::MAX / 4;

fn check_phi(
    ady: &AdYoung,
    step: usize,
    b: &Word,
    c: &Word,
    a: Triple,
    kind: StepKind,
) -> Result<(), JfError> {
    let (a1, a2, a3) = a;
    let y3 = ady.diagram().row_len(a3);
    let boxes = [
        (1, a1 - 1, b[a2], y3),
        (a1 + 1, a2 - 1, b[a3], b[a1]),
        (a2 + 1, a3 - 1, 1, b[a2]),
        (a3 + 1, FAR, b[a2] + 1, FAR),
    ];
    if let Some((i, col)) = occupied(b, &boxes) {
        return Err(violation(
            "empty region before phi",
            step,
            b,
            format!("element ({i},{col}) inside the region for {a:?}"),
        ));
    }
    match kind {
        StepKind::One => {}
        StepKind::Two => {
            if !(b[a2] <= b[a3 - 1] && a3 - a1 >= 3) {
                return Err(violation(
                    "phi type 2 spacing",
                    step,
                    b,
                    format!("copy {a:?}"),
                ));
            }
        }
        StepKind::Three => {
            let (lo, hi) = (b[a3], b[a1]);
            let upper = gamma_word(b, IndexSet::range(1, a1 - 1), lo, hi);
            if let Some(&i) = upper.iter().find(|&&i| !(b[a3 + 1] < b[i] && b[i] < b[a2])) {
                return Err(violation(
                    "phi type 3 ordering",
                    step,
                    b,
                    format!("row {i} outside ({}, {})", b[a3 + 1], b[a2]),
                ));
            }
            let top = gamma_word(b, IndexSet::range(1, a1), lo, hi);
            let mid = gamma_word(b, IndexSet::range(a2, a3 - 1), lo, hi);
            let ok_top = strictly_increasing(&top.iter().map(|&i| b[i]).collect::<Vec<_>>())
                && strictly_increasing(&top.iter().map(|&i| c[i]).collect::<Vec<_>>());
            let mid_c: Vec<usize> = mid.iter().map(|&i| c[i]).collect();
            let ok_mid = strictly_increasing(&mid.iter().map(|&i| b[i]).collect::<Vec<_>>())
                && strictly_increasing(&mid_c)
                && mid_c.last().is_none_or(|&last| last < c[a3]);
            if !ok_top || !ok_mid {
                return Err(violation(
                    "phi type 3 ordering",
                    step,
                    b,
                    format!("rows {top:?} / {mid:?}"),
                ));
            }
        }
    }
    Ok(())
}

fn check_psi(
    ady: &AdYoung,
    step: usize,
    b: &Word,
    c: &Word,
    a: Triple,
    kind: StepKind,
) -> Result<(), JfError> {
    let (a1, a2, a3) = a;
    let y3 = ady.diagram().row_len(a3);
    let boxes = [
        (1, a1 - 1, b[a1], y3),
        (a1 + 1, a2 - 1, b[a2], b[a3]),
        (a2 + 1, a3 - 1, 1, b[a1]),
        (a3 + 1, FAR, b[a1] + 1, FAR),
    ];
    if let Some((i, col)) = occupied(b, &boxes) {
        return Err(violation(
            "empty region before psi",
            step,
            b,
            format!("element ({i},{col}) inside the region for {a:?}"),
        ));
    }
    if kind == StepKind::Three {
        let (lo, hi) = (b[a2], b[a3]);
        let top = gamma_word(b, IndexSet::range(1, a1), lo, hi);
        let mid = gamma_word(b, IndexSet::range(a2, a3.saturating_sub(2)), lo, hi);
        let ok_top = strictly_increasing(&top.iter().map(|&i| b[i]).collect::<Vec<_>>())
            && strictly_increasing(&top.iter().map(|&i| c[i]).collect::<Vec<_>>());
        let mid_b: Vec<usize> = mid.iter().map(|&i| b[i]).collect();
        let ok_mid = strictly_increasing(&mid_b)
            && strictly_increasing(&mid.iter().map(|&i| c[i]).collect::<Vec<_>>())
            && mid_b.last().is_none_or(|&last| last < b[a3 - 1]);
        if !ok_top || !ok_mid {
            return Err(violation(
                "psi type 3 ordering",
                step,
                b,
                format!("rows {top:?} / {mid:?}"),
            ));
        }
        let m = top[0];
        if let Some((i, col)) = occupied(b, &[(a3 + 1, FAR, b[m] + 1, FAR)]) {
            return Err(violation(
                "psi type 3 empty corner",
                step,
                b,
                format!("element ({i},{col})"),
            ));
        }
    }
    Ok(())
}

fn check_first_row(step: usize, lemma: &'static str, b: &Word, c: &Word) -> Result<(), JfError> {
    if b.n() >= 1 && b[1] == 1 && c[1] != 1 {
        return Err(violation(
            lemma,
            step,
            b,
            format!("first row moved to column {}", c[1]),
        ));
    }
    Ok(())
}

fn require_valid(ady: &AdYoung, t: &Transversal) -> Result<(), JfError> {
    if ady.is_valid_transversal(t) {
        Ok(())
    } else {
        Err(JfError::InvalidTransversal(t.to_string()))
    }
}

/// One `φ` step at the selected `J_3` copy, with every lemma about the step
/// checked on the way.
pub fn phi_step(ady: &AdYoung, t: &Transversal, index: usize) -> Result<Step, JfError> {
    require_valid(ady, t)?;
    let a = select_j(ady, t).ok_or_else(|| JfError::NothingToRemove(t.to_string()))?;
    let (a1, a2, a3) = a;
    let y = ady.diagram();
    let b = Word::of(t);
    let kind = j_kind(ady, &b, a);
    let c = match kind {
        StepKind::One => shift_word(y, &b, [a1, a2, a3].into_iter().collect(), 1, b[a1], false)?,
        StepKind::Two => shift_word(y, &b, [a1, a3 - 1].into_iter().collect(), 1, b[a1], true)?,
        StepKind::Three => {
            let (lo, hi) = (b[a3], b[a1]);
            let inner = shift_word(y, &b, IndexSet::range(a2, a3), lo, hi, true)?;
            shift_word(y, &inner, IndexSet::range(1, a1).with(a3 + 1), lo, hi, true)?
        }
    };
    check_phi(ady, index, &b, &c, a, kind)?;
    check_first_row(index, "first column kept by phi", &b, &c)?;
    Ok(Step {
        index,
        triple: a,
        kind,
        before: t.clone(),
        after: c.to_transversal(),
    })
}

/// One `ψ` step at the selected `F_3` copy, with its lemmas checked.
pub fn psi_step(ady: &AdYoung, t: &Transversal, index: usize) -> Result<Step, JfError> {
    require_valid(ady, t)?;
    let a = select_f(ady, t).ok_or_else(|| JfError::NothingToRemove(t.to_string()))?;
    let (a1, a2, a3) = a;
    let y = ady.diagram();
    let b = Word::of(t);
    let kind = f_kind(ady, a);
    let c = match kind {
        StepKind::One => shift_word(y, &b, [a1, a2, a3].into_iter().collect(), 1, b[a3], true)?,
        StepKind::Two => shift_word(y, &b, [a1, a3].into_iter().collect(), 1, b[a3], false)?,
        StepKind::Three => {
            let (lo, hi) = (b[a2], b[a3]);
            let inner = shift_word(y, &b, IndexSet::range(1, a1).with(a3), lo, hi, false)?;
            shift_word(y, &inner, IndexSet::range(a2, a3 - 1), lo, hi, false)?
        }
    };
    check_psi(ady, index, &b, &c, a, kind)?;
    check_first_row(index, "first column kept by psi", &b, &c)?;
    Ok(Step {
        index,
        triple: a,
        kind,
        before: t.clone(),
        after: c.to_transversal(),
    })
}

/// `φ(T)`.
pub fn phi(ady: &AdYoung, t: &Transversal) -> Result<Transversal, JfError> {
    phi_step(ady, t, 1).map(|s| s.after)
}

/// `ψ(T)`.
pub fn psi(ady: &AdYoung, t: &Transversal) -> Result<Transversal, JfError> {
    psi_step(ady, t, 1).map(|s| s.after)
}

/// `n · n!`, the step budget for the iterated maps.
pub fn step_budget(n: usize) -> usize {
    (1..=n).fold(n.max(1), |acc, k| acc.saturating_mul(k))
}

fn iterate(
    ady: &AdYoung,
    t: &Transversal,
    step: fn(&AdYoung, &Transversal, usize) -> Result<Step, JfError>,
    done: fn(&AdYoung, &Transversal) -> bool,
) -> Result<Traced, JfError> {
    if !ady.is_alternating(1) {
        return Err(JfError::NotAlternating(ady.to_string()));
    }
    require_valid(ady, t)?;
    let budget = step_budget(ady.n());
    let mut cur = t.clone();
    let mut trace = Vec::new();
    while !done(ady, &cur) {
        if trace.len() >= budget {
            return Err(JfError::BudgetExceeded(budget));
        }
        let s = step(ady, &cur, trace.len() + 1)?;
        cur = s.after.clone();
        trace.push(s);
    }
    Ok((cur, trace))
}

/// `Φ`: apply `φ` until no `J_3` copy remains. Returns the image and the
/// steps taken.
pub fn big_phi(ady: &AdYoung, t: &Transversal) -> Result<Traced, JfError> {
    iterate(ady, t, phi_step, |a, t| select_j(a, t).is_none())
}

/// `Ψ`: apply `ψ` until no `F_3` copy remains.
pub fn big_psi(ady: &AdYoung, t: &Transversal) -> Result<Traced, JfError> {
    iterate(ady, t, psi_step, |a, t| select_f(a, t).is_none())
}

/// The diagram a 1-semialternating diagram with `1 ∈ D` embeds into: a new
/// first row, `1` forced as an ascent, everything else shifted down and right.
pub fn embed_diagram(ady: &AdYoung) -> Result<AdYoung, JfError> {
    if !ady.is_semialternating(1) {
        return Err(JfError::NotSemialternating(ady.to_string()));
    }
    let rows = ady.diagram().rows();
    let mut new_rows = Vec::with_capacity(rows.len() + 1);
    let first = rows.first().copied().unwrap_or(0) + 1;
    new_rows.push(first);
    new_rows.extend(rows.iter().map(|r| r + 1));
    let asc = ady.ascents().shifted(1).with(1);
    let des = ady.descents().shifted(1);
    Ok(AdYoung::new(YoungDiagram::new(new_rows)?, asc, des)?)
}

/// `{(1,1)} ∪ {(i+1, b_i+1)}`.
pub fn embed_transversal(t: &Transversal) -> Transversal {
    let mut cols = vec![1];
    cols.extend(t.columns().iter().map(|c| c + 1));
    Transversal::from_columns(&cols).unwrap()
}

/// Inverse of [`embed_transversal`].
pub fn unembed_transversal(t: &Transversal) -> Result<Transversal, JfError> {
    let cols = t.columns();
    if cols.first() != Some(&1) {
        return Err(JfError::NotEmbedded(t.to_string()));
    }
    Ok(Transversal::from_columns(&cols[1..].iter().map(|c| c - 1).collect::<Vec<_>>()).unwrap())
}

fn through_embedding(
    ady: &AdYoung,
    t: &Transversal,
    map: fn(&AdYoung, &Transversal) -> Result<Traced, JfError>,
) -> Result<Traced, JfError> {
    if !ady.is_semialternating(1) {
        return Err(JfError::NotSemialternating(ady.to_string()));
    }
    if !ady.descents().contains(1) {
        return map(ady, t);
    }
    require_valid(ady, t)?;
    let big = embed_diagram(ady)?;
    let (image, trace) = map(&big, &embed_transversal(t))?;
    Ok((unembed_transversal(&image)?, trace))
}

/// `Φ` on a 1-semialternating diagram; when `1 ∈ D` it runs on the embedded
/// diagram and is pulled back.
pub fn big_phi_semialternating(ady: &AdYoung, t: &Transversal) -> Result<Traced, JfError> {
    through_embedding(ady, t, big_phi)
}

/// `Ψ` on a 1-semialternating diagram.
pub fn big_psi_semialternating(ady: &AdYoung, t: &Transversal) -> Result<Traced, JfError> {
    through_embedding(ady, t, big_psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig() -> (YoungDiagram, Transversal) {
        let y = YoungDiagram::new(vec![6, 6, 5, 5, 5, 5]).unwrap();
        let t: Transversal = "{(1,3),(2,6),(3,4),(4,1),(5,2),(6,5)}".parse().unwrap();
        (y, t)
    }

    fn rows() -> IndexSet {
        [2, 3, 5, 6].into_iter().collect()
    }

    #[test]
    fn cyclic_shift_figure() {
        let (y, t) = fig();
        assert_eq!(gamma(&t, rows(), 2, 5), vec![3, 5, 6]);
        let w = omega(&y, &t, rows(), 2, 5).unwrap();
        assert_eq!(w.cell_string(), "{(1,3),(2,6),(3,5),(4,1),(5,4),(6,2)}");
        let th = theta(&y, &t, rows(), 2, 5).unwrap();
        assert_eq!(th.cell_string(), "{(1,3),(2,6),(3,2),(4,1),(5,5),(6,4)}");
        assert_eq!(theta(&y, &w, rows(), 2, 5).unwrap(), t);
    }

    #[test]
    fn key_inverse() {
        let ady: AdYoung = "5,5,5,5,5;A=1,3;D=2,4".parse().unwrap();
        for t in ady.valid_transversals() {
            let b = Word::of(&t);
            for a in f3_copies(&ady, &b) {
                assert_eq!(f_key_inverse(&ady, f_key(&ady, a)), a);
            }
        }
    }

    #[test]
    fn square_three_round_trip() {
        let ady = AdYoung::plain(YoungDiagram::square(3)).unwrap();
        let t: Transversal = "321".parse().unwrap();
        let (image, trace) = big_phi(&ady, &t).unwrap();
        assert_eq!(image, "213".parse().unwrap());
        assert_eq!(trace.len(), 1);
        let (back, _) = big_psi(&ady, &image).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn embedding_round_trip() {
        let ady: AdYoung = "3,3,3;A=;D=1".parse().unwrap();
        let big = embed_diagram(&ady).unwrap();
        assert!(big.is_alternating(1));
        for t in ady.valid_transversals() {
            let e = embed_transversal(&t);
            assert!(big.is_valid_transversal(&e));
            assert_eq!(unembed_transversal(&e).unwrap(), t);
        }
    }
}
