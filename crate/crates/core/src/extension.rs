//! Dominant regions, successor diagrams and reinsertion.
//!
//! For a transversal `T` of an AD-Young diagram and a pattern `C`, a square
//! `(a, b)` is dominant when the part of `T` strictly south-east of it
//! contains `C`. Deleting the rows and columns of the non-dominant elements
//! of `T` from the dominant region leaves a smaller AD-Young diagram; the
//! count of `P ⊕ C`-avoiders splits as a sum over these successors.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::perm::{Matcher, Permutation};
use crate::young::{AdYoung, IndexSet, Transversal, YoungDiagram, YoungError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("successor is not an AD-Young diagram: {0}")]
    SuccessorNotAdYoung(YoungError),
    #[error("reinserted cells do not form a transversal of the parent")]
    NotATransversal,
    #[error("transversal length {got} does not match diagram size {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("two transversals with the same non-dominant set produced different successors")]
    SuccessorNotDetermined,
}

/// Square `(a, b)` (1-based) is dominant with respect to `t` and `c`.
pub fn is_dominant(y: &YoungDiagram, t: &Transversal, c: &Permutation, a: usize, b: usize) -> bool {
    if !y.contains_cell(a, b) {
        return false;
    }
    let cols = t.columns();
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for (i, &col) in cols.iter().enumerate() {
        let row = i + 1;
        if row > a && col > b {
            rows.push(row);
            text.push(col as u8);
        }
    }
    Matcher::new(c).search(&text, &mut |pos| match pos.last() {
        None => true,
        Some(&last) => {
            let max_col = pos.iter().map(|&p| text[p] as usize).max().unwrap();
            max_col <= y.row_len(rows[last])
        }
    })
}

/// Dominance of every square of `y`, indexed `[row-1][col-1]`.
pub fn dominant_cells(y: &YoungDiagram, t: &Transversal, c: &Permutation) -> Vec<Vec<bool>> {
    (1..=y.num_rows())
        .map(|a| {
            (1..=y.row_len(a))
                .map(|b| is_dominant(y, t, c, a, b))
                .collect()
        })
        .collect()
}

/// True when the dominant squares form a Young diagram: closed under moving
/// up and moving left.
pub fn dominant_cells_form_diagram(cells: &[Vec<bool>]) -> bool {
    for (r, row) in cells.iter().enumerate() {
        for (c, &d) in row.iter().enumerate() {
            if !d {
                continue;
            }
            if c > 0 && !row[c - 1] {
                return false;
            }
            if r > 0 && !cells[r - 1][c] {
                return false;
            }
        }
    }
    true
}

/// The dominant region as row lengths (trailing empty rows dropped). Rows
/// are read as their dominant prefix, which is the whole dominant part of the
/// row whenever the dominant squares form a diagram.
pub fn dominant_region(y: &YoungDiagram, t: &Transversal, c: &Permutation) -> YoungDiagram {
    let cells = dominant_cells(y, t, c);
    let mut rows: Vec<usize> = cells
        .iter()
        .map(|r| r.iter().take_while(|&&d| d).count())
        .collect();
    while rows.last() == Some(&0) {
        rows.pop();
    }
    YoungDiagram::new(rows).expect("dominant region is a Young diagram")
}

/// Elements of `t` that are not dominant, as 1-based `(row, col)` cells.
pub fn nondominant_set(y: &YoungDiagram, t: &Transversal, c: &Permutation) -> Vec<(usize, usize)> {
    t.cells()
        .into_iter()
        .filter(|&(r, col)| !is_dominant(y, t, c, r, col))
        .collect()
}

/// A successor diagram with the maps back into its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Successor {
    pub diagram: AdYoung,
    /// `rows[i-1]` is the parent row of successor row `i`.
    pub rows: Vec<usize>,
    /// `cols[j-1]` is the parent column of successor column `j`.
    pub cols: Vec<usize>,
    pub nondominant: Vec<(usize, usize)>,
}

/// The successor `f^C(N^C(T))` of `ady` under `t` and `c`.
pub fn successor(
    ady: &AdYoung,
    t: &Transversal,
    c: &Permutation,
) -> Result<Successor, ExtensionError> {
    let y = ady.diagram();
    let n = ady.n();
    if t.len() != n {
        return Err(ExtensionError::SizeMismatch {
            expected: n,
            got: t.len(),
        });
    }
    let region = dominant_region(y, t, c);
    let nondominant = nondominant_set(y, t, c);
    let gone_rows: IndexSet = nondominant.iter().map(|&(r, _)| r).collect();
    let gone_cols: IndexSet = nondominant.iter().map(|&(_, col)| col).collect();
    let rows: Vec<usize> = (1..=n).filter(|&r| !gone_rows.contains(r)).collect();
    let cols: Vec<usize> = (1..=n).filter(|&col| !gone_cols.contains(col)).collect();
    let lengths: Vec<usize> = rows
        .iter()
        .map(|&r| cols.iter().filter(|&&col| col <= region.row_len(r)).count())
        .collect();
    let k = rows.len();
    let adjacent = |i: usize| rows[i] == rows[i - 1] + 1;
    let asc: IndexSet = (1..k)
        .filter(|&i| ady.ascents().contains(rows[i - 1]) && adjacent(i))
        .collect();
    let des: IndexSet = (1..k)
        .filter(|&i| ady.descents().contains(rows[i - 1]) && adjacent(i))
        .collect();
    let shape = YoungDiagram::new(lengths).map_err(ExtensionError::SuccessorNotAdYoung)?;
    let diagram = AdYoung::new(shape, asc, des).map_err(ExtensionError::SuccessorNotAdYoung)?;
    Ok(Successor {
        diagram,
        rows,
        cols,
        nondominant,
    })
}

/// The part of `t` inside the successor, renumbered.
pub fn restrict(succ: &Successor, t: &Transversal) -> Transversal {
    let col_index: BTreeMap<usize, usize> = succ
        .cols
        .iter()
        .enumerate()
        .map(|(j, &c)| (c, j + 1))
        .collect();
    let cols: Vec<usize> = succ.rows.iter().map(|&r| col_index[&t.col(r)]).collect();
    Transversal::from_columns(&cols).expect("restriction of a transversal is a transversal")
}

/// `N ∪ {(r_i, c_{b_i})}` for a transversal `t_prime` of the successor.
pub fn reinsert(
    parent: &AdYoung,
    succ: &Successor,
    t_prime: &Transversal,
) -> Result<Transversal, ExtensionError> {
    let n = parent.n();
    if t_prime.len() != succ.rows.len() {
        return Err(ExtensionError::SizeMismatch {
            expected: succ.rows.len(),
            got: t_prime.len(),
        });
    }
    let mut cols = vec![0usize; n];
    for &(r, c) in &succ.nondominant {
        cols[r - 1] = c;
    }
    for (i, &r) in succ.rows.iter().enumerate() {
        cols[r - 1] = succ.cols[t_prime.col(i + 1) - 1];
    }
    let t = Transversal::from_columns(&cols).map_err(|_| ExtensionError::NotATransversal)?;
    if t.cells()
        .iter()
        .any(|&(r, c)| !parent.diagram().contains_cell(r, c))
    {
        return Err(ExtensionError::NotATransversal);
    }
    Ok(t)
}

/// All distinct non-dominant sets over valid transversals, each with its
/// successor. Fails if one set yields two different successors.
pub fn successor_classes(
    ady: &AdYoung,
    c: &Permutation,
) -> Result<BTreeMap<Vec<(usize, usize)>, Successor>, ExtensionError> {
    let mut classes: BTreeMap<Vec<(usize, usize)>, Successor> = BTreeMap::new();
    let mut failure = None;
    ady.visit_transversals(None, &mut |t| {
        if failure.is_some() {
            return;
        }
        match successor(ady, t, c) {
            Ok(s) => match classes.get(&s.nondominant) {
                Some(prev) if *prev != s => failure = Some(ExtensionError::SuccessorNotDetermined),
                Some(_) => {}
                None => {
                    classes.insert(s.nondominant.clone(), s);
                }
            },
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(classes),
    }
}

/// Both sides of `|S_𝒴(P ⊕ C)| = Σ_N |S_{f(N)}(P)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitCount {
    pub direct: u64,
    pub by_successors: u64,
    pub successors: usize,
}

impl SplitCount {
    pub fn holds(&self) -> bool {
        self.direct == self.by_successors
    }
}

pub fn split_count(
    ady: &AdYoung,
    p: &Permutation,
    c: &Permutation,
) -> Result<SplitCount, ExtensionError> {
    let direct = ady.count_avoiding(&p.direct_sum(c));
    let classes = successor_classes(ady, c)?;
    let by_successors = classes.values().map(|s| s.diagram.count_avoiding(p)).sum();
    Ok(SplitCount {
        direct,
        by_successors,
        successors: classes.len(),
    })
}

/// Checks that dominance moves down a row: whenever `(j, y)` is dominant,
/// row `j + 1` exists, and the element of `t` in row `j + 1` lies in a column
/// at most `y`, the square `(j + 1, y)` is dominant too.
pub fn shifting_holds(y: &YoungDiagram, t: &Transversal, c: &Permutation) -> bool {
    let cells = dominant_cells(y, t, c);
    for j in 1..y.num_rows() {
        for col in 1..=y.row_len(j) {
            if cells[j - 1][col - 1] && t.col(j + 1) <= col {
                let below = cells
                    .get(j)
                    .and_then(|r| r.get(col - 1))
                    .copied()
                    .unwrap_or(false);
                if !below {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks the forced-pair propagation between parent and successor:
/// `i ∈ A'` with `r_i + 1 ∈ D` forces `i + 1 ∈ D'`, and `i ∈ D'` with
/// `r_i - 1 ∈ A` forces `i - 1 ∈ A'`.
pub fn forced_pairs_propagate(parent: &AdYoung, succ: &Successor) -> bool {
    let a2 = succ.diagram.ascents();
    let d2 = succ.diagram.descents();
    let forward = a2
        .iter()
        .all(|i| !parent.descents().contains(succ.rows[i - 1] + 1) || d2.contains(i + 1));
    let backward = d2.iter().all(|i| {
        succ.rows[i - 1] < 2
            || !parent.ascents().contains(succ.rows[i - 1] - 1)
            || (i >= 2 && a2.contains(i - 1))
    });
    forward && backward
}
