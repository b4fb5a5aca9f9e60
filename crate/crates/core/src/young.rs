//! Young diagrams with forced ascents and descents (AD-Young diagrams) and
//! their transversals.
//!
//! Rows and columns are 1-based in the public API, row 1 on top and the
//! longest. A transversal puts one square in every row and every column; it
//! is stored as its column word.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::{Matcher, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YoungError {
    #[error("row lengths must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("diagram with {rows} rows and first row {first} is not square; shorter or empty rows admit no transversal")]
    NotSquare { rows: usize, first: usize },
    #[error("index {0} is in both the ascent and the descent set")]
    Overlap(usize),
    #[error("index {index} is outside 1..{rows}")]
    IndexOutOfRange { index: usize, rows: usize },
    #[error("rows {index} and {next} differ in length but {index} is a forced ascent or descent", next = .index + 1)]
    UnequalRows { index: usize },
    #[error("cannot parse diagram {0:?} (expected e.g. \"4,4,2,2;A=;D=3\")")]
    Parse(String),
    #[error("cannot parse transversal {0:?}")]
    ParseTransversal(String),
}

/// A set of 1-based indices below 64.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < 64, "index {i} too large for IndexSet");
        self.0 |= 1 << i;
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    pub fn intersects(self, other: IndexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Every index shifted up by `by`.
    pub fn shifted(self, by: usize) -> Self {
        IndexSet(self.0 << by)
    }

    /// The contiguous range `lo..=hi` (empty when `lo > hi`).
    pub fn range(lo: usize, hi: usize) -> Self {
        (lo..=hi).collect()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = IndexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// A Young diagram given by positive, weakly decreasing row lengths.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self, YoungError> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(YoungError::NotAPartition(rows));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn square(n: usize) -> Self {
        YoungDiagram { rows: vec![n; n] }
    }

    /// Rows `n, n-1, ..., 1`.
    pub fn staircase(n: usize) -> Self {
        YoungDiagram {
            rows: (1..=n).rev().collect(),
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Length of 1-based row `r`, zero beyond the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r >= 1 && r <= self.rows.len() {
            self.rows[r - 1]
        } else {
            0
        }
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        c >= 1 && c <= self.row_len(r)
    }

    /// True when as many rows as columns (first row length equals row count).
    pub fn is_square(&self) -> bool {
        self.rows.first().is_none_or(|&f| f == self.rows.len())
    }

    pub fn contains_diagram(&self, other: &YoungDiagram) -> bool {
        other.rows.len() <= self.rows.len()
            && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().sum()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A transversal, stored as the permutation of its columns by row.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Transversal {
    word: Permutation,
}

impl Transversal {
    pub fn from_word(word: Permutation) -> Self {
        Transversal { word }
    }

    /// From 1-based columns listed by row.
    pub fn from_columns(cols: &[usize]) -> Result<Self, YoungError> {
        Permutation::from_one_based(cols)
            .map(Transversal::from_word)
            .map_err(|_| YoungError::ParseTransversal(format!("{cols:?}")))
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Column (1-based) of the square in 1-based row `r`.
    pub fn col(&self, r: usize) -> usize {
        self.word.at(r)
    }

    /// 1-based columns by row.
    pub fn columns(&self) -> Vec<usize> {
        self.word.one_based()
    }

    /// `(row, column)` pairs, 1-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.columns()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (i + 1, c))
            .collect()
    }

    /// Writes the transversal as a set of 1-based cells.
    pub fn cell_string(&self) -> String {
        let cells: Vec<String> = self
            .cells()
            .iter()
            .map(|(r, c)| format!("({r},{c})"))
            .collect();
        format!("{{{}}}", cells.join(","))
    }
}

impl fmt::Display for Transversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.columns().iter().map(|c| c.to_string()).collect();
        f.write_str(&cols.join(","))
    }
}

impl FromStr for Transversal {
    type Err = YoungError;

    /// Accepts a column word (`3,4,6,5,2,1` or `346521`) or a cell set
    /// (`{(1,3),(2,4),...}`, rows in any order).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || YoungError::ParseTransversal(s.to_string());
        let t = s.trim();
        if t.starts_with('{') || t.starts_with('(') {
            let inner = t.trim_start_matches('{').trim_end_matches('}');
            let nums: Vec<usize> = inner
                .split(|c: char| c == '(' || c == ')' || c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            if !nums.len().is_multiple_of(2) {
                return Err(bad());
            }
            let n = nums.len() / 2;
            let mut cols = vec![0usize; n];
            for pair in nums.chunks(2) {
                let (r, c) = (pair[0], pair[1]);
                if r == 0 || r > n || cols[r - 1] != 0 {
                    return Err(bad());
                }
                cols[r - 1] = c;
            }
            Transversal::from_columns(&cols).map_err(|_| bad())
        } else {
            t.parse::<Permutation>()
                .map(Transversal::from_word)
                .map_err(|_| bad())
        }
    }
}

/// True when the restriction of `t` to some rows `a_1 < ... < a_r` and the
/// columns they use forms `m`, with the bottom-right square `(a_r, b_r)` of
/// that restriction inside `y`.
pub fn transversal_contains(y: &YoungDiagram, t: &Transversal, m: &Permutation) -> bool {
    let text = t.word().values();
    let matcher = Matcher::new(m);
    matcher.search(text, &mut |pos| corner_inside(y, text, pos))
}

fn corner_inside(y: &YoungDiagram, text: &[u8], pos: &[usize]) -> bool {
    match pos.last() {
        None => true,
        Some(&last_row) => {
            let max_col = pos.iter().map(|&p| text[p]).max().unwrap() as usize;
            max_col < y.row_len(last_row + 1)
        }
    }
}

/// An AD-Young diagram: a square Young diagram with forced ascents `A` and
/// forced descents `D` between consecutive rows.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AdYoung {
    diagram: YoungDiagram,
    ascents: IndexSet,
    descents: IndexSet,
}

impl AdYoung {
    /// Checks every condition: square shape, `A ∩ D = ∅`, indices in
    /// `[n-1]`, and rows `i`, `i+1` of equal length for `i ∈ A ∪ D`.
    pub fn new(
        diagram: YoungDiagram,
        ascents: IndexSet,
        descents: IndexSet,
    ) -> Result<Self, YoungError> {
        let ady = Self::relaxed(diagram, ascents, descents)?;
        for i in ady.ascents.iter().chain(ady.descents.iter()) {
            if ady.diagram.row_len(i) != ady.diagram.row_len(i + 1) {
                return Err(YoungError::UnequalRows { index: i });
            }
        }
        Ok(ady)
    }

    /// Like [`AdYoung::new`] but without the equal-row-length condition.
    pub fn relaxed(
        diagram: YoungDiagram,
        ascents: IndexSet,
        descents: IndexSet,
    ) -> Result<Self, YoungError> {
        if !diagram.is_square() {
            return Err(YoungError::NotSquare {
                rows: diagram.num_rows(),
                first: diagram.row_len(1),
            });
        }
        let n = diagram.num_rows();
        for i in ascents.iter().chain(descents.iter()) {
            if i == 0 || i >= n {
                return Err(YoungError::IndexOutOfRange { index: i, rows: n });
            }
        }
        if let Some(i) = ascents.iter().find(|&i| descents.contains(i)) {
            return Err(YoungError::Overlap(i));
        }
        Ok(AdYoung {
            diagram,
            ascents,
            descents,
        })
    }

    /// The bare diagram with no forced ascents or descents.
    pub fn plain(diagram: YoungDiagram) -> Result<Self, YoungError> {
        Self::new(diagram, IndexSet::EMPTY, IndexSet::EMPTY)
    }

    pub fn empty() -> Self {
        AdYoung {
            diagram: YoungDiagram::default(),
            ascents: IndexSet::EMPTY,
            descents: IndexSet::EMPTY,
        }
    }

    pub fn diagram(&self) -> &YoungDiagram {
        &self.diagram
    }

    pub fn ascents(&self) -> IndexSet {
        self.ascents
    }

    pub fn descents(&self) -> IndexSet {
        self.descents
    }

    pub fn n(&self) -> usize {
        self.diagram.num_rows()
    }

    /// True when the equal-row-length condition holds as well.
    pub fn is_strict(&self) -> bool {
        self.ascents
            .iter()
            .chain(self.descents.iter())
            .all(|i| self.diagram.row_len(i) == self.diagram.row_len(i + 1))
    }

    /// For `x - 1 <= i <= n - y`: `i ∈ A` exactly when `i + 1 ∈ D`.
    pub fn is_xy_alternating(&self, x: usize, y: usize) -> bool {
        let n = self.n();
        if x == 0 || n < y {
            return true;
        }
        (x - 1..=n - y).all(|i| self.ascents.contains(i) == self.descents.contains(i + 1))
    }

    /// The window starts at index 0, so in particular `1 ∉ D`.
    pub fn is_alternating(&self, y: usize) -> bool {
        self.is_xy_alternating(1, y)
    }

    /// The window starts at index 1.
    pub fn is_semialternating(&self, y: usize) -> bool {
        self.is_xy_alternating(2, y)
    }

    /// The pair at 1-based row boundary `i` allowed by `A` and `D`.
    fn pair_ok(&self, i: usize, upper: u8, lower: u8) -> bool {
        if self.ascents.contains(i) {
            upper < lower
        } else if self.descents.contains(i) {
            upper > lower
        } else {
            true
        }
    }

    pub fn is_valid_transversal(&self, t: &Transversal) -> bool {
        let w = t.word().values();
        w.len() == self.n()
            && w.iter()
                .enumerate()
                .all(|(i, &c)| (c as usize) < self.diagram.row_len(i + 1))
            && w.windows(2)
                .enumerate()
                .all(|(i, p)| self.pair_ok(i + 1, p[0], p[1]))
    }

    /// Visits every valid transversal avoiding `avoid` (every valid one when
    /// `None`), in lexicographic order of column words.
    pub fn visit_transversals(&self, avoid: Option<&Permutation>, f: &mut dyn FnMut(&Transversal)) {
        if avoid.is_some_and(|m| m.is_empty()) {
            return;
        }
        let matcher = avoid.map(Matcher::new);
        let mut buf = Vec::with_capacity(self.n());
        self.walk(&matcher, &mut buf, 0, &mut |w| {
            f(&Transversal::from_word(Permutation::from_raw(w.to_vec())))
        });
    }

    fn walk(
        &self,
        matcher: &Option<Matcher>,
        buf: &mut Vec<u8>,
        used: u64,
        f: &mut dyn FnMut(&[u8]),
    ) {
        let n = self.n();
        let row = buf.len() + 1;
        if buf.len() == n {
            f(buf);
            return;
        }
        let len = self.diagram.row_len(row);
        for c in 0..len as u8 {
            if used & (1 << c) != 0 {
                continue;
            }
            if let Some(&prev) = buf.last() {
                if !self.pair_ok(row - 1, prev, c) {
                    continue;
                }
            }
            buf.push(c);
            let pruned = match matcher {
                Some(m) => {
                    m.search_ending_at_last(buf, &mut |pos| corner_inside(&self.diagram, buf, pos))
                }
                None => false,
            };
            if !pruned {
                self.walk(matcher, buf, used | (1 << c), f);
            }
            buf.pop();
        }
    }

    pub fn valid_transversals(&self) -> Vec<Transversal> {
        let mut out = Vec::new();
        self.visit_transversals(None, &mut |t| out.push(t.clone()));
        out
    }

    /// `|S_𝒴(M)|`: valid transversals avoiding `m`.
    pub fn count_avoiding(&self, m: &Permutation) -> u64 {
        let mut count = 0;
        self.visit_transversals(Some(m), &mut |_| count += 1);
        count
    }

    /// Same count by filtering all valid transversals; used as an oracle.
    pub fn count_avoiding_by_filter(&self, m: &Permutation) -> u64 {
        self.valid_transversals()
            .iter()
            .filter(|t| !transversal_contains(&self.diagram, t, m))
            .count() as u64
    }
}

impl fmt::Display for AdYoung {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.diagram.rows().iter().map(|r| r.to_string()).collect();
        write!(
            f,
            "{};A={};D={}",
            rows.join(","),
            self.ascents,
            self.descents
        )
    }
}

impl FromStr for AdYoung {
    type Err = YoungError;

    /// Parses `rows;A=..;D=..`, e.g. `4,4,2,2;A=;D=3`. Missing `A=`/`D=`
    /// parts mean empty sets.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || YoungError::Parse(s.to_string());
        let mut parts = s.trim().split(';');
        let rows: Vec<usize> = parts
            .next()
            .ok_or_else(bad)?
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let mut a = IndexSet::EMPTY;
        let mut d = IndexSet::EMPTY;
        for part in parts {
            let part = part.trim();
            let (target, body) = if let Some(b) = part.strip_prefix("A=") {
                (&mut a, b)
            } else if let Some(b) = part.strip_prefix("D=") {
                (&mut d, b)
            } else {
                return Err(bad());
            };
            for x in body.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                let i: usize = x.parse().map_err(|_| bad())?;
                if i == 0 || i >= 64 {
                    return Err(bad());
                }
                target.insert(i);
            }
        }
        AdYoung::new(YoungDiagram::new(rows)?, a, d)
    }
}

/// All square Young diagrams with `n` rows.
pub fn square_diagrams(n: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(YoungDiagram::default());
        return out;
    }
    let mut rows = vec![n];
    fn rec(n: usize, rows: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rows.len() == n {
            out.push(YoungDiagram { rows: rows.clone() });
            return;
        }
        let cap = *rows.last().unwrap();
        for len in (1..=cap).rev() {
            rows.push(len);
            rec(n, rows, out);
            rows.pop();
        }
    }
    rec(n, &mut rows, &mut out);
    out
}

/// Every AD-Young diagram with exactly `n` rows.
pub fn ad_young_diagrams(n: usize) -> Vec<AdYoung> {
    let mut out = Vec::new();
    for y in square_diagrams(n) {
        let eligible: Vec<usize> = (1..n)
            .filter(|&i| y.row_len(i) == y.row_len(i + 1))
            .collect();
        let total = 3usize.pow(eligible.len() as u32);
        for code in 0..total {
            let (mut a, mut d) = (IndexSet::EMPTY, IndexSet::EMPTY);
            let mut c = code;
            for &i in &eligible {
                match c % 3 {
                    1 => a.insert(i),
                    2 => d.insert(i),
                    _ => {}
                }
                c /= 3;
            }
            out.push(AdYoung {
                diagram: y.clone(),
                ascents: a,
                descents: d,
            });
        }
    }
    out
}

/// Every AD-Young diagram with `1..=max_rows` rows.
pub fn ad_young_diagrams_up_to(max_rows: usize) -> Vec<AdYoung> {
    (1..=max_rows).flat_map(ad_young_diagrams).collect()
}

/// The transversal built column by column from the right, each column taking
/// the lowest free row long enough to reach it. `None` when some column finds
/// no such row, which happens exactly when the staircase does not fit.
pub fn j2_canonical_transversal(y: &YoungDiagram) -> Option<Transversal> {
    let n = y.num_rows();
    let mut cols = vec![0usize; n];
    for c in (1..=n).rev() {
        let row = (1..=n)
            .rev()
            .find(|&r| cols[r - 1] == 0 && y.row_len(r) >= c)?;
        cols[row - 1] = c;
    }
    Transversal::from_columns(&cols).ok()
}

/// Closed form for length-two patterns: `|S(I_2)|` is 1 when the staircase
/// fits and `A = ∅`, `|S(J_2)|` is 1 when the staircase fits and `D = ∅`.
pub fn two_pattern_count(ady: &AdYoung, increasing: bool) -> u64 {
    let fits = ady
        .diagram()
        .contains_diagram(&YoungDiagram::staircase(ady.n()));
    let free = if increasing {
        ady.ascents().is_empty()
    } else {
        ady.descents().is_empty()
    };
    u64::from(fits && free)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ady(s: &str) -> AdYoung {
        s.parse().unwrap()
    }

    #[test]
    fn construction_errors() {
        assert!(YoungDiagram::new(vec![2, 3]).is_err());
        assert!(YoungDiagram::new(vec![3, 0]).is_err());
        assert!(matches!(
            AdYoung::plain(YoungDiagram::new(vec![3, 3]).unwrap()),
            Err(YoungError::NotSquare { .. })
        ));
        assert!(matches!(
            "3,3,1;A=2".parse::<AdYoung>(),
            Err(YoungError::UnequalRows { index: 2 })
        ));
        assert!(matches!(
            "3,3,3;A=1;D=1".parse::<AdYoung>(),
            Err(YoungError::Overlap(1))
        ));
        assert!(matches!(
            "3,3,3;A=3".parse::<AdYoung>(),
            Err(YoungError::IndexOutOfRange { .. })
        ));
        let relaxed = AdYoung::relaxed(
            YoungDiagram::new(vec![3, 3, 1]).unwrap(),
            IndexSet::EMPTY.with(1),
            IndexSet::EMPTY.with(2),
        );
        assert!(relaxed.is_ok() && !relaxed.unwrap().is_strict());
    }

    #[test]
    fn alternation_examples() {
        assert!(ady("4,4,4,4;A=1;D=2").is_alternating(1));
        let y = ady("4,4,4,4;A=1,3;D=2");
        assert!(y.is_alternating(2) && !y.is_alternating(1));
        assert!(ady("5,5,5,5,5;A=1,3;D=2,4").is_alternating(1));
        assert!(!ady("3,3,3;A=;D=1").is_alternating(1));
        assert!(ady("3,3,3;A=;D=1").is_semialternating(1));
    }

    #[test]
    fn figure_containment() {
        let y = YoungDiagram::new(vec![6, 6, 6, 6, 5, 4]).unwrap();
        let t: Transversal = "{(1,3),(2,4),(3,6),(4,5),(5,2),(6,1)}".parse().unwrap();
        assert!(transversal_contains(&y, &t, &p("231")));
        assert!(!transversal_contains(&y, &t, &p("4321")));
        assert!(t.word().contains(&p("4321")));
    }

    #[test]
    fn square_transversals_are_permutations() {
        let y = AdYoung::plain(YoungDiagram::square(4)).unwrap();
        assert_eq!(y.valid_transversals().len(), 24);
        let full = ady("5,5,5,5,5;A=1,3;D=2,4");
        assert_eq!(full.valid_transversals().len(), 16);
    }

    #[test]
    fn j2_rule() {
        let y = YoungDiagram::new(vec![4, 4, 2, 2]).unwrap();
        let t = j2_canonical_transversal(&y).unwrap();
        assert_eq!(t.cell_string(), "{(1,3),(2,4),(3,1),(4,2)}");
        assert!(j2_canonical_transversal(&YoungDiagram::new(vec![2, 1, 1]).unwrap()).is_none());
    }

    #[test]
    fn two_patterns_on_small_example() {
        let y = ady("4,4,2,2;A=;D=3");
        assert_eq!(y.count_avoiding(&p("12")), 1);
        assert_eq!(y.count_avoiding(&p("21")), 0);
    }

    #[test]
    fn relaxed_remark() {
        let y = AdYoung::relaxed(
            YoungDiagram::new(vec![3, 3, 1]).unwrap(),
            IndexSet::EMPTY.with(1),
            IndexSet::EMPTY.with(2),
        )
        .unwrap();
        assert_eq!(y.count_avoiding(&p("12")), 0);
        assert_eq!(y.count_avoiding(&p("21")), 1);
    }

    #[test]
    fn diagram_counts() {
        assert_eq!(square_diagrams(6).len(), 252);
        assert_eq!(square_diagrams(1).len(), 1);
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["4,4,2,2;A=;D=3", "3,3,3;A=1;D=2"] {
            assert_eq!(ady(s).to_string(), s);
        }
        let t: Transversal = "3,4,6,5,2,1".parse().unwrap();
        assert_eq!(t, "346521".parse().unwrap());
    }
}
