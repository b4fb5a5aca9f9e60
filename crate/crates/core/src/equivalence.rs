//! Count-based classification of patterns, the equalities and inequalities
//! that the shape-equivalence machinery predicts, non-equivalence through
//! shortest alternating containers, and checkers for the open conjectures.
//!
//! Everything here is a finite check: blocks are "equal up to n_max", never
//! a proof of equivalence.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::class::PermClass;
use crate::doubling::doubling_number;
use crate::enumerate::{self, count_avoiders};
use crate::par::{self, Parallelism};
use crate::perm::Permutation;
use crate::verify::{merge, Report};
use crate::young::{self, AdYoung};

/// Which lengths of alternating permutations are meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// Positive lengths of this parity up to `n_max`.
    pub fn lengths(self, n_max: usize) -> Vec<usize> {
        let start = if self == Parity::Even { 2 } else { 1 };
        (start..=n_max).step_by(2).collect()
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Parity::Even { "even" } else { "odd" })
    }
}

type Symmetry = fn(&Permutation) -> Permutation;

fn reverse(p: &Permutation) -> Permutation {
    p.reverse()
}

fn complement(p: &Permutation) -> Permutation {
    p.complement()
}

fn reverse_complement(p: &Permutation) -> Permutation {
    p.reverse().complement()
}

fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

/// Generators of the symmetries that map the class onto itself at every
/// length in `lengths`.
pub fn trivial_symmetries(class: &PermClass, lengths: &[usize]) -> Vec<Symmetry> {
    match class {
        PermClass::All => vec![reverse, complement, inverse],
        PermClass::Alternating | PermClass::ReverseAlternating => {
            if lengths.iter().all(|n| n % 2 == 1) {
                vec![reverse]
            } else if lengths.iter().all(|n| n % 2 == 0) {
                vec![reverse_complement]
            } else {
                Vec::new()
            }
        }
        _ => Vec::new(),
    }
}

/// Orbit of `q` under the trivial symmetries.
pub fn trivial_orbit(
    q: &Permutation,
    class: &PermClass,
    lengths: &[usize],
) -> BTreeSet<Permutation> {
    let gens = trivial_symmetries(class, lengths);
    let mut orbit = BTreeSet::from([q.clone()]);
    let mut stack = vec![q.clone()];
    while let Some(w) = stack.pop() {
        for g in &gens {
            let v = g(&w);
            if orbit.insert(v.clone()) {
                stack.push(v);
            }
        }
    }
    orbit
}

/// Patterns sharing a count sequence over the swept lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub patterns: Vec<Permutation>,
    pub sequence: Vec<u64>,
    /// True when all members lie in one trivial-symmetry orbit.
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub class: PermClass,
    pub lengths: Vec<usize>,
    /// Blocks ordered by their smallest pattern.
    pub blocks: Vec<Block>,
}

impl EquivalenceReport {
    pub fn block_of(&self, q: &Permutation) -> Option<&Block> {
        self.blocks.iter().find(|b| b.patterns.contains(q))
    }

    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| !b.trivial)
    }

    /// The partition as sets, for comparisons.
    pub fn partition(&self) -> BTreeSet<BTreeSet<Permutation>> {
        self.blocks
            .iter()
            .map(|b| b.patterns.iter().cloned().collect())
            .collect()
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n_max = self.lengths.iter().max().copied().unwrap_or(0);
        writeln!(
            f,
            "class {} over n in {:?} (blocks are equal up to n = {n_max})",
            self.class, self.lengths
        )?;
        for b in &self.blocks {
            let pats: Vec<String> = b.patterns.iter().map(|p| p.to_string()).collect();
            let seq: Vec<String> = b.sequence.iter().map(|c| c.to_string()).collect();
            writeln!(
                f,
                "{} [{}] {}",
                pats.join(" "),
                seq.join(","),
                if b.trivial { "trivial" } else { "nontrivial" }
            )?;
        }
        Ok(())
    }
}

/// Partitions `patterns` by their avoider counts over `lengths`.
pub fn classify(
    patterns: &[Permutation],
    class: &PermClass,
    lengths: &[usize],
    mode: Parallelism,
) -> Result<EquivalenceReport, enumerate::EnumError> {
    let seqs = par::map(mode, patterns, |q| {
        lengths
            .iter()
            .map(|&n| count_avoiders(q, class, n))
            .collect::<Result<Vec<u64>, _>>()
    });
    let mut groups: BTreeMap<Vec<u64>, Vec<Permutation>> = BTreeMap::new();
    for (q, seq) in patterns.iter().zip(seqs) {
        groups.entry(seq?).or_default().push(q.clone());
    }
    let mut blocks: Vec<Block> = groups
        .into_iter()
        .map(|(sequence, mut pats)| {
            pats.sort();
            let orbit = trivial_orbit(&pats[0], class, lengths);
            let trivial = pats.iter().all(|p| orbit.contains(p));
            Block {
                patterns: pats,
                sequence,
                trivial,
            }
        })
        .collect();
    blocks.sort_by(|a, b| a.patterns[0].cmp(&b.patterns[0]));
    Ok(EquivalenceReport {
        class: class.clone(),
        lengths: lengths.to_vec(),
        blocks,
    })
}

/// Partition of `universe` generated by the given equalities and the trivial
/// symmetries.
pub fn generated_partition(
    universe: &[Permutation],
    equalities: &[Vec<Permutation>],
    class: &PermClass,
    lengths: &[usize],
) -> BTreeSet<BTreeSet<Permutation>> {
    let index: BTreeMap<&Permutation, usize> =
        universe.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..universe.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut union = |a: &Permutation, b: &Permutation| {
        if let (Some(&i), Some(&j)) = (index.get(a), index.get(b)) {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    };
    for q in universe {
        for w in trivial_orbit(q, class, lengths) {
            union(q, &w);
        }
    }
    for eq in equalities {
        for w in eq.iter().skip(1) {
            union(&eq[0], w);
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<Permutation>> = BTreeMap::new();
    for (i, q) in universe.iter().enumerate() {
        groups
            .entry(find(&mut parent, i))
            .or_default()
            .insert(q.clone());
    }
    groups.into_values().collect()
}

fn perms(list: &[&str]) -> Vec<Permutation> {
    list.iter()
        .map(|s| s.parse().expect("literal permutation"))
        .collect()
}

/// The nontrivial equalities among length-4 patterns that, together with
/// the trivial symmetries, generate all equivalences for alternating
/// permutations of the given parity.
pub fn length4_equalities(parity: Parity) -> Vec<Vec<Permutation>> {
    match parity {
        Parity::Odd => vec![
            perms(&["1234", "2134", "3214"]),
            perms(&["2143", "1243", "3421", "2341"]),
        ],
        Parity::Even => vec![
            perms(&["1234", "3214", "2134", "2143"]),
            perms(&["2341", "3421"]),
        ],
    }
}

/// Coincidences among length-4 patterns that the sweep observes beyond
/// those generated by [`length4_equalities`].
pub fn length4_extra_coincidences(parity: Parity) -> Vec<Vec<Permutation>> {
    match parity {
        Parity::Odd => vec![perms(&["1423", "2314", "2413"])],
        Parity::Even => vec![
            perms(&["1234", "2341"]),
            perms(&["1423", "2413"]),
            perms(&["3142", "3241"]),
        ],
    }
}

/// Outcome of the shortest-container test for two patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonEquivalence {
    /// Counts differ at length `n`.
    Decided {
        n: usize,
        count_p: u64,
        count_q: u64,
    },
    Undecided,
}

/// Decides non-equivalence for alternating permutations of one parity when
/// the shortest alternating containers of `p` and `q` fall in different
/// length brackets; the witness length is the end of the lower bracket,
/// where one pattern is unavoidable-free and the other is not.
pub fn doubling_nonequivalence(p: &Permutation, q: &Permutation, parity: Parity) -> NonEquivalence {
    let reach = |w: &Permutation| w.len() + doubling_number(w);
    let (a, b) = (reach(p), reach(q));
    let (bracket_a, bracket_b, n) = match parity {
        Parity::Even => (
            a.div_ceil(2),
            b.div_ceil(2),
            2 * a.div_ceil(2).min(b.div_ceil(2)),
        ),
        Parity::Odd => {
            let (x, y) = ((a - 1).div_ceil(2), (b - 1).div_ceil(2));
            (x, y, 2 * x.min(y) + 1)
        }
    };
    if bracket_a == bracket_b {
        return NonEquivalence::Undecided;
    }
    let count =
        |w: &Permutation| count_avoiders(w, &PermClass::Alternating, n).expect("small length");
    let (count_p, count_q) = (count(p), count(q));
    if count_p == count_q {
        NonEquivalence::Undecided
    } else {
        NonEquivalence::Decided {
            n,
            count_p,
            count_q,
        }
    }
}

/// Tails: all permutations of `{first, ..., last}` as standardized patterns
/// for every length in `lens`.
fn tails(lens: &[usize]) -> Vec<Permutation> {
    lens.iter()
        .flat_map(|&l| enumerate::generate(&PermClass::All, l).unwrap())
        .collect()
}

/// `head` on the smallest values followed by `tail` on the values above.
fn above(head: &str, tail: &Permutation) -> Permutation {
    head.parse::<Permutation>().unwrap().direct_sum(tail)
}

/// `head` on the largest values followed by `tail` on the values below.
fn below(head: &str, tail: &Permutation) -> Permutation {
    let h: Permutation = head.parse().unwrap();
    let shift = tail.len();
    let mut w: Vec<usize> = h.one_based().into_iter().map(|v| v + shift).collect();
    w.extend(tail.one_based());
    Permutation::from_one_based(&w).unwrap()
}

fn equal_counts(
    rep: &mut Report,
    what: &str,
    class: &PermClass,
    pats: &[Permutation],
    n_max: usize,
) {
    rep.cases += 1;
    for n in 1..=n_max {
        let counts: Vec<u64> = pats
            .iter()
            .map(|q| count_avoiders(q, class, n).unwrap())
            .collect();
        rep.check(counts.windows(2).all(|w| w[0] == w[1]), || {
            let names: Vec<String> = pats.iter().map(|p| p.to_string()).collect();
            format!(
                "{what}: {} in {class} at n={n}: {counts:?}",
                names.join(" vs ")
            )
        });
    }
}

/// `|A_n(12q)| = |A_n(21q)|` for every tail of length `1..=max_tail`.
pub fn check_12_21_alternating(max_tail: usize, n_max: usize, mode: Parallelism) -> Report {
    let ts = tails(&(1..=max_tail).collect::<Vec<_>>());
    let parts = par::map(mode, &ts, |t| {
        let mut rep = Report::new("");
        equal_counts(
            &mut rep,
            "12q/21q",
            &PermClass::Alternating,
            &[above("12", t), above("21", t)],
            n_max,
        );
        rep
    });
    merge("12q = 21q (alternating)", parts)
}

/// `123q, 213q, 321q` agree on alternating permutations and `213q, 321q`
/// on reverse alternating ones, for tails of length `1..=max_tail`.
pub fn check_123_213_321(max_tail: usize, n_max: usize, mode: Parallelism) -> Report {
    let ts = tails(&(1..=max_tail).collect::<Vec<_>>());
    let parts = par::map(mode, &ts, |t| {
        let mut rep = Report::new("");
        let alt = [above("123", t), above("213", t), above("321", t)];
        equal_counts(
            &mut rep,
            "123q/213q/321q",
            &PermClass::Alternating,
            &alt,
            n_max,
        );
        equal_counts(
            &mut rep,
            "213q/321q",
            &PermClass::ReverseAlternating,
            &alt[1..],
            n_max,
        );
        rep
    });
    merge("123q = 213q = 321q", parts)
}

/// Complemented form: `(t-1)t(t-2)q` and `(t-2)(t-1)tq` agree on
/// alternating permutations, `q` on the values below, tails of length
/// `1..=max_tail` (with no tail the counts already differ at n = 3).
pub fn check_complemented_213_321(max_tail: usize, n_max: usize, mode: Parallelism) -> Report {
    let ts = tails(&(1..=max_tail).collect::<Vec<_>>());
    let parts = par::map(mode, &ts, |t| {
        let mut rep = Report::new("");
        equal_counts(
            &mut rep,
            "complemented",
            &PermClass::Alternating,
            &[below("231", t), below("123", t)],
            n_max,
        );
        rep
    });
    merge("(t-1)t(t-2)q = (t-2)(t-1)tq", parts)
}

/// The decreasing pattern of each length `2..=max_k` is separated from every
/// other pattern of its length, each with a confirmed witness.
pub fn check_decreasing_nonequivalence(max_k: usize, mode: Parallelism) -> Report {
    let pats: Vec<Permutation> = (2..=max_k)
        .flat_map(|k| enumerate::generate(&PermClass::All, k).unwrap())
        .filter(|q| *q != Permutation::decreasing(q.len()))
        .collect();
    let parts = par::map(mode, &pats, |q| {
        let mut rep = Report::new("");
        rep.cases = 1;
        let nu = Permutation::decreasing(q.len());
        let verdict = doubling_nonequivalence(&nu, q, Parity::Even);
        rep.check(
            matches!(verdict, NonEquivalence::Decided { n, .. } if n % 2 == 0),
            || format!("{nu} vs {q}: {verdict:?}"),
        );
        rep
    });
    merge("decreasing pattern non-equivalence", parts)
}

/// Recomputes the length-4 partition for one parity: every stated equality
/// must hold, and the partition must be exactly the one generated by the
/// stated equalities plus the listed extra coincidences.
pub fn check_length4_classification(parity: Parity, n_max: usize, mode: Parallelism) -> Report {
    let mut rep = Report::new(&format!("length-4 classes ({parity})"));
    let universe = enumerate::generate(&PermClass::All, 4).unwrap();
    let lengths = parity.lengths(n_max);
    let found = classify(&universe, &PermClass::Alternating, &lengths, mode)
        .unwrap()
        .partition();
    let stated = length4_equalities(parity);
    let mut all_eqs = stated.clone();
    all_eqs.extend(length4_extra_coincidences(parity));
    let expected = generated_partition(&universe, &all_eqs, &PermClass::Alternating, &lengths);
    rep.cases = universe.len();
    for eq in &stated {
        let together = found.iter().any(|b| eq.iter().all(|p| b.contains(p)));
        rep.check(together, || format!("stated equality {eq:?} not observed"));
    }
    let show = |s: &BTreeSet<Permutation>| {
        s.iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    for b in found.difference(&expected) {
        rep.check(false, || {
            format!("observed block {{{}}} not generated", show(b))
        });
    }
    for b in expected.difference(&found) {
        rep.check(false, || {
            format!("generated block {{{}}} not observed", show(b))
        });
    }
    rep
}

fn all_subsets(n: usize) -> Vec<BTreeSet<usize>> {
    let m = n.saturating_sub(1);
    (0u32..1 << m)
        .map(|mask| (1..=m).filter(|&i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// Inequalities between `12q` and `21q` over exact descent and ascent sets,
/// their descent-type specializations, and the underlying block-matrix
/// inequalities on AD-Young diagrams.
pub fn check_12_21_inequalities(
    n_max: usize,
    k_max: usize,
    n_max_dk: usize,
    rows: usize,
) -> Report {
    let mut rep = Report::new("12q vs 21q inequalities");
    let ts = tails(&[1, 2]);
    for n in 2..=n_max {
        for set in all_subsets(n) {
            for t in &ts {
                let tlen = t.len() + 2;
                let (p12, p21) = (above("12", t), above("21", t));
                // Descent set with no two consecutive entries in [n+1-t], excluding 1.
                let head: BTreeSet<usize> =
                    set.iter().copied().filter(|&i| i + tlen <= n + 1).collect();
                if !set.contains(&1) && no_consecutive(&head) {
                    rep.cases += 1;
                    let class = PermClass::DescentSet(set.clone());
                    let (a, b) = (
                        count_avoiders(&p12, &class, n).unwrap(),
                        count_avoiders(&p21, &class, n).unwrap(),
                    );
                    rep.check(a <= b, || {
                        format!("descent set {set:?}, n={n}, q={t}: {a} > {b}")
                    });
                }
                let head: BTreeSet<usize> =
                    set.iter().copied().filter(|&i| i + tlen <= n + 2).collect();
                if no_consecutive(&head) {
                    rep.cases += 1;
                    let class = PermClass::AscentSet(set.clone());
                    let (a, b) = (
                        count_avoiders(&p12, &class, n).unwrap(),
                        count_avoiders(&p21, &class, n).unwrap(),
                    );
                    rep.check(a >= b, || {
                        format!("ascent set {set:?}, n={n}, q={t}: {a} < {b}")
                    });
                }
            }
        }
    }
    for k in 2..=k_max {
        let class = PermClass::DescentType(k);
        for n in 1..=n_max_dk {
            for t in &ts {
                rep.cases += 1;
                let (a, b) = (
                    count_avoiders(&above("12", t), &class, n).unwrap(),
                    count_avoiders(&above("21", t), &class, n).unwrap(),
                );
                rep.check(a <= b, || {
                    format!("descent type {k}, n={n}, q={t}: {a} > {b}")
                });
                let (c, d) = (
                    count_avoiders(&below("21", t), &class, n).unwrap(),
                    count_avoiders(&below("12", t), &class, n).unwrap(),
                );
                rep.check(c >= d, || {
                    format!("descent type {k}, n={n}, w={t}: {c} < {d}")
                });
            }
        }
    }
    let blocks: Vec<Permutation> = perms(&["1", "12", "21"]);
    let (i2, j2) = (Permutation::identity(2), Permutation::decreasing(2));
    for ady in young::ad_young_diagrams_up_to(rows) {
        let n = ady.n();
        for c in &blocks {
            let r = c.len();
            let (ascents, descents) = (ady.ascents(), ady.descents());
            let lower = ady.count_avoiding(&i2.direct_sum(c));
            let upper = ady.count_avoiding(&j2.direct_sum(c));
            // Every required descent outside the last r rows follows a required ascent.
            if descents
                .iter()
                .filter(|&i| i + 1 + r <= n)
                .all(|i| i >= 2 && ascents.contains(i - 1))
            {
                rep.cases += 1;
                rep.check(lower <= upper, || {
                    format!("{ady}, C={c}: {lower} > {upper} with descents after ascents")
                });
            }
            // Every required ascent outside the last r rows follows a required descent.
            if ascents
                .iter()
                .filter(|&i| i + r <= n)
                .all(|i| i >= 2 && descents.contains(i - 1))
            {
                rep.cases += 1;
                rep.check(lower >= upper, || {
                    format!("{ady}, C={c}: {lower} < {upper} with ascents after descents")
                });
            }
        }
    }
    rep
}

fn no_consecutive(s: &BTreeSet<usize>) -> bool {
    s.iter().all(|i| !s.contains(&(i + 1)))
}

/// Open conjectures that can be checked by counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjectureId {
    /// `|S(F_k)| = |S(J_k)|` on every 1-semialternating diagram.
    Sesa,
    /// The decreasing pattern has the most alternating avoiders among
    /// patterns of its length, strictly at even `n >= 2k-2`.
    Decreasing,
    /// `2134..b ~ b123..(b-1)` and `12..b(b-1) ~ 23..b1` for every descent type.
    DkShift,
    /// 1324, 1342, 3124, 3412 share their descent-type sequences with no
    /// other length-4 pattern.
    DkUnique,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown conjecture {0:?} (expected sesa, decreasing, dk-2134 or dk-unique)")]
pub struct UnknownConjecture(String);

impl FromStr for ConjectureId {
    type Err = UnknownConjecture;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sesa" => Ok(ConjectureId::Sesa),
            "decreasing" => Ok(ConjectureId::Decreasing),
            "dk-2134" | "dk-shift" => Ok(ConjectureId::DkShift),
            "dk-unique" => Ok(ConjectureId::DkUnique),
            _ => Err(UnknownConjecture(s.to_string())),
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureId::Sesa => "sesa",
            ConjectureId::Decreasing => "decreasing",
            ConjectureId::DkShift => "dk-2134",
            ConjectureId::DkUnique => "dk-unique",
        })
    }
}

/// Sweep limits; each conjecture reads the fields it needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest pattern size `k` (or descent type for the descent-type conjectures).
    pub k: usize,
    /// Largest diagram row count.
    pub rows: usize,
    /// Largest permutation length.
    pub n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            k: 4,
            rows: 6,
            n: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureVerdict {
    pub id: ConjectureId,
    /// Human-readable description of what was swept.
    pub range: String,
    pub cases: usize,
    pub counterexample: Option<String>,
    /// Cases the sweep could not settle either way.
    pub undecided: Vec<String>,
}

impl ConjectureVerdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for ConjectureVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over {} ({} cases): ",
            self.id, self.range, self.cases
        )?;
        match &self.counterexample {
            None => write!(f, "no counterexample")?,
            Some(w) => write!(f, "counterexample {w}")?,
        }
        if !self.undecided.is_empty() {
            write!(
                f,
                "; {} undecided: {}",
                self.undecided.len(),
                self.undecided.join("; ")
            )?;
        }
        Ok(())
    }
}

/// The pattern `(k-1)(k-2)...1k`.
pub fn f_pattern(k: usize) -> Permutation {
    let mut w: Vec<usize> = (1..k).rev().collect();
    w.push(k);
    Permutation::from_one_based(&w).unwrap()
}

fn first_failure<T: Sync, F>(mode: Parallelism, items: &[T], f: F) -> Option<String>
where
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    par::map(mode, items, f).into_iter().flatten().next()
}

pub fn check_conjecture(id: ConjectureId, budget: Budget, mode: Parallelism) -> ConjectureVerdict {
    match id {
        ConjectureId::Sesa => {
            let diagrams: Vec<AdYoung> = young::ad_young_diagrams_up_to(budget.rows)
                .into_iter()
                .filter(|d| d.is_semialternating(1))
                .collect();
            let ks: Vec<usize> = (3..=budget.k).collect();
            let cases: Vec<(usize, &AdYoung)> = ks
                .iter()
                .flat_map(|&k| diagrams.iter().map(move |d| (k, d)))
                .collect();
            let counterexample = first_failure(mode, &cases, |(k, d)| {
                let (a, b) = (
                    d.count_avoiding(&f_pattern(*k)),
                    d.count_avoiding(&Permutation::decreasing(*k)),
                );
                (a != b).then(|| format!("k={k} diagram {d}: |S(F)| = {a}, |S(J)| = {b}"))
            });
            ConjectureVerdict {
                id,
                range: format!(
                    "3 <= k <= {}, 1-semialternating diagrams with <= {} rows",
                    budget.k, budget.rows
                ),
                cases: cases.len(),
                counterexample,
                undecided: Vec::new(),
            }
        }
        ConjectureId::Decreasing => {
            let pats: Vec<Permutation> = (3..=budget.k)
                .flat_map(|k| enumerate::generate(&PermClass::All, k).unwrap())
                .filter(|q| *q != Permutation::decreasing(q.len()))
                .collect();
            let counterexample = first_failure(mode, &pats, |q| {
                let k = q.len();
                let nu = Permutation::decreasing(k);
                (1..=budget.n).find_map(|n| {
                    let a = count_avoiders(q, &PermClass::Alternating, n).unwrap();
                    let b = count_avoiders(&nu, &PermClass::Alternating, n).unwrap();
                    let strict = n % 2 == 0 && n + 2 >= 2 * k;
                    (a > b || (strict && a == b))
                        .then(|| format!("q={q}, n={n}: |A(q)| = {a}, |A({nu})| = {b}"))
                })
            });
            ConjectureVerdict {
                id,
                range: format!("3 <= k <= {}, n <= {}", budget.k, budget.n),
                cases: pats.len(),
                counterexample,
                undecided: Vec::new(),
            }
        }
        ConjectureId::DkShift => {
            let mut pairs = Vec::new();
            for b in 3..=5 {
                let mut front = vec![2, 1];
                front.extend(3..=b);
                let mut back = vec![b];
                back.extend(1..b);
                let mut swap_end: Vec<usize> = (1..=b - 2).collect();
                swap_end.extend([b, b - 1]);
                let mut rot: Vec<usize> = (2..=b).collect();
                rot.push(1);
                for (x, y) in [(front, back), (swap_end, rot)] {
                    for k in 1..=budget.k {
                        pairs.push((
                            Permutation::from_one_based(&x).unwrap(),
                            Permutation::from_one_based(&y).unwrap(),
                            k,
                        ));
                    }
                }
            }
            let counterexample = first_failure(mode, &pairs, |(x, y, k)| {
                let class = PermClass::DescentType(*k);
                (1..=budget.n).find_map(|n| {
                    let (a, b) = (
                        count_avoiders(x, &class, n).unwrap(),
                        count_avoiders(y, &class, n).unwrap(),
                    );
                    (a != b).then(|| format!("k={k}, n={n}: |D({x})| = {a}, |D({y})| = {b}"))
                })
            });
            ConjectureVerdict {
                id,
                range: format!(
                    "pattern length 3..=5, 1 <= k <= {}, n <= {}",
                    budget.k, budget.n
                ),
                cases: pairs.len(),
                counterexample,
                undecided: Vec::new(),
            }
        }
        ConjectureId::DkUnique => {
            let all = enumerate::generate(&PermClass::All, 4).unwrap();
            let ks: Vec<usize> = (2..=budget.k).collect();
            let seqs: BTreeMap<(usize, Permutation), Vec<u64>> = ks
                .iter()
                .flat_map(|&k| all.iter().map(move |q| (k, q.clone())))
                .map(|(k, q)| {
                    let s = enumerate::sequence(&q, &PermClass::DescentType(k), budget.n).unwrap();
                    ((k, q), s)
                })
                .collect();
            let special = perms(&["1324", "1342", "3124", "3412"]);
            let mut cases = 0;
            let mut undecided = Vec::new();
            for &k in &ks {
                for p in &special {
                    for q in all.iter().filter(|q| *q != p) {
                        cases += 1;
                        if seqs[&(k, p.clone())] == seqs[&(k, q.clone())] {
                            undecided
                                .push(format!("k={k}: {p} and {q} agree for n <= {}", budget.n));
                        }
                    }
                }
            }
            // A finite sweep can separate sequences but never show they agree forever.
            ConjectureVerdict {
                id,
                range: format!("2 <= k <= {}, sequences over n <= {}", budget.k, budget.n),
                cases,
                counterexample: None,
                undecided,
            }
        }
    }
}

/// Re-counts the witness of a failed verdict; true when the witness is
/// confirmed or there is none.
pub fn verdict_witness_reproduces(
    verdict: &ConjectureVerdict,
    budget: Budget,
    mode: Parallelism,
) -> bool {
    verdict.holds()
        || check_conjecture(verdict.id, budget, mode).counterexample == verdict.counterexample
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn orbits() {
        let odd = Parity::Odd.lengths(9);
        assert_eq!(
            trivial_orbit(&p("1243"), &PermClass::Alternating, &odd).len(),
            2
        );
        let even = Parity::Even.lengths(8);
        assert!(trivial_orbit(&p("2134"), &PermClass::Alternating, &even).contains(&p("1243")));
    }

    #[test]
    fn singleton_classification() {
        let r = classify(
            &[p("123")],
            &PermClass::Alternating,
            &[3, 5],
            Parallelism::Sequential,
        )
        .unwrap();
        assert_eq!(r.blocks.len(), 1);
        assert!(r.blocks[0].trivial);
    }

    #[test]
    fn odd_length4_block() {
        let pats = enumerate::generate(&PermClass::All, 4).unwrap();
        let r = classify(
            &pats,
            &PermClass::Alternating,
            &Parity::Odd.lengths(9),
            Parallelism::Sequential,
        )
        .unwrap();
        let b = r.block_of(&p("1234")).unwrap();
        assert!(b.patterns.contains(&p("2134")) && b.patterns.contains(&p("3214")));
        assert!(!b.trivial);
    }

    #[test]
    fn doubling_decisions() {
        assert_eq!(
            doubling_nonequivalence(&p("321"), &p("123"), Parity::Even),
            NonEquivalence::Decided {
                n: 4,
                count_p: 5,
                count_q: count_avoiders(&p("123"), &PermClass::Alternating, 4).unwrap()
            }
        );
        assert_eq!(
            doubling_nonequivalence(&p("213"), &p("213"), Parity::Even),
            NonEquivalence::Undecided
        );
    }

    #[test]
    fn pattern_builders() {
        assert_eq!(above("12", &p("21")), p("1243"));
        assert_eq!(below("231", &p("1")), p("3421"));
        assert_eq!(f_pattern(4), p("3214"));
    }

    #[test]
    fn conjecture_names() {
        assert_eq!(
            "dk-2134".parse::<ConjectureId>().unwrap(),
            ConjectureId::DkShift
        );
        assert!("nope".parse::<ConjectureId>().is_err());
    }
}
