//! Invariants checked against naive oracles on random inputs.

use std::collections::BTreeSet;

use altperm::young::{self, AdYoung};
use altperm::{
    count_avoiders, count_avoiders_with, descent, generate, Parallelism, PermClass, Permutation,
};
use proptest::prelude::*;

/// Subsequence containment by trying every position subset.
fn naive_contains(w: &Permutation, q: &Permutation) -> bool {
    let (n, k) = (w.len(), q.len());
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .any(|mask| {
            let sub: Vec<u8> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| w.values()[i])
                .collect();
            Permutation::standardize(&sub) == *q
        })
}

/// Every permutation of `[n]` in lexicographic order.
fn all_perms(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<u8>, used: u32, n: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::from_zero_based(prefix.clone()).unwrap());
            return;
        }
        for v in 0..n as u8 {
            if used & (1 << v) == 0 {
                prefix.push(v);
                go(prefix, used | (1 << v), n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, &mut out);
    out
}

fn perm(max_len: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_len).prop_flat_map(|n| {
        Just((0..n as u8).collect::<Vec<u8>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_zero_based(v).unwrap())
    })
}

fn class() -> impl Strategy<Value = PermClass> {
    prop_oneof![
        Just(PermClass::All),
        Just(PermClass::Alternating),
        Just(PermClass::ReverseAlternating),
        (1usize..=4).prop_map(PermClass::DescentType),
        prop::collection::btree_set(1usize..7, 0..4).prop_map(PermClass::DescentSet),
        prop::collection::btree_set(1usize..7, 0..4).prop_map(PermClass::AscentSet),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn containment_matches_naive(w in perm(8), q in perm(4)) {
        prop_assert_eq!(w.contains(&q), naive_contains(&w, &q));
    }

    #[test]
    fn containment_symmetries(w in perm(9), q in perm(4)) {
        let c = w.contains(&q);
        prop_assert_eq!(c, w.reverse().contains(&q.reverse()));
        prop_assert_eq!(c, w.complement().contains(&q.complement()));
        prop_assert_eq!(c, w.inverse().contains(&q.inverse()));
    }

    #[test]
    fn occurrence_is_a_copy(w in perm(9), q in perm(4)) {
        if let Some(pos) = w.find_occurrence(&q) {
            let sub: Vec<u8> = pos.iter().map(|&i| w.values()[i]).collect();
            prop_assert!(pos.windows(2).all(|p| p[0] < p[1]));
            prop_assert_eq!(Permutation::standardize(&sub), q);
        } else {
            prop_assert!(!w.contains(&q));
        }
    }

    #[test]
    fn generator_agrees_with_filter(c in class(), n in 0usize..=7) {
        let generated: Vec<Permutation> = generate(&c, n).unwrap();
        let filtered: Vec<Permutation> = all_perms(n).into_iter().filter(|w| c.contains_perm(w)).collect();
        prop_assert_eq!(generated, filtered);
    }

    #[test]
    fn pruned_count_agrees_with_naive(c in class(), q in perm(4), n in 0usize..=7) {
        let naive = all_perms(n).into_iter().filter(|w| c.contains_perm(w) && !naive_contains(w, &q)).count() as u64;
        prop_assert_eq!(count_avoiders(&q, &c, n).unwrap(), naive);
    }

    #[test]
    fn sequential_and_parallel_agree(c in class(), q in perm(5), n in 0usize..=9) {
        let seq = count_avoiders_with(&q, &c, n, Parallelism::Sequential).unwrap();
        let par = count_avoiders_with(&q, &c, n, Parallelism::Parallel).unwrap();
        prop_assert_eq!(seq, par);
    }

    #[test]
    fn complement_swaps_alternating_classes(q in perm(4), n in 0usize..=9) {
        let alt = count_avoiders(&q, &PermClass::Alternating, n).unwrap();
        let ralt = count_avoiders(&q.complement(), &PermClass::ReverseAlternating, n).unwrap();
        prop_assert_eq!(alt, ralt);
    }

    #[test]
    fn children_contain_parents(b in 3usize..=4, k in 2usize..=4, n in 0usize..=7, pick in any::<prop::sample::Index>(), which in any::<prop::sample::Index>()) {
        let pats: Vec<Permutation> = generate(&PermClass::All, b).unwrap().into_iter().filter(|q| !descent::is_excluded(q, k)).collect();
        prop_assume!(!pats.is_empty());
        let q = which.get(&pats);
        let avs = altperm::enumerate::avoiders(q, &PermClass::DescentType(k), n).unwrap();
        prop_assume!(!avs.is_empty());
        let p = pick.get(&avs);
        let c = descent::child(p, q, k).unwrap();
        prop_assert_eq!(c.len(), n + 1);
        prop_assert!(c.contains(p));
        prop_assert!(c.avoids(q));
        prop_assert!(PermClass::DescentType(k).contains_perm(&c));
    }

    #[test]
    fn injection_keeps_descent_type(k in 1usize..=4, n in 0usize..=7, pick in any::<prop::sample::Index>(), v in any::<prop::sample::Index>()) {
        let members = generate(&PermClass::DescentType(k), n).unwrap();
        prop_assume!(!members.is_empty());
        let p = pick.get(&members);
        let value = v.index(n + 1) + 1;
        match descent::inject(value, p, k) {
            Ok(w) => {
                prop_assert!(PermClass::DescentType(k).contains_perm(&w));
                prop_assert!(w.contains(p));
            }
            // A single-entry row cannot absorb a larger value.
            Err(_) => prop_assert!(k == 1 && value > 1),
        }
    }
}

#[test]
fn transversal_counts_agree_with_filter() {
    let pats: Vec<Permutation> = ["12", "21", "123", "213", "321", "132"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for d in young::ad_young_diagrams_up_to(4) {
        for q in &pats {
            assert_eq!(
                d.count_avoiding(q),
                d.count_avoiding_by_filter(q),
                "{d} {q}"
            );
        }
    }
}

#[test]
fn diagram_text_round_trips() {
    for d in young::ad_young_diagrams_up_to(4) {
        let back: AdYoung = d.to_string().parse().unwrap();
        assert_eq!(back, d);
    }
}

#[test]
fn alternating_members_are_euler_numbers() {
    let euler = [1u64, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521];
    for (n, &e) in euler.iter().enumerate() {
        assert_eq!(
            altperm::enumerate::count_members(&PermClass::Alternating, n).unwrap(),
            e,
            "n={n}"
        );
    }
    let distinct: BTreeSet<Permutation> = generate(&PermClass::Alternating, 6)
        .unwrap()
        .into_iter()
        .collect();
    assert_eq!(distinct.len(), 61);
}
