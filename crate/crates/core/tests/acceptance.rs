//! Acceptance criteria 1-11, one PASS/FAIL line each.
//!
//! Runs as a plain binary (`harness = false`) so the lines always print.
//! A literal criterion that the data contradicts prints FAIL together with
//! the pinned deviation; the binary exits non-zero only when a result
//! differs from its pinned expectation (a regression, a new deviation, or a
//! blown time budget).
//!
//! `--ignored`, `--include-ignored` or `ALTPERM_EXTENDED=1` adds the extended
//! table columns (6Even n = 12, 6Odd n = 11).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use altperm::equivalence::{self, ConjectureId, Parity};
use altperm::tables::{self, TableId};
use altperm::verify::{self, Report};
use altperm::{count_avoiders, Parallelism, PermClass, Permutation};

const MODE: Parallelism = Parallelism::Parallel;

/// Wall-clock budgets in seconds, per criterion.
const BUDGET_4REP: u64 = 5;
const BUDGET_6EVEN: u64 = 600;
const BUDGET_6ODD: u64 = 600;
const BUDGET_BIJECTION: u64 = 600;
const BUDGET_SHAPE2: u64 = 60;
const BUDGET_EXTENSION: u64 = 600;
const BUDGET_DOUBLING: u64 = 120;
const BUDGET_INJECTION: u64 = 600;
const BUDGET_EQUIVALENCE: u64 = 600;
const BUDGET_CONJECTURE: u64 = 1800;
const BUDGET_EXTENDED: u64 = 7200;

struct Outcome {
    id: &'static str,
    title: &'static str,
    /// Whether the literal criterion holds.
    pass: bool,
    /// What the pinned expectation says the literal verdict is.
    expect_pass: bool,
    /// Whether the result matches everything pinned (counts, deviations, time).
    as_pinned: bool,
    detail: String,
    elapsed: Duration,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn within(elapsed: Duration, secs: u64) -> bool {
    elapsed <= Duration::from_secs(secs)
}

fn report_outcome(
    id: &'static str,
    title: &'static str,
    rep: &Report,
    elapsed: Duration,
    budget: u64,
) -> Outcome {
    let ok = rep.passed() && within(elapsed, budget);
    Outcome {
        id,
        title,
        pass: ok,
        expect_pass: true,
        as_pinned: ok,
        detail: summary(rep),
        elapsed,
    }
}

fn summary(rep: &Report) -> String {
    let mut s = format!(
        "{} cases, {} checks, {} failures",
        rep.cases,
        rep.checks,
        rep.failures.len()
    );
    if let Some(f) = rep.failures.first() {
        s.push_str(&format!("; first: {f}"));
    }
    s
}

fn table_outcome(
    id: &'static str,
    title: &'static str,
    which: TableId,
    max_n: usize,
    budget: u64,
) -> Outcome {
    let (cmp, elapsed) =
        timed(|| tables::compare(which, max_n, MODE).expect("table lengths within range"));
    let unexplained = cmp.unexplained(which);
    let pinned: Vec<_> = tables::KNOWN_ERRATA
        .iter()
        .filter(|e| e.0 == which)
        .collect();
    let errata_hit = cmp.mismatches.len() - unexplained.len();
    let pass = cmp.mismatches.is_empty() && within(elapsed, budget);
    let as_pinned = unexplained.is_empty()
        && errata_hit == pinned.iter().filter(|e| e.2 <= max_n).count()
        && within(elapsed, budget);
    let table_cells = tables::table(which).cell_count(max_n);
    let bad_cells: BTreeSet<(usize, usize)> = cmp.mismatches.iter().map(|m| (m.row, m.n)).collect();
    let mut detail = format!(
        "{}/{table_cells} table cells match ({} pattern counts)",
        table_cells - bad_cells.len(),
        cmp.cells
    );
    for m in &cmp.mismatches {
        detail.push_str(&format!("; {m}"));
    }
    if errata_hit > 0 {
        detail.push_str(" (pinned erratum)");
    }
    Outcome {
        id,
        title,
        pass,
        expect_pass: errata_hit == 0,
        as_pinned,
        detail,
        elapsed,
    }
}

fn criterion_1() -> Outcome {
    table_outcome(
        "1",
        "4Rep table reproduction",
        TableId::FourRep,
        9,
        BUDGET_4REP,
    )
}

fn criterion_2() -> Outcome {
    table_outcome(
        "2",
        "6Even table reproduction, n <= 10",
        TableId::SixEven,
        10,
        BUDGET_6EVEN,
    )
}

fn criterion_3() -> Outcome {
    table_outcome(
        "3",
        "6Odd table reproduction, n <= 9",
        TableId::SixOdd,
        9,
        BUDGET_6ODD,
    )
}

/// Failures raised by a lemma check inside a `φ`/`ψ` step.
fn is_lemma_failure(msg: &str) -> bool {
    msg.contains(" fails at step ")
}

fn criteria_4_and_5() -> (Outcome, Outcome) {
    let (rep, elapsed) = timed(|| verify::bijection_sweep(6, 5, MODE));
    let (lemma, other): (Vec<_>, Vec<_>) = rep
        .failures
        .iter()
        .cloned()
        .partition(|m| is_lemma_failure(m));
    let bij = Report {
        failures: other,
        ..rep.clone()
    };
    let lem = Report {
        failures: lemma,
        ..rep
    };
    (
        report_outcome(
            "4",
            "F3/J3 bijection (<= 6 rows, semialternating <= 5)",
            &bij,
            elapsed,
            BUDGET_BIJECTION,
        ),
        report_outcome(
            "5",
            "step lemmas at every phi/psi application",
            &lem,
            elapsed,
            BUDGET_BIJECTION,
        ),
    )
}

fn criterion_6() -> Outcome {
    let (rep, elapsed) = timed(|| verify::shape2_sweep(6, MODE));
    report_outcome(
        "6",
        "length-two closed form (<= 6 rows)",
        &rep,
        elapsed,
        BUDGET_SHAPE2,
    )
}

fn criterion_7() -> Outcome {
    let (rep, elapsed) = timed(|| verify::extension_sweep(5, MODE));
    report_outcome(
        "7",
        "extension identities (parents <= 5 rows)",
        &rep,
        elapsed,
        BUDGET_EXTENSION,
    )
}

fn criterion_8() -> Outcome {
    let (rep, elapsed) = timed(|| verify::doubling_sweep(6, MODE));
    report_outcome(
        "8",
        "shortest alternating containers (k <= 6)",
        &rep,
        elapsed,
        BUDGET_DOUBLING,
    )
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

/// Plateau cells of the 4Rep table, recomputed: `(pattern, n, n + 1, value)`.
fn table_plateaus() -> Report {
    let mut rep = Report::new("4Rep plateaus");
    let class = PermClass::DescentType(3);
    for (q, n, v) in [
        ("3124", 5, 9),
        ("2134", 5, 9),
        ("4123", 5, 9),
        ("2134", 8, 153),
        ("4123", 8, 153),
        ("3124", 8, 143),
    ] {
        rep.cases += 1;
        let (a, b) = (
            count_avoiders(&p(q), &class, n).unwrap(),
            count_avoiders(&p(q), &class, n + 1).unwrap(),
        );
        if a != v || b != v {
            rep.failures.push(format!(
                "{q}: |D_{n}| = {a}, |D_{}| = {b}, expected {v} = {v}",
                n + 1
            ));
        }
        rep.checks += 1;
    }
    rep
}

/// Observed strictness violations among the claimed cases.
fn strictness_violations(ks: &[usize], max_n: usize) -> BTreeSet<(String, usize, usize)> {
    let mut out = BTreeSet::new();
    for b in [3, 4] {
        for q in altperm::generate(&PermClass::All, b).unwrap() {
            for &k in ks {
                if altperm::descent::is_excluded(&q, k) {
                    continue;
                }
                let class = PermClass::DescentType(k);
                for n in 0..=max_n {
                    if verify::strictness_claimed(&q, k, n)
                        && count_avoiders(&q, &class, n).unwrap()
                            == count_avoiders(&q, &class, n + 1).unwrap()
                    {
                        out.insert((q.to_string(), k, n));
                    }
                }
            }
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let ks = [2, 3, 4];
    let max_n = 8;
    let ((reps, violations), elapsed) = timed(|| {
        let reps = vec![
            verify::child_map_sweep(&ks, max_n, MODE),
            verify::monotonicity_sweep(&ks, max_n, MODE),
            verify::secondary_injection_sweep(&ks, max_n, MODE),
            verify::block_321_sweep(&ks, 3),
            verify::plateau_sweep(5, 2, MODE),
            verify::inductive_step_sweep(&ks, max_n),
            table_plateaus(),
        ];
        (reps, strictness_violations(&ks, max_n))
    });
    let failed: Vec<&Report> = reps.iter().filter(|r| !r.passed()).collect();
    let predicted: BTreeSet<(String, usize, usize)> = violations
        .iter()
        .filter(|(q, k, n)| verify::strictness_exception(&p(q), *k, *n))
        .cloned()
        .collect();
    let as_pinned = failed.is_empty()
        && predicted == violations
        && !violations.is_empty()
        && within(elapsed, BUDGET_INJECTION);
    let mut detail = format!(
        "{} sweeps ok of {}; strict inequality fails at {} claimed cases ({}), all pinned",
        reps.len() - failed.len(),
        reps.len(),
        violations.len(),
        violations
            .iter()
            .take(4)
            .map(|(q, k, n)| format!("{q} k={k} n={n}"))
            .collect::<Vec<_>>()
            .join(", ")
    );
    for r in &failed {
        detail.push_str(&format!("; {}", summary(r)));
    }
    Outcome {
        id: "9",
        title: "descent-type injections, monotonicity, strictness, plateaus",
        pass: failed.is_empty() && violations.is_empty(),
        expect_pass: false,
        as_pinned,
        detail,
        elapsed,
    }
}

fn criterion_10() -> Outcome {
    let (out, elapsed) = timed(|| {
        let reps = vec![
            equivalence::check_12_21_alternating(2, 10, MODE),
            equivalence::check_123_213_321(2, 10, MODE),
            equivalence::check_complemented_213_321(2, 10, MODE),
            equivalence::check_decreasing_nonequivalence(5, MODE),
            equivalence::check_length4_classification(Parity::Odd, 9, MODE),
            equivalence::check_length4_classification(Parity::Even, 10, MODE),
        ];
        let universe = altperm::generate(&PermClass::All, 4).unwrap();
        let mut extras = 0;
        for (parity, n_max) in [(Parity::Odd, 9), (Parity::Even, 10)] {
            let lengths = parity.lengths(n_max);
            let found = equivalence::classify(&universe, &PermClass::Alternating, &lengths, MODE)
                .unwrap()
                .partition();
            let stated = equivalence::generated_partition(
                &universe,
                &equivalence::length4_equalities(parity),
                &PermClass::Alternating,
                &lengths,
            );
            extras += found.difference(&stated).count();
        }
        (reps, extras)
    });
    let (reps, extras) = out;
    let failed: Vec<&Report> = reps.iter().filter(|r| !r.passed()).collect();
    let pinned_extras = equivalence::length4_extra_coincidences(Parity::Odd).len()
        + equivalence::length4_extra_coincidences(Parity::Even).len();
    let mut detail = format!(
        "{} sweeps ok of {}; {extras} observed length-4 blocks beyond the stated classes ({pinned_extras} pinned coincidences)",
        reps.len() - failed.len(),
        reps.len()
    );
    for r in &failed {
        detail.push_str(&format!("; {}", summary(r)));
    }
    Outcome {
        id: "10",
        title: "equivalence sweeps and length-4 classification",
        pass: failed.is_empty() && extras == 0,
        expect_pass: false,
        as_pinned: failed.is_empty() && extras > 0 && within(elapsed, BUDGET_EQUIVALENCE),
        detail,
        elapsed,
    }
}

fn criterion_11() -> Outcome {
    let budget = equivalence::Budget {
        k: 4,
        rows: 6,
        n: 10,
    };
    let (v, elapsed) = timed(|| equivalence::check_conjecture(ConjectureId::Sesa, budget, MODE));
    let ok = v.holds() && within(elapsed, BUDGET_CONJECTURE);
    Outcome {
        id: "11",
        title: "semialternating F/J conjecture (k <= 4, <= 6 rows)",
        pass: ok,
        expect_pass: true,
        as_pinned: ok,
        detail: v.to_string(),
        elapsed,
    }
}

fn extended() -> Vec<Outcome> {
    vec![
        table_outcome(
            "2x",
            "6Even table reproduction, n = 12",
            TableId::SixEven,
            12,
            BUDGET_EXTENDED,
        ),
        table_outcome(
            "3x",
            "6Odd table reproduction, n = 11",
            TableId::SixOdd,
            11,
            BUDGET_EXTENDED,
        ),
    ]
}

fn print(o: &Outcome) {
    let verdict = if o.pass { "PASS" } else { "FAIL" };
    let pin = match (o.as_pinned, o.pass == o.expect_pass) {
        (true, true) if !o.pass => " [pinned deviation]",
        (true, true) => "",
        _ => " [UNEXPECTED]",
    };
    println!(
        "criterion {:>2} {verdict} {}: {} ({:.1} s){pin}",
        o.id,
        o.title,
        o.detail,
        o.elapsed.as_secs_f64()
    );
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args.iter().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let want_extended = args
        .iter()
        .any(|a| a == "--ignored" || a == "--include-ignored")
        || std::env::var("ALTPERM_EXTENDED").is_ok_and(|v| v == "1");
    let only_extended = args.iter().any(|a| a == "--ignored");

    let mut outcomes = Vec::new();
    let mut run = |o: Outcome| {
        print(&o);
        outcomes.push(o);
    };
    if !only_extended {
        run(criterion_1());
        run(criterion_2());
        run(criterion_3());
        let (c4, c5) = criteria_4_and_5();
        run(c4);
        run(c5);
        run(criterion_6());
        run(criterion_7());
        run(criterion_8());
        run(criterion_9());
        run(criterion_10());
        run(criterion_11());
    }
    if want_extended {
        for o in extended() {
            run(o);
        }
    }
    let unexpected: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.as_pinned || o.pass != o.expect_pass)
        .map(|o| o.id)
        .collect();
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!(
        "acceptance: {passed} PASS, {} FAIL, {} unexpected",
        outcomes.len() - passed,
        unexpected.len()
    );
    if !unexpected.is_empty() {
        eprintln!("unexpected results for criteria {}", unexpected.join(", "));
        std::process::exit(1);
    }
}
