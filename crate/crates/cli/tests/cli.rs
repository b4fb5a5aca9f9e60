use std::path::Path;
use std::process::{Command, Output};

use altperm::young::{self, AdYoung};
use altperm::{jf, Permutation};

fn altperm(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altperm"))
        .args(args)
        .env("ALTPERM_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn cache_lines(dir: &Path) -> Vec<String> {
    std::fs::read_to_string(dir.join("counts.ndjson"))
        .unwrap_or_default()
        .lines()
        .map(str::to_string)
        .collect()
}

#[test]
fn count_examples() {
    let dir = tempfile::tempdir().unwrap();
    for (args, want) in [
        (
            ["--pattern", "634521", "--class", "alt", "--n", "8"],
            "1385",
        ),
        (["--pattern", "21", "--class", "all", "--n", "4"], "1"),
        (["--pattern", "2134", "--class", "dk:3", "--n", "8"], "153"),
    ] {
        let mut full = vec!["count"];
        full.extend(args);
        let o = altperm(dir.path(), &full);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), want);
    }
}

#[test]
fn json_schema_and_cache_hits() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "count",
        "--pattern",
        "2134",
        "--class",
        "dk:3",
        "--n",
        "8",
        "--json",
    ];
    let first: serde_json::Value =
        serde_json::from_str(&stdout(&altperm(dir.path(), &args))).unwrap();
    let second: serde_json::Value =
        serde_json::from_str(&stdout(&altperm(dir.path(), &args))).unwrap();
    let keys: Vec<&str> = first
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys.len(), 4);
    for k in ["query", "count", "elapsed_ms", "cached"] {
        assert!(first.get(k).is_some(), "missing {k}");
    }
    assert_eq!(first["query"], "pattern=2134;class=dk:3;n=8");
    assert_eq!(first["count"], 153);
    assert_eq!(first["cached"], false);
    assert_eq!(second["cached"], true);
    assert_eq!(cache_lines(dir.path()).len(), 1);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| altperm(dir.path(), args).status.code();
    assert_eq!(code(&["count", "--pattern", "12x", "--n", "3"]), Some(2));
    assert_eq!(
        code(&["count", "--pattern", "12", "--class", "zigzag", "--n", "3"]),
        Some(2)
    );
    assert_eq!(code(&["count", "--pattern", "12"]), Some(2));
    assert_eq!(code(&["nonsense"]), Some(2));
    assert_eq!(code(&["tables", "7odd"]), Some(2));
    assert_eq!(code(&["conjecture", "riemann"]), Some(2));
    assert_eq!(code(&["count", "--pattern", "12", "--n", "40"]), Some(1));
    assert_eq!(code(&["count", "--pattern", "12", "--n", "5"]), Some(0));
}

#[test]
fn table_4rep_shape() {
    let dir = tempfile::tempdir().unwrap();
    let o = altperm(dir.path(), &["tables", "4rep"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "patterns,1,2,3,4,5,6,7,8,9");
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 10));
    assert_eq!(lines[5], "2134 4123,1,1,1,3,9,9,44,153,153");
}

#[test]
fn table_6even_short_columns() {
    let dir = tempfile::tempdir().unwrap();
    let o = altperm(dir.path(), &["tables", "6even", "--max-n", "4"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("patterns,2,4"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 24);
    assert!(rows.iter().all(|l| l.ends_with(",1,5")));
}

#[test]
fn tables_are_deterministic_across_cache_states() {
    let dir = tempfile::tempdir().unwrap();
    let cold = stdout(&altperm(dir.path(), &["tables", "6odd", "--max-n", "7"]));
    let entries = cache_lines(dir.path()).len();
    let warm = stdout(&altperm(dir.path(), &["tables", "6odd", "--max-n", "7"]));
    let uncached = stdout(&altperm(
        dir.path(),
        &["--no-cache", "tables", "6odd", "--max-n", "7"],
    ));
    assert_eq!(cold, warm);
    assert_eq!(cold, uncached);
    assert_eq!(
        cache_lines(dir.path()).len(),
        entries,
        "warm run should be served from the cache"
    );
}

#[test]
fn verify_flag_catches_corrupt_entries() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "count",
        "--pattern",
        "321",
        "--class",
        "alt",
        "--n",
        "6",
        "--verify",
    ];
    assert!(altperm(dir.path(), &args).status.success());
    let path = dir.path().join("counts.ndjson");
    let text = std::fs::read_to_string(&path).unwrap();
    let mut entry: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    entry["count"] = serde_json::json!(999);
    std::fs::write(&path, format!("{entry}\n")).unwrap();
    assert_eq!(altperm(dir.path(), &args).status.code(), Some(1));
    let plain = altperm(dir.path(), &args[..7]);
    assert_eq!(stdout(&plain).trim(), "999");
    assert_eq!(altperm(dir.path(), &["check-cache"]).status.code(), Some(1));
}

#[test]
fn cache_spot_check_of_fifty_entries() {
    let dir = tempfile::tempdir().unwrap();
    assert!(altperm(dir.path(), &["tables", "6even", "--max-n", "8"])
        .status
        .success());
    assert!(altperm(dir.path(), &["tables", "4rep"]).status.success());
    assert!(cache_lines(dir.path()).len() >= 50);
    let o = altperm(
        dir.path(),
        &["check-cache", "--samples", "50", "--seed", "7"],
    );
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("checked 50 of"));
}

#[test]
fn concurrent_writers_keep_records_whole() {
    let dir = tempfile::tempdir().unwrap();
    let handles: Vec<_> = (1..=8)
        .map(|n| {
            let path = dir.path().to_path_buf();
            std::thread::spawn(move || {
                let n = n.to_string();
                altperm(
                    &path,
                    &["count", "--pattern", "1324", "--class", "alt", "--n", &n],
                )
                .status
                .success()
            })
        })
        .collect();
    assert!(handles.into_iter().all(|h| h.join().unwrap()));
    let lines = cache_lines(dir.path());
    assert_eq!(lines.len(), 8);
    for l in lines {
        let v: serde_json::Value = serde_json::from_str(&l).unwrap();
        assert_eq!(v["pattern"], "1324");
    }
}

#[test]
fn verify_suites_pass() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["verify", "shape2", "--rows", "5"],
        vec!["verify", "doubling", "--k", "5"],
        vec!["verify", "bijection", "--rows", "5"],
        vec!["verify", "extension", "--rows", "3"],
        vec!["verify", "injections", "--k", "3", "--n", "6"],
    ] {
        let o = altperm(dir.path(), &args);
        let text = stdout(&o);
        assert!(o.status.success(), "{args:?}: {text}");
        assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
    }
}

#[test]
fn conjectures() {
    let dir = tempfile::tempdir().unwrap();
    let o = altperm(
        dir.path(),
        &["conjecture", "sesa", "--k", "4", "--rows", "5"],
    );
    assert!(o.status.success());
    assert!(stdout(&o).contains("no counterexample"));
    let o = altperm(
        dir.path(),
        &["conjecture", "dk-2134", "--k", "3", "--n", "9"],
    );
    assert!(o.status.success());
    assert!(stdout(&o).contains("no counterexample"));
}

#[test]
fn trace_prints_steps() {
    let dir = tempfile::tempdir().unwrap();
    let o = altperm(
        dir.path(),
        &[
            "trace",
            "--diagram",
            "3,3,3;A=1;D=2",
            "--transversal",
            "1,3,2",
        ],
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "result 1,3,2 after 0 steps");

    // A 321-avoiding transversal containing 213 needs at least one inverse step.
    let f3: Permutation = "213".parse().unwrap();
    let j3: Permutation = "321".parse().unwrap();
    let (ady, t): (AdYoung, _) = young::ad_young_diagrams_up_to(5)
        .into_iter()
        .filter(|d| d.is_alternating(1))
        .find_map(|d| {
            let t = d.valid_transversals().into_iter().find(|t| {
                young::transversal_contains(d.diagram(), t, &f3)
                    && !young::transversal_contains(d.diagram(), t, &j3)
            })?;
            Some((d, t))
        })
        .expect("some diagram has one");
    let (image, steps) = jf::big_psi(&ady, &t).unwrap();
    let o = altperm(
        dir.path(),
        &[
            "trace",
            "--inverse",
            "--diagram",
            &ady.to_string(),
            "--transversal",
            &t.to_string(),
        ],
    );
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), steps.len() + 1);
    assert!(lines[0].starts_with("step 1 triple ("), "{text}");
    assert_eq!(
        *lines.last().unwrap(),
        format!("result {image} after {} steps", steps.len())
    );
}
