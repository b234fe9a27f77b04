use monodigraph::cli::{dispatch, CommandOutcome};

fn run(args: &str) -> CommandOutcome {
    dispatch(std::iter::once("monodigraph").chain(args.split_whitespace()))
}

fn json(out: &CommandOutcome) -> serde_json::Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", out.stdout))
}

#[test]
fn q17_pair_is_non_isomorphic() {
    let out = run("iso 17 1 4 1 12 --json");
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["verdict"], "NonIso");
    assert!(v.get("permutation").is_none());
}

#[test]
fn invariants_table_for_d312() {
    let out = run("invariants 3 1 2");
    assert_eq!(out.exit_code, 0);
    let row = |key: &str| {
        out.stdout
            .lines()
            .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')))
            .map(|rest| rest.trim().to_string())
            .unwrap_or_else(|| panic!("no row {key} in\n{}", out.stdout))
    };
    assert_eq!(row("two_cycle_count"), "9");
    assert_eq!(row("loop_total"), "3");
    assert!(!out.stdout.contains("cycle_spectrum"));
}

#[test]
fn invariants_json_key_order_and_cycles() {
    let out = run("invariants 5 1 2 --cycles 3 --json");
    assert_eq!(out.exit_code, 0);
    let keys: Vec<String> = json(&out).as_object().unwrap().keys().cloned().collect();
    assert_eq!(
        keys,
        [
            "m_bar",
            "n_bar",
            "sum_bar",
            "diff_bar",
            "loop_total",
            "loop_distinct_nonzero_y",
            "two_cycle_count",
            "k_motif_count",
            "k22_motif_count",
            "cycle_spectrum"
        ]
    );
}

#[test]
fn out_of_range_parameter_is_exit_1() {
    let out = run("iso 3 1 2 99 1 1");
    assert_eq!(out.exit_code, 1);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn non_prime_power_and_unknown_subcommand_are_exit_1() {
    assert_eq!(run("build 6 1 1").exit_code, 1);
    assert_eq!(run("field-info 4 2").exit_code, 1);
    let out = run("frobnicate 3");
    assert_eq!(out.exit_code, 1);
    assert!(
        out.stderr.to_lowercase().contains("usage"),
        "{}",
        out.stderr
    );
}

#[test]
fn exhausted_budget_is_exit_2() {
    let out = run("iso 7 1 2 5 4 --budget 1");
    assert_eq!(out.exit_code, 2, "{}", out.stderr);
    assert!(out.stdout.is_empty());
}

#[test]
fn iso_json_includes_verified_permutation() {
    let out = run("iso 5 1 2 3 2 --json");
    assert_eq!(out.exit_code, 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "Iso");
    assert_eq!(v["permutation"].as_array().unwrap().len(), 25);
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        "iso 9 1 2 1 4 --json",
        "invariants 7 2 3 --cycles 4 --json",
        "census 9 1 2 --motif k22 --json",
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args}");
    }
}

#[test]
fn build_formats() {
    let out = run("build 3 1 2");
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.stdout.lines().count(), 27);
    assert!(out.stdout.lines().any(|l| l == "1,0 -> 0,0"));

    let dot = run("build 3 1 2 --format dot").stdout;
    assert!(dot.starts_with("digraph \"D(3;1,2)\" {"));
    assert_eq!(dot.matches(" -> ").count(), 27);
    assert_eq!(run("build 3 1 2 --format gml").exit_code, 1);
}

#[test]
fn build_to_file_and_unwritable_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.txt");
    let out = run(&format!("build 4 1 3 --out {}", path.display()));
    assert_eq!(out.exit_code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 64);

    let bad = dir.path().join("missing").join("d.txt");
    assert_eq!(
        run(&format!("build 4 1 3 --out {}", bad.display())).exit_code,
        3
    );
}

#[test]
fn field_info_gf8() {
    let out = run("field-info 2 3");
    assert_eq!(out.exit_code, 0);
    assert!(out.stdout.contains("q: 8"));
    assert!(out.stdout.contains("modulus: 1,0,1,1"), "{}", out.stdout);
}

#[test]
fn census_cycles_trinomial() {
    let k = json(&run("census 17 1 4 --json"));
    assert_eq!(k["motif"], "K");
    let k12 = json(&run("census 17 1 12 --json"));
    assert_ne!(k["count"], k12["count"]);

    let cycles = json(&run("cycles 3 1 2 2 --json"));
    assert_eq!(cycles, serde_json::json!([3, 9]));
    assert_eq!(run("cycles 9 1 2 8 --budget 10").exit_code, 1);

    assert_eq!(json(&run("trinomial 17 5 --json"))["roots"], 2);
    assert_eq!(json(&run("trinomial 17 13 --json"))["roots"], 1);
}

#[test]
fn sweep_writes_one_report_per_q() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.jsonl");
    let cache = dir.path().join("cache.jsonl");
    let args = format!(
        "sweep --qmin 2 --qmax 7 --cache {} --json {}",
        cache.display(),
        report.display()
    );
    let cold = run(&args);
    assert_eq!(cold.exit_code, 0, "{}", cold.stderr);
    let lines: Vec<serde_json::Value> = std::fs::read_to_string(&report)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let qs: Vec<u64> = lines.iter().map(|v| v["q"].as_u64().unwrap()).collect();
    assert_eq!(qs, [2, 3, 4, 5, 7]);
    let keys: Vec<&String> = lines[0].as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "q",
            "class_count",
            "within_class_checks",
            "cross_class_pairs",
            "resolved_by_invariant",
            "resolved_by_search",
            "undecided",
            "counterexamples",
            "wall_time_ms"
        ]
    );
    assert!(std::fs::metadata(&cache).unwrap().len() > 0);

    let warm = run(&args);
    assert_eq!(warm.exit_code, 0);
    assert_eq!(cold.stdout, warm.stdout);
}

#[test]
fn sweep_guard_and_bad_cache() {
    assert_eq!(run("sweep --qmin 2 --qmax 32").exit_code, 1);
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nope").join("cache.jsonl");
    assert_eq!(
        run(&format!(
            "sweep --qmin 2 --qmax 3 --cache {}",
            cache.display()
        ))
        .exit_code,
        3
    );
}

#[test]
fn m1_sweep_q3_and_q5() {
    let out = run("sweep --m1-only --qmin 3 --qmax 5");
    assert_eq!(out.exit_code, 0);
    let rows: Vec<Vec<&str>> = out
        .stdout
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().collect())
        .collect();
    // q, classes, within, cross, ...
    assert_eq!(rows[0][..4], ["3", "2", "0", "1"]);
    assert_eq!(rows[1][..4], ["5", "4", "0", "6"]);
}
