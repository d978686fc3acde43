//! End-to-end checks of the command-line contract: subcommands, exit codes,
//! file round trips, and output format.

use std::path::{Path, PathBuf};
use std::process::Command;

use refuel::cli::{run, EXIT_INPUT, EXIT_OK, EXIT_REJECT, EXIT_USAGE};
use refuel::io::read_instance_file;
use refuel::{evaluate, nvep_distance, solve, Permutation, ProblemKind, Rational};

fn write_three_plane_instance(dir: &Path) -> PathBuf {
    let path = dir.join("three.json");
    std::fs::write(
        &path,
        r#"{"kind":"arp","label":"worked","items":[{"v":"6","c":"2"},{"v":"1","c":"1"},{"v":"2","c":"1"}]}"#,
    )
    .unwrap();
    path
}

#[test]
fn check_accepts_and_rejects_with_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_three_plane_instance(dir.path());
    let file = file.to_str().unwrap();
    assert_eq!(
        run(["refuel", "check", file, "--perm", "2,1,3", "--threshold", "4"]),
        EXIT_OK
    );
    assert_eq!(
        run(["refuel", "check", file, "--perm", "2,1,3", "--threshold", "43/10"]),
        EXIT_REJECT
    );
    // duplicate ids are a rejected certificate, not a usage error
    assert_eq!(
        run(["refuel", "check", file, "--perm", "1,1,2", "--threshold", "1"]),
        EXIT_REJECT
    );
    // unparseable order text is a usage error
    assert_eq!(
        run(["refuel", "check", file, "--perm", "a,b", "--threshold", "1"]),
        EXIT_USAGE
    );
    // malformed threshold is caught by the parser
    assert_eq!(
        run(["refuel", "check", file, "--perm", "2,1,3", "--threshold", "1/0"]),
        EXIT_USAGE
    );
}

#[test]
fn solve_count_and_brute_run_on_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_three_plane_instance(dir.path());
    let file = file.to_str().unwrap();
    assert_eq!(run(["refuel", "solve", file]), EXIT_OK);
    assert_eq!(run(["refuel", "solve", file, "--workers", "4"]), EXIT_OK);
    assert_eq!(run(["refuel", "solve", file, "--prune"]), EXIT_OK);
    assert_eq!(run(["refuel", "solve", file, "--json"]), EXIT_OK);
    assert_eq!(run(["refuel", "count", file]), EXIT_OK);
    assert_eq!(run(["refuel", "brute", file]), EXIT_OK);
    assert_eq!(run(["refuel", "brute", file, "--full-reeval"]), EXIT_OK);
    // oracle cap applies
    assert_eq!(run(["refuel", "brute", file, "--cap", "2"]), EXIT_INPUT);
}

#[test]
fn gen_round_trips_and_reduce_preserves_objective() {
    let dir = tempfile::tempdir().unwrap();
    let generated = dir.path().join("gen.json");
    assert_eq!(
        run([
            "refuel", "gen", "--family", "random", "--n", "5", "--seed", "42", "-o",
            generated.to_str().unwrap(),
        ]),
        EXIT_OK
    );
    let inst = read_instance_file(&generated).unwrap();
    let direct = refuel::GeneratorSpec::random(5, 42).generate().unwrap();
    assert_eq!(inst, direct, "gen output parses back to the generated instance");

    // canonical generation honors --M
    let canonical = dir.path().join("canonical.json");
    assert_eq!(
        run([
            "refuel", "gen", "--family", "canonical", "--n", "4", "--M", "3/2", "-o",
            canonical.to_str().unwrap(),
        ]),
        EXIT_OK
    );
    let canonical_inst = read_instance_file(&canonical).unwrap();
    assert_eq!(
        canonical_inst,
        refuel::gen_canonical(4, &"3/2".parse::<Rational>().unwrap()).unwrap()
    );

    // reduce: rewrite the random instance as a vehicle problem, map it back
    let nvep_path = dir.path().join("vehicles.json");
    let vehicles = refuel::Instance::new(
        ProblemKind::Nvep,
        inst.items()
            .iter()
            .map(|a| (a.fuel().clone(), a.rate().clone()))
            .collect(),
        "vehicles",
    )
    .unwrap();
    refuel::io::write_instance_file(&vehicles, &nvep_path).unwrap();
    let reduced_path = dir.path().join("reduced.json");
    assert_eq!(
        run([
            "refuel", "reduce", nvep_path.to_str().unwrap(), "-o",
            reduced_path.to_str().unwrap(),
        ]),
        EXIT_OK
    );
    let reduced = read_instance_file(&reduced_path).unwrap();
    assert_eq!(reduced.kind(), ProblemKind::Arp);
    // solving the reduction equals the direct vehicle objective
    let report = solve(&reduced).unwrap();
    assert_eq!(
        nvep_distance(&vehicles, &report.optimal_perms[0]).unwrap(),
        report.optimum
    );
    // reducing an airplane instance is an input error
    assert_eq!(
        run([
            "refuel", "reduce", reduced_path.to_str().unwrap(), "-o",
            dir.path().join("again.json").to_str().unwrap(),
        ]),
        EXIT_INPUT
    );
}

#[test]
fn bench_writes_the_csv_contract() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    assert_eq!(
        run([
            "refuel", "bench", "--family", "canonical", "--n-from", "2", "--n-to", "8",
            "--reps", "1", "-o", csv.to_str().unwrap(),
        ]),
        EXIT_OK
    );
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,n,seed,qn,bound_2exp,optimum,nodes,ties,elapsed_micros"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 7);
    for (row, n) in rows.iter().zip(2..=8) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 9);
        assert_eq!(fields[0], "canonical");
        assert_eq!(fields[1], n.to_string());
        assert!(fields[5].contains('/'), "optimum is p/q: {}", fields[5]);
        assert!(fields[7] == "true" || fields[7] == "false");
    }
}

#[test]
fn usage_and_input_errors_map_to_exit_codes() {
    assert_eq!(run(["refuel", "solve"]), EXIT_USAGE);
    assert_eq!(run(["refuel", "bogus"]), EXIT_USAGE);
    assert_eq!(run(["refuel", "solve", "/does/not/exist.json"]), EXIT_INPUT);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"kind":"arp","items":[{"v":"0","c":"1"}]}"#).unwrap();
    assert_eq!(run(["refuel", "solve", bad.to_str().unwrap()]), EXIT_INPUT);
    // bench with an inverted range is a usage error
    let csv = dir.path().join("x.csv");
    assert_eq!(
        run([
            "refuel", "bench", "--family", "random", "--n-from", "5", "--n-to", "2", "-o",
            csv.to_str().unwrap(),
        ]),
        EXIT_USAGE
    );
}

/// Spawn the real binary once to pin the printed format and stream split.
#[test]
fn binary_prints_the_documented_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.json");
    std::fs::write(
        &path,
        r#"{"kind":"arp","items":[{"v":"6","c":"2"},{"v":"1","c":"1"}]}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_refuel"))
        .args(["solve", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "optimum 10/3 (~3.33333333333)");
    assert_eq!(lines[1], "perm 2,1");
    assert_eq!(lines[2], "Qn 1");
    assert!(lines[3].starts_with("nodes "));

    // JSON mirror carries the same numbers
    let out = Command::new(env!("CARGO_BIN_EXE_refuel"))
        .args(["solve", path.to_str().unwrap(), "--json"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["optimum"], "10/3");
    assert_eq!(v["qn"], 1);
    assert_eq!(v["perms"][0], serde_json::json!([2, 1]));

    // exhaustive oracle agrees with the solver on stdout
    let brute = Command::new(env!("CARGO_BIN_EXE_refuel"))
        .args(["brute", path.to_str().unwrap()])
        .output()
        .unwrap();
    let brute_stdout = String::from_utf8(brute.stdout).unwrap();
    assert!(brute_stdout.starts_with("optimum 10/3"));
}

#[test]
fn solve_and_brute_print_identical_optima() {
    let dir = tempfile::tempdir().unwrap();
    for seed in [3u64, 17, 99] {
        let inst = refuel::GeneratorSpec::random(6, seed).generate().unwrap();
        let path = dir.path().join(format!("r{seed}.json"));
        refuel::io::write_instance_file(&inst, &path).unwrap();
        let report = solve(&inst).unwrap();
        let truth = refuel::brute_force_solve(&inst).unwrap();
        assert_eq!(report.optimum, truth.optimum);
        // and the evaluation of the reported best order reproduces it
        let best: Permutation = report.optimal_perms[0].clone();
        assert_eq!(evaluate(&inst, &best).unwrap().total(), &report.optimum);
    }
}
