//! Acceptance gate: one test per release criterion, each printing a single
//! `criterion NN (<name>): PASS|FAIL` line (visible with `--nocapture`, and
//! always on failure). Criteria 1-12 run the library's named oracle suites;
//! criterion 13 exercises the binary end to end.
//!
//! Run with: cargo test --test acceptance -- --nocapture

use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use orbimod_core::checks;

/// Runs suite `id`, enforces the optional wall-clock budget, prints the
/// verdict line, and fails the test honestly if either part is violated.
fn criterion(no: u32, budget: Option<Duration>) {
    let start = Instant::now();
    let result = checks::run_suite(no);
    let elapsed = start.elapsed();

    let in_budget = budget.map_or(true, |b| elapsed <= b);
    let pass = result.pass && in_budget;
    println!(
        "criterion {:02} ({}): {}",
        no,
        result.name,
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(
        result.pass,
        "criterion {no} ({}) failed: {}",
        result.name, result.details
    );
    assert!(
        in_budget,
        "criterion {no} ({}) exceeded budget {budget:?}: took {elapsed:?}",
        result.name
    );
}

#[test]
fn criterion_01_riemann_roch_coherence() {
    criterion(1, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_02_serre_chi_duality() {
    criterion(2, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_03_stratum_identity() {
    criterion(3, Some(Duration::from_secs(5)));
}

#[test]
fn criterion_04_index_zero_uniqueness() {
    criterion(4, Some(Duration::from_secs(10)));
}

#[test]
fn criterion_05_point_case() {
    criterion(5, None);
}

#[test]
fn criterion_06_genus_zero_assembly() {
    criterion(6, None);
}

#[test]
fn criterion_07_hyperelliptic_dimension() {
    criterion(7, None);
}

#[test]
fn criterion_08_reducibility_pairing() {
    criterion(8, Some(Duration::from_secs(10)));
}

#[test]
fn criterion_09_spectral_consistency() {
    criterion(9, None);
}

#[test]
fn criterion_10_milnor_wood_saturation() {
    criterion(10, None);
}

#[test]
fn criterion_11_real_component_dimensions() {
    criterion(11, None);
}

#[test]
fn criterion_12_roots_count() {
    criterion(12, None);
}

// ---------------------------------------------------------------------------
// criterion 13: the binary itself

fn run_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbimod"))
        .args(args)
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .output()
        .expect("run orbimod")
}

#[test]
fn criterion_13_cli_determinism() {
    let start = Instant::now();
    let fixtures = [
        "bundle_g1.json",
        "bundle_s5.json",
        "bundle_237_even.json",
        "bundle_237_odd.json",
    ];

    let mut deterministic = true;
    for name in fixtures {
        let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
        for format in ["json", "text"] {
            let args = ["strata", "--input", path.as_str(), "--format", format];
            let first = run_bin(&args);
            let second = run_bin(&args);
            deterministic &= first.status.success()
                && second.status.success()
                && !first.stdout.is_empty()
                && first.stdout == second.stdout;
        }
    }

    let check = run_bin(&["check"]);
    let check_ok = check.status.success();

    let elapsed = start.elapsed();
    let in_budget = elapsed <= Duration::from_secs(30);
    let pass = deterministic && check_ok && in_budget;
    println!(
        "criterion 13 (cli-determinism): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(deterministic, "repeated strata runs differed or failed");
    assert!(
        check_ok,
        "orbimod check exited nonzero: {}",
        String::from_utf8_lossy(&check.stdout)
    );
    assert!(in_budget, "criterion 13 exceeded 30 s: took {elapsed:?}");
}
