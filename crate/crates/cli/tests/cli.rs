//! End-to-end tests for the `orbimod` binary: worked examples, the JSON wire
//! contract, schema diagnostics, exit codes, and byte-level determinism.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_orbimod"))
}

fn fixture(name: &str) -> String {
    format!(
        "{}/tests/fixtures/{name}",
        env!("CARGO_MANIFEST_DIR")
    )
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = bin();
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("spawn orbimod");
    // A child that rejects its arguments may exit without reading stdin;
    // the resulting broken pipe is not a test failure.
    if let Err(e) = child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
    {
        assert_eq!(e.kind(), std::io::ErrorKind::BrokenPipe, "write stdin: {e}");
    }
    child.wait_with_output().expect("wait for orbimod")
}

/// Runs a command against a fixture file and parses the JSON report.
fn report(command: &str, fixture_name: &str) -> Value {
    let out = run(&[command, "--input", &fixture(fixture_name)], None);
    assert!(
        out.status.success(),
        "{command} on {fixture_name} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

/// Runs a command on an inline JSON document via stdin, expecting success.
fn report_stdin(command: &str, input: &str) -> Value {
    let out = run(&[command, "--input", "-"], Some(input));
    assert!(
        out.status.success(),
        "{command} on stdin failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

/// Expects a failure with the given exit code; returns the stderr text.
fn expect_failure(args: &[&str], stdin: Option<&str>, code: i32) -> String {
    let out = run(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(code),
        "expected exit {code}; stdout: {} stderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(out.stdout.is_empty(), "failed run must not emit a report");
    String::from_utf8_lossy(&out.stderr).into_owned()
}

// ---------------------------------------------------------------------------
// worked examples

#[test]
fn surface_reports_exact_invariants() {
    let v = report("surface", "surface_237.json");
    assert_eq!(v["euler_characteristic"], "-1/42");
    assert_eq!(v["hyperbolic"], true);
    assert_eq!(v["even_order_points"], 1);
    assert_eq!(v["canonical_class"]["b"], -2);
    assert_eq!(v["canonical_class"]["y"], serde_json::json!([1, 2, 6]));
    assert_eq!(v["canonical_class"]["c1"], "1/42");
    assert_eq!(v["quadratic_differentials"], 0);
    assert_eq!(v["teichmuller_dim"], 0);
    assert_eq!(v["conical_metric"]["exists_unique"], true);
    assert_eq!(
        v["conical_metric"]["cone_angles_over_pi"],
        serde_json::json!(["1/1", "2/3", "2/7"])
    );
    assert_eq!(v["topological_roots"], 1);
}

#[test]
fn strata_single_stratum_worked_example() {
    let v = report("strata", "bundle_g1.json");
    let strata = v["strata"].as_array().unwrap();
    assert_eq!(strata.len(), 1);
    let s = &strata[0];
    assert_eq!(s["m"], 0);
    assert_eq!(s["eps"], serde_json::json!([1]));
    assert_eq!(s["value"]["over_2pi"], "1/2");
    assert_eq!(s["index"], 2);
    assert_eq!(s["r"], 0);
    assert_eq!(s["cover_order"], 4);

    assert_eq!(v["minimum"]["kind"], "stable_bundles_moduli");
    assert_eq!(v["minimum"]["complex_dim"], 1);

    assert_eq!(v["topology"]["connected"], true);
    assert_eq!(v["topology"]["compact"], false);
    assert_eq!(v["topology"]["real_dim"], 4);

    let comps = v["real_components"].as_array().unwrap();
    assert_eq!(comps.len(), 2);
    assert_eq!(comps[0]["kind"], "stable_bundles");
    assert_eq!(comps[0]["complex_dim"], 1);
    assert_eq!(comps[1]["kind"], "vector_bundle_over_cover");
    assert_eq!(comps[1]["cover_order"], 4);
}

#[test]
fn poincare_assembly_worked_example() {
    let v = report("poincare", "bundle_s5.json");
    assert_eq!(v["poincare"]["coeffs"], serde_json::json!([1, 0, 5]));
    assert_eq!(v["poincare"]["symbolic"], serde_json::json!([]));
    assert_eq!(v["poincare"]["display"], "1 + 5*t^2");
    assert_eq!(v["assumes_perfect_morse"], true);
    assert_eq!(v["euler_characteristic"], 6);

    let m = &v["minimum"];
    assert_eq!(m["kind"], "projective_stratum");
    assert_eq!(m["m"], 1);
    assert_eq!(m["eps"], serde_json::json!([-1, -1, -1, -1]));
    assert_eq!(m["value"]["over_2pi"], "1/5");
    assert_eq!(m["index"], 0);
    assert_eq!(m["r"], 1);
    assert_eq!(m["cover_order"], 1);
}

#[test]
fn point_case_moduli_is_a_point() {
    for name in ["bundle_237_even.json", "bundle_237_odd.json"] {
        let v = report("strata", name);
        assert_eq!(v["strata"].as_array().unwrap().len(), 1, "{name}");
        assert_eq!(v["topology"]["compact"], true, "{name}");
        assert_eq!(v["topology"]["isolated_point"], true, "{name}");
        assert_eq!(v["topology"]["real_dim"], 0, "{name}");
        assert_eq!(v["minimum"]["kind"], "projective_stratum", "{name}");

        let p = report("poincare", name);
        assert_eq!(p["poincare"]["coeffs"], serde_json::json!([1]), "{name}");
        assert_eq!(p["euler_characteristic"], 1, "{name}");
    }
}

#[test]
fn bundle_reports_reduction_and_stability_analysis() {
    let v = report("bundle", "bundle_full.json");
    assert_eq!(v["n0"], 0);
    assert_eq!(v["free_points"], 6);
    assert_eq!(v["c1_det"], "3/1");
    assert_eq!(v["moduli_dimension"], 6);
    assert_eq!(v["moduli_dimension_real"], 12);
    assert_eq!(v["bounds_attainable"], false);

    let w = &v["parabolic_weights"][0];
    assert_eq!(w["lambda"], "0/1");
    assert_eq!(w["lambda_prime"], "1/2");
    assert_eq!(w["degenerate"], false);

    assert_eq!(v["reducible"], true);
    let rw = &v["reduction_witness"];
    assert_eq!(rw["m"], -1);
    assert_eq!(rw["eps"], serde_json::json!([-1, 1, 1, 1, 1, 1]));
    assert_eq!(rw["sub_degree"], "3/2");

    let sb = &v["sub_bundle"];
    assert_eq!(sb["degree"], "3/2");
    assert_eq!(sb["chi_k_lm2_det"], 2);
    assert_eq!(sb["chi_k_l2_det_dual"], 2);
    assert_eq!(sb["all_higgs_invariant"], false);
    assert_eq!(sb["on_wall"], true);
    let h0 = &sb["semistable_h0"];
    assert_eq!(h0["end0_k_nontrivial"], 3);
    assert_eq!(h0["end0_k_trivial"], 4);
    assert_eq!(h0["e_dual_kl"], 2);
    assert_eq!(h0["k_lm2_det"], 2);
    assert_eq!(h0["k_l2_det_dual"], 2);

    assert_eq!(v["stable_pair"]["answer"], "yes");
    assert_eq!(v["stable_pair"]["isolated_point"], false);
}

#[test]
fn spectral_generic_and_special_cases() {
    let v = report("spectral", "spectral_g2.json");
    assert_eq!(v["base_dim"], 4);
    assert_eq!(v["branch_points"], 6);
    assert_eq!(v["spectral_genus"], 6);
    assert_eq!(v["fibre"]["kind"], "prym");
    assert_eq!(v["fibre"]["dim"], 4);
    assert_eq!(v["generic_caveat"], true);
    assert!(v["special_subbundle"].is_null());

    // A single elliptic point is the one configuration with extra sub-bundle
    // degree data; the fibre degenerates to a Jacobian.
    let v = report_stdin(
        "spectral",
        r#"{"genus":1,"cone_points":[{"alpha":2,"x":0,"x_prime":1}],"l":0}"#,
    );
    assert_eq!(v["base_dim"], 1);
    assert!(v["branch_points"].is_null());
    assert_eq!(v["fibre"]["kind"], "jacobian");
    assert_eq!(v["fibre"]["dim"], 1);
    assert_eq!(v["special_subbundle"]["degree"], "0/1");
    assert_eq!(v["special_subbundle"]["isotropy"], 0);
}

#[test]
fn reps_full_line_data() {
    let v = report("reps", "reps_g1.json");
    assert_eq!(
        v["fuchsian"]["generators"],
        serde_json::json!(["a1", "b1", "q1", "q2"])
    );
    assert_eq!(v["fuchsian"]["relations"].as_array().unwrap().len(), 3);
    assert_eq!(v["teichmuller_dim"], 2);

    let line = &v["line"];
    assert_eq!(line["b"], 0);
    assert_eq!(line["y"], serde_json::json!([1, 1]));
    assert_eq!(line["euler_class"], "5/6");
    assert_eq!(line["milnor_wood"]["bound"], "7/6");
    assert_eq!(line["milnor_wood"]["satisfied"], true);

    // Central extension: one commutator per surface generator, one torsion
    // relation per cone point, then the long relation.
    let circle = line["circle_presentation"]["relations"].as_array().unwrap();
    assert_eq!(circle.len(), 7);
    // The order-two quotient adds exactly the relation h^2.
    let z2 = line["z2_presentation"]["relations"].as_array().unwrap();
    assert_eq!(z2.len(), 8);
    assert_eq!(z2[7], serde_json::json!([["h", 2]]));

    let comp = &line["psl2r_component"];
    assert_eq!(comp["kind"], "vector_bundle_over_cover");
    assert_eq!(comp["rank"], 2);
    assert_eq!(comp["base_sym_power"], 0);
    assert_eq!(comp["cover_order"], 1);

    assert_eq!(line["rotation"]["count"], 2);
    assert_eq!(
        line["rotation"]["list"],
        serde_json::json!([[1, 1], [1, 3]])
    );
    assert_eq!(line["rotation"]["truncated"], false);

    let ri = &line["rotation_input"];
    assert_eq!(ri["r"], serde_json::json!([1, 1]));
    assert_eq!(ri["n0"], 0);
    assert_eq!(ri["rep_variety_dimension"], 4);
    assert!(ri["reducible_witness"].is_null());
    assert_eq!(ri["sign_twist_orbit"], serde_json::json!([[1, 1]]));
}

#[test]
fn reps_without_line_section() {
    let v = report_stdin("reps", r#"{"genus":2,"alphas":[3]}"#);
    assert_eq!(
        v["fuchsian"]["generators"],
        serde_json::json!(["a1", "b1", "a2", "b2", "q1"])
    );
    assert_eq!(v["teichmuller_dim"], 4);
    assert!(v["line"].is_null());
}

// ---------------------------------------------------------------------------
// schema diagnostics (exit 2) and domain errors (exit 1)

#[test]
fn schema_errors_carry_field_paths() {
    let err = expect_failure(
        &["bundle", "--input", &fixture("bad_alpha.json")],
        None,
        2,
    );
    assert_eq!(
        err.trim(),
        "schema error at cone_points[0].alpha: must be an integer between 2 and 24"
    );

    let err = expect_failure(
        &["strata", "--input", "-"],
        Some(r#"{"genus":1,"cone_points":[{"alpha":3,"x":2,"x_prime":1}],"l":0}"#),
        2,
    );
    assert_eq!(
        err.trim(),
        "schema error at cone_points[0]: x must not exceed x_prime"
    );

    let err = expect_failure(
        &["strata", "--input", "-"],
        Some(r#"{"genus":1,"cone_points":[{"alpha":3,"x":0,"x_prime":1}]}"#),
        2,
    );
    assert_eq!(err.trim(), "schema error at l: missing required field");

    let err = expect_failure(
        &["surface", "--input", "-"],
        Some(r#"{"genus":0,"alphas":[2,3,7],"bogus":1}"#),
        2,
    );
    assert_eq!(err.trim(), "schema error at bogus: unknown field");

    let err = expect_failure(&["surface", "--input", "-"], Some("not json"), 2);
    assert!(
        err.starts_with("schema error: invalid JSON"),
        "unexpected: {err}"
    );

    let err = expect_failure(&["surface", "--input", "/nonexistent.json"], None, 2);
    assert!(
        err.starts_with("schema error: cannot read /nonexistent.json"),
        "unexpected: {err}"
    );
}

#[test]
fn domain_errors_exit_one() {
    let err = expect_failure(
        &["strata", "--input", "-"],
        Some(r#"{"genus":0,"cone_points":[{"alpha":2,"x":0,"x_prime":1}],"l":0}"#),
        1,
    );
    assert_eq!(
        err.trim(),
        "error: requires a hyperbolic surface: the orbifold Euler characteristic must be negative"
    );

    let err = expect_failure(
        &["poincare", "--input", "-"],
        Some(r#"{"genus":1,"cone_points":[{"alpha":2,"x":0,"x_prime":0}],"l":0}"#),
        1,
    );
    assert_eq!(
        err.trim(),
        "error: bundle admits a reduction (a sub-bundle of half the determinant degree); \
         requires an irreducible bundle"
    );
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["bogus"], None);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["strata", "--format", "yaml", "--input", "-"], Some("{}"));
    assert_eq!(out.status.code(), Some(2));
}

// ---------------------------------------------------------------------------
// determinism and input plumbing

#[test]
fn stdin_matches_file_input() {
    for (cmd, name) in [
        ("surface", "surface_237.json"),
        ("strata", "bundle_g1.json"),
        ("bundle", "bundle_full.json"),
    ] {
        let path = fixture(name);
        let body = std::fs::read_to_string(&path).unwrap();
        let from_file = run(&[cmd, "--input", &path], None);
        let from_stdin = run(&[cmd, "--input", "-"], Some(&body));
        assert!(from_file.status.success());
        assert_eq!(from_file.stdout, from_stdin.stdout, "{cmd} {name}");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for format in ["json", "text"] {
        for (cmd, name) in [
            ("strata", "bundle_g1.json"),
            ("strata", "bundle_s5.json"),
            ("surface", "surface_237.json"),
            ("reps", "reps_g1.json"),
        ] {
            let args = [cmd, "--input", &fixture(name), "--format", format];
            let first = run(&args, None);
            let second = run(&args, None);
            assert!(first.status.success(), "{cmd} {name} {format}");
            assert_eq!(first.stdout, second.stdout, "{cmd} {name} {format}");
            assert!(!first.stdout.is_empty());
        }
    }
}

#[test]
fn text_format_mirrors_json() {
    let out = run(
        &["strata", "--input", &fixture("bundle_g1.json"), "--format", "text"],
        None,
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("m=0 eps=+ value/2pi=1/2 index=2 r=0 cover=4"));
    assert!(text.contains("minimum: stable-bundle moduli, complex dim 1"));
    assert!(text.contains("real_dim=4"));

    let out = run(
        &["surface", "--input", &fixture("surface_237.json"), "--format", "text"],
        None,
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("euler characteristic: -1/42"));
    assert!(text.contains("canonical class: b=-2 y=[1, 2, 6] c1=1/42"));
    assert!(text.contains("topological roots: 1"));
}

#[test]
fn check_runs_all_suites() {
    let out = run(&["check"], None);
    assert!(out.status.success(), "check must exit 0 when suites pass");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 12);
    assert_eq!(v["passed"], 12);
    assert_eq!(v["failed"], 0);
    let names: Vec<&str> = suites
        .iter()
        .map(|s| s["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        [
            "riemann-roch-coherence",
            "serre-chi-duality",
            "stratum-identity",
            "index-zero-uniqueness",
            "point-case",
            "genus-zero-assembly",
            "hyperelliptic-dimension",
            "reducibility-pairing",
            "spectral-consistency",
            "milnor-wood-saturation",
            "real-component-dimensions",
            "roots-count",
        ]
    );
    for s in suites {
        assert_eq!(s["pass"], true, "suite {}", s["name"]);
        assert!(!s["details"].as_str().unwrap().is_empty());
    }
}

// ---------------------------------------------------------------------------
// wire contract vs. the documented schema

/// Every emitted report must carry exactly the top-level keys documented in
/// docs/schema.json for its command (no optional omissions: absent values are
/// serialized as null so the shape is fixed).
#[test]
fn reports_match_documented_shapes() {
    let schema_path = format!("{}/../../docs/schema.json", env!("CARGO_MANIFEST_DIR"));
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let defs = &schema["$defs"];

    let keys_of = |v: &Value| -> Vec<String> {
        let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
        k.sort();
        k
    };
    let documented = |def: &str| -> (Vec<String>, Vec<String>) {
        let d = &defs[def];
        assert!(d.is_object(), "missing definition {def}");
        let mut required: Vec<String> = d["required"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().to_owned())
            .collect();
        required.sort();
        (required, keys_of(&d["properties"]))
    };

    let cases: [(&str, &str, &str); 6] = [
        ("surface", "surface_237.json", "surface_report"),
        ("bundle", "bundle_full.json", "bundle_report"),
        ("strata", "bundle_g1.json", "strata_report"),
        ("poincare", "bundle_s5.json", "poincare_report"),
        ("spectral", "spectral_g2.json", "spectral_report"),
        ("reps", "reps_g1.json", "reps_report"),
    ];
    for (cmd, name, def) in cases {
        let emitted = keys_of(&report(cmd, name));
        let (required, properties) = documented(def);
        assert_eq!(emitted, required, "{cmd} report keys vs. documented required");
        assert_eq!(emitted, properties, "{cmd} report keys vs. documented properties");
    }

    let out = run(&["check"], None);
    let emitted = keys_of(&serde_json::from_slice(&out.stdout).unwrap());
    let (required, properties) = documented("check_report");
    assert_eq!(emitted, required);
    assert_eq!(emitted, properties);
}
