use std::path::PathBuf;
use std::process::{Command, Output};

use num_rational::BigRational;
use proptest::prelude::*;
use serde_json::Value;
use toric_cartier::geometry::LatticePoint;
use toric_cartier_cli::{parse_instance, InstanceConfig, Twist};

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances").join(name)
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric-cartier"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_on(cmd: &str, file: &str, extra: &[&str]) -> Output {
    let path = instance(file);
    let mut args = vec![cmd, "--instance", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    cli(&args)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn gens(v: &Value) -> Vec<Vec<i64>> {
    serde_json::from_value(v["generators"].clone()).unwrap()
}

#[test]
fn enumerate_lists_six_records() {
    let out = run_on("enumerate", "skew_w-1-2_q2.txt", &[]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    let records = doc["records"].as_array().unwrap();
    let labels: Vec<&str> = records.iter().map(|r| r["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["0", "I", "II", "III", "IV", "V"]);
    assert_eq!(gens(&doc["extremal"]["smallest_nonzero"]), [[2, 3], [2, 4]]);
    assert_eq!(gens(&doc["extremal"]["largest"]), [[1, 2]]);
    assert_eq!(doc["extremal"]["largest"]["monomials"], "⟨xy^2⟩");
}

#[test]
fn divisor_and_w_inputs_agree() {
    let a = run_on("enumerate", "skew_w-1-2_q2.txt", &[]);
    let b = run_on("enumerate", "skew_divisor_q2.txt", &[]);
    assert_eq!(json(&a)["records"], json(&b)["records"]);
}

#[test]
fn output_is_byte_stable() {
    for cmd in ["enumerate", "cross-validate", "plot"] {
        let a = run_on(cmd, "skew_triple_p3.txt", &[]);
        let b = run_on(cmd, "skew_triple_p3.txt", &[]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn test_ideal_of_the_w01_instance() {
    let out = run_on("test-ideal", "skew_w0-1_q3.txt", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(gens(&json(&out)["ideal"]), [[1, 0], [1, 1], [1, 2]]);
}

#[test]
fn non_lc_and_stable_image_are_the_unit_ideal_for_w12() {
    for cmd in ["non-lc", "stable-image"] {
        let out = run_on(cmd, "skew_w1-2_q2.txt", &[]);
        assert_eq!(gens(&json(&out)["ideal"]), [[0, 0]], "{cmd}");
    }
}

#[test]
fn verify_exit_codes() {
    let ok = run_on("verify", "skew_w-1-2_q2.txt", &["--ideal", "(2,3),(2,4)"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["verdict"]["status"], "fixed");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q3.txt");
    std::fs::write(&path, "format_version = 1\nrays = [(1,0),(1,3)]\np = 3\nw = (-1,-2)\n").unwrap();
    let bad = cli(&[
        "verify",
        "--instance",
        path.to_str().unwrap(),
        "--ideal",
        "(1,1)",
        "--N",
        "3",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let verdict = &json(&bad)["verdict"];
    assert_eq!(verdict["status"], "not_fixed");
    assert_eq!(verdict["witness"]["monomial"], serde_json::json!([1, 2]));
}

#[test]
fn invalid_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(
        &path,
        "format_version = 1\nrays = [(1,0),(1,3)]\np = 2\nw = (-1,-2)\nt = 1/2\n",
    )
    .unwrap();
    let out = cli(&["enumerate", "--instance", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("coprime to p"));

    let out = run_on("verify", "skew_w-1-2_q2.txt", &[]);
    assert_eq!(out.status.code(), Some(2), "verify needs --ideal");
    let out = run_on("verify", "skew_w-1-2_q2.txt", &["--ideal", "(-1,0)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run_on("enumerate", "orthant_triple_p3.txt", &["--N", "2"]);
    assert_eq!(out.status.code(), Some(2), "N below the period");
    let out = cli(&["enumerate", "--instance", "/nonexistent/instance.txt"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cli(&["frobnicate", "--instance", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cross_validate_passes_on_triples() {
    for file in ["skew_triple_p3.txt", "orthant_triple_p3.txt", "skew_w-1-2_q2.txt"] {
        let out = run_on("cross-validate", file, &[]);
        assert_eq!(out.status.code(), Some(0), "{file}");
        let doc = json(&out);
        assert_eq!(doc["oracle"]["passed"], true);
        assert!(doc["oracle"]["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["status"] != "FAIL"));
    }
}

#[test]
fn orthant_triple_has_five_fixed_ideals() {
    let doc = json(&run_on("enumerate", "orthant_triple_p3.txt", &[]));
    assert_eq!(doc["instance"]["period"], 4);
    assert_eq!(doc["records"].as_array().unwrap().len(), 5);
}

#[test]
fn plot_matches_golden_file() {
    let out = run_on("plot", "skew_w-1-2_q2.txt", &[]);
    assert_eq!(out.status.code(), Some(0));
    let svg = String::from_utf8(out.stdout).unwrap();
    let golden = include_str!("golden/skew_w-1-2_q2.svg");
    assert_eq!(svg, golden);
    assert_eq!(svg.matches("font-weight=\"bold\"").count(), 6, "one panel per record");
    assert_eq!(svg.matches("fill=\"white\"").count(), 6, "base point in every panel");
    assert!(svg.contains("stroke-dasharray"));
    assert!(svg.contains("#999999"));
}

#[test]
fn plot_rejects_three_dimensions() {
    let out = run_on("plot", "cube_orthant_q2.txt", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension 3"));
    let out = run_on("enumerate", "cube_orthant_q2.txt", &[]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn out_flag_and_timing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    let out = run_on(
        "enumerate",
        "skew_w-1-2_q2.txt",
        &["--out", path.to_str().unwrap(), "--timing"],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(doc["timing_ms"].is_u64());
    let plain = json(&run_on("enumerate", "skew_w-1-2_q2.txt", &[]));
    assert!(plain.get("timing_ms").is_none());
}

#[test]
fn bundled_instances_round_trip() {
    for entry in std::fs::read_dir(instance("")).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let cfg = parse_instance(&text).unwrap();
        assert_eq!(parse_instance(&cfg.serialize()).unwrap(), cfg);
    }
}

fn config() -> impl Strategy<Value = InstanceConfig> {
    let rays = prop_oneof![
        Just(vec![[1i64, 0], [0, 1]]),
        Just(vec![[1, 0], [1, 3]]),
        Just(vec![[1, 0], [1, 2]]),
        Just(vec![[2, -1], [-1, 2]]),
    ];
    let int = |a: i64| BigRational::from_integer(a.into());
    let twist = prop_oneof![
        (-3i64..=3, -3i64..=3).prop_map(|(a, b)| Twist::W(LatticePoint::from([a, b]))),
        (0i64..=4, 0i64..=4).prop_map(move |(a, b)| Twist::Divisor(vec![int(a), int(b)])),
    ];
    (
        rays,
        prop_oneof![Just((2u64, 1u32)), Just((3, 1)), Just((2, 2))],
        twist,
        any::<bool>(),
        0i64..=5,
        1i64..=7,
        1i64..=4,
    )
        .prop_map(|(rays, (p, e), twist, with_a, num, den, margin)| InstanceConfig {
            dimension: 2,
            rays: rays.into_iter().map(LatticePoint::from).collect(),
            p,
            e,
            twist,
            a: with_a.then(|| vec![LatticePoint::from([2, 1]), LatticePoint::from([1, 1])]),
            t: BigRational::new(num.into(), den.into()),
            n_max: None,
            margin,
            pool_cap: 20,
        })
        .prop_filter("valid instance", |cfg| cfg.build().is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn serialize_then_parse_is_identity(cfg in config()) {
        prop_assert_eq!(parse_instance(&cfg.serialize()).unwrap(), cfg);
    }
}
