use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sandpile"));
    cmd.env_remove("SANDPILE_FORMAT");
    for a in args {
        if a.ends_with(".json") || a.ends_with(".txt") {
            cmd.arg(data(a));
        } else {
            cmd.arg(a);
        }
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn group() {
    let out = run(&["group", "c5_cone.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["invariant_factors"], serde_json::json!(["11", "11"]));
    let out = run(&["group", "q2_cone.json"]);
    assert_eq!(json(&out)["invariant_factors"], serde_json::json!(["3", "15"]));
    let out = run(&["group", "disconnected.json"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));
    let out = run(&["group", "missing.json"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn stabilize() {
    let out = run(&["stabilize", "q2_cone.json", "q2_config.json"]);
    let v = json(&out);
    assert_eq!(v["stable"], serde_json::json!([2, 1, 2, 1]));
    assert_eq!(v["firings"], serde_json::json!([1, 1, 1, 1]));
    let out = run(&["stabilize", "q2_cone.json", "zero4.json"]);
    assert_eq!(json(&out)["firings"], serde_json::json!([0, 0, 0, 0]));
    assert_eq!(code(&run(&["stabilize", "q2_cone.json", "neg.json"])), 1);
    assert_eq!(code(&run(&["stabilize", "q2_cone.json", "neg.json", "--allow-negative"])), 0);
    assert_eq!(code(&run(&["stabilize", "c5_cone.json", "q2_config.json"])), 1);
}

#[test]
fn group_elements() {
    let v = json(&run(&["identity", "thick_h.json"]));
    assert_eq!(v["identity"], serde_json::json!([1, 2]));
    let v = json(&run(&["recurrents", "thick_h.json"]));
    assert_eq!(v["count"], 8);
    let v = json(&run(&["representative", "thick_h.json", "h_gen.json"]));
    assert_eq!(v["representative"], serde_json::json!([0, 3]));
    assert_eq!(v["order"], "8");
    let v = json(&run(&["add", "thick_h.json", "h_gen.json", "h_gen.json"]));
    assert_eq!(v["sum"].as_array().unwrap().len(), 2);
    assert_eq!(code(&run(&["add", "q2_cone.json", "zero4.json", "zero4.json"])), 1);
    assert_eq!(code(&run(&["recurrents", "c5_cone.json", "--guard", "10"])), 1);
}

#[test]
fn check_hom() {
    let out = run(&["check-hom", "contracted_g.json", "thick_h.json", "contract_hom.json", "--verify-injection"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["injection"]["image_order"], "8");
    assert_eq!(v["injection"]["passed"], true);

    let out = run(&["check-hom", "wrap_c5.json", "wrap_c3.json", "wrap_hom.json"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["clause"], "fiber-size");

    let out = run(&["check-hom", "thick_h.json", "thick_h.json", "identity_hom.json", "--verify-injection"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["injection"]["image_order"], "8");
}

#[test]
fn product() {
    let v = json(&run(&["product", "c5.json", "k2.json", "c5_a.json", "k2_b.json"]));
    assert_eq!(v["config"], serde_json::json!([3, 2, 6, 5, 4, 4, 3, 7, 6, 5]));
    let v = json(&run(&["product", "c5.json", "k2.json", "c5_rec.json", "k2_rec.json", "--certify"]));
    assert_eq!(v["certificate"]["kind"], "burning");
    assert_eq!(code(&run(&["product", "c5.json", "k2.json", "c5_a.json", "k2_b.json", "--certify"])), 1);
}

#[test]
fn hypercube() {
    let out = run(&["hypercube", "--d", "2", "--k", "1", "--verify", "structure"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["structure"]["computed"], serde_json::json!(["3", "5", "5", "7"]));
    let out = run(&["hypercube", "--d", "3", "--verify", "decomposition"]);
    assert_eq!(json(&out)["decomposition"]["spans"], true);
    let out = run(&["hypercube", "--d", "2", "--verify", "even-counterexample"]);
    assert_eq!(json(&out)["even_counterexample"]["groups_differ"], true);
    let out = run(&["hypercube", "--d", "4", "--verify", "if-count"]);
    assert_eq!(json(&out)["if_count"]["formula"], 6);
    assert_eq!(code(&run(&["hypercube", "--d", "9"])), 1);
}

#[test]
fn snf() {
    let v = json(&run(&["snf", "laplacian_c3.txt"]));
    assert_eq!(v["diagonal"], serde_json::json!(["1", "3", "0"]));
    let v = json(&run(&["snf", "k2_cone_laplacian.json", "--transforms"]));
    assert_eq!(v["diagonal"], serde_json::json!(["1", "8"]));
    assert_eq!(v["cokernel"]["order"], "8");
    assert!(v["u"]["entries"].is_array());
}

#[test]
fn text_format_and_env() {
    let out = run(&["group", "q2_cone.json", "--format", "text"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "elementary_divisors: 3 3 5\ninvariant_factors: 3 15\norder: 45\n");
    let out = Command::new(env!("CARGO_BIN_EXE_sandpile"))
        .env("SANDPILE_FORMAT", "text")
        .arg("group")
        .arg(data("q2_cone.json"))
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("elementary_divisors:"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["recurrents", "contracted_g.json"]).stdout;
    let b = run(&["recurrents", "contracted_g.json"]).stdout;
    assert_eq!(a, b);
}
