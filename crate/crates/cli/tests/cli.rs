use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spin-cover"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("spin-cover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn apply_parity_multiplies_by_i() {
    let f = temp_file("const.field", "-1; 0,0,0; 1; 0\n0; 0,0,0; 1; 0\n1; 0,0,0; 1; 0\n");
    let o = run(&["apply", "P", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-1; 0,0,0; i; 0\n0; 0,0,0; i; 0\n1; 0,0,0; i; 0\n");
    let notes = String::from_utf8(o.stderr).unwrap();
    assert!(notes.contains("matrix: i,0;0,i"), "{notes}");
    assert!(notes.contains("q-projection: -1,0,0;0,-1,0;0,0,-1@+1"), "{notes}");
}

#[test]
fn apply_time_reversal() {
    let f = temp_file("t.field", "0; 0,0,0; 1; i\n");
    let o = run(&["apply", "T", f.to_str().unwrap()]);
    assert_eq!(stdout(&o), "0; 0,0,0; i; 1\n");

    let o = run(&["apply", "T", f.to_str().unwrap(), "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["q_projection"], "1,0,0;0,1,0;0,0,1@-1");
    assert_eq!(v["field"], "0; 0,0,0; i; 1\n");
}

#[test]
fn apply_identity_is_byte_identical() {
    let input = "-1; 0,0,0; 1/2; -3i\n0; 0,0,0; 1+i; 0\n1; 0,0,0; 2; 5/7-1/3i\n";
    let f = temp_file("id.field", input);
    let out = f.with_extension("out");
    let o = run(&["apply", "I", f.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(out).unwrap(), input);
}

#[test]
fn apply_then_inverse_restores_the_field() {
    let input = "0; -1,-2,-3; 1; i\n0; 1,2,3; 2; -i\n";
    let f = temp_file("inv.field", input);
    let once = f.with_extension("once");
    run(&["apply", "P", f.to_str().unwrap(), "--out", once.to_str().unwrap()]);
    let o = run(&["apply", "-i,0;0,-i", once.to_str().unwrap()]);
    assert_eq!(stdout(&o), input);
}

#[test]
fn apply_errors() {
    let f = temp_file("bad.field", "# header\n0; 0,0,0; 1; 0\n0; 0,0; 1; 0\n");
    let o = run(&["apply", "P", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 3"));

    let f = temp_file("open.field", "0; 1,0,0; 1; 0\n0; -1,0,0; 1; 0\n");
    let o = run(&["apply", "0,-1;1,0", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    // Rotation by pi/2 about z would need (0; 0,1,0), which is absent.
    let o = run(&["apply", "1/2+1/2i,0;0,1/2-1/2i", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn table_named_groups() {
    let o = run(&["table", "GPT_hat", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["elements"], serde_json::json!(["I", "P", "T", "PT", "-P", "-T", "-PT", "-I"]));
    // P * P = -I
    assert_eq!(v["table"][1][1], 7);
    // PT * PT = I
    assert_eq!(v["table"][3][3], 0);

    let text = stdout(&run(&["table", "GPT_spacetime"]));
    assert_eq!(text, "    1  P  T PT\n 1  1  P  T PT\n P  P  1 PT  T\n T  T PT  1  P\nPT PT  T  P  1\n");
}

#[test]
fn table_from_generator() {
    let v = json(&run(&["table", "--format", "json", "--", "-1,0;0,-1"]));
    assert_eq!(v["order"], 2);
    assert_eq!(v["table"], serde_json::json!([[0, 1], [1, 0]]));
}

#[test]
fn table_resource_limit() {
    let o = run(&["table", "i,0;0,i", "0,-1;1,0", "--max-order", "4"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn iso_examples() {
    let v = json(&run(&["iso", "GPT_hat", "Z4xZ2", "--format", "json"]));
    assert_eq!(v["isomorphic"], true);
    assert_eq!(v["witness"]["mapping"].as_array().unwrap().len(), 8);

    let v = json(&run(&["iso", "GPT_spacetime", "Z2xZ2", "--format", "json"]));
    assert_eq!(v["isomorphic"], true);

    let o = run(&["iso", "Z4", "Z2xZ2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["element_orders"]["a"], serde_json::json!([1, 2, 4, 4]));
    assert_eq!(v["element_orders"]["b"], serde_json::json!([1, 2, 2, 2]));

    let v = json(&run(&["iso", "gen:0,-i;-i,0|0,-1;1,0", "Dic8", "--format", "json"]));
    assert_eq!(v["isomorphic"], true);

    assert_eq!(run(&["iso", "Z300", "Z300"]).status.code(), Some(3));
    assert_eq!(run(&["iso", "Q8", "Z8"]).status.code(), Some(2));
}

#[test]
fn doublegroup_examples() {
    let v = json(&run(&["doublegroup", "--n", "3", "--convention", "-1", "--format", "json"]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["results"][0]["isomorphic"], false);
    assert!(v["results"][0]["invariant_used"].is_string());
    assert_eq!(v["results"][0]["paper_claim_match"], true);

    let v = json(&run(&["doublegroup", "--n", "3", "--convention", "+1", "--format", "json"]));
    assert_eq!(v["results"][0]["isomorphic"], true);
    assert!(v["results"][0]["witness"].is_array());

    let o = run(&["doublegroup", "--n", "13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = run(&["verify", "cover", "--samples", "200", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["all_pass"], true);
    assert!(v["assertions"]
        .as_array()
        .unwrap()
        .iter()
        .any(|a| a["assertion"].as_str().unwrap().contains("ker(Pi) = {I, -I}")));

    // The sampled q law fails on time-reversing pairs, so ptgroup reports a
    // failure with a witness and exits 1.
    let o = run(&["verify", "ptgroup", "--samples", "200", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let failing: Vec<&serde_json::Value> =
        v["assertions"].as_array().unwrap().iter().filter(|a| a["pass"] == false).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["assertion"], "ptgroup: q(gh) = q(g)q(h) on sampled pairs");
    assert!(failing[0]["witness"].is_string());

    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_all_is_deterministic() {
    let a = run(&["verify", "all", "--seed", "42", "--format", "json"]);
    let b = run(&["verify", "all", "--seed", "42", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());
    let other = run(&["verify", "all", "--seed", "43", "--format", "json"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn bad_flags_are_input_errors() {
    assert_eq!(run(&["verify", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["table", "GPT_hat", "--max-order", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "GPT_hat", "--tolerance", "-1"]).status.code(), Some(2));
}
