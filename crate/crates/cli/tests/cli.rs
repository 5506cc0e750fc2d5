use std::process::{Command, Output};

fn stcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stcalc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(args: &[&str]) -> String {
    let o = stcalc(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn golden_rectangle_numbers() {
    assert_eq!(first_line(&["seq", "triangular", "--s", "1", "--t", "1", "--count", "8"]), "0,1,2,6,15,40,104,273");
}

#[test]
fn pell_tetrahedral_starts_at_one() {
    assert_eq!(first_line(&["seq", "tetrahedral", "--s", "2", "--t", "1", "--count", "4"]), "1,12,174,2436");
    assert_eq!(
        first_line(&["seq", "tetrahedral", "--s", "2", "--t", "1", "--count", "3", "--start", "0"]),
        "0,1,12"
    );
}

#[test]
fn fibonacci_at_two_minus_one_is_the_naturals() {
    assert_eq!(first_line(&["seq", "fib", "--s", "2", "--t", "-1", "--count", "5"]), "0,1,2,3,4");
}

#[test]
fn symbolic_and_rational_parameters() {
    assert_eq!(first_line(&["seq", "fib", "--count", "4"]), "0,1,s,t+s^2");
    assert_eq!(first_line(&["seq", "fib", "--s", "1/2", "--t", "symbolic", "--count", "4"]), "0,1,1/2,1/4+t");
    assert_eq!(first_line(&["seq", "qbinom-column", "--d", "2", "--count", "4"]), "0,1,1+q+q^2,1+q+2*q^2+q^3+q^4");
}

#[test]
fn polytopic_needs_d_within_bounds() {
    assert_eq!(first_line(&["seq", "polytopic", "--d", "4", "--s", "2", "--t", "-1", "--count", "5"]), "0,1,5,15,35");
    assert_eq!(stcalc(&["seq", "polytopic"]).status.code(), Some(2));
    assert_eq!(stcalc(&["seq", "polytopic", "--d", "13"]).status.code(), Some(2));
    assert_eq!(stcalc(&["seq", "fib", "--count", "202"]).status.code(), Some(2));
    assert_eq!(stcalc(&["seq", "nonsense"]).status.code(), Some(2));
}

#[test]
fn jacobsthal_discrepancy_is_reported() {
    let o = stcalc(&["seq", "triangular", "--s", "1", "--t", "2", "--count", "9"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next().unwrap(), "0,1,3,15,55,231,903,3655,14535");
    assert!(text.contains("differs from the printed list at n = 2: computed 3, printed 2"), "{text}");
}

#[test]
fn degenerate_point_falls_back_to_symbolic() {
    // [[3]] = 0 at (1, -1), yet {n+2 over 3} is still defined there; the values
    // are the coefficients of 1/((1+x)(1+x^3)).
    assert_eq!(
        first_line(&["seq", "tetrahedral", "--s", "1", "--t", "-1", "--count", "7", "--start", "1"]),
        "1,-1,1,-2,2,-2,3"
    );
}

#[test]
fn rogers_szego_polynomial() {
    assert_eq!(first_line(&["eval", "rs-poly", "2"]), "b^2 + (1+q)*b*x + x^2");
    assert_eq!(first_line(&["eval", "rs-poly", "2", "--q", "1"]), "b^2 + 2*b*x + x^2");
}

#[test]
fn theta_coefficients() {
    let o = stcalc(&["eval", "theta-deriv", "0", "--order", "4"]);
    assert!(stdout(&o).contains("coefficients: 1, 1, q, q^3, q^6"), "{}", stdout(&o));
    let o = stcalc(&["eval", "theta-deriv", "1", "--order", "2", "--s", "2", "--t", "-1"]);
    // D Theta_0 at [[n]] = n: 1 + 2q x + 3q^3 x^2.
    assert!(stdout(&o).contains("coefficients: 1, 2*q, 3*q^3"), "{}", stdout(&o));
}

#[test]
fn polytopic_ogf_has_cubic_denominator() {
    let o = stcalc(&["eval", "polytopic-ogf", "2", "--s", "1", "--t", "-1", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("coefficients: 1, 0, 0, 1, 0, 0, 1"), "{text}");
    assert!(text.contains("closed form: 1/(1 - x^3) (agrees to order 6)"), "{text}");
}

#[test]
fn binomial_series() {
    let o = stcalc(&["eval", "binom-series", "2", "--order", "3"]);
    assert!(stdout(&o).contains("coefficients: u, s, v, 0"), "{}", stdout(&o));
    let o = stcalc(&["eval", "binom-series", "-1", "--order", "3", "--s", "2", "--t", "-1", "--u", "1", "--v", "1"]);
    assert!(stdout(&o).contains("coefficients: 1, -1, 1, -1"), "{}", stdout(&o));
}

#[test]
fn eval_guardrails() {
    assert_eq!(stcalc(&["eval", "theta-deriv", "0", "--order", "65"]).status.code(), Some(2));
    assert_eq!(stcalc(&["eval", "polytopic-ogf", "13"]).status.code(), Some(2));
    assert_eq!(stcalc(&["eval", "rs-poly", "-1"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(stcalc(&["verify", "--order", "3"]).status.code(), Some(2));
    assert_eq!(stcalc(&["verify", "--filter", "no_such_case"]).status.code(), Some(2));
    let o = stcalc(&["verify", "--filter", "schlosser"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS  schlosser"), "{}", stdout(&o));
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report-schema.json")).unwrap();
    let schema: serde_json::Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&schema).unwrap()
}

#[test]
fn json_report_matches_schema() {
    let o = stcalc(&["verify", "--order", "5", "--filter", "bridge", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let schema = schema();
    if let Err(errors) = schema.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("schema violations: {msgs:?}");
    }
    assert_eq!(v["cases"].as_array().unwrap().len(), 2);
}

#[test]
fn schema_rejects_a_fail_without_witness() {
    let bad = serde_json::json!({
        "order": 8, "seed": 1, "millis": 0,
        "cases": [{
            "id": "x", "reference": "", "ring": "rational_function", "expect": "holds",
            "status": "fail", "symbolic": true, "points": 0, "millis": 0
        }]
    });
    assert!(!schema().is_valid(&bad));
}

#[test]
fn csv_and_json_outputs() {
    let o = stcalc(&["seq", "fib", "--s", "1", "--t", "1", "--count", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,value,printed\n0,0,\n1,1,\n2,1,\n");
    let o = stcalc(&["seq", "triangular", "--s", "1", "--t", "2", "--count", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["values"], serde_json::json!(["0", "1", "3"]));
    assert_eq!(v["printed"]["mismatches"][0]["n"], 2);
    let o = stcalc(&["eval", "theta-deriv", "0", "--order", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "k,coefficient\n0,1\n1,1\n2,q\n");
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("stcalc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.txt");
    let o = stcalc(&["seq", "fib", "--s", "2", "--t", "-1", "--count", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().next().unwrap(), "0,1,2");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn show_commands() {
    let o = stcalc(&["show", "cases"]);
    assert!(stdout(&o).lines().count() >= 45);
    let o = stcalc(&["show", "case", "cubes_warnaar"]);
    assert!(stdout(&o).starts_with("cubes_warnaar\n"));
    assert_eq!(stcalc(&["show", "case", "nope"]).status.code(), Some(2));
    let o = stcalc(&["show", "sequences"]);
    assert!(stdout(&o).contains("seq_jacobsthal_triangular"));
    let o = stcalc(&["show", "specializations", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().len() >= 8);
}
