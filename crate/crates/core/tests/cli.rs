use std::process::{Command, Output};

fn opuc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_opuc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn geronimus_all_methods_agree() {
    let o = opuc(&["moment", "--family", "geronimus", "--param", "alpha=0.5", "-n", "3", "--method", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let results = v["results"].as_array().unwrap();
    assert!(results.len() >= 6);
    let first = &results[0]["value"];
    assert!(results.iter().all(|r| &r["value"] == first));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn trivial_moment_from_table() {
    let o = opuc(&["moment", "--alphas", "0.3,0.2,0.1", "-n", "0", "-r", "2", "-s", "2", "--format", "csv", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,r,s,method,value,elapsed_ms"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..4], ["0", "2", "2", "lukasiewicz"]);
    assert_eq!(row[4].parse::<f64>().unwrap(), 1.0);
    assert_eq!(row[5], "");
}

#[test]
fn zero_coefficient_exits_two() {
    let o = opuc(&["moment", "--family", "al-salam-carlitz", "--param", "q=0.5", "-n", "2", "--method", "schroder"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ZeroVerblunsky(0)"));
}

#[test]
fn five_lukasiewicz_paths() {
    let o = opuc(&["paths", "--model", "lukasiewicz", "-n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let paths: Vec<&str> = text.lines().filter(|l| !l.starts_with("total") && !l.starts_with("PASS")).collect();
    assert_eq!(paths.len(), 5);
    assert!(text.lines().any(|l| l.starts_with("total\t")));
}

#[test]
fn empty_gentle_motzkin_path() {
    let o = opuc(&["paths", "--model", "gmotzkin", "-n", "0", "-r", "2", "-s", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("(empty)\t1\ntotal\t1\n"), "{text}");
}

#[test]
fn path_total_matches_moment() {
    let total = stdout(&opuc(&["paths", "--model", "schroder", "-n", "2", "-r", "1", "-s", "1"]));
    let total = total.lines().find_map(|l| l.strip_prefix("total\t")).unwrap().to_string();
    let moment = stdout(&opuc(&["moment", "-n", "2", "-r", "1", "-s", "1", "--no-timing"]));
    assert!(moment.trim_end().ends_with(&format!("= {total}")), "{moment} vs {total}");
}

#[test]
fn enumeration_cap_exits_three() {
    let o = opuc(&["paths", "-n", "12", "--cap", "100"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(opuc(&["moment", "--mode", "symbolic", "--alphas", "0.5"]).status.code(), Some(64));
    assert_eq!(opuc(&["moment", "--bogus"]).status.code(), Some(64));
    assert_eq!(opuc(&["moment", "--family", "nope", "--param", "x=1"]).status.code(), Some(64));
    assert_eq!(opuc(&["moment", "--mode", "numeric"]).status.code(), Some(64));
    assert_eq!(opuc(&["--help"]).status.code(), Some(0));
}

#[test]
fn symbolic_family_parameter() {
    let o = opuc(&["moment", "--family", "geronimus", "--param", "alpha=sym", "-n", "1", "--no-timing"]);
    assert_eq!(stdout(&o).trim(), "mu(1,0,0) [lukasiewicz] = alpha");
}

#[test]
fn verify_cross_model_symbolic() {
    let o = opuc(&["verify", "--suite", "cross-model", "--max", "3", "--mode", "symbolic", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config_echo"]["mode"], "symbolic");
}

#[test]
fn verify_determinants_reports_rho_products() {
    let o = opuc(&["verify", "--suite", "determinants", "--max", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let values: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(values.len(), 5);
    assert_eq!(values[0], "1");
    assert_eq!(values[1], "1 - a0*ab0");
}

#[test]
fn verify_reciprocity_records_orientation() {
    let o = opuc(&["verify", "--suite", "reciprocity", "--max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS reciprocity: orientation (mu(-n,r,s) * prod_{j<s} rho_j"));
}

#[test]
fn numeric_verify_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = |p: &str| {
        opuc(&["verify", "--suite", "all", "--mode", "numeric", "--max", "3", "--samples", "3", "--seed", "7", "--format", "json", "--out", p])
    };
    let p = path.to_str().unwrap();
    assert_eq!(args(p).status.code(), Some(0));
    let first = std::fs::read_to_string(&path).unwrap();
    assert_eq!(args(p).status.code(), Some(0));
    assert_eq!(first, std::fs::read_to_string(&path).unwrap());
}

#[test]
fn family_table_matches_paths() {
    let o = opuc(&["family", "--family", "rogers-szego", "--param", "q=1/3", "--max", "3", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS family: rogers-szego(q=1/3) closed form vs lukasiewicz"));
}
