use serde_json::Value;
use tauq_cli::main_with_args;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["tauq"];
    full.extend_from_slice(args);
    let code = main_with_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = run(args);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}")))
}

#[test]
fn catalog_lists_the_named_links() {
    let (code, v) = json(&["catalog"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["links"].as_array().unwrap().iter().map(|l| l["name"].as_str().unwrap()).collect();
    for want in ["whitehead", "borromean", "borromean_cable_2"] {
        assert!(names.contains(&want), "{want}");
    }
    let w = &v["links"][4];
    assert_eq!(w["milnor_degree"], "3");
    assert_eq!(w["components"], "2");
}

#[test]
fn bracket_of_zero_framed_unknot() {
    let (code, v) = json(&["bracket", "--link", "unknot_0", "-p", "5"]);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!(r["direct"]["reduced"], serde_json::json!(["0", "-5", "-4", "-1"]));
    assert_eq!(r["agree"], true);
    assert_eq!(r["order"], "2");
}

#[test]
fn bracket_rejects_composite_levels() {
    let (code, _, err) = run(&["bracket", "--link", "whitehead", "-p", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("p must be an odd prime"), "{err}");
}

#[test]
fn invariant_reports() {
    let (code, v) = json(&["invariant", "--link", "borromean", "-p", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["tau"]["reduced"], serde_json::json!(["1", "0"]));
    let (code, v) = json(&["invariant", "--link", "unknot_5", "-p", "5"]);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!((r["order"].as_str(), r["b_p"].as_str(), r["torsion"].as_str()), (Some("1"), Some("1"), Some("5")));
    let (_, v) = json(&["invariant", "--link", "unknot", "-p", "7", "--depth", "3"]);
    let r = &v["results"][0];
    assert_eq!(r["order"], "2");
    assert_eq!(r["projections"].as_array().unwrap().len(), 4);
}

#[test]
fn sums_tables() {
    let (code, v) = json(&["sums", "-p", "5,7"]);
    assert_eq!(code, 0);
    let p5 = &v["results"][0];
    let cell = p5["p_sum_orders"].as_array().unwrap().iter().find(|c| c["a"] == "0" && c["c"] == "0").unwrap();
    assert_eq!(cell["order"], "2");
    assert_eq!(p5["s"][2]["value"]["reduced"], serde_json::json!(["0", "0", "0", "0"]));
    let p7 = &v["results"][1];
    let t3 = p7["t"][3]["value"]["reduced"].as_array().unwrap();
    assert!(t3.iter().all(|x| x == "0"));
}

#[test]
fn budget_overruns_exit_nonzero_with_a_skip_record() {
    let (code, v) = json(&["invariant", "--link", "borromean", "-p", "7", "--max-width", "4"]);
    assert_eq!(code, 1);
    assert_eq!(v["results"][0]["status"], "skipped: budget");
}

#[test]
fn link_files_and_parse_errors() {
    let dir = std::env::temp_dir().join(format!("tauq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("w.json");
    std::fs::write(&good, tauq::link::catalog::get("whitehead").unwrap().to_file_text()).unwrap();
    let (code, v) = json(&["invariant", "--link", good.to_str().unwrap(), "-p", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["order"], "1");
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"pd\": [[1, 2, 3]]").unwrap();
    let (code, _, err) = run(&["invariant", "--link", bad.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = run(&["invariant", "--link", "no_such_link"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_canonical_and_independent_of_workers() {
    let (_, a, _) = run(&["bracket", "--link", "whitehead", "-p", "5", "--jobs", "1"]);
    let (_, b, _) = run(&["bracket", "--link", "whitehead", "-p", "5", "--jobs", "3"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(tauq_cli::render(&v), a);
    let keys: Vec<&String> = v["results"][0].as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn verify_respects_requested_primes() {
    let dir = std::env::temp_dir().join(format!("tauq-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let (code, _, err) = run(&["verify", "-p", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let criteria = v["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 16);
    assert_eq!(criteria[1]["status"], "pass");
    assert_eq!(criteria[15]["status"], "skipped");
    assert_eq!(err.lines().count(), 16);
    std::fs::remove_dir_all(&dir).unwrap();
}
