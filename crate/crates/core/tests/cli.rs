use cayint::cli::run;

fn cayint(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cayint").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn reproduce_single_target() {
    let (code, out, _) = cayint(&["reproduce", "lemma-a4-1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("(x-5)(x+1)^5(x^2-5)^3\n"));
    assert!(out.contains("matches golden"));
}

#[test]
fn reproduce_json_and_unknown_target() {
    let (code, out, _) = cayint(&["reproduce", "lemma-d8", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["matches"], true);
    assert_eq!(v[0]["diff"].as_array().unwrap().len(), 0);
    let (code, _, err) = cayint(&["reproduce", "lemma-zz"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown target"));
}

#[test]
fn check_reports_witness() {
    let (code, out, _) = cayint(&["check", "D8"]);
    assert_eq!(code, 1);
    assert!(out.contains("not Cayley integral"));
    assert!(out.contains("witness {"));
    assert!(out.contains("(x^2-2)"));
    let (code, out, _) = cayint(&["check", "Q8", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cayley_integral"], true);
    assert_eq!(v["sets_checked"], 16);
    assert!(v.get("elapsed").is_none());
}

#[test]
fn group_from_presentation() {
    let (code, out, _) = cayint(&["group", "<x,y | x^3=y^4=1, x^y=x^-1>"]);
    assert_eq!(code, 0);
    assert!(out.contains("order 12\n"));
    let (code, out, _) = cayint(&["group", "SL23", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 24);
    assert_eq!(v["center_order"], 2);
}

#[test]
fn spectrum_by_words_indices_and_characters() {
    let (code, out, _) = cayint(&["spectrum", "A4", "--set", "x,x^-1,y,xy,y^-1x^-1"]);
    assert_eq!(code, 1);
    assert_eq!(out.lines().next(), Some("(x-5)(x+1)^5(x^2-5)^3"));
    let (code, out, _) = cayint(&["spectrum", "Q8", "--set", "i,i^-1", "--method", "characters", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "integral");
    let (code, _, err) = cayint(&["spectrum", "S3", "--indices", "1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("inverse"));
    let (code, _, err) = cayint(&["spectrum", "A4", "--set", "x", "--method", "characters"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn quotients_with_filter() {
    let (code, out, _) = cayint(&["quotients", "G64", "--filter", "nonabelian,exponent=12"]);
    assert_eq!(code, 0);
    assert!(out.contains("SL23xC2"));
    assert!(out.ends_with("3 quotients\n"));
    let (code, _, _) = cayint(&["quotients", "S3", "--filter", "prime"]);
    assert_eq!(code, 2);
}

#[test]
fn classify_list_and_output_file() {
    let (code, out, _) = cayint(&["classify", "--catalog", "S3,C3_rtimes_C4,Q8,Q8xC2"]);
    assert_eq!(code, 0, "{out}");
    let path = std::env::temp_dir().join(format!("cayint-classify-{}.json", std::process::id()));
    let (code, _, _) = cayint(&["classify", "--catalog", "A4,SL23,C4_rtimes_C4", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["non_integral"].as_array().unwrap().len(), 3);
    let (code, _, _) = cayint(&["classify", "--catalog", "C1"]);
    assert_eq!(code, 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cayint(&["frobnicate"]).0, 2);
    assert_eq!(cayint(&["check"]).0, 2);
    assert_eq!(cayint(&["check", "NoSuchGroup"]).0, 2);
    assert_eq!(cayint(&["check", "D8", "--strategy", "guess"]).0, 2);
    let (code, out, _) = cayint(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("reproduce"));
}

#[test]
fn catalog_manifest_matches_fixture() {
    let (code, out, _) = cayint(&["catalog", "--json"]);
    assert_eq!(code, 0);
    let stored = include_str!("../fixtures/catalog.json");
    assert_eq!(out, stored);
}

#[test]
fn reproduce_all_matches() {
    let (code, out, err) = cayint(&["reproduce", "all"]);
    assert_eq!(code, 0, "{out}{err}");
    assert_eq!(out.matches("matches golden").count(), cayint::repro::TARGETS.len());
}
