use orbit_cli::{run, Outcome};
use serde_json::Value;

fn orbitdeg(args: &[&str]) -> Outcome {
    run(std::iter::once("orbitdeg").chain(args.iter().copied()))
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../../../docs/report-schema.json");
    let schema: Value = serde_json::from_str(text).expect("schema is JSON");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = orbitdeg(&full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("stdout is JSON")
}

/// Value of a `key  value` line in text output.
fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with("  ")))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .trim()
}

const KLEIN: &str = "x^3*y + y^3*z + z^3*x";

#[test]
fn every_report_matches_the_schema() {
    let validator = schema();
    let invocations: [&[&str]; 9] = [
        &["flexes", KLEIN],
        &["predegree", KLEIN],
        &["predegree", KLEIN, "--aut", "168"],
        &["degree", "x^4 + y^4 + z^4", "--aut", "96"],
        &["table", "--from", "3", "--to", "12"],
        &["verify-chow"],
        &["pgl2", "--multiplicities", "3,2,2,1"],
        &["bound", "6"],
        &["flexes", "x^5 + y^5 + z^5", "--seed", "11"],
    ];
    for args in invocations {
        let report = json(args);
        let errors: Vec<String> = validator
            .iter_errors(&report)
            .map(|e| e.to_string())
            .collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}\n{report:#}");
    }
}

#[test]
fn schema_rejects_numbers_for_big_integers() {
    let mut report = json(&["predegree", KLEIN]);
    report["predegree"] = Value::from(14280);
    assert!(!schema().is_valid(&report));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["predegree", "x^4 + x*y^3 + y*z^3", "--seed", "5"][..],
        &["flexes", KLEIN, "--json"],
        &["verify-chow"],
    ] {
        assert_eq!(orbitdeg(args), orbitdeg(args));
    }
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let args = ["predegree", "x^4 + x*y^3 + y*z^3", "--aut", "9"];
    let text = orbitdeg(&args).stdout;
    let report = json(&args);
    for (label, key) in [
        ("predegree", "predegree"),
        ("factorization", "factorization"),
        ("orbit degree", "orbit_degree"),
        ("aut order", "aut_order"),
    ] {
        assert_eq!(
            field(&text, label),
            report[key].as_str().unwrap(),
            "{label}"
        );
    }
    for (label, key) in [("blow-up sum", "blow_up_sum"), ("chow", "chow")] {
        assert_eq!(field(&text, label), report["routes"][key].as_str().unwrap());
    }
    assert_eq!(field(&text, "f5"), report["sums"]["f5"].as_str().unwrap());
    assert_eq!(field(&text, "profile"), "{1: 22, 2: 1}");
    assert_eq!(report["profile"]["2"], "1");
    assert_eq!(field(&text, "orbit degree"), "1554");
}

#[test]
fn klein_quartic_degree() {
    let out = orbitdeg(&["predegree", KLEIN, "--aut", "168"]);
    assert_eq!(out.code, 0);
    assert_eq!(field(&out.stdout, "predegree"), "14280");
    assert_eq!(field(&out.stdout, "orbit degree"), "85");
    assert_eq!(field(&out.stdout, "first center"), "14012");
    assert_eq!(field(&out.stdout, "second center"), "27140");
    assert_eq!(field(&out.stdout, "flex centers"), "10104");
}

#[test]
fn curve_from_file() {
    let path = std::env::temp_dir().join(format!("orbitdeg-curve-{}.txt", std::process::id()));
    std::fs::write(&path, "x^4 + y^4 + z^4\n").unwrap();
    let out = orbitdeg(&["flexes", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(field(&out.stdout, "profile"), "{2: 12}");
    let missing = orbitdeg(&["flexes", "--file", "/nonexistent/curve.txt"]);
    assert_eq!(missing.code, 2);
    assert!(missing.stderr.contains("cannot read"));
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32, &str); 12] = [
        (
            &["degree", "x^4 + y^4 + z^4", "--aut", "97"],
            1,
            "does not divide",
        ),
        (
            &["degree", "x^4 + y^4 + z^4", "--aut", "0"],
            2,
            "at least 1",
        ),
        (
            &["degree", "x^4 + y^4 + z^4", "--aut", "many"],
            2,
            "positive integer",
        ),
        (&["flexes", "x^3 + y^3 +"], 2, "position"),
        (&["flexes", "x^2*z - y^3"], 2, "singular at (0:0:1)"),
        (&["flexes", "x^3 + y^2*z"], 2, "singular"),
        (&["flexes", "x^2 + y^2 + z^2"], 2, "below 3"),
        (&["table", "--from", "6", "--to", "4"], 2, "range"),
        (&["bound", "11"], 2, "verified range"),
        (&["pgl2", "--multiplicities", "2,0,1"], 2, "zero"),
        (&["flexes"], 2, "required"),
        (&["no-such-command"], 2, "unrecognized"),
    ];
    for (args, code, text) in cases {
        let out = orbitdeg(args);
        assert_eq!(out.code, code, "{args:?}: {}", out.stderr);
        assert!(out.stderr.contains(text), "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    assert_eq!(orbitdeg(&["--help"]).code, 0);
}

#[test]
fn table_and_bound_text() {
    let out = orbitdeg(&["table", "--from", "3", "--to", "4"]).stdout;
    assert_eq!(
        out,
        " d   P(d)  factorization\n 3    216  2^3*3^3\n 4  14280  2^3*3*5*7*17\n"
    );
    let out = orbitdeg(&["bound", "9"]).stdout;
    assert_eq!(field(&out, "bound"), "102060");
    assert_eq!(field(&out, "factorization"), "2^2*3^6*5*7*379");
}

#[test]
fn pgl2_and_verify_chow() {
    let report = json(&["pgl2", "--multiplicities", "2,1,1"]);
    assert_eq!(report["formula"], "12");
    assert_eq!(report["oracle"], "12");
    let report = json(&["verify-chow"]);
    assert_eq!(report["all_passed"], true);
    assert_eq!(report["checks"].as_array().unwrap().len(), 8);
}
