mod common;

use std::process::Command;

use proptest::prelude::*;
use serde_json::Value;
use tcover::braid::BraidWord;
use tcover::cli::run;
use tcover::cover::{cover_report, Assertions};

use common::{random_knot_word, rng};

fn cli(args: &[&str]) -> tcover::cli::Outcome {
    run(std::iter::once("tcover").chain(args.iter().copied()))
}

fn knot() -> impl Strategy<Value = BraidWord> {
    (any::<u64>(), 2usize..=4, 0usize..=3).prop_map(|(seed, strands, extra)| {
        random_knot_word(&mut rng(seed), strands, strands - 1 + 2 * extra)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn report_json_matches_library(b in knot(), n in 2u64..=5) {
        let text = b.to_string();
        let out = cli(&["--json", "report", &text, "-n", &n.to_string()]);
        prop_assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let r = cover_report(&b, n, Assertions::default()).unwrap();
        prop_assert_eq!(&v["n"], &Value::from(n));
        prop_assert_eq!(&v["sl"], &Value::from(r.sl));
        prop_assert_eq!(&v["signature_sum"], &Value::from(r.signature_sum));
        prop_assert_eq!(v["d3_numerator"].to_string(), r.d3.numer().to_string());
        prop_assert_eq!(v["d3_denominator"].to_string(), r.d3.denom().to_string());
        let factors: Vec<String> = v["h1_invariant_factors"]
            .as_array()
            .unwrap()
            .iter()
            .map(Value::to_string)
            .collect();
        let expected: Vec<String> = r.h1.invariant_factors().iter().map(ToString::to_string).collect();
        prop_assert_eq!(factors, expected);
        prop_assert_eq!(&v["h1_free_rank"], &Value::from(r.h1.free_rank()));
        prop_assert_eq!(&v["alexander"]["text"], &Value::from(r.alexander.to_string()));
        prop_assert!(v["annotations"].is_array());
        // the braid field parses back to the same word
        let back = cli(&["sl", v["braid"].as_str().unwrap()]);
        prop_assert_eq!(back.stdout, format!("sl = {}\n", r.sl));
    }
}

#[test]
fn help_lists_every_subcommand() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, 0);
    for sub in [
        "sl",
        "seifert",
        "alexander",
        "signature",
        "signature-sum",
        "h1",
        "d3",
        "report",
        "compare",
        "murasugi",
        "twins",
    ] {
        assert!(out.stdout.lines().any(|l| l.trim_start().starts_with(&format!("{sub} "))), "{sub} missing");
    }
}

#[test]
fn version_carries_data_checksum() {
    let out = cli(&["--version"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains(&tcover::cli::data_checksum()));
    assert_eq!(tcover::cli::data_checksum().len(), 64);
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["no-such-command"]).code, 2);
    assert_eq!(cli(&["h1", "n=2: 1 1 1"]).code, 2);
    assert_eq!(cli(&["h1", "n=2: 1 x", "-n", "2"]).code, 2);
    let not_knot = cli(&["h1", "n=2: 1 1", "-n", "2"]);
    assert_eq!(not_knot.code, 1);
    assert!(not_knot.stderr.starts_with("error: NotAKnot:"), "{}", not_knot.stderr);
    let json_err = cli(&["--json", "sl", "n=2: 3"]);
    assert_eq!(json_err.code, 1);
    let v: Value = serde_json::from_str(&json_err.stdout).unwrap();
    assert_eq!(v["error"], "InvalidGenerator");
}

#[test]
fn compare_output() {
    let out = cli(&["--json", "compare", "n=2: 1 1 1", "n=3: 1 -2 1 -2", "-n", "2"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "DistinguishedByH1");
    let same = cli(&["--json", "compare", "n=2: 1 1 1", "n=3: 1 1 1 2", "-n", "3", "--smoothly-isotopic"]);
    let v: Value = serde_json::from_str(&same.stdout).unwrap();
    assert_eq!(v["verdict"], "PlaneFieldsHomotopic");
    assert_eq!(v["annotations"].as_array().unwrap().len(), 1);
}

#[test]
fn pd_input_and_reversal() {
    let hopf = "X[1,3,2,4] X[3,1,4,2]";
    let v: Value = serde_json::from_str(&cli(&["--json", "alexander", "--pd", hopf]).stdout).unwrap();
    assert_eq!(v["linking_number"], 1);
    let r: Value =
        serde_json::from_str(&cli(&["--json", "alexander", "--pd", hopf, "--reverse-component", "2"]).stdout).unwrap();
    assert_eq!(r["linking_number"], -1);
    assert_eq!(cli(&["alexander", "--pd", hopf, "--reverse-component", "3"]).code, 2);
}

#[test]
fn environment_selects_json() {
    let out = Command::new(env!("CARGO_BIN_EXE_tcover"))
        .args(["d3", "n=2: 1 1 1", "-n", "2"])
        .env("TCOVER_OUTPUT", "json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["d3_numerator"], 1);
    let text = Command::new(env!("CARGO_BIN_EXE_tcover"))
        .args(["d3", "n=2: 1 1 1", "-n", "2"])
        .env("TCOVER_OUTPUT", "text")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(text.stdout).unwrap(), "d3 = 1/2\n");
}
