//! Golden-output tests: every example input ships with a pinned report.
//! Timing is zeroed before comparison. Set UPDATE_GOLDENS=1 to regenerate.
//! Each golden is also validated against docs/report.schema.json.

mod common;

use common::*;
use hirschlab::commands::{self, Options, WeightsRequest};
use hirschlab::input::parse_document;

fn zero_timing(value: &mut serde_json::Value) {
    if let Some(t) = value.get_mut("timing_ms") {
        *t = serde_json::json!(0);
    }
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(
        std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("../../docs/report.schema.json"),
    )
    .expect("schema file exists");
    let schema: serde_json::Value = serde_json::from_str(&text).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn check_golden(name: &str, doc: impl serde::Serialize) {
    let mut value = serde_json::to_value(&doc).unwrap();
    zero_timing(&mut value);

    let validator = schema();
    let errors: Vec<String> =
        validator.iter_errors(&value).map(|e| format!("{e}")).collect();
    assert!(errors.is_empty(), "{name}: schema violations: {errors:?}");

    let path = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let rendered = serde_json::to_string_pretty(&value).unwrap() + "\n";
    if std::env::var("UPDATE_GOLDENS").is_ok() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &rendered).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("{name}: golden missing; run with UPDATE_GOLDENS=1"));
    let expected_value: serde_json::Value = serde_json::from_str(&expected).unwrap();
    assert_eq!(value, expected_value, "{name}: report drifted from the golden output");
}

fn opts() -> Options {
    Options::default()
}

#[test]
fn golden_dualgraph_gorenstein_ci() {
    let doc = parse_document(&read_data("gorenstein_ci_reg3.ideal")).unwrap();
    let out = commands::dualgraph_report(&doc, WeightsRequest::Multiplicity, &opts()).unwrap();
    check_golden("gorenstein_ci_dualgraph.json", out);
}

#[test]
fn golden_compare_disconnected_pair() {
    let doc = parse_document(&read_data("disconnected_pair.ideal")).unwrap();
    let out = commands::compare_report(&doc, &opts()).unwrap();
    check_golden("disconnected_pair_compare.json", out);
}

#[test]
fn golden_gb_determinantal_m3() {
    let doc = parse_document(&read_data("determinantal_m3.ideal")).unwrap();
    let out = commands::gb_report(&doc, &opts()).unwrap();
    check_golden("determinantal_m3_gb.json", out);
}

#[test]
fn golden_initial_determinantal_m4() {
    let doc = parse_document(&read_data("determinantal_m4.ideal")).unwrap();
    let out = commands::initial_report(&doc, &opts()).unwrap();
    check_golden("determinantal_m4_initial.json", out);
}

#[test]
fn golden_dualgraph_hypercube_n3() {
    let doc = parse_document(&read_data("hypercube_n3.ideal")).unwrap();
    let out = commands::dualgraph_report(&doc, WeightsRequest::Unit, &opts()).unwrap();
    check_golden("hypercube_n3_dualgraph.json", out);
}

#[test]
fn golden_dualgraph_path_m4() {
    let doc = parse_document(&read_data("path_m4.ideal")).unwrap();
    let out = commands::dualgraph_report(&doc, WeightsRequest::Unit, &opts()).unwrap();
    check_golden("path_m4_dualgraph.json", out);
}

#[test]
fn golden_hirsch_path_m4() {
    let doc = parse_document(&read_data("path_m4.ideal")).unwrap();
    let out = commands::hirsch_report(&doc, &opts()).unwrap();
    check_golden("path_m4_hirsch.json", out);
}

#[test]
fn golden_connectivity_star() {
    let out = commands::connectivity_report_from_json(&read_data("star.graph.json")).unwrap();
    check_golden("star_connectivity.json", out);
}

#[test]
fn golden_bounds_star() {
    let out = commands::bounds_report(&[2, 2, 2, 2, 2, 2, 5], 5, 1, Some(7), None).unwrap();
    check_golden("star_bounds.json", out);
}

#[test]
fn golden_certify_diagonal_minors() {
    let doc = parse_document(&read_data("diagonal_minors_2x4.ideal")).unwrap();
    let out = commands::certify_report(&doc, &opts()).unwrap();
    check_golden("diagonal_minors_certify.json", out);
}

#[test]
fn golden_hilbert_gorenstein_ci() {
    let doc = parse_document(&read_data("gorenstein_ci_reg3.ideal")).unwrap();
    let out = commands::hilbert_report(&doc, &opts()).unwrap();
    check_golden("gorenstein_ci_hilbert.json", out);
}

#[test]
fn golden_minprimes_hypercube_n2() {
    let doc = parse_document(&read_data("hypercube_n2.ideal")).unwrap();
    let out = commands::minprimes_report(&doc, &opts()).unwrap();
    check_golden("hypercube_n2_minprimes.json", out);
}

#[test]
fn golden_hilbert_quadric() {
    let doc = parse_document(&read_data("quadric_surface.ideal")).unwrap();
    let out = commands::hilbert_report(&doc, &opts()).unwrap();
    check_golden("quadric_hilbert.json", out);
}
