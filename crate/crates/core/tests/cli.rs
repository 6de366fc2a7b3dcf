use std::process::{Command, Output};

use framegap::additive::construct_spectrum;
use framegap::{Measure, PointSet1D, PointSet2D};

fn framegap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_framegap")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn integer_lattice_is_a_spectrum() {
    let out = framegap(&["jp-verify", "--measure", "lebesgue:0", "--set", "coset:0/1", "--tol", "1e-6"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("xi,value,tail,residual\n"));
    assert_eq!(csv.lines().count(), 1 + 257 + 64);
    assert!(!csv.contains('\r'));
}

#[test]
fn half_integer_union_is_not_a_spectrum() {
    let out = framegap(&["jp-verify", "--set", "coset:0,0.5/1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tolerance_below_tail_exits_two() {
    let out = framegap(&["jp-verify", "--set", "coset:0/0.5", "--radius", "100", "--tol", "1e-9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tolerance"));
}

#[test]
fn bad_descriptor_names_the_field() {
    let out = framegap(&["jp-verify", "--set", "coset:0/x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("set"));
    let out = framegap(&["frame-functional", "--set", "coset:0/1", "--grid", "0:1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("grid"));
}

#[test]
fn plus_space_report_passes() {
    let out = framegap(&["plus-space"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let links = v["links"].as_array().unwrap();
    assert_eq!(links.len(), 3);
    assert!(links.iter().all(|l| l["pass"] == true));
    assert!(v["conclusion"].is_string());
}

#[test]
fn plus_space_construction_is_refused() {
    let out = framegap(&["construct-spectrum", "--t1", "-0.5", "--t2", "-0.5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not spectral"));
}

#[test]
fn printed_descriptors_round_trip() {
    for (t1, t2) in [(0.0, 1.0), (0.5, 0.5), (0.0, 2.0), (0.75, 0.25)] {
        let (a, b) = (t1.to_string(), t2.to_string());
        let out = framegap(&["construct-spectrum", "--t1", &a, "--t2", &b]);
        assert_eq!(out.status.code(), Some(0));
        let v = json(&out);
        let text = v["descriptor"].as_str().unwrap();
        let parsed: PointSet2D = text.parse().unwrap();
        assert_eq!(parsed, construct_spectrum(t1, t2).unwrap().set);
        let from_json: PointSet2D = v["construction"]["set"].to_string().parse().unwrap();
        assert_eq!(from_json, parsed);
    }
    let out = framegap(&["plus-space"]);
    let text = json(&out)["links"][0]["details"]["set"].as_str().unwrap().to_string();
    let parsed: PointSet1D = text.parse().unwrap();
    assert_eq!(parsed.to_string(), text);
    for m in [Measure::lebesgue(-0.5), Measure::additive(0.25, -1.0)] {
        assert_eq!(m.to_string().parse::<Measure>().unwrap(), m);
    }
}

#[test]
fn theorem_subcommands() {
    let out = framegap(&["theorem", "thm1-1", "--g-min", "1", "--g-max", "1", "--a", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = framegap(&["theorem", "thm1-5", "--g-max", "0.5", "--sup-gap", "0.5", "--a", "2", "--b", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = framegap(&["theorem", "rmk1-2", "--g-min", "0.5", "--a", "1.5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = framegap(&["theorem", "gap-bound", "--a", "2", "--b", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["closed_form"].as_f64().unwrap() - 11.575).abs() < 1e-3);
    let out = framegap(&["theorem", "lemma3-1", "--set", "coset:0,0.5/1", "--b", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["max_count"], 3);
    let out = framegap(&["theorem", "cor1-4", "--a", "9.5,99.5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn sharp_family_csv_columns() {
    let out = framegap(&["prop21", "--a", "2.5,3"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("A,n,g_min,product,bound_lo,bound_hi"));
    assert!(lines.next().unwrap().starts_with("2.5,3,"));
    assert!(lines.next().unwrap().starts_with("3.0,4,"));
}

#[test]
fn other_commands_run() {
    assert_eq!(framegap(&["zeta", "--x", "0.5"]).status.code(), Some(0));
    assert_eq!(framegap(&["zeta", "--x", "-1"]).status.code(), Some(2));
    assert_eq!(framegap(&["gaps", "--set", "coset:0,0.25/1"]).status.code(), Some(0));
    assert_eq!(framegap(&["lemma41", "--t1", "0.3", "--t2", "0.1", "--step", "0.01"]).status.code(), Some(0));
    assert_eq!(framegap(&["jp-additive", "--t1", "0.5", "--t2", "0.5", "--count", "8"]).status.code(), Some(0));
    let out = framegap(&["jp-additive", "--t1", "-0.5", "--t2", "-0.5", "--set", "diagonal:1,0.5", "--count", "4"]);
    assert_eq!(out.status.code(), Some(1));
}
