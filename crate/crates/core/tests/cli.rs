use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn tiltlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn vertical_wall_prints_bare_rational() {
    let o = tiltlab(&["vertical-wall", "--surface", &fixture("s1.json"), "--class", "2:1:0", "--B", "[0]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/2\n");
}

#[test]
fn check_identities_passes() {
    let s1 = fixture("s1.json");
    let v = fixture("v_2_0_-1.json");
    let o = tiltlab(&[
        "check-identities",
        "--surface",
        &s1,
        "--class",
        &v,
        "--a-max",
        "4",
        "--samples",
        "50",
        "--seed",
        "7",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let report = json(&o);
    assert_eq!(report["beta0"], "0");
    assert_eq!(report["proportionality_failures"].as_array().unwrap().len(), 0);
    assert_eq!(report["identity_a2u"].as_array().unwrap().len(), 4);
    assert_eq!(report["u"]["ch1"][0], "-2");
}

#[test]
fn check_identities_needs_seed() {
    let o = tiltlab(&["check-identities", "--surface", "s1", "--class", "2:0:-1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn plot_sidecar_matches_walls() {
    let dir = tempfile::tempdir().unwrap();
    let svg_path = dir.path().join("walls.svg");
    let common = ["--surface", "s1", "--class", "1:0:-1", "--bounds", "2,4", "--region=-3,1,3"];
    let mut args = vec!["plot-walls"];
    args.extend(common);
    args.extend(["--out", svg_path.to_str().unwrap()]);
    let o = tiltlab(&args);
    assert_eq!(o.status.code(), Some(0));

    let svg = std::fs::read_to_string(&svg_path).unwrap();
    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(svg_path.with_extension("json")).unwrap()).unwrap();
    assert_eq!(svg.matches("class=\"wall vertical\"").count(), 1);
    let arcs = svg.matches("class=\"wall semicircle\"").count();
    assert!(arcs >= 1);

    let mut args = vec!["walls"];
    args.extend(common);
    let walls = json(&tiltlab(&args));
    assert_eq!(walls["walls"], sidecar["walls"]);
    assert_eq!(walls["crossings"].as_array().unwrap().len(), 0);
    let semis = sidecar["walls"].as_array().unwrap().iter().filter(|w| w["kind"] == "semicircle").count();
    assert_eq!(semis, arcs);
}

#[test]
fn walls_csv() {
    let o = tiltlab(&["walls", "--surface", "s1", "--class", "1:0:-1", "--region=-3,1,3", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("kind,beta,center,radius_sq,ch0,ch1,ch2\n"));
    assert!(text.contains("semicircle,,-3/2,1/4,"));
}

#[test]
fn g_class_report() {
    let o = tiltlab(&["g-class", "--surface", "s1", "--class", "2:0:-1", "--a", "4", "--m", "2"]);
    let r = json(&o);
    assert_eq!(r["G"], serde_json::json!(["16", "32"]));
    assert_eq!(r["flenner_min"], 2);
    assert_eq!(r["v_restricted"], serde_json::json!(["2", "0"]));
}

#[test]
fn classify_points() {
    let a = fixture("point_a.json");
    let b = fixture("point_b.json");
    let poly = fixture("polystable_a.json");
    let o = tiltlab(&["classify", "--surface", "s1", "--class", "2:0:-1", "--point", &a, "--compare", &poly]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["uhlenbeck_equivalent"], true);
    let o = tiltlab(&["classify", "--surface", "s1", "--class", "2:0:-1", "--point", &a, "--compare", &b]);
    let r = json(&o);
    assert_eq!((r["uhlenbeck_equivalent"].clone(), r["s_equivalent"].clone()), (false.into(), false.into()));
    let o = tiltlab(&["classify", "--surface", "s1", "--class", "2:0:-2", "--point", &a]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn other_commands() {
    let s2 = fixture("s2.json");
    let run = |args: &[&str]| stdout(&tiltlab(args));
    assert_eq!(run(&["euler", "--surface", &s2, "--class", "1:0,0:0"]), "1\n");
    assert_eq!(run(&["flenner", "--surface", &s2, "--rank", "2"]), "4\n");
    assert_eq!(run(&["twist", "--surface", "s1", "--class", "1:0:0", "--B", "1"]), "(1, (-1), 1/2)\n");
    let z = json(&tiltlab(&[
        "charge",
        "--surface",
        "s1",
        "--class",
        "1:0:0",
        "--alpha",
        "1",
        "--beta",
        "0",
        "--format",
        "json",
    ]));
    assert_eq!((z["re"].clone(), z["im"].clone()), ("1/2".into(), "0".into()));
    let r = json(&tiltlab(&["restrict", "--surface", "s1", "--class", "1:0:0", "--a", "4"]));
    assert_eq!(r["chi_curve"], r["chi_surface"]);
    assert_eq!(r["chi_curve"], "-2");
    let sl = json(&tiltlab(&["slope", "--surface", "s1", "--class", "1:0:-1", "--alpha", "1", "--beta", "-1"]));
    assert_eq!(sl["nu"], "-1");
}

#[test]
fn validate_surface_reports() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"rank":2,"gram":[[1,2],[0,1]],"H":[1,0],"K":[0,0],"chiO":1}"#).unwrap();
    let o = tiltlab(&["validate-surface", "--surface", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("gram not symmetric"));
    let o = tiltlab(&["validate-surface", "--surface", "/no/such/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}
