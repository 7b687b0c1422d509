use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use trivol_core::rational::{parse_rational, to_fraction_string};
use trivol_core::trilinear::closed_form_volume;
use trivol_core::Box3Bounds;

fn trivol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trivol"))
        .args(args)
        .env_remove("TRIVOL_SEED")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

/// Every string that looks like a rational must survive a parse/print cycle.
fn assert_round_trip(v: &Value) {
    match v {
        Value::String(s) if s.contains('/') => {
            assert_eq!(&to_fraction_string(&parse_rational(s).unwrap()), s)
        }
        Value::Array(xs) => xs.iter().for_each(assert_round_trip),
        Value::Object(m) => m.values().for_each(assert_round_trip),
        _ => {}
    }
}

#[test]
fn volume_unit_box() {
    let o = trivol(&["volume", "--bounds", "0,1,0,1,0,1"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["vol"], "5/24");
    assert_eq!(v["vol_formula"], "5/24");
    assert_eq!(v["vol_pipeline"], "5/24");
    assert_eq!(v["vol_oracle"], "5/24");
    assert_eq!(v["agree"], true);
    assert_eq!(v["vol_decimal"].as_f64(), Some(0.208333333333));
    assert_round_trip(&v);
}

#[test]
fn volume_single_method() {
    let o = trivol(&["volume", "--bounds", "1,2,1,2,1,2", "--method", "formula"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["vol"], "5/8");
    assert!(v.get("agree").is_none());

    for m in ["pipeline", "oracle"] {
        let v = json(&trivol(&["volume", "--bounds", "1,2,1,2,1,2", "--method", m]));
        assert_eq!(v["vol"], "5/8", "{m}");
    }
}

#[test]
fn volume_rejects_empty_box() {
    let o = trivol(&["volume", "--bounds", "1,1,0,1,0,1"]);
    assert_eq!(code(&o), 2);
    assert!(o.stdout.is_empty());
    assert_eq!(code(&trivol(&["volume", "--bounds", "0,1,0,1"])), 2);
    assert_eq!(code(&trivol(&["volume", "--bounds", "0,1,0,1,0,x"])), 2);
    assert_eq!(code(&trivol(&["volume"])), 2);
}

#[test]
fn volume_from_file_with_mixed_notation() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "box.json", r#"{"a": [0, "1/2", "0.25"], "b": [3, "7/2", 2]}"#);
    let o = trivol(&["volume", "--file", &f]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let b = Box3Bounds::new(
        ["0", "1/2", "1/4"].map(|s| parse_rational(s).unwrap()),
        ["3", "7/2", "2"].map(|s| parse_rational(s).unwrap()),
    )
    .unwrap();
    assert_eq!(v["vol"], to_fraction_string(&closed_form_volume(&b)).as_str());
    assert_eq!(v["agree"], true);
    assert_round_trip(&v);

    let bad = write(dir.path(), "bad.json", r#"{"a": [0, 0], "b": [1, 1, 1]}"#);
    assert_eq!(code(&trivol(&["volume", "--file", &bad])), 2);
    assert_eq!(code(&trivol(&["volume", "--file", "/nonexistent/box.json"])), 2);
}

#[test]
fn verify_examples() {
    let o = trivol(&["verify", "--trials", "50", "--seed", "7"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("all properties hold"));
    assert_eq!(code(&trivol(&["verify", "--trials", "1", "--seed", "0", "--max-bound", "1"])), 0);
    assert_eq!(code(&trivol(&["verify", "--max-bound", "0"])), 2);
}

#[test]
fn verify_seed_from_environment() {
    let run = |env: Option<&str>, args: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_trivol"));
        c.args(["verify", "--trials", "3"]).args(args).env_remove("TRIVOL_SEED");
        if let Some(s) = env {
            c.env("TRIVOL_SEED", s);
        }
        stdout(&c.output().unwrap())
    };
    assert!(run(Some("5"), &[]).contains("seed 5"));
    assert!(run(Some("5"), &["--seed", "9"]).contains("seed 9"));
    assert!(run(None, &[]).contains("seed 0"));
}

#[test]
fn verify_catches_injected_fault() {
    let o = trivol(&["verify", "--trials", "20", "--inject-fault", "z3-sign"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("FAIL  z-lemma maxima"), "{out}");
    assert!(out.contains("--bounds "));
    assert!(out.contains("z3 = "));
}

#[test]
fn sweep_single_point() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.json", r#"{"a1":[0],"b1":[1],"a2":[0],"b2":[1],"a3":[0],"b3":[1]}"#);
    let o = trivol(&["sweep", "--file", &f]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "a1,b1,a2,b2,a3,b3,volume,perm\n0/1,1/1,0/1,1/1,0/1,1/1,5/24,123\n");
}

#[test]
fn sweep_filter_counts_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let spec = r#"{"a1":[0,1],"b1":[1],"a2":[0],"b2":[1],"a3":[0],"b3":[1],"filter":"valid"}"#;
    let f = write(dir.path(), "s.json", spec);
    let out = stdout(&trivol(&["sweep", "--file", &f]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2], "# skipped: 1");

    // without the filter the same grid is an error
    let f = write(dir.path(), "s2.json", &spec.replace(r#","filter":"valid""#, ""));
    assert_eq!(code(&trivol(&["sweep", "--file", &f])), 2);
}

#[test]
fn sweep_grid_matches_volume_command() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.json", r#"{"a1":[0],"b1":[1,2,3],"a2":[0],"b2":[1,2,3],"a3":[0],"b3":[1,2,3]}"#);
    let out = stdout(&trivol(&["sweep", "--file", &f]));
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 27);
    // With a = 0 the hull is the unit one stretched by b_i along x_i and by
    // b1·b2·b3 along w, so the volume is (5/24)·(b1·b2·b3)².
    for row in &rows {
        let p: i64 = [1, 3, 5].iter().map(|&i| row[i].trim_end_matches("/1").parse::<i64>().unwrap()).product();
        assert_eq!(parse_rational(row[6]).unwrap(), parse_rational(&format!("{}/24", 5 * p * p)).unwrap());
    }
    for k in [0, 13, 26] {
        let r = &rows[k];
        let bounds = r[..6].iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
        let v = json(&trivol(&["volume", "--bounds", &bounds, "--method", "formula"]));
        assert_eq!(v["vol"], r[6]);
    }
}

#[test]
fn sweep_is_deterministic_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let spec = r#"{"a1":[0,"1/2",1],"b1":[2,3],"a2":[0,1],"b2":["5/2",4],"a3":[1,"0.5"],"b3":[2,5]}"#;
    let f = write(dir.path(), "s.json", spec);
    let a = trivol(&["sweep", "--file", &f]);
    let b = trivol(&["sweep", "--file", &f]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains('\r'));
    assert_eq!(stdout(&a).lines().count(), 1 + 3 * 2 * 2 * 2 * 2 * 2);

    let out = dir.path().join("out.csv");
    let o = trivol(&["sweep", "--file", &f, "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), a.stdout);

    let fl = stdout(&trivol(&["sweep", "--file", &f, "--float"]));
    assert!(fl.lines().nth(1).unwrap().starts_with("0,2,0,2.5,1,2,"));
}

#[test]
fn sweep_rejects_malformed_specs() {
    let dir = tempfile::tempdir().unwrap();
    for (i, spec) in [
        "not json",
        r#"{"a1":[0],"b1":[1],"a2":[0],"b2":[1],"a3":[0]}"#,
        r#"{"a1":[],"b1":[1],"a2":[0],"b2":[1],"a3":[0],"b3":[1]}"#,
        r#"{"a1":[0],"b1":[1],"a2":[0],"b2":[1],"a3":[0],"b3":[1],"filter":"all"}"#,
        r#"{"a1":["x"],"b1":[1],"a2":[0],"b2":[1],"a3":[0],"b3":[1]}"#,
    ]
    .iter()
    .enumerate()
    {
        let f = write(dir.path(), &format!("bad{i}.json"), spec);
        assert_eq!(code(&trivol(&["sweep", "--file", &f])), 2, "{spec}");
    }
}

fn mixed(dir: &Path, k: &str, l: &str) -> Output {
    let f = write(dir, "bodies.json", &format!(r#"{{"k": {k}, "l": {l}}}"#));
    trivol(&["mixed-volume", "--file", &f])
}

#[test]
fn mixed_volume_examples() {
    let dir = tempfile::tempdir().unwrap();
    let cube = "[[-1,-1,-1],[-1,-1,1],[-1,1,-1],[-1,1,1],[1,-1,-1],[1,-1,1],[1,1,-1],[1,1,1]]";
    let oct = "[[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]";
    let v = json(&mixed(dir.path(), cube, oct));
    let got: Vec<&str> = ["c0", "c1", "c2", "c3", "V_KKL", "V_KLL"].iter().map(|k| v[k].as_str().unwrap()).collect();
    assert_eq!(got, ["8/1", "24/1", "12/1", "4/3", "8/1", "4/1"]);

    let simplex = "[[0,0,0],[1,0,0],[0,1,0],[0,0,1]]";
    let v = json(&mixed(dir.path(), simplex, simplex));
    for (k, want) in [("c0", "1/6"), ("c1", "1/2"), ("c2", "1/2"), ("c3", "1/6"), ("V_KKL", "1/6"), ("V_KLL", "1/6")] {
        assert_eq!(v[k], want, "{k}");
    }

    // Q and R of the unit box, in (y, x1, x2)
    let q = "[[0,0,0],[0,1,0],[0,0,1],[0,1,1]]";
    let r = "[[0,0,0],[0,1,0],[0,0,1],[1,1,1]]";
    let v = json(&mixed(dir.path(), q, r));
    assert_eq!((v["c1"].as_str(), v["c2"].as_str()), (Some("1/1"), Some("1/1")));
}

#[test]
fn mixed_volume_rejects_degenerate_input() {
    let dir = tempfile::tempdir().unwrap();
    let tri = "[[0,0,0],[1,0,0],[0,1,0]]";
    assert_eq!(code(&mixed(dir.path(), tri, tri)), 2);
    assert_eq!(code(&mixed(dir.path(), "[]", "[[0,0,0]]")), 2);
}

#[test]
fn normalize_reports_permutation() {
    let v = json(&trivol(&["normalize", "--bounds", "3,4,0,1,1,5"]));
    assert_eq!(v["keys"], serde_json::json!(["15/1", "3/1", "4/1"]));
    assert_eq!(v["normalized"]["perm"], serde_json::json!([2, 3, 1]));
    assert_eq!(v["normalized_keys"], serde_json::json!(["3/1", "4/1", "15/1"]));
    assert_eq!(v["already_ordered"], false);
    assert_eq!(json(&trivol(&["normalize", "--bounds", "0,1,0,1,0,1"]))["already_ordered"], true);
}
