use std::fs;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conicline"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn analyze_pencil_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("pencil4-3.arr");
    fs::write(
        &path,
        "line: 1 0 -1\nline: 1 0 1\nconic: 1 1 -2 0 0 0\nconic: 1 2 -3 0 0 0\nconic: 1 3 -4 0 0 0\n",
    )
    .unwrap();
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("type: d=2 k=3 t4=4 t2=1"), "{text}");
    assert!(text.contains("c1sq: 9  c2: 6"));
    assert!(text.contains("slope: 3/2 (≈ 1.5000)"));
}

#[test]
fn analyze_extended_chilean_type_as_json() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("ec.ct");
    fs::write(&path, "d=9 k=12\nt 9 = 9\nt 5 = 12\nt 2 = 72\n").unwrap();
    let o = run(&["analyze", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["slope"]["approx"], "2.2941");
    assert_eq!(v["h_index"]["exact"], "-76/31");
    assert_eq!(v["bezout_defect"], 0);
    for c in v["checks"].as_array().unwrap() {
        assert_ne!(c["holds"], false, "{c}");
    }
}

#[test]
fn tangency_banner_and_strict() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("tangency-demo.arr");
    fs::write(&path, "line: 0 1 -1\nconic: 1 1 -1 0 0 0\n").unwrap();
    let o = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("HYPOTHESES VIOLATED"));
    assert!(text.contains("non-ordinary singularity at (0:1:1)"));
    assert_eq!(code(&run(&["analyze", path.to_str().unwrap(), "--strict"])), 4);
}

#[test]
fn error_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.arr");
    fs::write(&bad, "line: 1 0 -1\nline: 1 2\n").unwrap();
    let o = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let reducible = dir.path().join("reducible.arr");
    fs::write(&reducible, "conic: 1 -1 0 0 0 0\n").unwrap();
    assert_eq!(code(&run(&["analyze", reducible.to_str().unwrap()])), 3);

    let missing = dir.path().join("missing.arr");
    assert_eq!(code(&run(&["analyze", missing.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["catalog", "show", "nope"])), 3);
}

#[test]
fn catalog_commands() {
    let o = run(&["catalog", "list"]);
    assert_eq!(code(&o), 0);
    let names: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(names.len(), 10);
    assert_eq!(names[0], "chilean");

    let show = stdout(&run(&["catalog", "show", "pappus-cl"]));
    assert!(show.contains("d=9 k=4 t7=2 t5=4 t4=2 t2=36"));
    assert!(show.contains("bezout_defect: 2"));
    assert!(show.contains("known-inconsistent"));

    let dir = TempDir::new().unwrap();
    let out = dir.path().join("out.arr");
    let o = run(&["catalog", "export", "pencil4", out.to_str().unwrap(), "--k", "3", "--t", "1,2,3"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&run(&["analyze", out.to_str().unwrap()]));
    assert!(text.contains("type: d=2 k=3 t4=4 t2=1"), "{text}");

    assert_eq!(code(&run(&["catalog", "show", "pencil4", "--t", "1,-1"])), 3);
}

#[test]
fn search_commands() {
    let o = run(&["search", "--d", "2", "--k", "1", "--max-mult", "3", "--extremal"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("max 1/2, min 0\n"), "{text}");
    assert!(text.contains("max witness: d=2 k=1 t2=5"));
    assert!(text.contains("min witness: d=2 k=1 t3=1 t2=2"));

    let text = stdout(&run(&["search", "--d", "2", "--k", "0", "--max-mult", "2"]));
    assert!(text.starts_with("# 1 type(s)"));

    let text = stdout(&run(&["search", "--catalog", "--conjecture", "slope_5_2"]));
    assert!(text.contains("klein: d=21 k=21"));
    assert!(text.contains("5184 > 5160"));
    assert!(text.contains("ground-field caveat"));
    assert!(text.contains("not necessarily realizable"));

    let dir = TempDir::new().unwrap();
    let out = dir.path().join("types.ct");
    let o = run(&["search", "--d", "2", "--k", "1", "--max-mult", "3", "--output", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let written = fs::read_to_string(&out).unwrap();
    assert_eq!(written.matches("d=2 k=1").count(), 2);

    let json = stdout(&run(&["search", "--d", "2", "--k", "1", "--max-mult", "3", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["types"].as_array().unwrap().len(), 2);
}

#[test]
fn check_command() {
    let o = run(&["check", "--d", "21", "--k", "21", "--t", "2=42,3=252,4=189", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["c1sq"].as_i64(), v["c2"].as_i64()), (Some(2592), Some(1032)));
    assert_eq!(v["cover_e"], 1398);
    let five = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "slope-5/2").unwrap();
    assert_eq!(five["holds"], false);
    assert_eq!(code(&run(&["check", "--d", "2", "--k", "0", "--t", "5=1"])), 3);
    assert_eq!(code(&run(&["check", "--d", "2", "--k", "0", "--t", "x"])), 2);
}
