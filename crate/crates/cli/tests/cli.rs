use std::process::{Command, Output};

fn ornlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ornlat")).args(args).env_remove("ORNLAT_WORKERS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fixture_round_trips_through_input() {
    let o = ornlat(&["fixtures", "emit", "X"]);
    assert!(o.status.success());
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["n"], 5);
    assert_eq!(json["edges"], serde_json::json!([[1, 3], [2, 3], [3, 4], [3, 5]]));

    let dir = std::env::temp_dir().join(format!("ornlat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let from_file = ornlat(&["build", "orn", "--input", path.to_str().unwrap()]);
    let from_fixture = ornlat(&["build", "orn", "--fixture", "X"]);
    assert_eq!(stdout(&from_file), stdout(&from_fixture));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn broom_counts() {
    assert_eq!(stdout(&ornlat(&["enumerate", "broom", "--m", "2", "--n", "3"])).trim(), "42");
    let table = stdout(&ornlat(&["enumerate", "broom", "--table", "3"]));
    assert_eq!(table.lines().nth(3), Some("2,1,4,13,42"));
}

#[test]
fn comb_bijections_pass() {
    let o = ornlat(&["enumerate", "comb", "--n", "2", "--bijections"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("10\n"));
}

#[test]
fn check_verdicts_set_exit_code() {
    let o = ornlat(&["check", "lattice", "--poset", "rbi", "--fixture", "D"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness:"));
    assert_eq!(ornlat(&["check", "lattice", "--poset", "orn", "--fixture", "D"]).status.code(), Some(0));
    assert_eq!(ornlat(&["check", "unstarred", "--fixture", "double-star"]).status.code(), Some(1));
    assert_eq!(ornlat(&["check", "pic", "--fixture", "I4"]).status.code(), Some(0));
}

#[test]
fn verify_reports_are_reproducible() {
    let dir = std::env::temp_dir().join(format!("ornlat-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    assert!(ornlat(&["verify", "intreeval", "--n", "4", "--json", a.to_str().unwrap()]).status.success());
    let single = Command::new(env!("CARGO_BIN_EXE_ornlat"))
        .args(["verify", "intreeval", "--n", "4", "--json", b.to_str().unwrap()])
        .env("ORNLAT_WORKERS", "1")
        .output()
        .unwrap();
    assert!(single.status.success());
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(ornlat(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(ornlat(&["build", "orn"]).status.code(), Some(2));
    assert_eq!(ornlat(&["build", "orn", "--input", "/nonexistent.json"]).status.code(), Some(3));
    assert_eq!(ornlat(&["build", "orn", "--fixture", "nope"]).status.code(), Some(3));
    let o = ornlat(&["verify", "semidistributive", "--n", "9"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains('7'));
}

#[test]
fn segment_associahedron_skeleton() {
    let o = ornlat(&["polytope", "skeleton", "--paths-of", "I3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "vertices: 5\nedges: 5\n");
}
