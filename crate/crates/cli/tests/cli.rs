use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rowmotion"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn periodicity_suite_exits_zero() {
    let o = run(&["verify", "--suite", "periodicity", "--r", "3", "--s", "3", "--seeds", "5"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn macmahon_count() {
    let o = run(&["count", "--what", "macmahon", "--r", "2", "--s", "2", "--height", "2"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "20\n");
}

#[test]
fn malformed_labeling_is_a_usage_error() {
    let args = ["apply", "--map", "rowmotion", "--power", "-1", "--kind", "rectangle", "--r", "2", "--s", "2"];
    let o = run(&args, "1 1 x\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn unknown_suite_and_missing_flags_exit_two() {
    assert_eq!(run(&["verify", "--suite", "nope"], "").status.code(), Some(2));
    assert_eq!(run(&["count", "--what", "macmahon"], "").status.code(), Some(2));
    assert_eq!(run(&["zeta", "--r", "3", "--s", "2", "--k", "5"], "").status.code(), Some(2));
}

#[test]
fn rowmotion_power_round_trip() {
    let x = "1 1 2\n2 1 3\n1 2 5\n2 2 7\n";
    let base = ["apply", "--map", "rowmotion", "--kind", "rectangle", "--r", "2", "--s", "2"];
    let fwd = run(&[&base[..], &["--power", "3"]].concat(), x);
    assert_eq!(fwd.status.code(), Some(0));
    let back = run(&[&base[..], &["--power", "-3"]].concat(), &stdout(&fwd));
    assert_eq!(stdout(&back), x);
    let full = run(&[&base[..], &["--power", "4"]].concat(), x);
    assert_eq!(stdout(&full), x);
}

#[test]
fn zeta_composite_round_trip() {
    let rect = "1 1 1\n2 1 2\n1 2 3\n2 2 4\n";
    let t = run(&["zeta", "--r", "2", "--s", "2", "--direction", "inv"], rect);
    assert_eq!(t.status.code(), Some(0));
    let back = run(&["zeta", "--r", "2", "--s", "2", "--direction", "fwd"], &stdout(&t));
    assert_eq!(stdout(&back), rect);
}

#[test]
fn bijection_infers_dimensions() {
    let t = "2 1 0\n1 2 1\n2 2 1\n3 2 2\n";
    let r = run(&["bijection", "--direction", "t2r"], t);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
    let back = run(&["bijection", "--direction", "r2t"], &stdout(&r));
    assert_eq!(stdout(&back), t);
}

#[test]
fn arborescence_listing() {
    let dir = std::env::temp_dir().join(format!("rowmotion-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let shape = dir.join("r22.txt");
    std::fs::write(&shape, "rectangle 2 2\n").unwrap();
    let o = run(&["arborescences", "--shape", shape.to_str().unwrap(), "--direction", "up"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["verify", "--suite", "bijection", "--r", "2", "--s", "2", "--seed-list", "4,9", "--json"];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "bijection");
    assert_eq!(v["seeds"], serde_json::json!([4, 9]));
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn text_reports_are_deterministic() {
    let args = ["verify", "--suite", "equivariance", "--r", "3", "--s", "2", "--seeds", "2"];
    assert_eq!(run(&args, "").stdout, run(&args, "").stdout);
}
