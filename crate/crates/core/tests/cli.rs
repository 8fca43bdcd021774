use std::process::{Command, Output};

fn gridhfk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridhfk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_dir(tag: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("gridhfk-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn info_reports_classical_invariants() {
    let o = gridhfk(&["info", "unknot", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tb"], -1);
    assert_eq!(v["r"], 0);
    let o = gridhfk(&["info", "trefoil", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["crossings"], 3);
}

#[test]
fn hat_homology_json() {
    let o = gridhfk(&["homology", "unknot", "--flavor", "hat", "--json"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        r#"{"alexander_mod2":"1","hat_poincare":"1","poincare":"1","ranks":[[0,0,1]]}"#
    );
    let o = gridhfk(&["homology", "trefoil", "--flavor=hat"]);
    assert!(stdout(&o).contains("total rank: 3"));
}

#[test]
fn invariant_json() {
    let o = gridhfk(&["invariant", "unknot", "--sign=+"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"bigrading":[0,0],"flavor_note":"via fully blocked complex","sign":"+","verdict":"Survives"}"#
    );
    let o = gridhfk(&["invariant", "trefoil", "--theta"]);
    assert!(stdout(&o).contains(r#""invariant":"theta""#));
}

#[test]
fn exit_codes() {
    let dir = temp_dir("exit");
    let big = dir.join("big.grid");
    let x: Vec<String> = (0..12).map(|i| ((i + 5) % 12 + 1).to_string()).collect();
    let o: Vec<String> = (1..=12).map(|i| i.to_string()).collect();
    std::fs::write(&big, format!("n=12\nO={}\nX={}\n", o.join(","), x.join(","))).unwrap();
    assert_eq!(gridhfk(&["homology", big.to_str().unwrap()]).status.code(), Some(3));

    let bad = dir.join("bad.grid");
    std::fs::write(&bad, "n=2\nO=1,2\nX=1,2\n").unwrap();
    let out = gridhfk(&["info", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    assert_eq!(gridhfk(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gridhfk(&["verify", "--battery=bogus"]).status.code(), Some(1));
}

#[test]
fn connected_sum_of_unknots() {
    let o = gridhfk(&["connsum", "unknot", "unknot"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n=3\nO=2,1,3\nX=1,3,2\n");
}

#[test]
fn move_scripts() {
    let o = gridhfk(&["moves", "trefoil", "cycR 1\\ncycC 2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let dir = temp_dir("moves");
    let out = dir.join("moved.grid");
    std::fs::write(dir.join("script.txt"), "cycR 1\ncycC 2\n").unwrap();
    let o = gridhfk(&[
        "moves",
        "trefoil",
        dir.join("script.txt").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let alex = gridhfk(&["alex", out.to_str().unwrap()]);
    assert_eq!(stdout(&alex).trim(), "T^-1 + 1 + T");
    // an interleaving commutation is refused
    assert_eq!(gridhfk(&["moves", "trefoil", "cycR 1; commC 2"]).status.code(), Some(2));
}

#[test]
fn corpus_round_trip() {
    let dir = temp_dir("corpus");
    let o = gridhfk(&["corpus", "export", "all", "--dir", dir.to_str().unwrap()]);
    assert!(o.status.success());
    let o = gridhfk(&["alex", dir.join("figure-eight.grid").to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "T^-1 + 1 + T");
    let list = stdout(&gridhfk(&["corpus", "list"]));
    assert_eq!(list.lines().count(), 4);
}

#[test]
fn verify_nonsimple_battery() {
    let o = gridhfk(&["verify", "--battery=nonsimple"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}
