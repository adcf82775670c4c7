use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rectagraph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn stable(v: &Value) -> Value {
    let mut v = v.clone();
    v.as_object_mut().unwrap().remove("timings");
    v
}

fn header(path: &Path) -> (usize, usize) {
    let text = std::fs::read_to_string(path).unwrap();
    let mut it = text
        .lines()
        .next()
        .unwrap()
        .split_whitespace()
        .map(|x| x.parse().unwrap());
    (it.next().unwrap(), it.next().unwrap())
}

#[test]
fn build_writes_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let out = run(&["build", "coset", "golay24", "--out", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(header(&g), (4096, 49152));

    let t = dir.path().join("t.txt");
    let out = run(&["build", "triangular", "5", "--out", t.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(header(&t), (10, 30));

    let out = run(&["build", "halved", "coset", "golay24"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stderr).trim(),
        "N=2048 M=282624 276-regular"
    );
    let first = String::from_utf8_lossy(&out.stdout)
        .lines()
        .next()
        .unwrap()
        .to_string();
    assert_eq!(first, "2048 282624");
}

#[test]
fn golay24_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("golay24.txt");
    assert!(
        run(&["build", "coset", "golay24", "--out", g.to_str().unwrap()])
            .status
            .success()
    );
    let gs = g.to_str().unwrap();

    let out = run(&["check", "rectagraph", "--graph", gs]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["status"], "PASS");
    let d = &r["results"][0]["details"];
    assert_eq!(d["a2"], serde_json::json!([0]));
    assert_eq!(d["c3"], serde_json::json!([3]));
    assert_eq!(d["vertices_checked"], 4096);
    assert_eq!(r["inputs"][0]["path"], gs);
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);

    let code_file = dir.path().join("code.txt");
    let out = run(&[
        "check",
        "reconstruct-code",
        "--graph",
        gs,
        "--expect",
        "golay24",
        "--code-out",
        code_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"][0]["details"]["matches_expected"], true);
    assert_eq!(r["results"][0]["details"]["fibre_size"], 4096);
    let written = std::fs::read_to_string(&code_file).unwrap();
    let golay = rectagraph::formats::format_code(&rectagraph::core::gf2::golay24());
    assert_eq!(written, golay);

    let out = run(&["check", "code-info", "--code", code_file.to_str().unwrap()]);
    let r = report(&out);
    assert_eq!(r["results"][0]["details"]["parameters"], "[24,12,8]");
}

#[test]
fn iso_and_diagram() {
    let out = run(&[
        "check",
        "iso",
        "--graph",
        "sp6-minus-hyperplane",
        "--graph",
        "component distance-k 4 cube 6",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["diagram", "sp6-minus-quadric"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    let sizes: Vec<usize> = dot
        .lines()
        .filter_map(|l| l.split("label=\"k").nth(1))
        .map(|l| l.split(['=', '"']).nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(sizes.len(), 3);
    assert_eq!(sizes[0], 1);
    assert_eq!(sizes.iter().sum::<usize>(), 36);

    let out = run(&["diagram", "cube", "4"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    for (i, k) in [1, 4, 6, 4, 1].iter().enumerate() {
        assert!(dot.contains(&format!("k{i}={k}\"")));
    }
    let out = run(&["diagram", "sp6-minus-hyperplane"]);
    assert_eq!(
        String::from_utf8(out.stdout)
            .unwrap()
            .matches("label=\"k")
            .count(),
        4
    );
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["check", "rectagraph", "--graph", "triangular 5"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["check", "rectagraph", "--graph", "hexagon 5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["check", "bogus", "--graph", "cube 3"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["reproduce", "nothing"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "4 2\n0 1\n1 9\n").unwrap();
    let out = run(&["check", "rectagraph", "--graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.txt:3:"));

    // disconnected graphs have no diagram
    std::fs::write(&bad, "4 1\n0 1\n").unwrap();
    assert_eq!(
        run(&["diagram", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

#[test]
fn group_arguments() {
    let out = run(&[
        "check",
        "locally-rank3",
        "--graph",
        "halved coset golay24",
        "--affine",
        "M24",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(
        r["results"][0]["details"]["representatives"][0]["orbits"],
        serde_json::json!([276])
    );

    let dir = tempfile::tempdir().unwrap();
    let a4 = dir.path().join("a4.txt");
    std::fs::write(&a4, "4 2\n2 3 1 4\n1 3 4 2\n").unwrap();
    let s4 = dir.path().join("s4.txt");
    std::fs::write(&s4, "4 2\n2 1 3 4\n2 3 4 1\n").unwrap();
    let check = |file: &Path| {
        run(&[
            "check",
            "locally-rank3",
            "--graph",
            "complete 4",
            "--group",
            file.to_str().unwrap(),
        ])
    };
    assert_eq!(check(&a4).status.code(), Some(0));
    assert_eq!(check(&s4).status.code(), Some(1));

    let out = run(&[
        "check",
        "two-arc-orbits",
        "--graph",
        "halved cube 7",
        "--affine",
        "A7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "check",
        "four-homogeneous",
        "--graph",
        "coset golay23",
        "--affine",
        "M23",
        "--base",
        "17",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // an affine group needs a code
    assert_eq!(
        run(&[
            "check",
            "locally-rank3",
            "--graph",
            "triangular 6",
            "--affine",
            "S6"
        ])
        .status
        .code(),
        Some(2)
    );
    let out = run(&["check", "locally-triangular", "--graph", "halved cube 6"]);
    assert_eq!(report(&out)["results"][0]["details"]["local_n"], 6);
}

#[test]
fn reports_are_reproducible() {
    let a = report(&run(&["reproduce", "sp6", "--threads", "1"]));
    let b = report(&run(&["reproduce", "sp6", "--threads", "4"]));
    let strip_command = |v: &Value| {
        let mut v = stable(v);
        v.as_object_mut().unwrap().remove("command");
        v
    };
    assert_eq!(strip_command(&a), strip_command(&b));
    let args = ["check", "code-info", "--code", "golay23-even"];
    let x = report(&run(&args));
    let y = report(&run(&args));
    assert_eq!(stable(&x), stable(&y));
    assert_eq!(x["results"][0]["details"]["parameters"], "[23,11,8]");

    let out = run(&["reproduce", "rank-3-groups", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().last().unwrap().starts_with("status: PASS"));
}
