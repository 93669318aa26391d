//! Runs the `matred` binary against the fixtures and golden outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn matred(args: &[&str], file: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matred"))
        .args(args)
        .arg("--matroid")
        .arg(fixture(file))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn example_goldens() {
    let cases: [(&[&str], &str); 7] = [
        (&["closure", "--set", "{1}"], "closure.out"),
        (&["flats"], "flats.out"),
        (&["hyperplanes"], "hyperplanes.out"),
        (&["bases"], "bases.out"),
        (&["reducts", "--set", "{1,3}"], "reducts.out"),
        (&["verify"], "verify.out"),
        (&["greedy", "--weights", "5,1,4"], "greedy.out"),
    ];
    for (args, gold) in cases {
        let first = matred(args, "example.mat");
        let second = matred(args, "example.mat");
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&first), golden(gold), "{args:?}");
        assert_eq!(first.stdout, second.stdout);
        assert!(first.stderr.is_empty());
    }
}

#[test]
fn reducts_every_method() {
    for method in ["all", "def", "minclosure", "restriction", "transversal"] {
        let o = matred(&["reducts", "--set", "{1,3}", "--method", method], "example.mat");
        assert_eq!(stdout(&o), "[{1};{3}]\n", "{method}");
    }
    let o = matred(&["reducts", "--set", "{}"], "example.mat");
    assert_eq!(stdout(&o), "[{}]\n");
    let o = matred(&["reducts", "--set", "{1, 2, 3}"], "uniform42.mat");
    assert_eq!(stdout(&o), "[{1,2};{1,3};{2,3}]\n");
}

#[test]
fn other_fixtures() {
    assert_eq!(stdout(&matred(&["bases"], "rank0.mat")), "[{}]\n");
    assert_eq!(stdout(&matred(&["hyperplanes"], "rank0.mat")), "[]\n");
    assert_eq!(
        stdout(&matred(&["greedy", "--weights", "1,1,1"], "free3.mat")),
        "{1,2,3} weight=3 optimal=yes\n"
    );
    assert_eq!(
        stdout(&matred(&["greedy", "--weights", "1,2,3,4"], "uniform42.mat")),
        "{3,4} weight=7 optimal=yes\n"
    );
    assert_eq!(
        stdout(&matred(&["greedy", "--weights", "-1,-2,-3,-4"], "uniform42.mat")),
        "{1,2} weight=-3 optimal=yes\n"
    );
    for file in ["free4.mat", "gf2_7.mat", "triangle_loop.mat", "partition.mat", "uniform42.mat"] {
        let o = matred(&["verify"], file);
        assert_eq!(o.status.code(), Some(0), "{file}");
        let text = stdout(&o);
        assert_eq!(text.lines().count(), 7);
        assert!(text.lines().all(|l| l.ends_with(" HOLDS")), "{file}: {text}");
    }
    assert_eq!(stdout(&matred(&["closure", "--set", "{}"], "triangle_loop.mat")), "{4}\n{4}\n");
}

#[test]
fn input_errors_exit_2() {
    let cases: [(&[&str], &str); 7] = [
        (&["bases"], "missing_empty.mat"),
        (&["bases"], "bad_element.mat"),
        (&["closure"], "example.mat"),
        (&["closure", "--set", "{9}"], "example.mat"),
        (&["greedy", "--weights", "1,2"], "example.mat"),
        (&["greedy", "--weights", "1,x,2"], "example.mat"),
        (&["reducts", "--set", "{1}", "--method", "fast"], "example.mat"),
    ];
    for (args, file) in cases {
        let o = matred(args, file);
        assert_eq!(o.status.code(), Some(2), "{args:?} {file}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
    let o = matred(&["bases"], "does_not_exist.mat");
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_matred")).arg("bases").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let stderr = String::from_utf8(matred(&["bases"], "missing_empty.mat").stderr).unwrap();
    assert!(stderr.contains("I1"), "{stderr}");
}

#[test]
fn verify_rejects_large_universe() {
    let dir = std::env::temp_dir().join(format!("matred-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("u9.mat");
    std::fs::write(&path, "kind=uniform n=9 k=3\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_matred"))
        .args(["verify", "--matroid"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
