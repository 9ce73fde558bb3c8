use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn rp4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rp4")).args(args).output().expect("binary runs")
}

fn rp4_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rp4"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn text(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen_to(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{}.fl", name.replace(':', "-")));
    let out = rp4(&["gen", name, "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    path.to_str().unwrap().to_string()
}

#[test]
fn piped_manifold_check() {
    let c1 = rp4(&["gen", "rp4-c1"]);
    assert_eq!(c1.status.code(), Some(0));
    let check = rp4_stdin(&["manifold", "-", "--jobs", "2"], &c1.stdout);
    assert_eq!(check.status.code(), Some(0));
    assert!(text(&check).contains("certified=16/16"));
}

#[test]
fn isomorphic_constructions() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen_to(dir.path(), "rp4-c1");
    let b = gen_to(dir.path(), "rp4-c3");
    let out = rp4(&["iso", &a, &b]);
    assert_eq!(out.status.code(), Some(0));
    let t = text(&out);
    assert!(t.starts_with("isomorphic=true\n"));
    assert_eq!(t.lines().count(), 17);
    let c = gen_to(dir.path(), "kuehnel:2");
    let d = gen_to(dir.path(), "rp2-6");
    assert_eq!(rp4(&["iso", &c, &d]).status.code(), Some(1));
}

#[test]
fn reports() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen_to(dir.path(), "rp4-k6");
    assert_eq!(text(&rp4(&["fvector", &p])), "dim=4\nf=16,120,330,375,150\nchi=1\n");
    assert_eq!(text(&rp4(&["homology", &p])), "H_0 = Z\nH_1 = Z/2\nH_2 = 0\nH_3 = Z/2\nH_4 = 0\n");
    let aut = text(&rp4(&["aut", &p]));
    assert!(aut.starts_with("order=720\n"));
    assert!(aut.contains("vertex_orbits=6,10\n"));
    assert!(aut.contains("facet_orbits=30,120\n"));
}

#[test]
fn antipodal_and_quotient() {
    let dir = tempfile::tempdir().unwrap();
    let s = gen_to(dir.path(), "s4-32");
    let x = gen_to(dir.path(), "x32");
    let mut inv: String = (1..=6).map(|i| format!("(e{i} f{i})")).collect();
    for t in ["123", "124", "125", "126", "134", "135", "136", "145", "146", "156"] {
        let rest: String = "123456".chars().filter(|c| !t.contains(*c)).collect();
        inv.push_str(&format!("({t} {rest})"));
    }
    let good = rp4(&["antipodal", &s, "--inv", &inv]);
    assert_eq!(good.status.code(), Some(0));
    assert_eq!(text(&good), "antipodal=true\nmin_distance=3\n");
    let bad = rp4(&["antipodal", &x, "--inv", &inv]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(text(&bad).contains("failure=not-invariant"));
    let q = dir.path().join("q.fl");
    assert_eq!(rp4(&["quotient", &s, "--inv", &inv, "-o", q.to_str().unwrap()]).status.code(), Some(0));
    let c1 = gen_to(dir.path(), "rp4-c1");
    assert_eq!(rp4(&["iso", q.to_str().unwrap(), &c1]).status.code(), Some(0));
    assert_eq!(rp4(&["antipodal", &s, "--inv", "(1 2 3)"]).status.code(), Some(2));
}

#[test]
fn reduce_traces_are_reproducible_and_replayable() {
    let dir = tempfile::tempdir().unwrap();
    let s4 = gen_to(dir.path(), "simplex:4");
    let args = ["reduce", &s4, "--seed", "5", "--budget", "100"];
    let a = rp4(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(a.stdout.is_empty());

    let k = gen_to(dir.path(), "kuehnel:2");
    let args = ["reduce", k.as_str(), "--seed", "9", "--budget", "60", "--restarts", "3"];
    let one = rp4(&args);
    let two = rp4(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(one.stdout, two.stdout);
    let trace = dir.path().join("trace.txt");
    std::fs::write(&trace, &one.stdout).unwrap();
    let replay = rp4(&["reduce", &k, "--replay", trace.to_str().unwrap()]);
    assert_eq!(replay.status.code(), Some(0));
}

#[test]
fn subdivided_sphere_reduces_to_a_simplex() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("sd.fl");
    let out = rp4(&["gen", "crosspoly:4", "-o", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = rp4(&["reduce", p.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
    let trace = dir.path().join("t.txt");
    std::fs::write(&trace, &r.stdout).unwrap();
    let end = rp4(&["reduce", p.to_str().unwrap(), "--replay", trace.to_str().unwrap()]);
    assert!(text(&end).starts_with("d=3 n=5 f=5\n"));
}

#[test]
fn designs() {
    let v = rp4(&["design", "witt22", "--verify"]);
    assert_eq!(v.status.code(), Some(0));
    assert!(text(&v).contains("verified=true"));
    let b = rp4(&["design", "witt22", "--blocks"]);
    assert_eq!(text(&b).lines().count(), 77);
    let t = text(&rp4(&["design", "k6", "--table"]));
    assert!(t.contains("edges\nAB 0123\n"));
    assert_eq!(rp4(&["design", "biplane-m", "--verify"]).status.code(), Some(0));
    assert_eq!(rp4(&["design", "design-e", "--verify"]).status.code(), Some(0));
}

#[test]
fn stages_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = rp4(&["gen", "rp4-c3", "--stages", dir.path().to_str().unwrap(), "-o", dir.path().join("x.fl").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for k in 1..=9 {
        assert!(dir.path().join(format!("stage{k}.fl")).exists());
    }
    let b = rp4(&["fvector", dir.path().join("ball-boundary.fl").to_str().unwrap()]);
    assert!(text(&b).contains("f=22,102,160,80"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(rp4(&["fvector", "missing.fl"]).status.code(), Some(2));
    assert_eq!(rp4(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(rp4(&["gen", "nonsense"]).status.code(), Some(2));
    assert_eq!(rp4(&["gen", "simplex:x"]).status.code(), Some(2));
    assert_eq!(rp4_stdin(&["fvector", "-"], b"d=2 n=4 f=1\n1 2 3\n").status.code(), Some(2));
    assert_eq!(rp4_stdin(&["fvector", "-"], b"[[1,2],[2,1]]").status.code(), Some(2));
    assert_eq!(rp4_stdin(&["homology", "-"], b"[[1,2],[2,3],[1,3]]").status.code(), Some(0));
}

#[test]
fn non_manifold_fails_check() {
    let two_triangles = b"d=2 n=4 f=2\n1 2 3\n2 3 4\n";
    let out = rp4_stdin(&["manifold", "-"], two_triangles);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out).contains("closed_pseudomanifold=false"));
}
