use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus").join(name).to_string_lossy().into_owned()
}

fn sechom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sechom")).args(args).env_remove("SECHOM_COSET_CAP").output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sechom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn wedge_models_pass_check() {
    for n in ["1", "2", "3", "4"] {
        let w = sechom(&["wedge", "--n", n, "--gens", "a,b"]);
        assert_eq!(w.status.code(), Some(0));
        let c = with_stdin(&["check", "-"], &stdout(&w));
        assert_eq!(c.status.code(), Some(0), "n={} {}", n, stderr(&c));
        assert_eq!(stdout(&c), "W: ok\n");
    }
}

#[test]
fn reports_are_deterministic() {
    let a = sechom(&["wedge", "--n", "3", "--gens", "a,b,c"]);
    let b = sechom(&["wedge", "--n", "3", "--gens", "a,b,c"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let h = |args: &[&str]| with_stdin(args, &text).stdout;
    assert_eq!(h(&["homotopy-groups", "-"]), h(&["homotopy-groups", "-"]));
    assert_eq!(h(&["k-invariant", "-"]), h(&["k-invariant", "-"]));
}

#[test]
fn axiom_violations_exit_one() {
    let o = sechom(&["check", &data("comm.sechom")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("K: CM1"), "{}", stdout(&o));
}

#[test]
fn parse_errors_exit_two_with_a_position() {
    let o = with_stdin(&["check", "-"], "group F = nil2 basis a\nhom f : F -> F { a -> a^ }\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column"), "{}", stderr(&o));
    let o = with_stdin(&["h0", "-"], "cross X n=2 { M=A; N=B; del=d; omega=w }");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("is not defined"));
}

#[test]
fn free_base_h0_depends_on_the_coset_cap() {
    let f = data("cyc.sechom");
    let o = sechom(&["h0", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 6"), "{}", stdout(&o));
    let o = sechom(&["--coset-cap", "3", "h0", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("could not be decided"));
    let o = Command::new(env!("CARGO_BIN_EXE_sechom")).args(["h0", &f]).env("SECHOM_COSET_CAP", "4").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = sechom(&["h0", &data("comm.sechom")]);
    assert_eq!(o.status.code(), Some(2), "Z^2 never closes its coset table");
    let o = sechom(&["h0", &corpus("free_base.sechom")]);
    assert_eq!(stdout(&o), "h0(P) = free group of rank 1\n");
}

#[test]
fn homotopy_groups_of_spheres() {
    let o = with_stdin(&["homotopy-groups", "-"], &stdout(&sechom(&["wedge", "--n", "3", "--gens", "e"])));
    let s = stdout(&o);
    assert!(s.contains("pi_3 = Z (abelian)"), "{}", s);
    assert!(s.contains("pi_4 = Z/2"), "{}", s);
    let o = sechom(&["homotopy-groups", &corpus("sphere2.sechom")]);
    let s = stdout(&o);
    assert!(s.contains("pi_2 = Z (abelian)") && s.contains("pi_3 = Z\n"), "{}", s);
    let o = sechom(&["h1", &data("endo.sechom")]);
    assert_eq!(stdout(&o), "h1(X) = Z\n");
}

#[test]
fn k_invariant_of_the_two_sphere() {
    let o = sechom(&["k-invariant", &corpus("sphere2.sechom")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k_2(S2): Γ(h0) → h1\n  [1]\nisomorphism\nsign +1\n");
}

#[test]
fn suspension_comparisons_are_isomorphisms() {
    for g in ["e", "a,b", ""] {
        let o = sechom(&["suspend-compare", "--gens", g]);
        assert_eq!(o.status.code(), Some(0), "{}", g);
        assert_eq!(stdout(&o).matches("isomorphism yes").count(), 2);
    }
}

#[test]
fn fibers_and_six_term_sequences() {
    let o = sechom(&["six-term", &corpus("morphism.sechom"), "--name", "f"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("exact").count(), 5);
    assert!(!stdout(&o).contains("NOT"));
    let o = sechom(&["fiber", &corpus("morphism.sechom"), "--name", "f"]);
    assert_eq!(o.status.code(), Some(0));
    let c = with_stdin(&["check", "-"], &stdout(&o));
    assert_eq!(c.status.code(), Some(0), "{}", stdout(&c));
}

#[test]
fn phi_and_ad_emit_documents() {
    let w = stdout(&sechom(&["wedge", "--n", "3", "--gens", "a,b"]));
    let p = with_stdin(&["phi", "-", "--n", "3"], &w);
    assert_eq!(p.status.code(), Some(0));
    assert!(stdout(&p).contains("cross phi_W n=2"));
    let p1 = with_stdin(&["phi", "-", "--n", "2"], &stdout(&p));
    assert!(stdout(&p1).contains("cross phi_phi_W n=1"));
    let a = with_stdin(&["ad", "-", "--n", "3"], &stdout(&p));
    assert!(stdout(&a).contains("cross Ad_phi_W n=3"));
    let c = with_stdin(&["check", "-"], &stdout(&a));
    assert_eq!(c.status.code(), Some(0));
    let wrong = with_stdin(&["phi", "-", "--n", "2"], &w);
    assert_eq!(wrong.status.code(), Some(2));
    let g = sechom(&["ad", &corpus("groupoids.sechom"), "--n", "1", "--name", "Two"]);
    assert_eq!(g.status.code(), Some(0), "{}", stderr(&g));
    assert!(stdout(&g).starts_with("# Ad_1 Two"));
}

#[test]
fn adjunction_check_and_caps() {
    let f = data("adj.sechom");
    let o = sechom(&["adjoint-check", &f, "--n", "2", "--source", "X", "--target", "Y"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("unit bijective: true"));
    let o = sechom(&["adjoint-check", &f, "--n", "2", "--source", "X", "--target", "Y", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap"));
}

#[test]
fn pasting_tracks_and_two_morphisms() {
    let o = sechom(&["paste", &data("endo.sechom"), "--horizontal", "A,B", "--interchange"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("# interchange law holds\n"));
    assert!(s.contains("e -> u^-1"), "{}", s);
    let o = sechom(&["paste", &data("endo.sechom"), "--vertical", "A,B,B"]);
    assert!(stdout(&o).contains("e -> u^-3"));
    let o = sechom(&["paste", &corpus("tracks.sechom"), "--vertical", "H,H"]);
    assert_eq!(o.status.code(), Some(2));
    let o = sechom(&["paste", &corpus("twomorphism.sechom"), "--horizontal", "A,A"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_subsets() {
    let o = sechom(&["selftest", "--only", "8,9,11", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 3);
    let o = sechom(&["selftest", "--only", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL  6"));
    let o = sechom(&["selftest", "--only", "12"]);
    assert_eq!(o.status.code(), Some(2));
}
