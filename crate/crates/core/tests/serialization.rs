use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sechom::cross::CrossObject;
use sechom::error::Error;
use sechom::functors::phi_morphism;
use sechom::models::wedge_model;
use sechom::nil2::{FreeWord, PointedSet};
use sechom::text::{canonicalize, parse, print, round_trips, Document, CORPUS};
use sechom::verify::fixtures::wedge_morphism;
use sechom::verify::random::random_two_morphism;

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(sub)
}

/// Documents built from library objects; their canonical text is part of the corpus.
fn generated() -> Vec<(&'static str, Document)> {
    let mut out = Vec::new();
    let mut d = Document::new();
    d.add_cross("S2", &wedge_model(2, &PointedSet::with(&["e"])).unwrap()).unwrap();
    out.push(("sphere2", d));
    let mut d = Document::new();
    d.add_cross("W", &wedge_model(3, &PointedSet::with(&["a", "b"])).unwrap()).unwrap();
    out.push(("wedge3", d));
    let f = wedge_morphism(2, &PointedSet::with(&["a"]), &PointedSet::with(&["a", "b"]), &[FreeWord::new(vec![(0, 1), (1, 1)])])
        .unwrap();
    let mut d = Document::new();
    d.add_morphism("f", &f).unwrap();
    d.add_morphism("phi_f", &phi_morphism(&f).unwrap()).unwrap();
    out.push(("morphism", d));
    let mut r = ChaCha8Rng::seed_from_u64(3);
    let mut d = Document::new();
    d.add_two_morphism("A", &random_two_morphism(&mut r, &f).unwrap()).unwrap();
    d.add_two_morphism("B", &random_two_morphism(&mut r, &phi_morphism(&f).unwrap()).unwrap()).unwrap();
    out.push(("twomorphism", d));
    out
}

/// Rewrites the generated corpus files and the golden canonical forms.
#[test]
#[ignore]
fn bless() {
    for (name, d) in generated() {
        std::fs::write(dir("corpus").join(format!("{}.sechom", name)), print(&d)).unwrap();
    }
    for (name, _) in CORPUS {
        let text = std::fs::read_to_string(dir("corpus").join(format!("{}.sechom", name))).unwrap();
        std::fs::write(dir("tests/golden").join(format!("{}.sechom", name)), canonicalize(&text).unwrap()).unwrap();
    }
}

#[test]
fn corpus_round_trips() {
    for (name, text) in CORPUS {
        assert!(round_trips(text).unwrap(), "{}", name);
    }
}

#[test]
fn corpus_matches_golden_files() {
    for (name, text) in CORPUS {
        let golden = std::fs::read_to_string(dir("tests/golden").join(format!("{}.sechom", name))).unwrap();
        assert_eq!(canonicalize(text).unwrap(), golden, "{}", name);
        assert_eq!(canonicalize(&golden).unwrap(), golden, "{}", name);
    }
}

#[test]
fn generated_documents_are_canonical_and_reparse_to_the_same_objects() {
    for (name, d) in generated() {
        let text = print(&d);
        let corpus = CORPUS.iter().find(|(n, _)| *n == name).unwrap().1;
        assert_eq!(text, corpus, "{}", name);
        let back = parse(&text).unwrap();
        assert_eq!(back, d, "{}", name);
    }
}

#[test]
fn empty_document() {
    assert!(parse("").unwrap().is_empty());
    assert_eq!(canonicalize("").unwrap(), "");
    assert_eq!(canonicalize("# only a comment\n\n").unwrap(), "");
}

#[test]
fn malformed_exponent_is_reported_at_its_column() {
    let err = parse("group F = nil2 basis a b\nhom f : F -> F { a -> a^; b -> b }\n").unwrap_err();
    match err {
        Error::Syntax { line, col, msg } => {
            assert_eq!((line, col), (2, 25));
            assert!(msg.contains("exponent"));
        }
        other => panic!("{:?}", other),
    }
}

#[test]
fn dangling_references_are_reported() {
    let err = parse("group F = nil2 basis a\nhom f : F -> G { a -> a }\n").unwrap_err();
    assert_eq!(err, Error::Dangling { name: "G".into(), line: 2, col: 14 });
    let err = parse("cross X n=2 { M=M; N=N; del=d; omega=w }").unwrap_err();
    assert!(matches!(err, Error::Dangling { .. }));
}

#[test]
fn semantic_errors_carry_positions() {
    // a ↦ b does not extend to a homomorphism Z/2 → Z
    let err = parse("group A = ab 1 names a rel 2\ngroup B = ab 1 names b\nhom f : A -> B { a -> b }\n").unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 3, .. }), "{:?}", err);
    let err = parse("group A = ab 1\ngroup A = ab 2\n").unwrap_err();
    assert!(matches!(err, Error::Syntax { line: 2, .. }));
}

#[test]
fn abelian_shorthand_uses_default_names() {
    let d = parse("group G = ab 3 rel 2 0 0").unwrap();
    let g = d.group("G").unwrap();
    assert_eq!(g.cnames(), &["g0", "g1", "g2"]);
    assert_eq!(canonicalize("group G = ab 3 rel 2 0 0").unwrap(), "group G = ab 3 names g0 g1 g2 rel 2 0 0\n");
}

#[test]
fn letters_determine_maps_out_of_free_nil_groups() {
    let d = parse("group F = nil2 basis a b\nhom f : F -> F { a -> b; b -> a }").unwrap();
    let text = print(&d);
    assert!(text.contains("[a,b] -> [a,b]^-1"), "{}", text);
}

#[test]
fn parsed_objects_are_usable() {
    let d = parse(CORPUS.iter().find(|(n, _)| *n == "wedge3").unwrap().1).unwrap();
    let x = d.cross("W").unwrap();
    assert!(matches!(x, CrossObject::Quadratic(q) if q.level == 3));
    assert!(x.check_axioms().is_empty());
    let d = parse(CORPUS.iter().find(|(n, _)| *n == "tracks").unwrap().1).unwrap();
    assert_eq!(d.track("K").unwrap().n, 3);
    let d = parse(CORPUS.iter().find(|(n, _)| *n == "groupoids").unwrap().1).unwrap();
    assert_eq!(d.groupoid("Two").unwrap().iso_classes().len(), 2);
}

#[test]
fn printing_is_deterministic() {
    for (_, text) in CORPUS {
        assert_eq!(canonicalize(text).unwrap(), canonicalize(text).unwrap());
    }
}
