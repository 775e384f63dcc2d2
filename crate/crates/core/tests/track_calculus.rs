use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sechom::abelian::{AbMap, FinAbGroup};
use sechom::cross::{Base, BaseElem, GroupMap};
use sechom::matrix::{int, IntMatrix};
use sechom::nil2::{free_abelian, free_nil, nil_hom_from_words, PointedSet};
use sechom::quadratic;
use sechom::tracks::{interchange_check, level_one_track_exists, nil_track_between, tracks_between, HopfTrack};
use sechom::verify::oracles::{abelianized_words, hopf_condition_holds};
use sechom::verify::random::{random_alpha, random_hopf_track, random_nil_map, random_square, random_words, track_target};

const CASES: usize = 150;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ab_matrix(words: &[sechom::nil2::FreeWord], src: &PointedSet, tgt: &PointedSet) -> AbMap {
    let cols = abelianized_words(words, tgt.len());
    AbMap::new(free_abelian(src), free_abelian(tgt), IntMatrix::from_cols(tgt.len(), cols)).unwrap()
}

#[test]
fn random_tracks_satisfy_the_defining_condition() {
    let mut r = rng(1);
    for n in 2..=4 {
        for _ in 0..CASES {
            let h = random_hopf_track(&mut r, n, 3).unwrap();
            assert!(hopf_condition_holds(&h));
        }
    }
}

#[test]
fn vertical_composition_adds_hopf_invariants() {
    let mut r = rng(2);
    for n in 2..=3 {
        for _ in 0..CASES {
            let h = random_hopf_track(&mut r, n, 3).unwrap();
            let beta = random_alpha(&mut r, n, &h.a, &h.b).unwrap();
            let chi = track_target(n, &h.a, &h.b, &h.target, &beta).unwrap();
            let k = HopfTrack::new(n, &h.a, &h.b, h.target.clone(), chi, beta.clone()).unwrap();
            let kh = h.vcomp(&k).unwrap();
            assert!(kh.alpha.equals(&h.alpha.add(&beta)));
            assert!(hopf_condition_holds(&kh));
            let id = h.vcomp(&h.inverse()).unwrap();
            assert!(id.alpha.is_zero() && id.source.equals(&id.target));
        }
    }
}

#[test]
fn whiskering_on_the_right_precomposes() {
    let mut r = rng(3);
    for n in 2..=3 {
        for _ in 0..CASES {
            let h = random_hopf_track(&mut r, n, 3).unwrap();
            let c = PointedSet::numbered(r.gen_range(1..=3));
            let words = random_words(&mut r, h.a.len(), c.len(), 4);
            let k = nil_hom_from_words(&c, &free_nil(&h.a), &words).unwrap();
            let hk = h.whisker_right(&k, &c).unwrap();
            let expected = ab_matrix(&words, &c, &h.a).then(&h.alpha);
            assert!(hk.alpha.equals(&expected));
            assert!(hopf_condition_holds(&hk));
        }
    }
}

#[test]
fn whiskering_on_the_left_applies_the_tensor_square() {
    let mut r = rng(4);
    for n in 2..=3 {
        for _ in 0..CASES {
            let h = random_hopf_track(&mut r, n, 3).unwrap();
            let d = PointedSet::numbered(r.gen_range(1..=3));
            let words = random_words(&mut r, d.len(), h.b.len(), 4);
            let map = nil_hom_from_words(&h.b, &free_nil(&d), &words).unwrap();
            let hh = h.whisker_left(&map, &d).unwrap();
            // ⊗² of the abelianized map, entry by entry
            let ab = abelianized_words(&words, d.len());
            let kb = h.b.len();
            let kd = d.len();
            let cols = (0..kb * kb)
                .map(|idx| {
                    let (i, j) = (idx / kb, idx % kb);
                    (0..kd * kd).map(|t| &ab[i][t / kd] * &ab[j][t % kd]).collect()
                })
                .collect();
            let tb = quadratic::tensor_square_n(n, &free_abelian(&h.b)).unwrap();
            let td = quadratic::tensor_square_n(n, &free_abelian(&d)).unwrap();
            let t = AbMap::new(tb, td, IntMatrix::from_cols(kd * kd, cols)).unwrap();
            assert!(hh.alpha.equals(&h.alpha.then(&t)));
            assert!(hopf_condition_holds(&hh));
        }
    }
}

#[test]
fn suspension_of_tracks() {
    let mut r = rng(5);
    // level 1: tracks exist only between equal maps and suspend to the zero track
    for _ in 0..CASES {
        let a = PointedSet::numbered(r.gen_range(1..=3));
        let b = PointedSet::numbered(r.gen_range(1..=3));
        let words = random_words(&mut r, b.len(), a.len(), 4);
        let imgs = words.iter().map(|w| BaseElem::Word(w.clone())).collect();
        let f = GroupMap::new(Base::Free(a.clone()), Base::Free(b.clone()), imgs).unwrap();
        assert!(level_one_track_exists(&f, &f));
        let phi = nil_hom_from_words(&a, &free_nil(&b), &words).unwrap();
        let s = nil_track_between(2, &a, &b, &phi, &phi).unwrap().unwrap();
        assert!(s.alpha.is_zero());
    }
    for _ in 0..CASES {
        let h = random_hopf_track(&mut r, 2, 3).unwrap();
        let s = h.suspend().unwrap();
        assert_eq!(s.n, 3);
        assert!(s.alpha.equals(&h.alpha.then(&quadratic::sigma_bar(&free_abelian(&h.b)))));
        assert!(hopf_condition_holds(&s));
        let s2 = s.suspend().unwrap();
        assert_eq!(s2.n, 4);
        assert!(s2.alpha.equals(&s.alpha));
        assert!(hopf_condition_holds(&s2));
    }
}

#[test]
fn horizontal_composition_matches_the_whisker_formula() {
    let mut r = rng(6);
    for _ in 0..CASES {
        let h = random_hopf_track(&mut r, 2, 2).unwrap();
        let c = PointedSet::numbered(r.gen_range(1..=2));
        let phi2 = random_nil_map(&mut r, &h.b, &c).unwrap();
        let alpha2 = random_alpha(&mut r, 2, &h.b, &c).unwrap();
        let psi2 = track_target(2, &h.b, &c, &phi2, &alpha2).unwrap();
        let h2 = HopfTrack::new(2, &h.b, &c, phi2, psi2, alpha2).unwrap();
        let both = h.hcomp(&h2).unwrap();
        assert!(hopf_condition_holds(&both));
        // the other order of whiskering gives the same track
        let other = h.whisker_left(&h2.source, &c).unwrap().vcomp(&h2.whisker_right(&h.target, &h.a).unwrap()).unwrap();
        assert!(both.alpha.equals(&other.alpha));
    }
}

#[test]
fn tracks_between_is_a_torsor_under_gamma() {
    let mut r = rng(7);
    for n in 2..=3 {
        for kb in 1..=4 {
            let a = PointedSet::numbered(r.gen_range(1..=3));
            let b = PointedSet::numbered(kb);
            let h = sechom::verify::random::random_hopf_track_on(&mut r, n, &a, &b).unwrap();
            let t = tracks_between(n, &a, &b, &h.source, &h.target).unwrap().unwrap();
            let gamma = quadratic::gamma_n(n, &free_abelian(&b)).unwrap();
            assert!(t.kernel.0.is_isomorphic(&gamma), "n={} k={}", n, kb);
            let expected = if n == 2 {
                FinAbGroup::free(kb * (kb + 1) / 2)
            } else {
                FinAbGroup::from_orders(&vec![int(2); kb])
            };
            assert!(gamma.is_isomorphic(&expected));
            assert!(hopf_condition_holds(&t.particular));
            // every kernel element shifts the Hopf invariant to another track
            for g in t.kernel.1.image_gens() {
                let mut alpha = t.particular.alpha.clone();
                let cols: Vec<_> = (0..a.len()).map(|_| g.clone()).collect();
                alpha = alpha.add(&AbMap::new(alpha.source.clone(), alpha.target.clone(), IntMatrix::from_cols(g.len(), cols)).unwrap());
                assert!(HopfTrack::new(n, &a, &b, h.source.clone(), h.target.clone(), alpha).is_ok());
            }
        }
    }
}

#[test]
fn no_track_between_maps_with_different_abelianizations() {
    let a = PointedSet::with(&["x"]);
    let b = PointedSet::with(&["y"]);
    let g = free_nil(&b);
    let phi = sechom::nil2::hom_from_free(&free_nil(&a), &g, vec![g.gen(0)]).unwrap();
    let psi = sechom::nil2::hom_from_free(&free_nil(&a), &g, vec![g.mul(&g.gen(0), &g.gen(0))]).unwrap();
    assert!(tracks_between(2, &a, &b, &phi, &psi).unwrap().is_none());
    assert!(nil_track_between(2, &a, &b, &phi, &psi).unwrap().is_none());
}

#[test]
fn interchange_holds_on_random_squares() {
    let mut r = rng(8);
    for (n, crossed) in [(2, false), (3, false), (2, true)] {
        for _ in 0..60 {
            let (alpha, alpha2) = random_square(&mut r, n, 2, crossed).unwrap();
            assert!(interchange_check(&alpha, &alpha2).unwrap());
            assert!(alpha.hcomp(&alpha2).is_ok());
        }
    }
}
