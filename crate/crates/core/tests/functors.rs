use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sechom::abelian::{is_exact_at, FinAbGroup};
use sechom::cross::{
    h0, h1, is_weak_equivalence, CrossMorphism, CrossObject, FiniteGroup, PointedGroupoid, H0,
};
use sechom::functors::{
    ad1, ad2, ad3, adjunction_check, fiber, phi1, phi2, phi3, six_term_sequence, ENUMERATION_CAP,
};
use sechom::models::wedge_model;
use sechom::nil2::{self, Class2Hom, PointedSet};
use sechom::quadratic;
use sechom::verify::fixtures::{
    conjugation_module, cyclic, cyclic_crossed, dihedral, free_point, quaternion, trivial_module, universal_module,
};
use sechom::verify::random::random_wedge_morphism;

fn quad(x: CrossObject) -> sechom::cross::QuadModule {
    match x {
        CrossObject::Quadratic(q) => q,
        _ => panic!("expected a quadratic module"),
    }
}

fn h1_group(x: &CrossObject) -> FinAbGroup {
    h1(x).unwrap().abelian().unwrap().clone()
}

fn h0_group(x: &CrossObject) -> nil2::Class2Group {
    match h0(x).unwrap() {
        H0::Group(q) => q.group,
        other => panic!("unexpected {:?}", other),
    }
}

#[test]
fn fiber_of_identity_is_contractible() {
    for n in [2, 3] {
        let x = wedge_model(n, &PointedSet::with(&["a", "b"])).unwrap();
        let fr = fiber(&CrossMorphism::identity(&x)).unwrap();
        assert!(fr.fiber.check_axioms().is_empty());
        assert!(h0_group(&fr.fiber).is_trivial());
        assert!(h1_group(&fr.fiber).is_trivial());
        assert!(six_term_sequence(&fr).unwrap().is_exact());
    }
}

#[test]
fn fiber_over_the_zero_object_is_the_source() {
    let x = quad(wedge_model(2, &PointedSet::with(&["a", "b"])).unwrap());
    let z = trivial_module(2);
    let f = CrossMorphism::quadratic(
        x.clone(),
        z.clone(),
        Class2Hom::trivial(&x.m, &z.m),
        Class2Hom::trivial(&x.base, &z.base),
    )
    .unwrap();
    let fr = fiber(&f).unwrap();
    assert!(is_weak_equivalence(&fr.j).unwrap());
    assert!(nil2::is_isomorphism(fr.j.f1().unwrap()).unwrap());
    assert!(nil2::is_isomorphism(&fr.j.f0().unwrap().as_class2().unwrap()).unwrap());
    assert!(six_term_sequence(&fr).unwrap().is_exact());
}

#[test]
fn random_wedge_fibers_are_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..30 {
        let n = 2 + (trial % 2) as u32;
        let f = random_wedge_morphism(&mut rng, n, 3).unwrap();
        let fr = fiber(&f).unwrap();
        assert!(fr.fiber.check_axioms().is_empty(), "{:?}", fr.fiber.check_axioms());
        let st = six_term_sequence(&fr).unwrap();
        assert!(st.is_exact(), "trial {}: {:?}", trial, st.exact);
        // the abelian half again, through presentations and Smith forms
        let ab: Vec<_> = st.maps[..2].iter().map(|m| m.abelianization()).collect();
        assert!(ab[0].is_injective());
        assert!(is_exact_at(&ab[0], &ab[1]));
    }
}

#[test]
fn crossed_fibers_via_phi2_are_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let f = random_wedge_morphism(&mut rng, 2, 2).unwrap();
        let g = sechom::functors::phi_morphism(&f).unwrap();
        let fr = fiber(&g).unwrap();
        assert!(fr.fiber.check_axioms().is_empty());
        assert!(six_term_sequence(&fr).unwrap().is_exact());
    }
}

#[test]
fn phi2_of_a_single_sphere_acts_trivially() {
    let x = quad(wedge_model(2, &PointedSet::with(&["e"])).unwrap());
    let c = phi2(&x).unwrap();
    assert!(c.check_axioms().is_empty());
    assert!(c.action().iter().all(|a| a.equals(&Class2Hom::identity(&c.m))));
}

#[test]
fn phi2_of_wedges_satisfies_crossed_axioms() {
    for k in 1..=3 {
        let x = quad(wedge_model(2, &PointedSet::numbered(k)).unwrap());
        assert!(phi2(&x).unwrap().check_axioms().is_empty());
    }
    let stable = quad(wedge_model(3, &PointedSet::numbered(2)).unwrap());
    let reduced = phi3(&stable).unwrap();
    assert!(reduced.check_axioms().is_empty());
    assert!(phi2(&reduced).unwrap().check_axioms().is_empty());
}

#[test]
fn phi1_of_zero_into_cyclic_is_discrete() {
    let c = cyclic_crossed(1, 3, 0).unwrap();
    let g = phi1(&c).unwrap();
    assert_eq!(g.groupoid.nobjects(), 3);
    assert_eq!(g.groupoid.arrows().len(), 3);
    assert_eq!(g.groupoid.iso_classes().len(), 3);
}

#[test]
fn phi1_structure_maps_and_group_law() {
    let modules = [
        cyclic_crossed(2, 4, 2).unwrap(),
        cyclic_crossed(3, 3, 1).unwrap(),
        conjugation_module(&dihedral()).unwrap(),
    ];
    for c in &modules {
        let ag = phi1(c).unwrap();
        let g = &ag.groupoid;
        let na = g.arrows().len();
        for (f, &(n, _)) in ag.pairs.iter().enumerate() {
            assert_eq!(g.arrows()[f].source, n);
        }
        for n in 0..g.nobjects() {
            assert_eq!(g.identity(n), ag.unit(n));
        }
        // the group law commutes with composition on a sample of quadruples
        for a in (0..na).step_by(3) {
            for b in 0..na {
                for cc in (0..na).step_by(5) {
                    for d in (0..na).step_by(7) {
                        assert!(ag.interchange_holds(a, b, cc, d));
                    }
                }
            }
        }
    }
    // the conjugation module has one component: every element is connected to 0
    let conj = phi1(&conjugation_module(&quaternion()).unwrap()).unwrap();
    assert_eq!(conj.groupoid.iso_classes().len(), 1);
}

#[test]
fn ad3_of_reduced_wedges_is_the_stable_wedge() {
    for k in 1..=3 {
        let e = PointedSet::numbered(k);
        let s = ad3(&quad(wedge_model(2, &e).unwrap())).unwrap();
        assert!(s.module.check_axioms().is_empty());
        let w3 = quad(wedge_model(3, &e).unwrap());
        let expected = quadratic::reduced_tensor_square(&FinAbGroup::free(k));
        assert!(s.module.m.abelianization().is_isomorphic(&expected));
        assert!(s.module.m.abelianization().is_isomorphic(&w3.m.abelianization()));
        let x = CrossObject::Quadratic(s.module.clone());
        assert!(h1_group(&x).is_isomorphic(&h1_group(&CrossObject::Quadratic(w3))));
    }
    let one = ad3(&quad(wedge_model(2, &PointedSet::with(&["e"])).unwrap())).unwrap();
    assert!(one.module.m.abelianization().is_isomorphic(&FinAbGroup::cyclic(2)));
}

#[test]
fn ad3_of_a_stable_module_changes_nothing() {
    let y = quad(wedge_model(3, &PointedSet::numbered(2)).unwrap());
    let s = ad3(&phi3(&y).unwrap()).unwrap();
    assert!(nil2::is_isomorphism(&s.quotient.proj).unwrap());
}

#[test]
fn ad2_of_a_circle_is_the_two_sphere_model() {
    let x = free_point(&PointedSet::with(&["e"]));
    let s = ad2(&x).unwrap();
    assert!(s.module.check_axioms().is_empty());
    assert!(s.module.m.abelianization().is_isomorphic(&FinAbGroup::free(1)));
    assert!(s.module.del.is_trivial());
    assert!(nil2::is_isomorphism(&s.module.omega).unwrap());
}

#[test]
fn ad2_examples_pass_the_reduced_checker() {
    // identity Z → Z
    let id = cyclic_crossed(0, 0, 1).unwrap();
    let s = ad2(&id).unwrap();
    assert!(s.module.check_axioms().is_empty());
    // M = 0 gives ⊗²N_ab
    let n = dihedral();
    let zero = cyclic_crossed(1, 4, 0).unwrap();
    let s0 = ad2(&zero).unwrap();
    assert!(s0.module.m.abelianization().is_isomorphic(&FinAbGroup::cyclic(4)));
    let c = conjugation_module(&n).unwrap();
    let sc = ad2(&c).unwrap();
    assert!(sc.module.check_axioms().is_empty());
}

#[test]
fn h0_commutes_with_suspension() {
    // n = 2: h0 Ad2 x is the abelianization of h0 x
    for c in [cyclic_crossed(2, 4, 2).unwrap(), conjugation_module(&dihedral()).unwrap(), cyclic_crossed(1, 0, 0).unwrap()] {
        let hx = h0_group(&CrossObject::Crossed(c.clone()));
        let s = ad2(&c).unwrap();
        let hs = h0_group(&CrossObject::Quadratic(s.module));
        assert!(hs.is_abelian());
        assert!(hs.abelianization().is_isomorphic(&hx.abelianization()));
    }
    // n = 3: the base and the image of ∂ are unchanged
    let x = quad(wedge_model(2, &PointedSet::numbered(2)).unwrap());
    let s = ad3(&x).unwrap();
    let (a, b) = (h0_group(&CrossObject::Quadratic(x)), h0_group(&CrossObject::Quadratic(s.module)));
    assert!(nil2::plausibly_isomorphic(&a, &b).unwrap());
}

#[test]
fn ad1_closed_forms() {
    // discrete on E
    let e = PointedSet::with(&["a", "b", "c"]);
    let p = ad1(&PointedGroupoid::discrete(e));
    assert_eq!(p.h0_presentation().free_rank_if_free(), Some(3));
    assert_eq!(p.h0_closed_rank(), 3);
    assert!(p.h1_closed().unwrap().is_trivial());
    assert!(p.h1_computed().unwrap().is_trivial());
    // one object, Aut = Z/m
    for m in 2..=5 {
        let p = ad1(&PointedGroupoid::one_object(&FiniteGroup::cyclic(m)));
        assert_eq!(p.h0_presentation().free_rank_if_free(), Some(0));
        let expected = FinAbGroup::cyclic(m as i64);
        assert!(p.h1_closed().unwrap().is_isomorphic(&expected));
        assert!(p.h1_computed().unwrap().is_isomorphic(&expected));
    }
    // two isomorphic non-base objects with trivial Aut
    let objs = PointedSet::with(&["x", "y"]);
    let g = PointedGroupoid::from_components(objs, &[(vec![0], FiniteGroup::trivial()), (vec![1, 2], FiniteGroup::trivial())])
        .unwrap();
    let p = ad1(&g);
    assert_eq!(p.h0_presentation().free_rank_if_free(), Some(1));
    assert_eq!(p.h0_closed_rank(), 1);
    assert!(p.h1_closed().unwrap().is_trivial());
    assert!(p.h1_computed().is_none());
}

#[test]
fn ad1_of_a_connected_groupoid() {
    let objs = PointedSet::with(&["x"]);
    let g = PointedGroupoid::from_components(objs, &[(vec![0, 1], FiniteGroup::cyclic(3))]).unwrap();
    let p = ad1(&g);
    assert_eq!(p.h0_presentation().free_rank_if_free(), Some(0));
    assert!(p.h1_computed().unwrap().is_isomorphic(&FinAbGroup::cyclic(3)));
    assert!(p.h1_closed().unwrap().is_isomorphic(&FinAbGroup::cyclic(3)));
}

#[test]
fn adjunction_into_trivial_targets() {
    let x = CrossObject::Crossed(free_point(&PointedSet::with(&["e"])));
    let r = adjunction_check(2, &x, &CrossObject::Quadratic(trivial_module(2)), ENUMERATION_CAP).unwrap();
    assert_eq!((r.left, r.right), (1, 1));
    assert!(r.passed());
}

#[test]
fn adjunction_counts_agree() {
    let targets2 = [universal_module(&cyclic(2, "z"), 2).unwrap(), universal_module(&dihedral(), 2).unwrap()];
    let sources2 = [free_point(&PointedSet::with(&["e"])), cyclic_crossed(2, 4, 2).unwrap()];
    for x in &sources2 {
        for y in &targets2 {
            let r = adjunction_check(2, &CrossObject::Crossed(x.clone()), &CrossObject::Quadratic(y.clone()), ENUMERATION_CAP)
                .unwrap();
            assert!(r.passed(), "{:?}", r);
        }
    }
    // x = 0 → ⟨e⟩: a morphism is a choice of n ∈ N
    let r = adjunction_check(
        2,
        &CrossObject::Crossed(free_point(&PointedSet::with(&["e"]))),
        &CrossObject::Quadratic(targets2[1].clone()),
        ENUMERATION_CAP,
    )
    .unwrap();
    assert_eq!(r.left, 8);

    let targets3 = [universal_module(&cyclic(4, "z"), 3).unwrap(), universal_module(&dihedral(), 3).unwrap()];
    let sources3 = [quad(wedge_model(2, &PointedSet::with(&["e"])).unwrap()), phi3(&targets3[0]).unwrap()];
    for x in &sources3 {
        for y in &targets3 {
            let r =
                adjunction_check(3, &CrossObject::Quadratic(x.clone()), &CrossObject::Quadratic(y.clone()), ENUMERATION_CAP)
                    .unwrap();
            assert!(r.passed(), "{:?}", r);
        }
    }
}

#[test]
fn enumeration_cap_is_reported() {
    let x = CrossObject::Crossed(free_point(&PointedSet::numbered(3)));
    let y = CrossObject::Quadratic(universal_module(&dihedral(), 2).unwrap());
    let err = adjunction_check(2, &x, &y, 10).unwrap_err();
    assert!(matches!(err, sechom::Error::CapExceeded { .. }));
}
