use sechom::abelian::FinAbGroup;
use sechom::cross::{
    h0, h1, is_weak_equivalence, Base, BaseElem, CrossMorphism, CrossObject, CrossedModule, FiniteGroup, GroupMap,
    GroupoidFunctor, PointedGroupoid, QuadModule, H0,
};
use sechom::error::Error;
use sechom::matrix::int;
use sechom::models::wedge_model;
use sechom::nil2::{free_nil_on, Class2Group, Class2Hom, FreeWord, PointedSet};

fn conjugation_module(n: &Class2Group) -> CrossedModule {
    let base = Base::Nil(n.clone());
    let action = (0..n.ngens())
        .map(|i| {
            let g = n.gen(i);
            Class2Hom::new(n.clone(), n.clone(), (0..n.ngens()).map(|j| n.conj(&n.gen(j), &g)).collect()).unwrap()
        })
        .collect();
    let del = GroupMap::identity(&base);
    CrossedModule::new(n.clone(), base, del, action).unwrap()
}

#[test]
fn wedge_models_pass_the_checker() {
    for n in 1..=4 {
        for k in 0..=3 {
            let x = wedge_model(n, &PointedSet::numbered(k)).unwrap();
            assert!(x.check_axioms().is_empty(), "n={} k={}: {:?}", n, k, x.check_axioms());
        }
    }
}

#[test]
fn doubled_omega_breaks_rq1() {
    let e = PointedSet::with(&["a", "b"]);
    let CrossObject::Quadratic(q) = wedge_model(2, &e).unwrap() else { panic!() };
    let doubled = (0..4).map(|i| q.m.pow(&q.m.gen(i), &int(2))).collect();
    let bad = QuadModule::new(2, q.m.clone(), q.base.clone(), q.del.clone(), doubled).unwrap();
    let v = bad.check_axioms();
    assert!(v.iter().any(|v| v.axiom == "RQ1" && v.witness.contains("x = a, y = b")), "{:?}", v);
}

#[test]
fn trivial_action_over_nonabelian_base_breaks_cm1() {
    let n = free_nil_on(&["a", "b"]);
    let base = Base::Nil(n.clone());
    let bad = CrossedModule::trivial_action(n.clone(), base.clone(), GroupMap::identity(&base)).unwrap();
    assert!(bad.check_axioms().iter().any(|v| v.axiom == "CM1"));
    assert!(conjugation_module(&n).check_axioms().is_empty());
}

#[test]
fn stable_modules_pass_the_reduced_checker() {
    let e = PointedSet::with(&["a", "b"]);
    let CrossObject::Quadratic(q) = wedge_model(3, &e).unwrap() else { panic!() };
    let reduced =
        QuadModule::new(2, q.m.clone(), q.base.clone(), q.del.clone(), q.omega.images().to_vec()).unwrap();
    assert!(reduced.check_axioms().is_empty());
    // the level-2 model is not stable
    let CrossObject::Quadratic(q2) = wedge_model(2, &e).unwrap() else { panic!() };
    let forced =
        QuadModule::new(3, q2.m.clone(), q2.base.clone(), q2.del.clone(), q2.omega.images().to_vec()).unwrap();
    assert!(forced.check_axioms().iter().any(|v| v.axiom == "S4"));
}

#[test]
fn homotopy_of_single_sphere_models() {
    let e = PointedSet::with(&["e"]);
    let x2 = wedge_model(2, &e).unwrap();
    assert!(h1(&x2).unwrap().abelian().unwrap().is_isomorphic(&FinAbGroup::free(1)));
    let x3 = wedge_model(3, &e).unwrap();
    assert!(h1(&x3).unwrap().abelian().unwrap().is_isomorphic(&FinAbGroup::cyclic(2)));
    for x in [&x2, &x3] {
        let H0::Group(q) = h0(x).unwrap() else { panic!() };
        assert!(q.group.abelianization().is_isomorphic(&FinAbGroup::free(1)));
    }
}

#[test]
fn wedge_h1_ranks() {
    for k in 1..=3usize {
        let e = PointedSet::numbered(k);
        let two = h1(&wedge_model(2, &e).unwrap()).unwrap();
        assert!(two.abelian().unwrap().is_isomorphic(&FinAbGroup::free(k * (k + 1) / 2)));
        let three = h1(&wedge_model(3, &e).unwrap()).unwrap();
        let orders = vec![int(2); k];
        assert!(three.abelian().unwrap().is_isomorphic(&FinAbGroup::from_orders(&orders)));
    }
}

#[test]
fn groupoid_components() {
    // * and x isomorphic, trivial automorphisms
    let objs = PointedSet::with(&["x"]);
    let g = PointedGroupoid::from_components(objs, &[(vec![0, 1], FiniteGroup::trivial())]).unwrap();
    let H0::Classes(c) = h0(&CrossObject::Groupoid(g)).unwrap() else { panic!() };
    assert_eq!(c, vec![vec![0, 1]]);
    let d = PointedGroupoid::one_object(&FiniteGroup::cyclic(3));
    assert_eq!(d.automorphisms(0).0.order(), 3);
}

#[test]
fn weak_equivalences() {
    let x = wedge_model(2, &PointedSet::with(&["e"])).unwrap();
    assert!(is_weak_equivalence(&CrossMorphism::identity(&x)).unwrap());
    let zero = wedge_model(2, &PointedSet::with(&[])).unwrap();
    let (CrossObject::Quadratic(z), CrossObject::Quadratic(q)) = (&zero, &x) else { panic!() };
    let f = CrossMorphism::quadratic(
        z.clone(),
        q.clone(),
        Class2Hom::trivial(&z.m, &q.m),
        Class2Hom::trivial(&z.base, &q.base),
    )
    .unwrap();
    assert!(!is_weak_equivalence(&f).unwrap());
    let g = PointedGroupoid::one_object(&FiniteGroup::cyclic(2));
    let gx = CrossObject::Groupoid(g);
    assert!(is_weak_equivalence(&CrossMorphism::identity(&gx)).unwrap());
    assert!(CrossMorphism::identity(&gx).then(&CrossMorphism::identity(&x)).is_err());
    let func = GroupoidFunctor::identity(gx.as_groupoid().unwrap());
    assert!(func.is_weak_equivalence());
}

#[test]
fn composition_is_unital_and_associative() {
    let e = PointedSet::with(&["a", "b"]);
    let CrossObject::Quadratic(q) = wedge_model(3, &e).unwrap() else { panic!() };
    // swap a and b
    let n = &q.base;
    let f0 = Class2Hom::new(n.clone(), n.clone(), vec![n.gen(1), n.gen(0), n.inv(&n.gen(2))]).unwrap();
    let m = &q.m;
    let f1 = Class2Hom::new(m.clone(), m.clone(), vec![m.gen(3), m.gen(2), m.gen(1), m.gen(0)]).unwrap();
    let f = CrossMorphism::quadratic(q.clone(), q.clone(), f1, f0).unwrap();
    let id = CrossMorphism::identity(&CrossObject::Quadratic(q.clone()));
    assert!(id.then(&f).unwrap().equals(&f));
    assert!(f.then(&id).unwrap().equals(&f));
    let ff = f.then(&f).unwrap();
    assert!(ff.equals(&id));
    assert!(f.then(&f).unwrap().then(&f).unwrap().equals(&f.then(&f.then(&f).unwrap()).unwrap()));
    assert!(is_weak_equivalence(&f).unwrap());
}

#[test]
fn free_base_crossed_module() {
    // Z → ⟨a⟩, 1 ↦ a², trivial action
    let m = Class2Group::from_abelian(&FinAbGroup::free(1), vec!["t".into()]);
    let s = PointedSet::with(&["a"]);
    let base = Base::Free(s.clone());
    let del =
        GroupMap::new(Base::Nil(m.clone()), base.clone(), vec![BaseElem::Word(FreeWord::new(vec![(0, 1), (0, 1)]))])
            .unwrap();
    let x = CrossObject::Crossed(CrossedModule::trivial_action(m, base, del).unwrap());
    assert!(x.check_axioms().is_empty());
    let H0::Presented(p) = h0(&x).unwrap() else { panic!() };
    assert_eq!(p.enumerate(100).unwrap().order(), 2);
    assert!(h1(&x).unwrap().abelian().unwrap().is_trivial());
    assert!(is_weak_equivalence(&CrossMorphism::identity(&x)).unwrap());

    let w = wedge_model(1, &PointedSet::with(&["a", "b"])).unwrap();
    let H0::Presented(p) = h0(&w).unwrap() else { panic!() };
    assert_eq!(p.free_rank_if_free(), Some(2));
    assert!(matches!(is_weak_equivalence(&CrossMorphism::identity(&w)), Err(Error::H0Undecidable { .. })));
}

#[test]
fn conjugation_module_is_contractible() {
    let n = free_nil_on(&["a", "b"]);
    let x = CrossObject::Crossed(conjugation_module(&n));
    let H0::Group(q) = h0(&x).unwrap() else { panic!() };
    assert!(q.group.is_trivial());
    assert!(h1(&x).unwrap().abelian().unwrap().is_trivial());
}
