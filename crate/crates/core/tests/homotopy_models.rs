use sechom::abelian::FinAbGroup;
use sechom::cross::{CrossMorphism, CrossObject, QuadModule, H0};
use sechom::matrix::int;
use sechom::models::{circle_comparison, homotopy_groups, k_invariant, suspension_comparison, wedge_model};
use sechom::nil2::{free_nil, Class2Hom, FreeWord, PointedSet};
use sechom::quadratic;
use sechom::verify::fixtures::wedge_morphism;

fn h0_ab(x: &CrossObject) -> FinAbGroup {
    match homotopy_groups(x).unwrap().pi_n {
        H0::Group(q) => {
            assert!(q.group.is_abelian());
            q.group.abelianization()
        }
        H0::Presented(p) => p.abelianization(),
        H0::Classes(_) => panic!("groupoid"),
    }
}

#[test]
fn wedge_model_shapes() {
    let one = wedge_model(1, &PointedSet::with(&["e"])).unwrap();
    assert!(one.top().unwrap().is_trivial());
    let two = wedge_model(2, &PointedSet::with(&["e"])).unwrap();
    let q = two.as_quadratic().unwrap();
    assert!(q.del.is_trivial());
    assert!(q.m.abelianization().is_isomorphic(&FinAbGroup::free(1)));
    let three = wedge_model(3, &PointedSet::with(&["a", "b"])).unwrap();
    let q = three.as_quadratic().unwrap();
    let expected = FinAbGroup::free(1).direct_sum(&FinAbGroup::cyclic(2)).direct_sum(&FinAbGroup::cyclic(2));
    assert!(q.m.abelianization().is_isomorphic(&expected));
    assert!(q.omega.source.abelianization().is_isomorphic(&FinAbGroup::free(4)));
}

#[test]
fn spheres() {
    let e = PointedSet::with(&["e"]);
    let x3 = wedge_model(3, &e).unwrap();
    let g = homotopy_groups(&x3).unwrap();
    assert!(g.pi_n1.abelian().unwrap().is_isomorphic(&FinAbGroup::cyclic(2)));
    assert!(h0_ab(&x3).is_isomorphic(&FinAbGroup::free(1)));
    let x2 = wedge_model(2, &e).unwrap();
    let g = homotopy_groups(&x2).unwrap();
    assert!(g.pi_n1.abelian().unwrap().is_isomorphic(&FinAbGroup::free(1)));
    assert!(h0_ab(&x2).is_isomorphic(&FinAbGroup::free(1)));
}

#[test]
fn wedges_of_two_spheres_have_gamma_rank_h1() {
    for k in 1..=4 {
        let x = wedge_model(2, &PointedSet::numbered(k)).unwrap();
        let g = homotopy_groups(&x).unwrap();
        assert!(g.pi_n1.abelian().unwrap().is_isomorphic(&FinAbGroup::free(k * (k + 1) / 2)));
        // h0 is the abelianization Z[E] of ⟨E⟩_nil, since ∂ hits every commutator
        assert!(h0_ab(&x).is_isomorphic(&FinAbGroup::free(k)));
        let pts = FinAbGroup::free(k);
        assert!(quadratic::gamma(&pts).is_isomorphic(g.pi_n1.abelian().unwrap()));
    }
}

#[test]
fn stable_wedges_have_two_torsion_h1() {
    for n in 3..=5 {
        for k in 1..=4 {
            let x = wedge_model(n, &PointedSet::numbered(k)).unwrap();
            let g = homotopy_groups(&x).unwrap();
            let expected = FinAbGroup::from_orders(&vec![int(2); k]);
            assert!(g.pi_n1.abelian().unwrap().is_isomorphic(&expected), "n={} k={}", n, k);
        }
    }
}

#[test]
fn eta_is_the_k_invariant_of_a_sphere() {
    for n in 2..=5 {
        let x = wedge_model(n, &PointedSet::with(&["e"])).unwrap();
        let k = k_invariant(&x).unwrap();
        assert!(k.map.is_iso(), "n={}", n);
        if n == 2 {
            assert!(k.map.source.is_isomorphic(&FinAbGroup::free(1)));
            assert_eq!(k.sign, Some(1));
        } else {
            assert!(k.map.source.is_isomorphic(&FinAbGroup::cyclic(2)));
        }
    }
}

#[test]
fn k_invariant_of_wedges_is_an_isomorphism() {
    for n in 2..=3 {
        for k in 1..=3 {
            let x = wedge_model(n, &PointedSet::numbered(k)).unwrap();
            assert!(k_invariant(&x).unwrap().map.is_iso());
        }
    }
}

#[test]
fn zero_omega_gives_zero_k_invariant() {
    // ⊗²Z[e] →0 Z →0 Z: the axioms hold because ∂ = 0 and [e, e] = 1
    let e = PointedSet::with(&["e"]);
    let base = free_nil(&e);
    let m = sechom::verify::fixtures::cyclic(0, "m");
    let del = Class2Hom::trivial(&m, &base);
    let q = QuadModule::new(2, m.clone(), base, del, vec![m.identity()]).unwrap();
    let x = CrossObject::Quadratic(q);
    assert!(x.check_axioms().is_empty());
    assert!(k_invariant(&x).unwrap().map.is_zero());
}

#[test]
fn k_invariant_is_natural_under_inclusions() {
    for n in [2, 3] {
        let a = PointedSet::with(&["a"]);
        let b = PointedSet::with(&["a", "b"]);
        let f = wedge_morphism(n, &a, &b, &[FreeWord::letter(0)]).unwrap();
        let (x, y) = (f.source(), f.target());
        let (kx, ky) = (k_invariant(&x).unwrap(), k_invariant(&y).unwrap());
        let CrossMorphism::Quadratic { f1, .. } = &f else { panic!() };
        // h1 map, computed on the generators of both kernels
        let hx = homotopy_groups(&x).unwrap().pi_n1;
        let hy = homotopy_groups(&y).unwrap().pi_n1;
        let (sechom::cross::H1::Abelian { sub: sx, .. }, sechom::cross::H1::Abelian { sub: sy, .. }) = (hx, hy) else {
            panic!()
        };
        let h1map_cols: Vec<_> = sx
            .incl
            .images()
            .iter()
            .map(|v| sy.group.ab_coords(&sy.restrict(&f1.apply(v)).unwrap()))
            .collect();
        let h1map = sechom::AbMap::new(
            kx.map.target.clone(),
            ky.map.target.clone(),
            sechom::IntMatrix::from_cols(ky.map.target.ngens(), h1map_cols),
        )
        .unwrap();
        let CrossMorphism::Quadratic { f0, .. } = &f else { panic!() };
        let (qx, qy) = match (homotopy_groups(&x).unwrap().pi_n, homotopy_groups(&y).unwrap().pi_n) {
            (H0::Group(a), H0::Group(b)) => (a, b),
            _ => panic!(),
        };
        let h0map = qx.induced(&qy, f0).unwrap().abelianization();
        let g = quadratic::gamma_n_map(n, &h0map).unwrap();
        let left = kx.map.then(&h1map);
        let right_src = g.then(&ky.map);
        assert!(left.equals(&right_src), "n={}", n);
    }
}

#[test]
fn suspension_comparisons() {
    for k in 0..=3 {
        let e = PointedSet::numbered(k);
        let c = suspension_comparison(&e).unwrap();
        assert!(c.isomorphism && c.weak_equivalence, "k={}", k);
        let c = circle_comparison(&e).unwrap();
        assert!(c.isomorphism && c.weak_equivalence, "k={}", k);
    }
}
