use crate::abelian::FinAbGroup;
use crate::cross::{tensor_group, Base, CrossMorphism, CrossObject, CrossedModule, GroupMap, QuadModule};
use crate::error::{Error, Result};
use crate::matrix::{int, Int};
use crate::models::wedge_model;
use crate::nil2::{self, free_nil, free_nil_on, nil_hom_from_words, Class2Group, Class2Hom, FreeWord, PointedSet};
use crate::quadratic;

pub fn cyclic(n: i64, name: &str) -> Class2Group {
    Class2Group::from_abelian(&FinAbGroup::cyclic(n), vec![name.into()])
}

/// The dihedral group of order 8 as `⟨a, b⟩_nil / (a², b²)`.
pub fn dihedral() -> Class2Group {
    let g = free_nil_on(&["a", "b"]);
    let two = int(2);
    nil2::quotient(&g, &[g.pow(&g.gen(0), &two), g.pow(&g.gen(1), &two)]).expect("quotient").group
}

/// The quaternion group as `⟨i, j⟩_nil / (i² = j² = [i, j])`.
pub fn quaternion() -> Class2Group {
    let g = free_nil_on(&["i", "j"]);
    let two = int(2);
    let c = g.commutator(&g.gen(0), &g.gen(1));
    let r1 = g.mul(&g.pow(&g.gen(0), &two), &g.inv(&c));
    let r2 = g.mul(&g.pow(&g.gen(1), &two), &g.inv(&c));
    nil2::quotient(&g, &[r1, r2]).expect("quotient").group
}

/// `⊗²N_ab →ω M →∂ N` with `M = ⊗²N_ab` (level 2) or `⊗̂²N_ab` (level ≥ 3), `ω` the projection
/// and `∂(x ⊗ y) = [x, y]`.
pub fn universal_module(n: &Class2Group, level: u32) -> Result<QuadModule> {
    let nab = n.ab_reduced();
    let t = tensor_group(&nab);
    let r = nab.group.ngens();
    let m = if level >= 3 {
        Class2Group::from_abelian(&quadratic::reduced_tensor_square(&nab.group), t.cnames().to_vec())
    } else {
        t
    };
    let lifts: Vec<_> = (0..r).map(|i| nab.lift_gen(n, i)).collect();
    let del = Class2Hom::new(
        m.clone(),
        n.clone(),
        (0..r * r).map(|i| n.commutator(&lifts[i / r], &lifts[i % r])).collect(),
    )?;
    let omega = (0..r * r).map(|i| m.gen(i)).collect();
    QuadModule::new(level, m, n.clone(), del, omega)
}

pub fn trivial_module(level: u32) -> QuadModule {
    universal_module(&Class2Group::trivial(), level).expect("trivial module")
}

/// `N →id N` with conjugation action.
pub fn conjugation_module(n: &Class2Group) -> Result<CrossedModule> {
    let base = Base::Nil(n.clone());
    let action = (0..n.ngens())
        .map(|i| {
            let g = n.gen(i);
            Class2Hom::new(n.clone(), n.clone(), (0..n.ngens()).map(|j| n.conj(&n.gen(j), &g)).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    CrossedModule::new(n.clone(), base.clone(), GroupMap::identity(&base), action)
}

/// `Z/m → Z/n`, `1 ↦ image`, trivial action.
pub fn cyclic_crossed(m: i64, n: i64, image: i64) -> Result<CrossedModule> {
    let (gm, gn) = (cyclic(m, "u"), cyclic(n, "z"));
    let del = Class2Hom::new(gm.clone(), gn.clone(), vec![gn.from_central(&[int(image)])])?;
    CrossedModule::trivial_action(gm, Base::Nil(gn), GroupMap::from_class2(&del))
}

/// `0 → ⟨E⟩`.
pub fn free_point(e: &PointedSet) -> CrossedModule {
    match wedge_model(1, e).expect("wedge model") {
        CrossObject::Crossed(c) => c,
        _ => unreachable!(),
    }
}

/// The morphism of wedge models at level `n ≥ 2` induced by sending the letters of `a` to words in `b`:
/// `f0` on nil-groups and `f1 = ⊗²_n(f0_ab)`.
pub fn wedge_morphism(n: u32, a: &PointedSet, b: &PointedSet, words: &[FreeWord]) -> Result<CrossMorphism> {
    if n < 2 {
        return Err(Error::Invalid("wedge morphisms are built at level 2 and above".into()));
    }
    let x = wedge_model(n, a)?;
    let y = wedge_model(n, b)?;
    let (CrossObject::Quadratic(x), CrossObject::Quadratic(y)) = (x, y) else { unreachable!() };
    let f0 = nil_hom_from_words(a, &free_nil(b), words)?;
    let cols: Vec<Vec<Int>> = words
        .iter()
        .map(|w| {
            let mut v = vec![int(0); b.len()];
            for &(i, e) in &w.letters {
                v[i] += int(e as i64);
            }
            v
        })
        .collect();
    let k = a.len();
    let images = (0..k * k).map(|idx| y.m.from_central(&quadratic::tensor(&cols[idx / k], &cols[idx % k]))).collect();
    let f1 = Class2Hom::new(x.m.clone(), y.m.clone(), images)?;
    CrossMorphism::quadratic(x, y, f1, f0)
}
