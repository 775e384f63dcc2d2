use crate::cross::{tensor_group, Base, BaseElem, CrossMorphism, CrossedModule, GroupMap, QuadModule};
use crate::error::{Error, Result};
use crate::nil2::{self, direct_product, Class2Elem, Class2Hom, Quotient};
use crate::quadratic;

use super::loops::{phi2, phi3};

/// A left adjoint applied to `x`, with the unit `x → φ Ad x`.
#[derive(Clone, Debug)]
pub struct Suspended {
    pub module: QuadModule,
    pub unit: CrossMorphism,
    pub quotient: Quotient,
}

/// Stabilization: `M` modulo `ω(a⊗b + b⊗a)`.
pub fn ad3(x: &QuadModule) -> Result<Suspended> {
    let m = &x.m;
    let r = x.nab.group.ngens();
    let mut rels = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let (a, b) = (x.nab.lift_gen(&x.base, i), x.nab.lift_gen(&x.base, j));
            let s = m.mul(&x.omega_pair(&a, &b), &x.omega_pair(&b, &a));
            if !m.is_central(&s) {
                return Err(Error::NotCentral(format!(
                    "ω({0}⊗{1} + {1}⊗{0}) = {2}",
                    x.nab.names[i],
                    x.nab.names[j],
                    m.show(&s)
                )));
            }
            rels.push(s);
        }
    }
    let q = nil2::quotient(m, &rels)?;
    let ms = q.group.clone();
    let del_images = (0..ms.ngens()).map(|i| x.del.apply(&q.lift(&ms.gen(i)))).collect();
    let del = Class2Hom::new(ms.clone(), x.base.clone(), del_images)?;
    let omega = x.omega.images().iter().map(|w| q.proj.apply(w)).collect();
    let module = QuadModule::new(x.level.max(3), ms, x.base.clone(), del, omega)?;
    let mut stable_as_reduced = module.clone();
    stable_as_reduced.level = x.level;
    let unit = CrossMorphism::quadratic(x.clone(), stable_as_reduced, q.proj.clone(), Class2Hom::identity(&x.base))?;
    Ok(Suspended { module, unit, quotient: q })
}

/// Quadratic suspension: `(M × ⊗²N_ab)` modulo `(−m + m^n, 0) = (0, {∂m}⊗{n}) = (0, −{n}⊗{∂m})`.
pub fn ad2(x: &CrossedModule) -> Result<Suspended> {
    let m = &x.m;
    let base = &x.base;
    let nnil = base.nil();
    let nab = nnil.ab_reduced();
    let t = tensor_group(&nab);
    let pm = direct_product(m, &t);
    let p = &pm.group;
    let class = |n: &BaseElem| nab.class(&nnil, &base.to_nil(n));
    let tens = |a: &[crate::matrix::Int], b: &[crate::matrix::Int]| t.from_central(&quadratic::tensor(a, b));
    // relations on generators generate all of them, see the ledger
    let mut rels = Vec::new();
    for a in 0..m.ngens() {
        let g = m.gen(a);
        let dg = class(&x.del.apply(&BaseElem::Nil(g.clone())));
        for b in 0..base.ngens() {
            let n = base.gen(b);
            let cn = class(&n);
            let lhs = m.mul(&m.inv(&g), &x.act(&g, &n));
            rels.push(p.join(&lhs, &t.inv(&tens(&dg, &cn))));
            rels.push(p.join(&m.identity(), &t.mul(&tens(&dg, &cn), &tens(&cn, &dg))));
        }
    }
    let q = nil2::quotient(p, &rels)?;

    let del_m = GroupMap::new(
        Base::Nil(m.clone()),
        Base::Nil(nnil.clone()),
        (0..m.ngens()).map(|a| BaseElem::Nil(base.to_nil(&x.del.apply(&BaseElem::Nil(m.gen(a)))))).collect(),
    )?
    .as_class2()?;
    let r = nab.group.ngens();
    let lifts: Vec<Class2Elem> = (0..r).map(|i| nab.lift_gen(&nnil, i)).collect();
    let del_t = Class2Hom::new(
        t.clone(),
        nnil.clone(),
        (0..r * r).map(|i| nnil.commutator(&lifts[i / r], &lifts[i % r])).collect(),
    )?;
    let del_p = Class2Hom::new(
        p.clone(),
        nnil.clone(),
        (0..p.ngens())
            .map(|i| {
                let g = p.gen(i);
                nnil.mul(&del_m.apply(&pm.pr1.apply(&g)), &del_t.apply(&pm.pr2.apply(&g)))
            })
            .collect(),
    )?;
    if let Some(bad) = rels.iter().find(|r| !nnil.is_identity(&del_p.apply(r))) {
        return Err(Error::NotWellDefined(format!("δ does not kill the relation {}", p.show(bad))));
    }
    let mq = q.group.clone();
    let del = Class2Hom::new(
        mq.clone(),
        nnil.clone(),
        (0..mq.ngens()).map(|i| del_p.apply(&q.lift(&mq.gen(i)))).collect(),
    )?;
    let omega = (0..r * r).map(|i| q.proj.apply(&pm.in2.apply(&t.gen(i)))).collect();
    let module = QuadModule::new(2, mq.clone(), nnil.clone(), del, omega)?;

    let f1 = pm.in1.then(&q.proj);
    let f0 = GroupMap::new(
        base.clone(),
        Base::Nil(nnil.clone()),
        (0..base.ngens()).map(|b| BaseElem::Nil(base.to_nil(&base.gen(b)))).collect(),
    )?;
    let unit = CrossMorphism::crossed(x.clone(), phi2(&module)?, f1, f0)?;
    Ok(Suspended { module, unit, quotient: q })
}

/// `ε: Ad₂ φ₂ y → y`, `(m, t) ↦ m + ω(t)` on the identity of `N`.
pub fn counit2(y: &QuadModule) -> Result<CrossMorphism> {
    let s = ad2(&phi2(y)?)?;
    let (m, t) = (&y.m, y.tensor_group());
    let pm = direct_product(m, t);
    let q = &s.quotient;
    let images = (0..s.module.m.ngens())
        .map(|i| {
            let z = q.lift(&s.module.m.gen(i));
            m.mul(&pm.pr1.apply(&z), &y.omega.apply(&pm.pr2.apply(&z)))
        })
        .collect();
    let f1 = Class2Hom::new(s.module.m.clone(), m.clone(), images)?;
    CrossMorphism::quadratic(s.module, y.clone(), f1, Class2Hom::identity(&y.base))
}

/// `ε: Ad₃ φ₃ y → y`, induced by the identity of `M`.
pub fn counit3(y: &QuadModule) -> Result<CrossMorphism> {
    let s = ad3(&phi3(y)?)?;
    let ms = &s.module.m;
    let images = (0..ms.ngens()).map(|i| s.quotient.lift(&ms.gen(i))).collect();
    let f1 = Class2Hom::new(ms.clone(), y.m.clone(), images)?;
    let mut module = s.module;
    module.level = y.level;
    CrossMorphism::quadratic(module, y.clone(), f1, Class2Hom::identity(&y.base))
}
