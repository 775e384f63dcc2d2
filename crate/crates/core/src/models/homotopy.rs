use num_traits::ToPrimitive;

use crate::abelian::{AbMap, FinAbGroup};
use crate::cross::{h0, h1, CrossMorphism, CrossObject, QuadModule, H0, H1};
use crate::error::{Error, Result};
use crate::functors::{ad2, ad3};
use crate::matrix::IntMatrix;
use crate::nil2::{self, Class2Hom, PointedSet};
use crate::quadratic;

use super::wedge::wedge_model;

/// `π_n = h0` and `π_{n+1} = h1` of a model, with a note on where they come from.
#[derive(Clone, Debug)]
pub struct HomotopyGroups {
    pub pi_n: H0,
    pub pi_n1: H1,
    pub provenance: String,
}

pub fn homotopy_groups(x: &CrossObject) -> Result<HomotopyGroups> {
    let pi_n = h0(x)?;
    let pi_n1 = h1(x)?;
    let provenance = format!("level {} model: π_n = coker ∂, π_(n+1) = ker ∂", x.level());
    Ok(HomotopyGroups { pi_n, pi_n1, provenance })
}

/// `k: Γ_n(h0) → h1`.
#[derive(Clone, Debug)]
pub struct KInvariant {
    pub n: u32,
    pub map: AbMap,
    /// Sign of `ω(γ(e))` in `M` when `M` is infinite cyclic on one generator.
    pub sign: Option<i64>,
}

/// `h0 = N/∂M` as an abelian group with the projection from `N_ab`.
fn h0_abelian(x: &QuadModule) -> Result<(FinAbGroup, AbMap)> {
    let q = nil2::cokernel(&x.del)?;
    if !q.group.is_abelian() {
        return Err(Error::Invalid("h0 of a quadratic module must be abelian".into()));
    }
    let a = q.group.abelianization();
    let r = x.nab.group.ngens();
    let cols = (0..r).map(|i| q.group.ab_coords(&q.proj.apply(&x.nab.lift_gen(&x.base, i)))).collect();
    let proj = AbMap::new(x.nab.group.clone(), a.clone(), IntMatrix::from_cols(q.group.ngens(), cols))?;
    Ok((a, proj))
}

/// Lift along `Γ_n(N_ab) → Γ_n(h0)`, include into `⊗²_n N_ab`, apply `ω` and read off in `h1 = ker ∂`.
pub fn k_invariant(x: &CrossObject) -> Result<KInvariant> {
    let q = x.as_quadratic()?;
    let n = q.level;
    let H1::Abelian { group: h1g, sub } = h1(x)? else { unreachable!() };
    let (_, proj) = h0_abelian(q)?;
    let nab = &q.nab.group;
    let incl = quadratic::gamma_n_inclusion(n, nab)?;
    let t = q.tensor_group();
    let mut cols = Vec::with_capacity(incl.source.ngens());
    let mut sign = None;
    for v in incl.matrix.col_vecs() {
        let w = q.omega.apply(&t.from_central(&v));
        // sign of ω(γ(e)) when M is presented as Z on one generator
        if sign.is_none() && q.m.ngens() == 1 && q.m.is_abelian() && q.m.abelianization().free_rank() == 1 {
            sign = w.q.iter().chain(&w.c).next().and_then(|c| c.to_i64()).map(i64::signum).filter(|&s| s != 0);
        }
        let z = sub.restrict(&w).ok_or_else(|| {
            Error::NotWellDefined(format!("ω∘γ lands outside ker ∂: {}", q.m.show(&w)))
        })?;
        cols.push(sub.group.ab_coords(&z));
    }
    let lifted = AbMap::new(incl.source.clone(), h1g.clone(), IntMatrix::from_cols(h1g.ngens(), cols))?;
    let gq = quadratic::gamma_n_map(n, &proj)?;
    let (_, kincl) = gq.kernel();
    for v in kincl.matrix.col_vecs() {
        if !h1g.is_zero(&lifted.apply(&v)) {
            return Err(Error::NotWellDefined(format!(
                "the lift depends on choices: kernel element {:?} maps to {:?}",
                v,
                lifted.apply(&v)
            )));
        }
    }
    let gh0 = gq.target.clone();
    let images = (0..gh0.ngens())
        .map(|i| {
            let pre = gq.preimage(&gh0.gen(i)).expect("Γ_n preserves surjections");
            lifted.apply(&pre)
        })
        .collect();
    let map = AbMap::from_images(gh0.clone(), h1g.clone(), images)?;
    Ok(KInvariant { n, map, sign })
}

/// An explicit morphism between two models with its verdicts.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub morphism: CrossMorphism,
    pub isomorphism: bool,
    pub weak_equivalence: bool,
}

fn compare(morphism: CrossMorphism) -> Result<Comparison> {
    let isomorphism = nil2::is_isomorphism(morphism.f1()?)? && nil2::is_isomorphism(&morphism.f0()?.as_class2()?)?;
    let weak_equivalence = crate::cross::is_weak_equivalence(&morphism)?;
    Ok(Comparison { morphism, isomorphism, weak_equivalence })
}

/// `Ad₃(wedgeModel(2, E)) → wedgeModel(3, E)`, the identity on generators of `⊗²Z[E]` and on `⟨E⟩_nil`.
pub fn suspension_comparison(e: &PointedSet) -> Result<Comparison> {
    let x2 = wedge_model(2, e)?;
    let s = ad3(x2.as_quadratic()?)?;
    let w3 = wedge_model(3, e)?;
    let w3 = w3.as_quadratic()?;
    let ms = &s.module.m;
    let images = (0..ms.ngens())
        .map(|i| {
            let lift = s.quotient.lift(&ms.gen(i));
            w3.m.from_central(&lift.c)
        })
        .collect();
    let f1 = Class2Hom::new(ms.clone(), w3.m.clone(), images)?;
    let f0 = Class2Hom::identity(&w3.base);
    compare(CrossMorphism::quadratic(s.module.clone(), w3.clone(), f1, f0)?)
}

/// `wedgeModel(2, E) → Ad₂(0 → ⟨E⟩)`, sending `x ⊗ y` to `ω(x ⊗ y)`.
pub fn circle_comparison(e: &PointedSet) -> Result<Comparison> {
    let CrossObject::Crossed(c) = wedge_model(1, e)? else { unreachable!() };
    let s = ad2(&c)?;
    let w2 = wedge_model(2, e)?;
    let w2 = w2.as_quadratic()?;
    let f1 = Class2Hom::new(w2.m.clone(), s.module.m.clone(), s.module.omega.images().to_vec())?;
    let f0 = Class2Hom::identity(&w2.base);
    compare(CrossMorphism::quadratic(w2.clone(), s.module, f1, f0)?)
}
