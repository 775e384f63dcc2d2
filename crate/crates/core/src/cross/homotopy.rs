use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};
use crate::nil2::{self, Class2Elem, FreeWord, GroupLike, Quotient, Subgroup};

use super::base::{kernel_into_free, Base, BaseElem};
use super::coset::PresentedGroup;
use super::finite::FiniteGroup;
use super::morphism::CrossMorphism;
use super::objects::{CrossObject, CrossedModule};

/// Default coset cap for free-group bases.
pub const COSET_CAP: usize = 10_000;

/// `h0 = coker ∂`.
#[derive(Clone, Debug)]
pub enum H0 {
    /// Isomorphism classes of a groupoid; the class of `*` first.
    Classes(Vec<Vec<usize>>),
    /// Exact cokernel over a class-2 base.
    Group(Quotient),
    /// `⟨E | ∂(M)⟩` over a free base.
    Presented(PresentedGroup),
}

/// `h1 = ker ∂`.
#[derive(Clone, Debug)]
pub enum H1 {
    /// `Aut(*)` of a groupoid.
    Automorphisms(FiniteGroup),
    /// A central subgroup of `M`, with its presentation as an abelian group.
    Abelian { group: FinAbGroup, sub: Subgroup },
}

impl H0 {
    pub fn describe(&self) -> String {
        match self {
            H0::Classes(c) => format!("{} isomorphism classes", c.len()),
            H0::Group(q) => q.group.describe(),
            H0::Presented(p) => match p.free_rank_if_free() {
                Some(r) => format!("free group of rank {}", r),
                None => format!("presented group with abelianization {}", p.abelianization().describe()),
            },
        }
    }

    /// The abelianization, exact in every case.
    pub fn abelianization(&self) -> Result<FinAbGroup> {
        match self {
            H0::Classes(_) => Err(Error::Invalid("h0 of a groupoid is a pointed set".into())),
            H0::Group(q) => Ok(q.group.abelianization()),
            H0::Presented(p) => Ok(p.abelianization()),
        }
    }
}

impl H1 {
    pub fn abelian(&self) -> Result<&FinAbGroup> {
        match self {
            H1::Abelian { group, .. } => Ok(group),
            H1::Automorphisms(_) => Err(Error::Invalid("h1 of a groupoid is not presented as an abelian group".into())),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            H1::Automorphisms(g) => format!("group of order {}", g.order()),
            H1::Abelian { group, .. } => group.describe(),
        }
    }
}

pub fn h0(x: &CrossObject) -> Result<H0> {
    match x {
        CrossObject::Groupoid(g) => Ok(H0::Classes(g.iso_classes())),
        CrossObject::Crossed(c) => match &c.base {
            Base::Nil(n) => {
                let rels: Vec<Class2Elem> =
                    c.del.images().iter().map(|y| y.as_nil().cloned()).collect::<Result<_>>()?;
                Ok(H0::Group(nil2::quotient(n, &rels)?))
            }
            Base::Free(s) => Ok(H0::Presented(PresentedGroup {
                gens: s.clone(),
                relators: c.del.images().iter().map(|y| y.as_word().cloned()).collect::<Result<_>>()?,
            })),
        },
        CrossObject::Quadratic(q) => Ok(H0::Group(nil2::cokernel(&q.del)?)),
    }
}

fn abelian_kernel(sub: Subgroup) -> Result<H1> {
    let m = sub.ambient();
    if let Some(x) = sub.incl.images().iter().find(|x| !m.is_central(x)) {
        return Err(Error::NotCentral(format!("ker ∂ contains the non-central element {}", m.show(x))));
    }
    let group = nil2::as_abelian_group(&sub.group)?;
    Ok(H1::Abelian { group, sub })
}

pub fn h1(x: &CrossObject) -> Result<H1> {
    match x {
        CrossObject::Groupoid(g) => Ok(H1::Automorphisms(g.automorphisms(0).0)),
        CrossObject::Crossed(c) => abelian_kernel(crossed_kernel(c)?),
        CrossObject::Quadratic(q) => abelian_kernel(nil2::kernel(&q.del)?),
    }
}

fn crossed_kernel(c: &CrossedModule) -> Result<Subgroup> {
    match &c.base {
        Base::Nil(_) => nil2::kernel(&c.del.as_class2()?),
        Base::Free(_) => {
            let words: Vec<FreeWord> = c.del.images().iter().map(|y| y.as_word().cloned()).collect::<Result<_>>()?;
            kernel_into_free(&c.m, &words)
        }
    }
}

/// Whether `f` induces isomorphisms on `h0` and `h1`.
pub fn is_weak_equivalence(f: &CrossMorphism) -> Result<bool> {
    if let CrossMorphism::Functor(func) = f {
        return Ok(func.is_weak_equivalence());
    }
    let (src, tgt) = (f.source(), f.target());
    let f1 = f.f1()?;
    let f0 = f.f0()?;
    // h1
    let (H1::Abelian { sub: k1, .. }, H1::Abelian { sub: k2, .. }) = (h1(&src)?, h1(&tgt)?) else {
        unreachable!("modules have abelian h1")
    };
    let images: Vec<Class2Elem> = k1
        .incl
        .images()
        .iter()
        .map(|x| k2.restrict(&f1.apply(x)).expect("f1 maps kernel to kernel"))
        .collect();
    let h1map = nil2::Class2Hom::new(k1.group.clone(), k2.group.clone(), images)?;
    if !nil2::is_isomorphism(&h1map)? {
        return Ok(false);
    }
    // h0
    match (h0(&src)?, h0(&tgt)?) {
        (H0::Group(q1), H0::Group(q2)) => {
            let g0 = f0.as_class2()?;
            nil2::is_isomorphism(&q1.induced(&q2, &g0)?)
        }
        (H0::Presented(p1), H0::Presented(p2)) => {
            let t1 = p1.enumerate(COSET_CAP)?;
            let t2 = p2.enumerate(COSET_CAP)?;
            if t1.order() != t2.order() {
                return Ok(false);
            }
            let mut seen = vec![false; t2.order()];
            for w in t1.representatives() {
                let img = f0.apply(&BaseElem::Word(w));
                let c = t2.trace(0, img.as_word()?);
                if seen[c] {
                    return Ok(false);
                }
                seen[c] = true;
            }
            Ok(true)
        }
        (H0::Presented(p1), H0::Group(q2)) => {
            // finite presented source: compare through the regular representation
            let t1 = p1.enumerate(COSET_CAP)?;
            let target = &q2.group;
            if target.order().map(|o| o != crate::matrix::int(t1.order() as i64)).unwrap_or(true) {
                return Ok(false);
            }
            let mut imgs = std::collections::HashSet::new();
            for w in t1.representatives() {
                let y = f0.apply(&BaseElem::Word(w));
                imgs.insert(q2.proj.apply(y.as_nil()?));
            }
            Ok(imgs.len() == t1.order())
        }
        (H0::Group(_), H0::Presented(_)) => Err(Error::H0Undecidable { cap: COSET_CAP as u64 }),
        _ => unreachable!("levels agree"),
    }
}

/// `h0` elements over a class-2 base are equal iff their images in the quotient agree.
pub fn h0_equal(x: &CrossObject, a: &BaseElem, b: &BaseElem) -> Result<bool> {
    match h0(x)? {
        H0::Group(q) => Ok(q.proj.apply(a.as_nil()?) == q.proj.apply(b.as_nil()?)),
        H0::Presented(p) => {
            let t = p.enumerate(COSET_CAP)?;
            let base = Base::Free(p.gens.clone());
            let d = base.mul(&base.inv(a), b);
            Ok(t.trace(0, d.as_word()?) == 0)
        }
        H0::Classes(_) => Err(Error::Invalid("use iso classes for groupoids".into())),
    }
}
