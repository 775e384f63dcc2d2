use crate::error::{Error, Result};
use crate::nil2::{Class2Hom, GroupLike};

use super::base::{BaseElem, GroupMap};
use super::groupoid::GroupoidFunctor;
use super::objects::{CrossObject, CrossedModule, QuadModule};

/// A morphism of `cross(n)`.
#[derive(Clone, Debug, PartialEq)]
pub enum CrossMorphism {
    Functor(GroupoidFunctor),
    Crossed { source: CrossedModule, target: CrossedModule, f1: Class2Hom, f0: GroupMap },
    Quadratic { source: QuadModule, target: QuadModule, f1: Class2Hom, f0: Class2Hom },
}

impl CrossMorphism {
    pub fn crossed(source: CrossedModule, target: CrossedModule, f1: Class2Hom, f0: GroupMap) -> Result<Self> {
        if f1.source != source.m || f1.target != target.m || f0.source != source.base || f0.target != target.base {
            return Err(Error::Invalid("component maps do not match the endpoints".into()));
        }
        let (m, n) = (&source.m, &source.base);
        let names = m.gen_names();
        for a in 0..m.ngens() {
            let x = m.gen(a);
            let lhs = target.del.apply(&BaseElem::Nil(f1.apply(&x)));
            let rhs = f0.apply(&source.del.apply(&BaseElem::Nil(x.clone())));
            if !target.base.equal(&lhs, &rhs) {
                return Err(Error::Invalid(format!("∂'f1 ≠ f0∂ on {}", names[a])));
            }
            for b in 0..n.ngens() {
                let g = n.gen(b);
                if f1.apply(&source.act(&x, &g)) != target.act(&f1.apply(&x), &f0.apply(&g)) {
                    return Err(Error::Invalid(format!("action not preserved on ({}, {})", names[a], n.gen_names()[b])));
                }
            }
        }
        Ok(CrossMorphism::Crossed { source, target, f1, f0 })
    }

    pub fn quadratic(source: QuadModule, target: QuadModule, f1: Class2Hom, f0: Class2Hom) -> Result<Self> {
        if source.level != target.level {
            return Err(Error::Invalid("level mismatch".into()));
        }
        if f1.source != source.m || f1.target != target.m || f0.source != source.base || f0.target != target.base {
            return Err(Error::Invalid("component maps do not match the endpoints".into()));
        }
        let m = &source.m;
        let names = m.gen_names();
        for a in 0..m.ngens() {
            let x = m.gen(a);
            if target.del.apply(&f1.apply(&x)) != f0.apply(&source.del.apply(&x)) {
                return Err(Error::Invalid(format!("∂'f1 ≠ f0∂ on {}", names[a])));
            }
        }
        let r = source.nab.group.ngens();
        for i in 0..r {
            for j in 0..r {
                let (x, y) = (source.nab.lift_gen(&source.base, i), source.nab.lift_gen(&source.base, j));
                let lhs = f1.apply(&source.omega_pair(&x, &y));
                let rhs = target.omega_pair(&f0.apply(&x), &f0.apply(&y));
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "f1ω ≠ ω'⊗²f0 on {}⊗{}",
                        source.nab.names[i], source.nab.names[j]
                    )));
                }
            }
        }
        Ok(CrossMorphism::Quadratic { source, target, f1, f0 })
    }

    pub fn source(&self) -> CrossObject {
        match self {
            CrossMorphism::Functor(f) => CrossObject::Groupoid(f.source.clone()),
            CrossMorphism::Crossed { source, .. } => CrossObject::Crossed(source.clone()),
            CrossMorphism::Quadratic { source, .. } => CrossObject::Quadratic(source.clone()),
        }
    }

    pub fn target(&self) -> CrossObject {
        match self {
            CrossMorphism::Functor(f) => CrossObject::Groupoid(f.target.clone()),
            CrossMorphism::Crossed { target, .. } => CrossObject::Crossed(target.clone()),
            CrossMorphism::Quadratic { target, .. } => CrossObject::Quadratic(target.clone()),
        }
    }

    pub fn level(&self) -> u32 {
        match self {
            CrossMorphism::Functor(_) => 0,
            CrossMorphism::Crossed { .. } => 1,
            CrossMorphism::Quadratic { source, .. } => source.level,
        }
    }

    pub fn identity(x: &CrossObject) -> Self {
        match x {
            CrossObject::Groupoid(g) => CrossMorphism::Functor(GroupoidFunctor::identity(g)),
            CrossObject::Crossed(c) => CrossMorphism::Crossed {
                source: c.clone(),
                target: c.clone(),
                f1: Class2Hom::identity(&c.m),
                f0: GroupMap::identity(&c.base),
            },
            CrossObject::Quadratic(q) => CrossMorphism::Quadratic {
                source: q.clone(),
                target: q.clone(),
                f1: Class2Hom::identity(&q.m),
                f0: Class2Hom::identity(&q.base),
            },
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &CrossMorphism) -> Result<CrossMorphism> {
        if self.level() != other.level() {
            return Err(Error::Invalid(format!("level mismatch: {} then {}", self.level(), other.level())));
        }
        if self.target() != other.source() {
            return Err(Error::Invalid("morphisms are not composable".into()));
        }
        Ok(match (self, other) {
            (CrossMorphism::Functor(f), CrossMorphism::Functor(g)) => CrossMorphism::Functor(f.then(g)),
            (CrossMorphism::Crossed { source, f1, f0, .. }, CrossMorphism::Crossed { target, f1: g1, f0: g0, .. }) => {
                CrossMorphism::Crossed { source: source.clone(), target: target.clone(), f1: f1.then(g1), f0: f0.then(g0) }
            }
            (
                CrossMorphism::Quadratic { source, f1, f0, .. },
                CrossMorphism::Quadratic { target, f1: g1, f0: g0, .. },
            ) => CrossMorphism::Quadratic { source: source.clone(), target: target.clone(), f1: f1.then(g1), f0: f0.then(g0) },
            _ => return Err(Error::Invalid("level mismatch".into())),
        })
    }

    /// Same components on generators.
    pub fn equals(&self, other: &CrossMorphism) -> bool {
        match (self, other) {
            (CrossMorphism::Functor(f), CrossMorphism::Functor(g)) => f == g,
            (CrossMorphism::Crossed { f1, f0, .. }, CrossMorphism::Crossed { f1: g1, f0: g0, .. }) => {
                f1.equals(g1) && f0.equals(g0)
            }
            (CrossMorphism::Quadratic { f1, f0, .. }, CrossMorphism::Quadratic { f1: g1, f0: g0, .. }) => {
                f1.equals(g1) && f0.equals(g0)
            }
            _ => false,
        }
    }

    pub fn f1(&self) -> Result<&Class2Hom> {
        match self {
            CrossMorphism::Crossed { f1, .. } | CrossMorphism::Quadratic { f1, .. } => Ok(f1),
            CrossMorphism::Functor(_) => Err(Error::Invalid("groupoid functors have no f1".into())),
        }
    }

    /// `f0` as a map of base groups.
    pub fn f0(&self) -> Result<GroupMap> {
        match self {
            CrossMorphism::Crossed { f0, .. } => Ok(f0.clone()),
            CrossMorphism::Quadratic { f0, .. } => Ok(GroupMap::from_class2(f0)),
            CrossMorphism::Functor(_) => Err(Error::Invalid("groupoid functors have no f0".into())),
        }
    }
}
