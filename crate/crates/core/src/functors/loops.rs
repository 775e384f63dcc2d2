use std::collections::HashMap;

use crate::cross::{Arrow, Base, BaseElem, CrossMorphism, CrossObject, CrossedModule, GroupMap, PointedGroupoid, QuadModule};
use crate::error::{Error, Result};
use crate::nil2::{Class2Elem, Class2Hom, PointedSet};

/// Forgets stability: the same data at level `n − 1`.
pub fn phi3(x: &QuadModule) -> Result<QuadModule> {
    if x.level < 3 {
        return Err(Error::Invalid(format!("phi3 expects a stable module, got level {}", x.level)));
    }
    let mut y = x.clone();
    y.level -= 1;
    Ok(y)
}

/// The crossed module with action `m^n = m + ω({∂m} ⊗ {n})`.
pub fn phi2(x: &QuadModule) -> Result<CrossedModule> {
    if x.level != 2 {
        return Err(Error::Invalid(format!("phi2 expects a reduced module, got level {}", x.level)));
    }
    let m = &x.m;
    let action = (0..x.base.ngens())
        .map(|i| {
            let n = x.base.gen(i);
            Class2Hom::new(m.clone(), m.clone(), (0..m.ngens()).map(|a| x.act(&m.gen(a), &n)).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    CrossedModule::new(m.clone(), Base::Nil(x.base.clone()), GroupMap::from_class2(&x.del), action)
}

/// The groupoid of `φ₁`, remembering which pair `(n, m)` each arrow is.
#[derive(Clone, Debug)]
pub struct ActionGroupoid {
    pub groupoid: PointedGroupoid,
    pub objects: Vec<Class2Elem>,
    pub pairs: Vec<(usize, usize)>,
    pub m_elems: Vec<Class2Elem>,
    source: CrossedModule,
}

impl ActionGroupoid {
    fn object_index(&self, n: &Class2Elem) -> usize {
        self.objects.iter().position(|x| x == n).expect("element of N")
    }

    fn m_index(&self, m: &Class2Elem) -> usize {
        self.m_elems.iter().position(|x| x == m).expect("element of M")
    }

    pub fn arrow(&self, n: usize, m: usize) -> usize {
        n * self.m_elems.len() + m
    }

    /// `(n, m) + (n', m') = (n + n', m^{n'} + m')`.
    pub fn add(&self, a: usize, b: usize) -> usize {
        let (n, m) = self.pairs[a];
        let (n2, m2) = self.pairs[b];
        let base = self.source.base.as_nil().expect("class-2 base");
        let nn = base.mul(&self.objects[n], &self.objects[n2]);
        let act = self.source.act(&self.m_elems[m], &BaseElem::Nil(self.objects[n2].clone()));
        let mm = self.source.m.mul(&act, &self.m_elems[m2]);
        self.arrow(self.object_index(&nn), self.m_index(&mm))
    }

    /// `i(n) = (n, 0)`.
    pub fn unit(&self, n: usize) -> usize {
        self.arrow(n, self.m_index(&self.source.m.identity()))
    }

    /// `(a ∘ b) + (c ∘ d) = (a + c) ∘ (b + d)` for composable pairs; the group law is a functor.
    pub fn interchange_holds(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let g = &self.groupoid;
        match (g.compose(a, b), g.compose(c, d)) {
            (Some(ab), Some(cd)) => g.compose(self.add(a, c), self.add(b, d)) == Some(self.add(ab, cd)),
            _ => true,
        }
    }
}

/// Objects `N`, arrows `(n, m): n → n + ∂m`, composition `(n + ∂m, m') ∘ (n, m) = (n, m + m')`.
pub fn phi1(x: &CrossedModule) -> Result<ActionGroupoid> {
    let n = x.base.as_nil().map_err(|_| Error::Infinite("free base group".into()))?;
    if !n.is_finite() || !x.m.is_finite() {
        return Err(Error::Infinite("phi1 needs finite M and N".into()));
    }
    let objs = n.elements()?;
    let ms = x.m.elements()?;
    // the identity is the basepoint
    let zero = objs.iter().position(|e| n.is_identity(e)).expect("identity");
    let mut objects = vec![objs[zero].clone()];
    objects.extend(objs.iter().enumerate().filter(|&(i, _)| i != zero).map(|(_, e)| e.clone()));
    let names: Vec<String> = objects.iter().map(|e| n.show(e)).collect();
    let set = PointedSet::from_strings(names[0].clone(), names[1..].to_vec())?;
    let oidx = |e: &Class2Elem| objects.iter().position(|o| o == e).expect("element of N");
    let midx = |e: &Class2Elem| ms.iter().position(|o| o == e).expect("element of M");
    let mut arrows = Vec::new();
    let mut pairs = Vec::new();
    for (i, o) in objects.iter().enumerate() {
        for (a, mm) in ms.iter().enumerate() {
            let t = n.mul(o, x.del.apply(&BaseElem::Nil(mm.clone())).as_nil()?);
            arrows.push(Arrow { name: format!("({},{})", names[i], x.m.show(mm)), source: i, target: oidx(&t) });
            pairs.push((i, a));
        }
    }
    let nm = ms.len();
    let mut compose = HashMap::new();
    for (f, &(i, a)) in pairs.iter().enumerate() {
        let t = arrows[f].target;
        for b in 0..nm {
            let g = t * nm + b;
            let sum = x.m.mul(&ms[a], &ms[b]);
            compose.insert((g, f), i * nm + midx(&sum));
        }
    }
    let groupoid = PointedGroupoid::new(set, arrows, compose)?;
    Ok(ActionGroupoid { groupoid, objects, pairs, m_elems: ms, source: x.clone() })
}

/// `φ_n` on objects: level `n` to level `n − 1`.
pub fn phi(x: &CrossObject) -> Result<CrossObject> {
    match x {
        CrossObject::Groupoid(_) => Err(Error::Invalid("groupoids are at the bottom level".into())),
        CrossObject::Crossed(c) => Ok(CrossObject::Groupoid(phi1(c)?.groupoid)),
        CrossObject::Quadratic(q) if q.level == 2 => Ok(CrossObject::Crossed(phi2(q)?)),
        CrossObject::Quadratic(q) => Ok(CrossObject::Quadratic(phi3(q)?)),
    }
}

/// `φ_n` on morphisms of quadratic modules: the same components.
pub fn phi_morphism(f: &CrossMorphism) -> Result<CrossMorphism> {
    match f {
        CrossMorphism::Quadratic { source, target, f1, f0 } if source.level == 2 => {
            CrossMorphism::crossed(phi2(source)?, phi2(target)?, f1.clone(), GroupMap::from_class2(f0))
        }
        CrossMorphism::Quadratic { source, target, f1, f0 } => {
            CrossMorphism::quadratic(phi3(source)?, phi3(target)?, f1.clone(), f0.clone())
        }
        _ => Err(Error::Invalid("phi on morphisms is implemented for quadratic modules".into())),
    }
}
