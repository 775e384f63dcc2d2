use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::nil2::PointedSet;

use super::finite::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite groupoid with a distinguished object; object 0 is the basepoint,
/// object `i + 1` is the `i`-th non-base symbol of `objects`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedGroupoid {
    objects: PointedSet,
    arrows: Vec<Arrow>,
    // compose[(g, f)] = g ∘ f, defined when target(f) = source(g)
    compose: HashMap<(usize, usize), usize>,
    identities: Vec<usize>,
    inverses: Vec<usize>,
}

impl PointedGroupoid {
    /// Validates the category axioms and invertibility.
    pub fn new(objects: PointedSet, arrows: Vec<Arrow>, compose: HashMap<(usize, usize), usize>) -> Result<Self> {
        let nobj = objects.len() + 1;
        let na = arrows.len();
        if arrows.iter().any(|a| a.source >= nobj || a.target >= nobj) {
            return Err(Error::Invalid("arrow endpoint is not an object".into()));
        }
        for g in 0..na {
            for f in 0..na {
                let composable = arrows[f].target == arrows[g].source;
                match (composable, compose.get(&(g, f))) {
                    (true, None) => {
                        return Err(Error::Invalid(format!("{} ∘ {} is missing", arrows[g].name, arrows[f].name)))
                    }
                    (false, Some(_)) => {
                        return Err(Error::Invalid(format!("{} ∘ {} is not composable", arrows[g].name, arrows[f].name)))
                    }
                    (true, Some(&h)) => {
                        if h >= na || arrows[h].source != arrows[f].source || arrows[h].target != arrows[g].target {
                            return Err(Error::Invalid(format!("{} ∘ {} has wrong endpoints", arrows[g].name, arrows[f].name)));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        let c = |g: usize, f: usize| compose[&(g, f)];
        for f in 0..na {
            for g in 0..na {
                if arrows[f].target != arrows[g].source {
                    continue;
                }
                for h in 0..na {
                    if arrows[g].target == arrows[h].source && c(h, c(g, f)) != c(c(h, g), f) {
                        return Err(Error::Invalid("composition is not associative".into()));
                    }
                }
            }
        }
        let mut identities = Vec::with_capacity(nobj);
        for x in 0..nobj {
            let id = (0..na).find(|&e| {
                arrows[e].source == x
                    && arrows[e].target == x
                    && (0..na).all(|f| {
                        (arrows[f].target != x || c(e, f) == f) && (arrows[f].source != x || c(f, e) == f)
                    })
            });
            identities.push(id.ok_or_else(|| Error::Invalid(format!("object {} has no identity", x)))?);
        }
        let mut inverses = Vec::with_capacity(na);
        for f in 0..na {
            let (s, t) = (arrows[f].source, arrows[f].target);
            let inv = (0..na).find(|&g| {
                arrows[g].source == t && arrows[g].target == s && c(g, f) == identities[s] && c(f, g) == identities[t]
            });
            inverses.push(inv.ok_or_else(|| Error::Invalid(format!("{} is not invertible", arrows[f].name)))?);
        }
        Ok(PointedGroupoid { objects, arrows, compose, identities, inverses })
    }

    /// Disjoint union of connected components, each given by its objects and vertex group.
    /// Arrows `x → y` of a component are labelled by group elements, composing by `(h, y→z)∘(g, x→y) = (hg, x→z)`.
    pub fn from_components(objects: PointedSet, components: &[(Vec<usize>, FiniteGroup)]) -> Result<Self> {
        let nobj = objects.len() + 1;
        let mut seen = vec![false; nobj];
        for (objs, _) in components {
            for &x in objs {
                if x >= nobj || seen[x] {
                    return Err(Error::Invalid("components must partition the objects".into()));
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Invalid("components must cover every object".into()));
        }
        let name = |x: usize| if x == 0 { objects.base().to_string() } else { objects.elems()[x - 1].clone() };
        let mut arrows = Vec::new();
        let mut index = HashMap::new();
        for (ci, (objs, g)) in components.iter().enumerate() {
            for &x in objs {
                for &y in objs {
                    for e in 0..g.order() {
                        index.insert((ci, x, y, e), arrows.len());
                        arrows.push(Arrow { name: format!("{}:{}>{}", g.names()[e], name(x), name(y)), source: x, target: y });
                    }
                }
            }
        }
        let mut compose = HashMap::new();
        for (ci, (objs, g)) in components.iter().enumerate() {
            for &x in objs {
                for &y in objs {
                    for &z in objs {
                        for a in 0..g.order() {
                            for b in 0..g.order() {
                                let f = index[&(ci, x, y, a)];
                                let h = index[&(ci, y, z, b)];
                                compose.insert((h, f), index[&(ci, x, z, g.mul(b, a))]);
                            }
                        }
                    }
                }
            }
        }
        PointedGroupoid::new(objects, arrows, compose)
    }

    /// Only identity arrows.
    pub fn discrete(objects: PointedSet) -> Self {
        let comps: Vec<_> = (0..=objects.len()).map(|x| (vec![x], FiniteGroup::trivial())).collect();
        Self::from_components(objects, &comps).expect("discrete groupoid")
    }

    /// One object with automorphism group `g`.
    pub fn one_object(g: &FiniteGroup) -> Self {
        Self::from_components(PointedSet::with(&[]), &[(vec![0], g.clone())]).expect("one-object groupoid")
    }

    pub fn objects(&self) -> &PointedSet {
        &self.objects
    }

    pub fn nobjects(&self) -> usize {
        self.objects.len() + 1
    }

    pub fn object_name(&self, x: usize) -> &str {
        if x == 0 {
            self.objects.base()
        } else {
            &self.objects.elems()[x - 1]
        }
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownName(name.into()))
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose.get(&(g, f)).copied()
    }

    pub fn composition_table(&self) -> &HashMap<(usize, usize), usize> {
        &self.compose
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inverses[f]
    }

    /// Isomorphism classes as a partition of the objects; the class of `*` comes first.
    pub fn iso_classes(&self) -> Vec<Vec<usize>> {
        let n = self.nobjects();
        let mut class = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class[x] != usize::MAX {
                continue;
            }
            let c = out.len();
            let members: Vec<usize> =
                (0..n).filter(|&y| self.arrows.iter().any(|a| a.source == x && a.target == y)).collect();
            for &y in &members {
                class[y] = c;
            }
            out.push(members);
        }
        out
    }

    /// `Aut(x)` as a group, with the arrow indices of its elements (identity first).
    pub fn automorphisms(&self, x: usize) -> (FiniteGroup, Vec<usize>) {
        let id = self.identities[x];
        let mut elems = vec![id];
        elems.extend((0..self.arrows.len()).filter(|&f| f != id && self.arrows[f].source == x && self.arrows[f].target == x));
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        // group law written additively: f + g = g ∘ f
        let table = elems.iter().map(|&f| elems.iter().map(|&g| pos[&self.compose[&(g, f)]]).collect()).collect();
        let names = elems.iter().map(|&f| self.arrows[f].name.clone()).collect();
        (FiniteGroup::new(names, table).expect("automorphism group"), elems)
    }
}

/// A basepoint-preserving functor of pointed groupoids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidFunctor {
    pub source: PointedGroupoid,
    pub target: PointedGroupoid,
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl GroupoidFunctor {
    pub fn new(source: PointedGroupoid, target: PointedGroupoid, objects: Vec<usize>, arrows: Vec<usize>) -> Result<Self> {
        if objects.len() != source.nobjects() || arrows.len() != source.arrows.len() {
            return Err(Error::Shape("functor data does not match the source".into()));
        }
        if objects[0] != 0 {
            return Err(Error::Invalid("functor does not preserve the basepoint".into()));
        }
        if objects.iter().any(|&y| y >= target.nobjects()) || arrows.iter().any(|&g| g >= target.arrows.len()) {
            return Err(Error::Invalid("image outside the target".into()));
        }
        for (f, a) in source.arrows.iter().enumerate() {
            let b = &target.arrows[arrows[f]];
            if b.source != objects[a.source] || b.target != objects[a.target] {
                return Err(Error::Invalid(format!("arrow {} is sent to an arrow with wrong endpoints", a.name)));
            }
        }
        for (&(g, f), &h) in &source.compose {
            if target.compose[&(arrows[g], arrows[f])] != arrows[h] {
                return Err(Error::Invalid("composition is not preserved".into()));
            }
        }
        Ok(GroupoidFunctor { source, target, objects, arrows })
    }

    pub fn identity(g: &PointedGroupoid) -> Self {
        GroupoidFunctor {
            source: g.clone(),
            target: g.clone(),
            objects: (0..g.nobjects()).collect(),
            arrows: (0..g.arrows.len()).collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupoidFunctor) -> GroupoidFunctor {
        GroupoidFunctor {
            source: self.source.clone(),
            target: other.target.clone(),
            objects: self.objects.iter().map(|&x| other.objects[x]).collect(),
            arrows: self.arrows.iter().map(|&f| other.arrows[f]).collect(),
        }
    }

    /// Bijective on isomorphism classes and on `Aut(*)`.
    pub fn is_weak_equivalence(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        let sc = s.iso_classes();
        let tc = t.iso_classes();
        let class_of = |cls: &Vec<Vec<usize>>, x: usize| cls.iter().position(|c| c.contains(&x)).unwrap();
        let mut hit = vec![None; tc.len()];
        for (i, c) in sc.iter().enumerate() {
            let j = class_of(&tc, self.objects[c[0]]);
            if hit[j].is_some() {
                return false;
            }
            hit[j] = Some(i);
        }
        if hit.iter().any(|h| h.is_none()) {
            return false;
        }
        let (_, sa) = s.automorphisms(0);
        let (_, ta) = t.automorphisms(0);
        let mut imgs: Vec<usize> = sa.iter().map(|&f| self.arrows[f]).collect();
        imgs.sort();
        imgs.dedup();
        imgs.len() == sa.len() && sa.len() == ta.len()
    }
}
