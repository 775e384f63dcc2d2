//! The line-oriented text format for groups, homomorphisms, crossed and quadratic modules,
//! morphisms, tracks, 2-morphisms and groupoids.
//!
//! ```text
//! group N = nil2 basis a b
//! group Z2 = ab 1 names u rel 2
//! hom f : N -> N { a -> b a^-1; b -> a }
//! cross X n=2 { M=T; N=N; del=d; omega=w }
//! track H n=2 f => g alpha [[1 0] [0 0] [0 0] [0 1]]
//! ```

mod lexer;
mod parse;
mod print;

use crate::cross::{CrossMorphism, CrossObject, GroupMap, PointedGroupoid};
use crate::error::{Error, Result};
use crate::nil2::{Class2Group, Class2Hom, PointedSet};
use crate::tracks::{HopfTrack, TwoMorphism};

pub use lexer::{is_plain, quote};
pub use parse::parse;
pub use print::{print, show_elem};

#[derive(Clone, Debug, PartialEq)]
pub enum HomValue {
    Nil(Class2Hom),
    /// A map with a free source or target.
    Map(GroupMap),
}

impl HomValue {
    pub fn as_group_map(&self) -> GroupMap {
        match self {
            HomValue::Nil(h) => GroupMap::from_class2(h),
            HomValue::Map(m) => m.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CrossExtra {
    Omega(String),
    Act(Vec<String>),
    TrivialAction,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Group(Class2Group),
    FreeGroup(PointedSet),
    Hom { source: String, target: String, map: HomValue },
    Cross { m: String, n: String, del: String, extra: CrossExtra, object: CrossObject },
    Morphism { source: String, target: String, f1: String, f0: String, morphism: CrossMorphism },
    Track { source: String, target: String, track: HopfTrack },
    TwoMorphism { source: String, target: String, two: TwoMorphism },
    Groupoid { objects: PointedSet, components: Vec<(Vec<usize>, Option<String>)>, groupoid: PointedGroupoid },
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Group(_) | Value::FreeGroup(_) => "group",
            Value::Hom { .. } => "hom",
            Value::Cross { .. } => "cross",
            Value::Morphism { .. } => "morphism",
            Value::Track { .. } => "track",
            Value::TwoMorphism { .. } => "twomorphism",
            Value::Groupoid { .. } => "groupoid",
        }
    }
}

/// Named blocks in order of definition; later blocks refer to earlier ones by name.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Document {
    items: Vec<(String, Value)>,
}

impl Document {
    pub fn new() -> Self {
        Document::default()
    }

    pub fn items(&self) -> &[(String, Value)] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.items.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    fn expect(&self, name: &str) -> Result<&Value> {
        self.get(name).ok_or_else(|| Error::UnknownName(name.into()))
    }

    pub fn push(&mut self, name: &str, value: Value) -> Result<()> {
        if self.get(name).is_some() {
            return Err(Error::Invalid(format!("`{}` is defined twice", name)));
        }
        self.items.push((name.into(), value));
        Ok(())
    }

    pub fn group(&self, name: &str) -> Result<&Class2Group> {
        match self.expect(name)? {
            Value::Group(g) => Ok(g),
            v => Err(Error::Invalid(format!("`{}` is a {}, not a class-2 group", name, v.kind()))),
        }
    }

    pub fn hom(&self, name: &str) -> Result<&HomValue> {
        match self.expect(name)? {
            Value::Hom { map, .. } => Ok(map),
            v => Err(Error::Invalid(format!("`{}` is a {}, not a hom", name, v.kind()))),
        }
    }

    pub fn cross(&self, name: &str) -> Result<&CrossObject> {
        match self.expect(name)? {
            Value::Cross { object, .. } => Ok(object),
            v => Err(Error::Invalid(format!("`{}` is a {}, not a cross object", name, v.kind()))),
        }
    }

    pub fn morphism(&self, name: &str) -> Result<&CrossMorphism> {
        match self.expect(name)? {
            Value::Morphism { morphism, .. } => Ok(morphism),
            v => Err(Error::Invalid(format!("`{}` is a {}, not a morphism", name, v.kind()))),
        }
    }

    pub fn track(&self, name: &str) -> Result<&HopfTrack> {
        match self.expect(name)? {
            Value::Track { track, .. } => Ok(track),
            v => Err(Error::Invalid(format!("`{}` is a {}, not a track", name, v.kind()))),
        }
    }

    pub fn two_morphism(&self, name: &str) -> Result<&TwoMorphism> {
        match self.expect(name)? {
            Value::TwoMorphism { two, .. } => Ok(two),
            v => Err(Error::Invalid(format!("`{}` is a {}, not a 2-morphism", name, v.kind()))),
        }
    }

    pub fn groupoid(&self, name: &str) -> Result<&PointedGroupoid> {
        match self.expect(name)? {
            Value::Groupoid { groupoid, .. } => Ok(groupoid),
            v => Err(Error::Invalid(format!("`{}` is a {}, not a groupoid", name, v.kind()))),
        }
    }

    /// Names of all blocks of the given kind, in order.
    pub fn names_of(&self, kind: &str) -> Vec<String> {
        self.items.iter().filter(|(_, v)| v.kind() == kind).map(|(n, _)| n.clone()).collect()
    }

    fn fresh(&self, hint: &str) -> String {
        if self.get(hint).is_none() {
            return hint.into();
        }
        (2..).map(|i| format!("{}{}", hint, i)).find(|n| self.get(n).is_none()).expect("unbounded")
    }

    /// Adds a group block unless an equal one exists; returns its name.
    pub fn add_group(&mut self, hint: &str, g: &Class2Group) -> String {
        if let Some((n, _)) = self.items.iter().find(|(_, v)| matches!(v, Value::Group(h) if h == g)) {
            return n.clone();
        }
        let name = self.fresh(hint);
        self.items.push((name.clone(), Value::Group(g.clone())));
        name
    }

    fn add_base(&mut self, hint: &str, b: &crate::cross::Base) -> String {
        match b {
            crate::cross::Base::Nil(g) => self.add_group(hint, g),
            crate::cross::Base::Free(s) => {
                if let Some((n, _)) = self.items.iter().find(|(_, v)| matches!(v, Value::FreeGroup(t) if t == s)) {
                    return n.clone();
                }
                let name = self.fresh(hint);
                self.items.push((name.clone(), Value::FreeGroup(s.clone())));
                name
            }
        }
    }

    /// Adds a hom block (and its groups) unless an equal one exists; returns its name.
    pub fn add_hom(&mut self, hint: &str, h: &HomValue) -> String {
        let (source, target) = match h {
            HomValue::Nil(h) => (self.add_group(&format!("{}.src", hint), &h.source), self.add_group(&format!("{}.tgt", hint), &h.target)),
            HomValue::Map(m) => (self.add_base(&format!("{}.src", hint), &m.source), self.add_base(&format!("{}.tgt", hint), &m.target)),
        };
        if let Some((n, _)) = self.items.iter().find(|(_, v)| {
            matches!(v, Value::Hom { source: s, target: t, map } if *s == source && *t == target && map == h)
        }) {
            return n.clone();
        }
        let name = self.fresh(hint);
        self.items.push((name.clone(), Value::Hom { source, target, map: h.clone() }));
        name
    }

    /// Adds a cross object under `name`, with its groups and maps as `name.M`, `name.N`, ....
    pub fn add_cross(&mut self, name: &str, x: &CrossObject) -> Result<String> {
        let (m, n, del, extra) = match x {
            CrossObject::Quadratic(q) => {
                let m = self.add_group(&format!("{}.M", name), &q.m);
                let n = self.add_group(&format!("{}.N", name), &q.base);
                self.add_group(&format!("{}.T", name), &q.omega.source);
                let del = self.add_hom(&format!("{}.del", name), &HomValue::Nil(q.del.clone()));
                let omega = self.add_hom(&format!("{}.omega", name), &HomValue::Nil(q.omega.clone()));
                (m, n, del, CrossExtra::Omega(omega))
            }
            CrossObject::Crossed(c) => {
                let m = self.add_group(&format!("{}.M", name), &c.m);
                let n = self.add_base(&format!("{}.N", name), &c.base);
                let del = self.add_hom(&format!("{}.del", name), &del_value(&c.del));
                let extra = if c.action().iter().all(|a| a.equals(&Class2Hom::identity(&c.m))) {
                    CrossExtra::TrivialAction
                } else {
                    let acts = c
                        .action()
                        .iter()
                        .enumerate()
                        .map(|(i, a)| self.add_hom(&format!("{}.act{}", name, i), &HomValue::Nil(a.clone())))
                        .collect();
                    CrossExtra::Act(acts)
                };
                (m, n, del, extra)
            }
            CrossObject::Groupoid(_) => {
                return Err(Error::Invalid("groupoids are written with `groupoid` blocks from their components".into()))
            }
        };
        let name = self.fresh(name);
        self.items.push((name.clone(), Value::Cross { m, n, del, extra, object: x.clone() }));
        Ok(name)
    }

    /// Adds a morphism with its endpoints (reusing equal cross blocks) and component maps.
    pub fn add_morphism(&mut self, name: &str, f: &CrossMorphism) -> Result<String> {
        let source = self.find_or_add_cross(&format!("{}.source", name), &f.source())?;
        let target = self.find_or_add_cross(&format!("{}.target", name), &f.target())?;
        let f1 = self.add_hom(&format!("{}.f1", name), &HomValue::Nil(f.f1()?.clone()));
        let f0 = match f {
            CrossMorphism::Quadratic { f0, .. } => HomValue::Nil(f0.clone()),
            _ => del_value(&f.f0()?),
        };
        let f0 = self.add_hom(&format!("{}.f0", name), &f0);
        let name = self.fresh(name);
        self.items.push((name.clone(), Value::Morphism { source, target, f1, f0, morphism: f.clone() }));
        Ok(name)
    }

    /// Adds a track with its two maps.
    pub fn add_track(&mut self, name: &str, t: &HopfTrack) -> String {
        let source = self.add_hom(&format!("{}.f", name), &HomValue::Nil(t.source.clone()));
        let target = self.add_hom(&format!("{}.g", name), &HomValue::Nil(t.target.clone()));
        let name = self.fresh(name);
        self.items.push((name.clone(), Value::Track { source, target, track: t.clone() }));
        name
    }

    /// Adds a 2-morphism with its source and target morphisms.
    pub fn add_two_morphism(&mut self, name: &str, a: &TwoMorphism) -> Result<String> {
        let source = self.find_or_add_morphism(&format!("{}.source", name), &a.source)?;
        let target = self.find_or_add_morphism(&format!("{}.target", name), &a.target)?;
        let name = self.fresh(name);
        self.items.push((name.clone(), Value::TwoMorphism { source, target, two: a.clone() }));
        Ok(name)
    }

    fn find_or_add_morphism(&mut self, hint: &str, f: &CrossMorphism) -> Result<String> {
        if let Some((n, _)) = self.items.iter().find(|(_, v)| matches!(v, Value::Morphism { morphism, .. } if morphism == f)) {
            return Ok(n.clone());
        }
        self.add_morphism(hint, f)
    }

    fn find_or_add_cross(&mut self, hint: &str, x: &CrossObject) -> Result<String> {
        if let Some((n, _)) = self.items.iter().find(|(_, v)| matches!(v, Value::Cross { object, .. } if object == x)) {
            return Ok(n.clone());
        }
        self.add_cross(hint, x)
    }
}

/// A group map as a hom value: class-2 when both ends are.
fn del_value(g: &GroupMap) -> HomValue {
    match g.as_class2() {
        Ok(h) => HomValue::Nil(h),
        Err(_) => HomValue::Map(g.clone()),
    }
}

/// `print(parse(text))`.
pub fn canonicalize(text: &str) -> Result<String> {
    Ok(print(&parse(text)?))
}

/// One canonicalization pass reaches a fixed point: `print(parse(c)) == c` for `c = canonicalize(text)`.
pub fn round_trips(text: &str) -> Result<bool> {
    let c = canonicalize(text)?;
    Ok(canonicalize(&c)? == c)
}

/// The serialization corpus shipped with the library.
pub const CORPUS: &[(&str, &str)] = &[
    ("empty", include_str!("../../corpus/empty.sechom")),
    ("abelian", include_str!("../../corpus/abelian.sechom")),
    ("nil_groups", include_str!("../../corpus/nil_groups.sechom")),
    ("homs", include_str!("../../corpus/homs.sechom")),
    ("sphere2", include_str!("../../corpus/sphere2.sechom")),
    ("wedge3", include_str!("../../corpus/wedge3.sechom")),
    ("crossed", include_str!("../../corpus/crossed.sechom")),
    ("free_base", include_str!("../../corpus/free_base.sechom")),
    ("morphism", include_str!("../../corpus/morphism.sechom")),
    ("tracks", include_str!("../../corpus/tracks.sechom")),
    ("twomorphism", include_str!("../../corpus/twomorphism.sechom")),
    ("groupoids", include_str!("../../corpus/groupoids.sechom")),
];
