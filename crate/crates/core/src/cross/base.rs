use std::fmt;

use crate::abelian::{AbElem, FinAbGroup};
use crate::error::{Error, Result};
use crate::matrix::{int, zeros, IntMatrix};
use crate::nil2::{
    self, evaluate, free_nil, relation_failure, AbReduced, Class2Elem, Class2Group, Class2Hom, FreeWord, GroupLike,
    PointedSet,
};

impl GroupLike for PointedSet {
    type Elem = FreeWord;

    fn identity(&self) -> FreeWord {
        FreeWord::default()
    }

    fn mul(&self, x: &FreeWord, y: &FreeWord) -> FreeWord {
        x.concat(y).reduced()
    }

    fn inv(&self, x: &FreeWord) -> FreeWord {
        x.inverse()
    }

    fn equal(&self, x: &FreeWord, y: &FreeWord) -> bool {
        x.reduced() == y.reduced()
    }
}

/// The group `N` of a crossed or quadratic module: free on a pointed set, or class two.
#[derive(Clone, Debug, PartialEq)]
pub enum Base {
    Free(PointedSet),
    Nil(Class2Group),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseElem {
    Word(FreeWord),
    Nil(Class2Elem),
}

impl BaseElem {
    pub fn as_nil(&self) -> Result<&Class2Elem> {
        match self {
            BaseElem::Nil(x) => Ok(x),
            BaseElem::Word(_) => Err(Error::Invalid("expected a class-2 element, got a free word".into())),
        }
    }

    pub fn as_word(&self) -> Result<&FreeWord> {
        match self {
            BaseElem::Word(w) => Ok(w),
            BaseElem::Nil(_) => Err(Error::Invalid("expected a free word, got a class-2 element".into())),
        }
    }
}

impl GroupLike for Base {
    type Elem = BaseElem;

    fn identity(&self) -> BaseElem {
        match self {
            Base::Free(_) => BaseElem::Word(FreeWord::default()),
            Base::Nil(g) => BaseElem::Nil(g.identity()),
        }
    }

    fn mul(&self, x: &BaseElem, y: &BaseElem) -> BaseElem {
        match (self, x, y) {
            (Base::Free(s), BaseElem::Word(u), BaseElem::Word(v)) => BaseElem::Word(s.mul(u, v)),
            (Base::Nil(g), BaseElem::Nil(u), BaseElem::Nil(v)) => BaseElem::Nil(g.mul(u, v)),
            _ => panic!("element does not belong to this group"),
        }
    }

    fn inv(&self, x: &BaseElem) -> BaseElem {
        match (self, x) {
            (Base::Free(_), BaseElem::Word(u)) => BaseElem::Word(u.inverse()),
            (Base::Nil(g), BaseElem::Nil(u)) => BaseElem::Nil(g.inv(u)),
            _ => panic!("element does not belong to this group"),
        }
    }

    fn equal(&self, x: &BaseElem, y: &BaseElem) -> bool {
        match (x, y) {
            (BaseElem::Word(u), BaseElem::Word(v)) => u.reduced() == v.reduced(),
            (BaseElem::Nil(u), BaseElem::Nil(v)) => u == v,
            _ => false,
        }
    }
}

impl Base {
    pub fn ngens(&self) -> usize {
        match self {
            Base::Free(s) => s.len(),
            Base::Nil(g) => g.ngens(),
        }
    }

    pub fn gen(&self, i: usize) -> BaseElem {
        match self {
            Base::Free(_) => BaseElem::Word(FreeWord::letter(i)),
            Base::Nil(g) => BaseElem::Nil(g.gen(i)),
        }
    }

    pub fn gens(&self) -> Vec<BaseElem> {
        (0..self.ngens()).map(|i| self.gen(i)).collect()
    }

    pub fn gen_names(&self) -> Vec<String> {
        match self {
            Base::Free(s) => s.elems().to_vec(),
            Base::Nil(g) => g.gen_names(),
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self, Base::Free(_))
    }

    pub fn as_nil(&self) -> Result<&Class2Group> {
        match self {
            Base::Nil(g) => Ok(g),
            Base::Free(_) => Err(Error::Invalid("operation needs a class-2 base group".into())),
        }
    }

    /// `−n + x + n`.
    pub fn conj(&self, x: &BaseElem, n: &BaseElem) -> BaseElem {
        self.mul(&self.mul(&self.inv(n), x), n)
    }

    /// Reduced word or collected form.
    pub fn normalize(&self, x: &BaseElem) -> BaseElem {
        match x {
            BaseElem::Word(w) => BaseElem::Word(w.reduced()),
            BaseElem::Nil(_) => x.clone(),
        }
    }

    /// The class-2 quotient `N_nil`, identical to `N` for a class-2 base.
    pub fn nil(&self) -> Class2Group {
        match self {
            Base::Free(s) => free_nil(s),
            Base::Nil(g) => g.clone(),
        }
    }

    /// The projection `N → N_nil` on elements.
    pub fn to_nil(&self, x: &BaseElem) -> Class2Elem {
        match (self, x) {
            (Base::Free(s), BaseElem::Word(w)) => nil2::nilize(w, &free_nil(s)).expect("letters in range"),
            (Base::Nil(_), BaseElem::Nil(y)) => y.clone(),
            _ => panic!("element does not belong to this group"),
        }
    }

    /// `N_ab` on reduced generators.
    pub fn ab(&self) -> AbReduced {
        match self {
            Base::Free(s) => AbReduced {
                group: FinAbGroup::free(s.len()),
                to_reduced: IntMatrix::identity(s.len()),
                kept: (0..s.len()).collect(),
                names: s.elems().to_vec(),
            },
            Base::Nil(g) => g.ab_reduced(),
        }
    }

    /// `{x}` in the reduced abelianization `ab`.
    pub fn ab_class(&self, ab: &AbReduced, x: &BaseElem) -> AbElem {
        match (self, x) {
            (Base::Free(s), BaseElem::Word(w)) => {
                let mut v = zeros(s.len());
                for &(i, e) in &w.letters {
                    v[i] += int(e as i64);
                }
                v
            }
            (Base::Nil(g), BaseElem::Nil(y)) => ab.class(g, y),
            _ => panic!("element does not belong to this group"),
        }
    }

    /// Lift of a reduced abelianization generator.
    pub fn ab_lift_gen(&self, ab: &AbReduced, i: usize) -> BaseElem {
        self.gen(ab.kept[i])
    }

    pub fn display(&self, x: &BaseElem) -> String {
        match (self, x) {
            (Base::Free(s), BaseElem::Word(w)) => w.reduced().display(s),
            (Base::Nil(g), BaseElem::Nil(y)) => g.show(y),
            _ => "?".into(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Base::Free(s) => format!("free group on {}", s),
            Base::Nil(g) => g.describe(),
        }
    }

    /// All elements; only for finite class-2 bases.
    pub fn elements(&self) -> Result<Vec<BaseElem>> {
        match self {
            Base::Free(s) if s.is_empty() => Ok(vec![self.identity()]),
            Base::Free(_) => Err(Error::Infinite("free group".into())),
            Base::Nil(g) => Ok(g.elements()?.into_iter().map(BaseElem::Nil).collect()),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// A homomorphism out of a free or class-2 group, given by generator images.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupMap {
    pub source: Base,
    pub target: Base,
    images: Vec<BaseElem>,
}

impl GroupMap {
    pub fn new(source: Base, target: Base, images: Vec<BaseElem>) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::Shape(format!("expected {} generator images, got {}", source.ngens(), images.len())));
        }
        for x in &images {
            let ok = matches!(
                (&target, x),
                (Base::Free(_), BaseElem::Word(_)) | (Base::Nil(_), BaseElem::Nil(_))
            );
            if !ok {
                return Err(Error::Invalid("generator image is not an element of the target".into()));
            }
        }
        let images: Vec<BaseElem> = images.iter().map(|x| target.normalize(x)).collect();
        if let Base::Free(s) = &target {
            for x in &images {
                if x.as_word()?.letters.iter().any(|&(i, _)| i >= s.len()) {
                    return Err(Error::Invalid("letter out of range".into()));
                }
            }
        }
        if let Base::Nil(g) = &source {
            if let Some(msg) = relation_failure(g, &target, &images) {
                return Err(Error::NotWellDefined(msg));
            }
        }
        Ok(GroupMap { source, target, images })
    }

    pub fn from_class2(f: &Class2Hom) -> Self {
        GroupMap {
            source: Base::Nil(f.source.clone()),
            target: Base::Nil(f.target.clone()),
            images: f.images().iter().cloned().map(BaseElem::Nil).collect(),
        }
    }

    pub fn identity(b: &Base) -> Self {
        GroupMap { source: b.clone(), target: b.clone(), images: b.gens() }
    }

    pub fn trivial(source: &Base, target: &Base) -> Self {
        GroupMap { source: source.clone(), target: target.clone(), images: vec![target.identity(); source.ngens()] }
    }

    pub fn images(&self) -> &[BaseElem] {
        &self.images
    }

    pub fn apply(&self, x: &BaseElem) -> BaseElem {
        let t = &self.target;
        match (&self.source, x) {
            (Base::Free(_), BaseElem::Word(w)) => w.letters.iter().fold(t.identity(), |acc, &(i, e)| {
                let y = if e > 0 { self.images[i].clone() } else { t.inv(&self.images[i]) };
                t.mul(&acc, &y)
            }),
            (Base::Nil(g), BaseElem::Nil(y)) => evaluate(g, t, &self.images, y),
            _ => panic!("element does not belong to the source"),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupMap) -> GroupMap {
        GroupMap {
            source: self.source.clone(),
            target: other.target.clone(),
            images: self.images.iter().map(|x| other.apply(x)).collect(),
        }
    }

    pub fn equals(&self, other: &GroupMap) -> bool {
        self.images.len() == other.images.len()
            && self.images.iter().zip(&other.images).all(|(x, y)| self.target.equal(x, y))
    }

    pub fn as_class2(&self) -> Result<Class2Hom> {
        let s = self.source.as_nil()?;
        let t = self.target.as_nil()?;
        let images = self.images.iter().map(|x| x.as_nil().cloned()).collect::<Result<Vec<_>>>()?;
        Class2Hom::new(s.clone(), t.clone(), images)
    }

    /// The induced map `N_nil → N'_nil`.
    pub fn nil(&self) -> Result<Class2Hom> {
        let (s, t) = (self.source.nil(), self.target.nil());
        let letter_images: Vec<Class2Elem> = self.images.iter().map(|x| self.target.to_nil(x)).collect();
        match &self.source {
            Base::Free(_) => nil2::hom_from_free(&s, &t, letter_images),
            Base::Nil(_) => Class2Hom::new(s, t, letter_images),
        }
    }

    /// The induced map on reduced abelianizations.
    pub fn ab(&self, sab: &AbReduced, tab: &AbReduced) -> Result<crate::abelian::AbMap> {
        let cols: Vec<AbElem> = (0..sab.group.ngens())
            .map(|i| self.target.ab_class(tab, &self.apply(&self.source.ab_lift_gen(sab, i))))
            .collect();
        let m = if cols.is_empty() { IntMatrix::zeros(tab.group.ngens(), 0) } else { IntMatrix::from_cols(tab.group.ngens(), cols) };
        crate::abelian::AbMap::new(sab.group.clone(), tab.group.clone(), m)
    }
}

/// `w = p r^e p⁻¹` with `r` cyclically reduced and not a proper power.
pub fn word_root(w: &FreeWord) -> Option<(FreeWord, i64)> {
    let w = w.reduced();
    if w.letters.is_empty() {
        return None;
    }
    let l = &w.letters;
    let mut s = 0;
    while s < l.len() / 2 && l[s].0 == l[l.len() - 1 - s].0 && l[s].1 == -l[l.len() - 1 - s].1 {
        s += 1;
    }
    let core = &l[s..l.len() - s];
    let n = core.len();
    let period = (1..=n).find(|&p| n % p == 0 && (0..n).all(|i| core[i] == core[i % p])).unwrap();
    let prefix = FreeWord::new(l[..s].to_vec());
    let r = FreeWord::new(core[..period].to_vec());
    let root = prefix.concat(&r).concat(&prefix.inverse());
    Some((root, (n / period) as i64))
}

/// Writes `w` as `root^e`, if possible.
pub fn exponent_of(w: &FreeWord, root: &FreeWord) -> Option<i64> {
    let w = w.reduced();
    if w.letters.is_empty() {
        return Some(0);
    }
    let (r2, e) = word_root(&w)?;
    if r2 == *root {
        Some(e)
    } else if r2 == root.inverse().reduced() {
        Some(-e)
    } else {
        None
    }
}

/// `ker(f: G → F)` for a map from a class-2 group to a free group.
///
/// The image is abelian, hence infinite cyclic or trivial, so `f` factors through `Z`.
pub fn kernel_into_free(g: &Class2Group, images: &[FreeWord]) -> Result<nil2::Subgroup> {
    let root = images.iter().find_map(word_root).map(|(r, _)| r);
    let mut row = Vec::with_capacity(images.len());
    for w in images {
        let e = match &root {
            None => 0,
            Some(r) => exponent_of(w, r)
                .ok_or_else(|| Error::Invalid("images in the free group do not commute".into()))?,
        };
        row.push(int(e));
    }
    nil2::Subgroup::linear(g, IntMatrix::from_rows(images.len(), vec![row]), &FinAbGroup::free(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_words() {
        let s = PointedSet::with(&["a", "b"]);
        let ab = FreeWord::new(vec![(0, 1), (1, 1)]);
        let w = ab.concat(&ab).concat(&ab);
        assert_eq!(word_root(&w), Some((ab.clone(), 3)));
        let p = FreeWord::letter(1);
        let conj = p.concat(&w).concat(&p.inverse());
        let (r, e) = word_root(&conj).unwrap();
        assert_eq!(e, 3);
        assert_eq!(r, p.concat(&ab).concat(&p.inverse()).reduced());
        assert_eq!(exponent_of(&w.inverse(), &ab), Some(-3));
        assert!(s.equal(&s.pow(&ab, &int(3)), &w));
    }

    #[test]
    fn kernel_into_free_group() {
        // Z^2 → F(a), (x, y) ↦ a^{2x - 3y}; kernel generated by (3, 2)
        let z2 = Class2Group::from_abelian(&FinAbGroup::free(2), vec!["x".into(), "y".into()]);
        let a = FreeWord::letter(0);
        let imgs = vec![s_pow(&a, 2), s_pow(&a, -3)];
        let k = kernel_into_free(&z2, &imgs).unwrap();
        assert!(k.group.as_abelian().unwrap().is_isomorphic(&FinAbGroup::free(1)));
        assert!(k.contains(&z2.from_central(&crate::matrix::ints(&[3, 2]))));
        assert!(!k.contains(&z2.from_central(&crate::matrix::ints(&[1, 0]))));
    }

    fn s_pow(w: &FreeWord, e: i64) -> FreeWord {
        nil2::word_power(w, &int(e)).reduced()
    }
}
