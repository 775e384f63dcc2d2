use crate::cross::{Base, BaseElem, CrossMorphism, CrossObject};
use crate::error::{Error, Result};
use crate::nil2::{evaluate, relation_failure, Class2Elem, Class2Group, GroupLike};

/// `M ⋊ N` for the action of a crossed or quadratic module:
/// `(m, n) + (m', n') = (m^{n'} + m', n + n')`.
struct SemiDirect<'a> {
    obj: &'a CrossObject,
    m: &'a Class2Group,
    base: Base,
}

impl<'a> SemiDirect<'a> {
    fn new(obj: &'a CrossObject) -> Result<Self> {
        Ok(SemiDirect { obj, m: obj.top()?, base: obj.base()? })
    }
}

impl GroupLike for SemiDirect<'_> {
    type Elem = (Class2Elem, BaseElem);

    fn identity(&self) -> Self::Elem {
        (self.m.identity(), self.base.identity())
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        (self.m.mul(&self.obj.act(&x.0, &y.1), &y.0), self.base.mul(&x.1, &y.1))
    }

    fn inv(&self, x: &Self::Elem) -> Self::Elem {
        let ni = self.base.inv(&x.1);
        (self.obj.act(&self.m.inv(&x.0), &ni), ni)
    }

    fn equal(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        x.0 == y.0 && self.base.equal(&x.1, &y.1)
    }
}

/// A 2-morphism `α: f ⇒ g` of `cross(n)`, `n ≥ 1`, given by its values on the generators of `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoMorphism {
    pub source: CrossMorphism,
    pub target: CrossMorphism,
    values: Vec<Class2Elem>,
}

impl TwoMorphism {
    /// Checks that the values extend to a derivation over `f0` and that
    /// `g0 = f0 + ∂'α`, `g1 = f1 + α∂` on generators.
    pub fn new(source: CrossMorphism, target: CrossMorphism, values: Vec<Class2Elem>) -> Result<Self> {
        if source.level() == 0 {
            return Err(Error::Invalid("2-morphisms are implemented from level 1 on".into()));
        }
        if source.level() != target.level() || source.source() != target.source() || source.target() != target.target() {
            return Err(Error::Invalid("2-morphism between non-parallel morphisms".into()));
        }
        let a = TwoMorphism { source, target, values };
        if let Some(msg) = a.failure()? {
            return Err(Error::Invalid(msg));
        }
        Ok(a)
    }

    fn failure(&self) -> Result<Option<String>> {
        let (x, y) = (self.source.source(), self.source.target());
        let n = x.base()?;
        let names = n.gen_names();
        if self.values.len() != n.ngens() {
            return Ok(Some(format!("expected {} values, got {}", n.ngens(), self.values.len())));
        }
        let ym = y.top()?;
        let yn = y.base()?;
        let f0 = self.source.f0()?;
        let g0 = self.target.f0()?;
        let f1 = self.source.f1()?;
        let g1 = self.target.f1()?;
        if let Base::Nil(g) = &n {
            let sd = SemiDirect::new(&y)?;
            let pairs = self.pairs()?;
            if let Some(msg) = relation_failure(g, &sd, &pairs) {
                return Ok(Some(format!("values do not define a derivation: {}", msg)));
            }
        }
        for i in 0..n.ngens() {
            let gi = n.gen(i);
            let rhs = yn.mul(&f0.apply(&gi), &y.boundary(&self.values[i]));
            if !yn.equal(&g0.apply(&gi), &rhs) {
                return Ok(Some(format!("g0({}) ≠ f0({}) + ∂'α({})", names[i], names[i], names[i])));
            }
        }
        let m = x.top()?;
        let mnames = m.gen_names();
        for j in 0..m.ngens() {
            let mj = m.gen(j);
            let rhs = ym.mul(&f1.apply(&mj), &self.eval(&x.boundary(&mj))?);
            if g1.apply(&mj) != rhs {
                return Ok(Some(format!("g1({}) ≠ f1({}) + α∂({})", mnames[j], mnames[j], mnames[j])));
            }
        }
        Ok(None)
    }

    fn pairs(&self) -> Result<Vec<(Class2Elem, BaseElem)>> {
        let f0 = self.source.f0()?;
        let n = self.source.source().base()?;
        Ok(self.values.iter().cloned().zip(n.gens().iter().map(|g| f0.apply(g))).collect())
    }

    pub fn values(&self) -> &[Class2Elem] {
        &self.values
    }

    /// `α(x)` by the derivation rule `α(x + y) = α(x)^{f0 y} + α(y)`.
    pub fn eval(&self, x: &BaseElem) -> Result<Class2Elem> {
        let y = self.source.target();
        let sd = SemiDirect::new(&y)?;
        let pairs = self.pairs()?;
        let r = match (&self.source.source().base()?, x) {
            (Base::Nil(g), BaseElem::Nil(e)) => evaluate(g, &sd, &pairs, e),
            (Base::Free(_), BaseElem::Word(w)) => w.letters.iter().fold(sd.identity(), |acc, &(i, e)| {
                let p = if e > 0 { pairs[i].clone() } else { sd.inv(&pairs[i]) };
                sd.mul(&acc, &p)
            }),
            _ => return Err(Error::Invalid("element is not in the source base".into())),
        };
        Ok(r.0)
    }

    /// The zero 2-morphism on `f`.
    pub fn identity(f: &CrossMorphism) -> Result<Self> {
        let m = f.target().top()?.clone();
        let n = f.source().base()?.ngens();
        TwoMorphism::new(f.clone(), f.clone(), vec![m.identity(); n])
    }

    /// `β ⊡ α` for `α: f ⇒ g`, `β: g ⇒ h`: `x ↦ α(x) + β(x)`.
    pub fn vcomp(&self, beta: &TwoMorphism) -> Result<TwoMorphism> {
        if !self.target.equals(&beta.source) {
            return Err(Error::Invalid("2-morphisms are not vertically composable".into()));
        }
        let m = self.source.target().top()?.clone();
        let values = self.values.iter().zip(&beta.values).map(|(a, b)| m.mul(a, b)).collect();
        TwoMorphism::new(self.source.clone(), beta.target.clone(), values)
    }

    /// `α^⊟: g ⇒ f`, `x ↦ −α(x)`.
    pub fn inverse(&self) -> Result<TwoMorphism> {
        let m = self.source.target().top()?.clone();
        let values = self.values.iter().map(|a| m.inv(a)).collect();
        TwoMorphism::new(self.target.clone(), self.source.clone(), values)
    }

    /// `α k: f k ⇒ g k`, `x ↦ α(k0 x)`.
    pub fn whisker_right(&self, k: &CrossMorphism) -> Result<TwoMorphism> {
        let (fk, gk) = (k.then(&self.source)?, k.then(&self.target)?);
        let k0 = k.f0()?;
        let n = k.source().base()?;
        let values = n.gens().iter().map(|g| self.eval(&k0.apply(g))).collect::<Result<Vec<_>>>()?;
        TwoMorphism::new(fk, gk, values)
    }

    /// `h α: h f ⇒ h g`, `x ↦ h1(α(x))`.
    pub fn whisker_left(&self, h: &CrossMorphism) -> Result<TwoMorphism> {
        let (hf, hg) = (self.source.then(h)?, self.target.then(h)?);
        let h1 = h.f1()?;
        let values = self.values.iter().map(|a| h1.apply(a)).collect();
        TwoMorphism::new(hf, hg, values)
    }

    /// `α' ∘ α = (g'α) ⊡ (α'f): f'f ⇒ g'g`.
    pub fn hcomp(&self, other: &TwoMorphism) -> Result<TwoMorphism> {
        other.whisker_right(&self.source)?.vcomp(&self.whisker_left(&other.target)?)
    }
}

/// Both sides of `(g'α) ⊡ (α'f) = (α'g) ⊡ (f'α)` on every generator, without re-validation.
pub fn interchange_sides(alpha: &TwoMorphism, alpha2: &TwoMorphism) -> Result<(Vec<Class2Elem>, Vec<Class2Elem>)> {
    let x = alpha.source.source();
    let z = alpha2.source.target();
    let zm = z.top()?;
    let (f0, g0) = (alpha.source.f0()?, alpha.target.f0()?);
    let (f1p, g1p) = (alpha2.source.f1()?, alpha2.target.f1()?);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for g in x.base()?.gens() {
        let a = alpha.eval(&g)?;
        lhs.push(zm.mul(&alpha2.eval(&f0.apply(&g))?, &g1p.apply(&a)));
        rhs.push(zm.mul(&f1p.apply(&a), &alpha2.eval(&g0.apply(&g))?));
    }
    Ok((lhs, rhs))
}

pub fn interchange_check(alpha: &TwoMorphism, alpha2: &TwoMorphism) -> Result<bool> {
    if alpha.source.target() != alpha2.source.source() {
        return Err(Error::Invalid("2-morphisms are not horizontally composable".into()));
    }
    let (l, r) = interchange_sides(alpha, alpha2)?;
    Ok(l == r)
}

impl TwoMorphism {
    /// The 2-morphism out of `f` with the given values; the target is `g0 = f0 + ∂'α`, `g1 = f1 + α∂`.
    pub fn from_values(f: &CrossMorphism, values: Vec<Class2Elem>) -> Result<TwoMorphism> {
        let (x, y) = (f.source(), f.target());
        let n = x.base()?;
        let yn = y.base()?;
        let probe = TwoMorphism { source: f.clone(), target: f.clone(), values };
        let f0 = f.f0()?;
        let g0_images: Vec<BaseElem> = n
            .gens()
            .iter()
            .zip(&probe.values)
            .map(|(g, a)| yn.mul(&f0.apply(g), &y.boundary(a)))
            .collect();
        let m = x.top()?;
        let ym = y.top()?;
        let f1 = f.f1()?;
        let g1_images = (0..m.ngens())
            .map(|j| Ok(ym.mul(&f1.apply(&m.gen(j)), &probe.eval(&x.boundary(&m.gen(j)))?)))
            .collect::<Result<Vec<_>>>()?;
        let g1 = crate::nil2::Class2Hom::new(m.clone(), ym.clone(), g1_images)?;
        let g = match (&x, &y) {
            (CrossObject::Crossed(cx), CrossObject::Crossed(cy)) => {
                let g0 = crate::cross::GroupMap::new(n.clone(), yn.clone(), g0_images)?;
                CrossMorphism::crossed(cx.clone(), cy.clone(), g1, g0)?
            }
            (CrossObject::Quadratic(qx), CrossObject::Quadratic(qy)) => {
                let imgs = g0_images.iter().map(|b| b.as_nil().cloned()).collect::<Result<Vec<_>>>()?;
                let g0 = crate::nil2::Class2Hom::new(qx.base.clone(), qy.base.clone(), imgs)?;
                CrossMorphism::quadratic(qx.clone(), qy.clone(), g1, g0)?
            }
            _ => return Err(Error::Invalid("2-morphisms are implemented from level 1 on".into())),
        };
        TwoMorphism::new(f.clone(), g, probe.values)
    }

    /// Values on a base whose outer generators are letters and whose central generators are
    /// their commutators (free nil-groups): the central values follow from the letter values.
    pub fn letter_values(f: &CrossMorphism, letters: Vec<Class2Elem>) -> Result<Vec<Class2Elem>> {
        let x = f.source();
        let n = x.base()?;
        match &n {
            Base::Free(_) => Ok(letters),
            Base::Nil(g) => {
                let k = g.k();
                if letters.len() != k {
                    return Err(Error::Shape(format!("expected {} letter values", k)));
                }
                let mut values = letters;
                let ym = f.target().top()?.clone();
                values.extend(vec![ym.identity(); g.m()]);
                let probe = TwoMorphism { source: f.clone(), target: f.clone(), values };
                let mut out = probe.values[..k].to_vec();
                for j in 0..g.m() {
                    let c = g.gen(k + j);
                    let (a, b) = (0..k)
                        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
                        .find(|&(a, b)| g.commutator(&g.gen(a), &g.gen(b)) == c)
                        .ok_or_else(|| Error::Invalid("central generator is not a commutator of letters".into()))?;
                    let y = f.target();
                    let sd = SemiDirect::new(&y)?;
                    let pa = probe.pair_of(a)?;
                    let pb = probe.pair_of(b)?;
                    out.push(sd.commutator(&pa, &pb).0);
                }
                Ok(out)
            }
        }
    }

    fn pair_of(&self, i: usize) -> Result<(Class2Elem, BaseElem)> {
        let f0 = self.source.f0()?;
        let n = self.source.source().base()?;
        Ok((self.values[i].clone(), f0.apply(&n.gen(i))))
    }
}
