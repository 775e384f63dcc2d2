use crate::cross::{Base, BaseElem, CrossMorphism, CrossObject, CrossedModule, GroupMap, QuadModule};
use crate::error::{Error, Result};
use crate::nil2::{Class2Elem, Class2Hom};

use super::loops::{phi2, phi3, phi_morphism};
use super::suspension::{ad2, ad3, counit2, counit3};

/// Default bound on candidate assignments tried while enumerating a hom-set.
pub const ENUMERATION_CAP: u64 = 1_000_000;

struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            return Err(Error::CapExceeded { what: "hom-set candidates".into(), cap: self.cap });
        }
        Ok(())
    }
}

/// Calls `f` on every tuple picking one entry from each list.
fn for_each_tuple<T: Clone>(
    lists: &[Vec<T>],
    budget: &mut Budget,
    f: &mut dyn FnMut(Vec<T>) -> Result<()>,
) -> Result<()> {
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(());
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        budget.spend()?;
        f(idx.iter().zip(lists).map(|(&i, l)| l[i].clone()).collect())?;
        let mut p = 0;
        loop {
            if p == idx.len() {
                return Ok(());
            }
            idx[p] += 1;
            if idx[p] < lists[p].len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

fn finite_elements(b: &Base, what: &str) -> Result<Vec<Class2Elem>> {
    let g = b.as_nil().map_err(|_| Error::Infinite(format!("{} (free group)", what)))?;
    if !g.is_finite() {
        return Err(Error::Infinite(what.into()));
    }
    g.elements()
}

/// Candidate `f1` images per generator of `M`, constrained by `∂'f1 = f0∂`.
fn f1_candidates(
    m: &crate::nil2::Class2Group,
    del: &dyn Fn(&Class2Elem) -> BaseElem,
    f0: &GroupMap,
    targets: &[Class2Elem],
    del2: &dyn Fn(&Class2Elem) -> BaseElem,
) -> Vec<Vec<Class2Elem>> {
    let tb = &f0.target;
    (0..m.ngens())
        .map(|a| {
            let want = f0.apply(&del(&m.gen(a)));
            targets.iter().filter(|z| crate::nil2::GroupLike::equal(tb, &del2(z), &want)).cloned().collect()
        })
        .collect()
}

/// All morphisms of crossed modules `x → y`; `y` must be finite.
pub fn crossed_homs(x: &CrossedModule, y: &CrossedModule, cap: u64) -> Result<Vec<CrossMorphism>> {
    let mut budget = Budget { used: 0, cap };
    let nys = finite_elements(&y.base, "target base")?;
    let mys = finite_elements(&Base::Nil(y.m.clone()), "target M")?;
    let lists: Vec<Vec<Class2Elem>> = vec![nys; x.base.ngens()];
    let mut out = Vec::new();
    let mut f0s = Vec::new();
    for_each_tuple(&lists, &mut budget, &mut |imgs| {
        if let Ok(f0) = GroupMap::new(x.base.clone(), y.base.clone(), imgs.into_iter().map(BaseElem::Nil).collect()) {
            f0s.push(f0);
        }
        Ok(())
    })?;
    for f0 in f0s {
        let dx = |z: &Class2Elem| x.del.apply(&BaseElem::Nil(z.clone()));
        let dy = |z: &Class2Elem| y.del.apply(&BaseElem::Nil(z.clone()));
        let cands = f1_candidates(&x.m, &dx, &f0, &mys, &dy);
        for_each_tuple(&cands, &mut budget, &mut |imgs| {
            if let Ok(f1) = Class2Hom::new(x.m.clone(), y.m.clone(), imgs) {
                if let Ok(f) = CrossMorphism::crossed(x.clone(), y.clone(), f1, f0.clone()) {
                    out.push(f);
                }
            }
            Ok(())
        })?;
    }
    Ok(out)
}

/// All morphisms of quadratic modules `x → y` at the same level; `y` must be finite.
pub fn quadratic_homs(x: &QuadModule, y: &QuadModule, cap: u64) -> Result<Vec<CrossMorphism>> {
    let mut budget = Budget { used: 0, cap };
    let nys = finite_elements(&Base::Nil(y.base.clone()), "target base")?;
    let mys = finite_elements(&Base::Nil(y.m.clone()), "target M")?;
    let lists: Vec<Vec<Class2Elem>> = vec![nys; x.base.ngens()];
    let mut f0s = Vec::new();
    for_each_tuple(&lists, &mut budget, &mut |imgs| {
        if let Ok(f0) = Class2Hom::new(x.base.clone(), y.base.clone(), imgs) {
            f0s.push(f0);
        }
        Ok(())
    })?;
    let mut out = Vec::new();
    for f0 in f0s {
        let g0 = GroupMap::from_class2(&f0);
        let dx = |z: &Class2Elem| BaseElem::Nil(x.del.apply(z));
        let dy = |z: &Class2Elem| BaseElem::Nil(y.del.apply(z));
        let cands = f1_candidates(&x.m, &dx, &g0, &mys, &dy);
        for_each_tuple(&cands, &mut budget, &mut |imgs| {
            if let Ok(f1) = Class2Hom::new(x.m.clone(), y.m.clone(), imgs) {
                if let Ok(f) = CrossMorphism::quadratic(x.clone(), y.clone(), f1, f0.clone()) {
                    out.push(f);
                }
            }
            Ok(())
        })?;
    }
    Ok(out)
}

/// Outcome of comparing `Hom(Ad_n x, y)` with `Hom(x, φ_n y)`.
#[derive(Clone, Debug)]
pub struct AdjunctionReport {
    pub left: usize,
    pub right: usize,
    /// `g ↦ φ(g) ∘ η` is injective and lands in the right-hand set.
    pub unit_bijective: bool,
    /// `φ(ε_y) ∘ η_{φ y} = id`.
    pub triangle: bool,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.left == self.right && self.unit_bijective && self.triangle
    }
}

fn distinct(fs: &[CrossMorphism]) -> bool {
    (0..fs.len()).all(|i| (i + 1..fs.len()).all(|j| !fs[i].equals(&fs[j])))
}

fn compare(unit: &CrossMorphism, left: &[CrossMorphism], right: &[CrossMorphism]) -> Result<bool> {
    let mut images = Vec::with_capacity(left.len());
    for g in left {
        let h = unit.then(&phi_morphism(g)?)?;
        if !right.iter().any(|r| r.equals(&h)) {
            return Ok(false);
        }
        images.push(h);
    }
    Ok(distinct(&images))
}

/// Verifies `Ad_n ⊣ φ_n` for `n = 2, 3` on the pair `(x, y)` by exhaustive enumeration.
pub fn adjunction_check(n: u32, x: &CrossObject, y: &CrossObject, cap: u64) -> Result<AdjunctionReport> {
    match n {
        2 => {
            let (x, y) = (x.as_crossed()?, y.as_quadratic()?);
            if y.level != 2 {
                return Err(Error::Invalid("Ad2 ⊣ φ2 needs a reduced target".into()));
            }
            let s = ad2(x)?;
            let py = phi2(y)?;
            let left = quadratic_homs(&s.module, y, cap)?;
            let right = crossed_homs(x, &py, cap)?;
            let unit_bijective = compare(&s.unit, &left, &right)?;
            let eta = ad2(&py)?.unit;
            let tri = eta.then(&phi_morphism(&counit2(y)?)?)?;
            let triangle = tri.equals(&CrossMorphism::identity(&CrossObject::Crossed(py)));
            Ok(AdjunctionReport { left: left.len(), right: right.len(), unit_bijective, triangle })
        }
        3 => {
            let (x, y) = (x.as_quadratic()?, y.as_quadratic()?);
            if x.level != 2 || y.level != 3 {
                return Err(Error::Invalid("Ad3 ⊣ φ3 goes from reduced to stable modules".into()));
            }
            let s = ad3(x)?;
            let py = phi3(y)?;
            let left = quadratic_homs(&s.module, y, cap)?;
            let right = quadratic_homs(x, &py, cap)?;
            let unit_bijective = compare(&s.unit, &left, &right)?;
            let eta = ad3(&py)?.unit;
            let tri = eta.then(&phi_morphism(&counit3(y)?)?)?;
            let triangle = tri.equals(&CrossMorphism::identity(&CrossObject::Quadratic(py)));
            Ok(AdjunctionReport { left: left.len(), right: right.len(), unit_bijective, triangle })
        }
        _ => Err(Error::Invalid(format!("adjunction check is for n = 2 or 3, got {}", n))),
    }
}
