use std::fmt;

use crate::abelian::AbElem;
use crate::error::{Error, Result};
use crate::nil2::{inverse_automorphism, relation_failure, AbReduced, Class2Elem, Class2Group, Class2Hom, GroupLike};
use crate::quadratic;

use super::base::{Base, BaseElem, GroupMap};
use super::groupoid::PointedGroupoid;

/// A failed axiom together with the generators witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.witness)
    }
}

/// Automorphisms of `M` under composition in the order of a right action: `x·y = y ∘ x`.
struct Auts<'a>(&'a Class2Group);

impl GroupLike for Auts<'_> {
    type Elem = Class2Hom;

    fn identity(&self) -> Class2Hom {
        Class2Hom::identity(self.0)
    }

    fn mul(&self, x: &Class2Hom, y: &Class2Hom) -> Class2Hom {
        x.then(y)
    }

    fn inv(&self, x: &Class2Hom) -> Class2Hom {
        inverse_automorphism(x).expect("automorphism")
    }

    fn equal(&self, x: &Class2Hom, y: &Class2Hom) -> bool {
        x.equals(y)
    }
}

/// `∂: M → N` with a right action of `N` on `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossedModule {
    pub m: Class2Group,
    pub base: Base,
    pub del: GroupMap,
    action: Vec<Class2Hom>,
    action_inv: Vec<Class2Hom>,
}

impl CrossedModule {
    /// `action[i]` is `m ↦ m^{n_i}` for the `i`-th generator of `N`.
    pub fn new(m: Class2Group, base: Base, del: GroupMap, action: Vec<Class2Hom>) -> Result<Self> {
        if del.source != Base::Nil(m.clone()) || del.target != base {
            return Err(Error::Invalid("boundary must go from M to N".into()));
        }
        if action.len() != base.ngens() {
            return Err(Error::Shape(format!("expected {} action automorphisms, got {}", base.ngens(), action.len())));
        }
        let names = base.gen_names();
        let mut action_inv = Vec::with_capacity(action.len());
        for (i, a) in action.iter().enumerate() {
            if a.source != m || a.target != m {
                return Err(Error::Invalid("action maps must be endomorphisms of M".into()));
            }
            let inv = inverse_automorphism(a)
                .map_err(|e| Error::Invalid(format!("action of {} is not an automorphism: {}", names[i], e)))?;
            action_inv.push(inv);
        }
        if let Base::Nil(g) = &base {
            if let Some(msg) = relation_failure(g, &Auts(&m), &action) {
                return Err(Error::NotWellDefined(format!("action: {}", msg)));
            }
        }
        Ok(CrossedModule { m, base, del, action, action_inv })
    }

    /// Every generator of `N` acts trivially.
    pub fn trivial_action(m: Class2Group, base: Base, del: GroupMap) -> Result<Self> {
        let action = vec![Class2Hom::identity(&m); base.ngens()];
        Self::new(m, base, del, action)
    }

    pub fn action(&self) -> &[Class2Hom] {
        &self.action
    }

    fn act_gen(&self, x: &Class2Elem, i: usize, e: &crate::matrix::Int) -> Class2Elem {
        use num_traits::{Signed, ToPrimitive};
        let f = if e.is_negative() { &self.action_inv[i] } else { &self.action[i] };
        let times = e.abs().to_u64().expect("small exponent");
        (0..times).fold(x.clone(), |acc, _| f.apply(&acc))
    }

    /// `x^n`.
    pub fn act(&self, x: &Class2Elem, n: &BaseElem) -> Class2Elem {
        match n {
            BaseElem::Word(w) => w
                .letters
                .iter()
                .fold(x.clone(), |acc, &(i, e)| self.act_gen(&acc, i, &crate::matrix::int(e as i64))),
            BaseElem::Nil(y) => y
                .q
                .iter()
                .chain(&y.c)
                .enumerate()
                .fold(x.clone(), |acc, (i, e)| self.act_gen(&acc, i, e)),
        }
    }

    pub fn check_axioms(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (m, n) = (&self.m, &self.base);
        let mnames = m.gen_names();
        let nnames = n.gen_names();
        for a in 0..m.ngens() {
            let x = m.gen(a);
            let dx = self.del.apply(&BaseElem::Nil(x.clone()));
            for b in 0..n.ngens() {
                let g = n.gen(b);
                let lhs = self.del.apply(&BaseElem::Nil(self.act(&x, &g)));
                if !n.equal(&lhs, &n.conj(&dx, &g)) {
                    out.push(Violation { axiom: "CM1", witness: format!("m = {}, n = {}", mnames[a], nnames[b]) });
                }
            }
            for b in 0..m.ngens() {
                let y = m.gen(b);
                let lhs = self.act(&x, &self.del.apply(&BaseElem::Nil(y.clone())));
                if lhs != m.conj(&x, &y) {
                    out.push(Violation { axiom: "CM2", witness: format!("m = {}, m' = {}", mnames[a], mnames[b]) });
                }
            }
        }
        out
    }
}

/// `⊗²N_ab →ω M →∂ N`; level 2 is reduced, level ≥ 3 stable.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadModule {
    pub level: u32,
    pub m: Class2Group,
    pub base: Class2Group,
    pub del: Class2Hom,
    pub omega: Class2Hom,
    pub nab: AbReduced,
}

/// `⊗²N_ab` as a class-2 group, generators named `x*y`.
pub fn tensor_group(nab: &AbReduced) -> Class2Group {
    let t = quadratic::tensor_square(&nab.group);
    let k = nab.names.len();
    let names = (0..k * k).map(|i| format!("{}*{}", nab.names[i / k], nab.names[i % k])).collect();
    Class2Group::from_abelian(&t, names)
}

impl QuadModule {
    /// `omega_images[i * k + j]` is `ω(x_i ⊗ x_j)` for the reduced generators `x_i` of `N_ab`.
    pub fn new(level: u32, m: Class2Group, base: Class2Group, del: Class2Hom, omega_images: Vec<Class2Elem>) -> Result<Self> {
        if level < 2 {
            return Err(Error::Invalid("quadratic modules live at level 2 and above".into()));
        }
        if del.source != m || del.target != base {
            return Err(Error::Invalid("boundary must go from M to N".into()));
        }
        let nab = base.ab_reduced();
        let omega = Class2Hom::new(tensor_group(&nab), m.clone(), omega_images)?;
        Ok(QuadModule { level, m, base, del, omega, nab })
    }

    pub fn is_stable(&self) -> bool {
        self.level >= 3
    }

    pub fn ab_class(&self, x: &Class2Elem) -> AbElem {
        self.nab.class(&self.base, x)
    }

    /// `ω(x ⊗ y)` for elements of `N_ab` in reduced coordinates.
    pub fn omega_of(&self, x: &[crate::matrix::Int], y: &[crate::matrix::Int]) -> Class2Elem {
        self.omega.apply(&self.omega.source.from_central(&quadratic::tensor(x, y)))
    }

    /// `ω({x} ⊗ {y})` for `x, y ∈ N`.
    pub fn omega_pair(&self, x: &Class2Elem, y: &Class2Elem) -> Class2Elem {
        self.omega_of(&self.ab_class(x), &self.ab_class(y))
    }

    pub fn tensor_group(&self) -> &Class2Group {
        &self.omega.source
    }

    /// The `N`-action `m^n = m + ω({∂m} ⊗ {n})`.
    pub fn act(&self, x: &Class2Elem, n: &Class2Elem) -> Class2Elem {
        self.m.mul(x, &self.omega_pair(&self.del.apply(x), n))
    }

    pub fn check_axioms(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (m, n) = (&self.m, &self.base);
        let r = self.nab.group.ngens();
        let xs: Vec<Class2Elem> = (0..r).map(|i| self.nab.lift_gen(n, i)).collect();
        let xn = &self.nab.names;
        let mn = m.gen_names();
        for i in 0..r {
            for j in 0..r {
                let w = self.omega_pair(&xs[i], &xs[j]);
                if self.del.apply(&w) != n.commutator(&xs[i], &xs[j]) {
                    out.push(Violation { axiom: "RQ1", witness: format!("x = {}, y = {}", xn[i], xn[j]) });
                }
                if !m.is_central(&w) {
                    out.push(Violation { axiom: "central", witness: format!("ω({}⊗{}) is not central", xn[i], xn[j]) });
                }
                if self.is_stable() && !m.is_identity(&m.mul(&w, &self.omega_pair(&xs[j], &xs[i]))) {
                    out.push(Violation { axiom: "S4", witness: format!("x = {}, y = {}", xn[i], xn[j]) });
                }
            }
        }
        for a in 0..m.ngens() {
            let da = self.del.apply(&m.gen(a));
            for b in 0..m.ngens() {
                let db = self.del.apply(&m.gen(b));
                if self.omega_pair(&da, &db) != m.commutator(&m.gen(a), &m.gen(b)) {
                    out.push(Violation { axiom: "RQ2", witness: format!("a = {}, b = {}", mn[a], mn[b]) });
                }
            }
            for (i, x) in xs.iter().enumerate() {
                let s = m.mul(&self.omega_pair(&da, x), &self.omega_pair(x, &da));
                if !m.is_identity(&s) {
                    out.push(Violation { axiom: "RQ3", witness: format!("a = {}, x = {}", mn[a], xn[i]) });
                }
            }
        }
        out
    }
}

/// An object of `cross(n)`: level 0 groupoids, level 1 crossed modules, level ≥ 2 quadratic modules.
#[derive(Clone, Debug, PartialEq)]
pub enum CrossObject {
    Groupoid(PointedGroupoid),
    Crossed(CrossedModule),
    Quadratic(QuadModule),
}

impl CrossObject {
    pub fn level(&self) -> u32 {
        match self {
            CrossObject::Groupoid(_) => 0,
            CrossObject::Crossed(_) => 1,
            CrossObject::Quadratic(q) => q.level,
        }
    }

    /// Empty iff every axiom of the level holds on generators.
    pub fn check_axioms(&self) -> Vec<Violation> {
        match self {
            CrossObject::Groupoid(_) => Vec::new(),
            CrossObject::Crossed(c) => c.check_axioms(),
            CrossObject::Quadratic(q) => q.check_axioms(),
        }
    }

    pub fn as_crossed(&self) -> Result<&CrossedModule> {
        match self {
            CrossObject::Crossed(c) => Ok(c),
            _ => Err(Error::Invalid(format!("expected a crossed module, got level {}", self.level()))),
        }
    }

    pub fn as_quadratic(&self) -> Result<&QuadModule> {
        match self {
            CrossObject::Quadratic(q) => Ok(q),
            _ => Err(Error::Invalid(format!("expected a quadratic module, got level {}", self.level()))),
        }
    }

    pub fn as_groupoid(&self) -> Result<&PointedGroupoid> {
        match self {
            CrossObject::Groupoid(g) => Ok(g),
            _ => Err(Error::Invalid(format!("expected a pointed groupoid, got level {}", self.level()))),
        }
    }
}


impl CrossObject {
    /// `M` of a crossed or quadratic module.
    pub fn top(&self) -> Result<&Class2Group> {
        match self {
            CrossObject::Crossed(c) => Ok(&c.m),
            CrossObject::Quadratic(q) => Ok(&q.m),
            CrossObject::Groupoid(_) => Err(Error::Invalid("groupoids have no M".into())),
        }
    }

    /// `N` of a crossed or quadratic module.
    pub fn base(&self) -> Result<Base> {
        match self {
            CrossObject::Crossed(c) => Ok(c.base.clone()),
            CrossObject::Quadratic(q) => Ok(Base::Nil(q.base.clone())),
            CrossObject::Groupoid(_) => Err(Error::Invalid("groupoids have no N".into())),
        }
    }

    /// `∂m`.
    pub fn boundary(&self, m: &Class2Elem) -> BaseElem {
        match self {
            CrossObject::Crossed(c) => c.del.apply(&BaseElem::Nil(m.clone())),
            CrossObject::Quadratic(q) => BaseElem::Nil(q.del.apply(m)),
            CrossObject::Groupoid(_) => panic!("groupoids have no boundary"),
        }
    }

    /// `m^n`; for quadratic modules `m + ω({∂m} ⊗ {n})`.
    pub fn act(&self, m: &Class2Elem, n: &BaseElem) -> Class2Elem {
        match self {
            CrossObject::Crossed(c) => c.act(m, n),
            CrossObject::Quadratic(q) => q.act(m, n.as_nil().expect("class-2 base")),
            CrossObject::Groupoid(_) => panic!("groupoids have no action"),
        }
    }
}
