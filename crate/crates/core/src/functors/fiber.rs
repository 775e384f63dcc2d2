use crate::cross::{h0, h1, Base, BaseElem, CrossMorphism, CrossObject, CrossedModule, GroupMap, QuadModule, H0, H1};
use crate::error::{Error, Result};
use crate::nil2::{self, direct_product, Class2Elem, Class2Group, Class2Hom, Quotient, Subgroup};

/// `Fib(f)` with `ĵ: Fib(f) → X` and the data needed for the connecting map.
#[derive(Clone, Debug)]
pub struct FiberResult {
    pub fiber: CrossObject,
    pub j: CrossMorphism,
    pub f: CrossMorphism,
    /// `Fib₀ ⊆ N × M'`.
    pub fib0: Subgroup,
    /// `Fib₀ → M'`.
    pub pr_m: Class2Hom,
}

fn nil_base(b: &Base) -> Result<&Class2Group> {
    b.as_nil().map_err(|_| Error::Invalid("fiber needs class-2 base groups".into()))
}

/// The fiber of a morphism of crossed or quadratic modules over class-2 bases.
pub fn fiber(f: &CrossMorphism) -> Result<FiberResult> {
    let (x, y) = (f.source(), f.target());
    if matches!(x, CrossObject::Groupoid(_)) {
        return Err(Error::Invalid("fiber is defined for levels n ≥ 1".into()));
    }
    let n = nil_base(&x.base()?)?.clone();
    let n2 = nil_base(&y.base()?)?.clone();
    let m = x.top()?.clone();
    let m2 = y.top()?.clone();
    let f0 = f.f0()?.as_class2()?;
    let f1 = f.f1()?.clone();
    let d = class2_boundary(&x)?;
    let d2 = class2_boundary(&y)?;
    if f0.source != n || f0.target != n2 {
        return Err(Error::Invalid("endpoint mismatch".into()));
    }

    let pm = direct_product(&n, &m2);
    let sub = nil2::equalizer(&pm.pr1.then(&f0), &pm.pr2.then(&d2))?;
    let fib0 = sub.group.clone();
    let pr_n = sub.incl.then(&pm.pr1);
    let pr_m = sub.incl.then(&pm.pr2);
    let del_images = (0..m.ngens())
        .map(|a| {
            let g = m.gen(a);
            sub.restrict(&pm.group.join(&d.apply(&g), &f1.apply(&g)))
                .ok_or_else(|| Error::Invalid("(∂, f1) does not land in the pullback".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let del = Class2Hom::new(m.clone(), fib0.clone(), del_images)?;

    let (fiber, j) = match &x {
        CrossObject::Crossed(c) => {
            let action = (0..fib0.ngens())
                .map(|i| {
                    let nn = BaseElem::Nil(pr_n.apply(&fib0.gen(i)));
                    let imgs = (0..m.ngens()).map(|a| c.act(&m.gen(a), &nn)).collect();
                    Class2Hom::new(m.clone(), m.clone(), imgs)
                })
                .collect::<Result<Vec<_>>>()?;
            let fc = CrossedModule::new(m.clone(), Base::Nil(fib0.clone()), GroupMap::from_class2(&del), action)?;
            let j = CrossMorphism::crossed(fc.clone(), c.clone(), Class2Hom::identity(&m), GroupMap::from_class2(&pr_n))?;
            (CrossObject::Crossed(fc), j)
        }
        CrossObject::Quadratic(q) => {
            let nab = fib0.ab_reduced();
            let r = nab.group.ngens();
            let lifts: Vec<Class2Elem> = (0..r).map(|i| pr_n.apply(&nab.lift_gen(&fib0, i))).collect();
            let mut omega = Vec::with_capacity(r * r);
            for a in &lifts {
                for b in &lifts {
                    omega.push(q.omega_pair(a, b));
                }
            }
            let fq = QuadModule::new(q.level, m.clone(), fib0.clone(), del, omega)?;
            let j = CrossMorphism::quadratic(fq.clone(), q.clone(), Class2Hom::identity(&m), pr_n)?;
            (CrossObject::Quadratic(fq), j)
        }
        CrossObject::Groupoid(_) => unreachable!(),
    };
    Ok(FiberResult { fiber, j, f: f.clone(), fib0: sub, pr_m })
}

fn class2_boundary(x: &CrossObject) -> Result<Class2Hom> {
    match x {
        CrossObject::Crossed(c) => c.del.as_class2(),
        CrossObject::Quadratic(q) => Ok(q.del.clone()),
        CrossObject::Groupoid(_) => Err(Error::Invalid("groupoids have no boundary".into())),
    }
}

/// `h1 Fib → h1 X → h1 Y → h0 Fib → h0 X → h0 Y` with exactness at each joint.
#[derive(Clone, Debug)]
pub struct SixTerm {
    pub maps: Vec<Class2Hom>,
    /// Injectivity of the first map, then exactness at `h1 X`, `h1 Y`, `h0 Fib`, `h0 X`.
    pub exact: [bool; 5],
}

impl SixTerm {
    pub fn is_exact(&self) -> bool {
        self.exact.iter().all(|&b| b)
    }

    pub fn joints() -> [&'static str; 5] {
        ["h1 Fib", "h1 X", "h1 Y", "h0 Fib", "h0 X"]
    }
}

fn kernel_sub(x: &CrossObject) -> Result<Subgroup> {
    match h1(x)? {
        H1::Abelian { sub, .. } => Ok(sub),
        H1::Automorphisms(_) => Err(Error::Invalid("expected a module".into())),
    }
}

fn cokernel_quotient(x: &CrossObject) -> Result<Quotient> {
    match h0(x)? {
        H0::Group(q) => Ok(q),
        _ => Err(Error::Invalid("expected a class-2 base".into())),
    }
}

/// `im f = ker g` for `A →f B →g C`, tested on generators of both subgroups.
fn exact_at(f: &Class2Hom, g: &Class2Hom) -> Result<bool> {
    if !f.then(g).is_trivial() {
        return Ok(false);
    }
    let k = nil2::kernel(g)?;
    Ok(k.incl.images().iter().all(|y| nil2::preimage(f, y).is_some()))
}

pub fn six_term_sequence(fr: &FiberResult) -> Result<SixTerm> {
    let (x, y) = (fr.f.source(), fr.f.target());
    let f1 = fr.f.f1()?;
    let f0 = fr.f.f0()?.as_class2()?;
    let (kf, kx, ky) = (kernel_sub(&fr.fiber)?, kernel_sub(&x)?, kernel_sub(&y)?);
    let (qf, qx, qy) = (cokernel_quotient(&fr.fiber)?, cokernel_quotient(&x)?, cokernel_quotient(&y)?);

    let restrict_all = |from: &Subgroup, to: &Subgroup, h: &Class2Hom| -> Result<Class2Hom> {
        let imgs = from
            .incl
            .images()
            .iter()
            .map(|v| to.restrict(&h.apply(v)).ok_or_else(|| Error::Invalid("map leaves the kernel".into())))
            .collect::<Result<Vec<_>>>()?;
        Class2Hom::new(from.group.clone(), to.group.clone(), imgs)
    };
    let a = restrict_all(&kf, &kx, &Class2Hom::identity(x.top()?))?;
    let b = restrict_all(&kx, &ky, f1)?;
    // δ(m') = class of (0, m')
    let nn = direct_product(&fr.j.f0()?.as_class2()?.target, y.top()?);
    let delta_imgs = ky
        .incl
        .images()
        .iter()
        .map(|v| {
            let p = nn.in2.apply(v);
            fr.fib0.restrict(&p).map(|z| qf.proj.apply(&z)).ok_or_else(|| Error::Invalid("(0, m') not in Fib₀".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let c = Class2Hom::new(ky.group.clone(), qf.group.clone(), delta_imgs)?;
    let d = qf.induced(&qx, &fr.j.f0()?.as_class2()?)?;
    let e = qx.induced(&qy, &f0)?;

    let exact = [
        nil2::kernel(&a)?.group.is_trivial(),
        exact_at(&a, &b)?,
        exact_at(&b, &c)?,
        exact_at(&c, &d)?,
        exact_at(&d, &e)?,
    ];
    Ok(SixTerm { maps: vec![a, b, c, d, e], exact })
}
