//! Subgroups and quotients of class-2 groups: kernels, equalizers, preimages
//! and quotients by normal closures, all reduced to integer linear algebra.

use num_traits::{One, Zero};

use crate::abelian::{AbElem, AbMap, FinAbGroup};
use crate::error::{Error, Result};
use crate::matrix::{
    int, is_zero_vec, kernel_basis, lattice_basis, smith_normal_form, solve, unit, zeros, Int, IntMatrix,
};

use super::{Class2Elem, Class2Group, Class2Hom};

/// One linear cut: `{x ∈ G : L·coords(x) = 0 in A}`.
#[derive(Clone, Debug)]
struct LinearStep {
    ambient: Class2Group,
    cond: IntMatrix,
    cond_target: FinAbGroup,
    /// Basis of the outer lattice of the subgroup, as columns.
    basis: IntMatrix,
    /// `h_i` for every basis column, as elements of the ambient group.
    lifts: Vec<Class2Elem>,
    /// Position of `h_i` among the outer generators of the subgroup, or its central coordinates.
    slot: Vec<std::result::Result<usize, AbElem>>,
    central_incl: AbMap,
    group: Class2Group,
}

impl LinearStep {
    fn new(g: &Class2Group, cond: IntMatrix, cond_target: &FinAbGroup) -> Result<Self> {
        let (k, m) = (g.k(), g.m());
        if cond.cols() != k + m || cond.rows() != cond_target.ngens() {
            return Err(Error::Shape("linear condition has the wrong shape".into()));
        }
        let lq = cond.select_cols(&(0..k).collect::<Vec<_>>());
        let lc = cond.select_cols(&(k..k + m).collect::<Vec<_>>());
        let rt = cond_target.relations().transpose();

        let (ch, central_incl) = AbMap::new(g.central().clone(), cond_target.clone(), lc.clone())?.kernel();

        // outer lattice P = projection of {(q, c, r) : Lq q + Lc c + R^T r = 0}
        let big = lq.hstack(&lc).hstack(&rt);
        let kb = kernel_basis(&big);
        let proj = IntMatrix::from_cols(k, kb.col_vecs().into_iter().map(|v| v[..k].to_vec()).collect());
        let pbasis = lattice_basis(&proj);
        let s = pbasis.cols();

        // adapt the basis to D = span(d_i e_i)
        let dgens: Vec<Vec<Int>> = (0..k)
            .filter(|&i| !g.orders()[i].is_zero())
            .map(|i| crate::matrix::vec_scale(&unit(k, i), &g.orders()[i]))
            .collect();
        let coords: Vec<Vec<Int>> = dgens
            .iter()
            .map(|d| solve(&pbasis, d).expect("finite-order powers lie in the subgroup lattice"))
            .collect();
        let (basis, deltas) = if coords.is_empty() {
            (pbasis, vec![int(0); s])
        } else {
            let x = IntMatrix::from_cols(s, coords);
            let sn = smith_normal_form(&x);
            let mut deltas = vec![int(0); s];
            for (i, d) in sn.diag.iter().enumerate() {
                deltas[i] = d.clone();
            }
            (pbasis.mul(&sn.u_inv), deltas)
        };

        let lcr = lc.hstack(&rt);
        let mut lifts = Vec::with_capacity(s);
        for i in 0..s {
            let b = basis.col(i);
            let rhs = crate::matrix::vec_neg(&lq.apply(&b));
            let sol = solve(&lcr, &rhs).expect("basis vector of the projected lattice lifts");
            lifts.push(g.collect(&b, &sol[..m]));
        }

        let to_ch = |c: &AbElem| -> Result<AbElem> {
            central_incl
                .preimage(c)
                .ok_or_else(|| Error::NotWellDefined("central element outside the subgroup".into()))
        };
        let mut slot = Vec::with_capacity(s);
        let mut orders = Vec::new();
        let mut kept = Vec::new();
        for i in 0..s {
            if deltas[i].is_one() {
                let h = &lifts[i];
                debug_assert!(is_zero_vec(&h.q));
                slot.push(Err(to_ch(&h.c)?));
            } else {
                slot.push(Ok(kept.len()));
                kept.push(i);
                orders.push(deltas[i].clone());
            }
        }
        let mut powers = Vec::with_capacity(kept.len());
        for &i in &kept {
            if deltas[i].is_zero() {
                powers.push(zeros(ch.ngens()));
            } else {
                let p = g.pow(&lifts[i], &deltas[i]);
                debug_assert!(is_zero_vec(&p.q));
                powers.push(to_ch(&p.c)?);
            }
        }
        let mut lambda = vec![vec![zeros(ch.ngens()); kept.len()]; kept.len()];
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate() {
                if a != b {
                    lambda[a][b] = to_ch(&g.lambda_of(&basis.col(i), &basis.col(j)))?;
                }
            }
        }
        let qnames = (0..kept.len()).map(|i| format!("h{}", i + 1)).collect();
        let cnames = (0..ch.ngens()).map(|j| format!("z{}", j + 1)).collect();
        let group = Class2Group::new(qnames, orders, powers, ch, cnames, lambda)?;
        Ok(LinearStep {
            ambient: g.clone(),
            cond,
            cond_target: cond_target.clone(),
            basis,
            lifts,
            slot,
            central_incl,
            group,
        })
    }

    fn inclusion(&self) -> Class2Hom {
        let g = &self.ambient;
        let mut images: Vec<Class2Elem> = self
            .slot
            .iter()
            .zip(&self.lifts)
            .filter(|(s, _)| s.is_ok())
            .map(|(_, h)| h.clone())
            .collect();
        for col in self.central_incl.matrix.col_vecs() {
            images.push(g.from_central(&col));
        }
        Class2Hom::new_unchecked(self.group.clone(), g.clone(), images)
    }

    fn contains(&self, x: &Class2Elem) -> bool {
        let coords = self.ambient.ab_coords(x);
        self.cond_target.is_zero(&self.cond.apply(&coords))
    }

    fn restrict(&self, x: &Class2Elem) -> Option<Class2Elem> {
        if !self.contains(x) {
            return None;
        }
        let g = &self.ambient;
        let h = &self.group;
        let a = solve(&self.basis, &x.q)?;
        let mut y = g.identity();
        let mut out = h.identity();
        let mut central = zeros(h.m());
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            y = g.mul(&y, &g.pow(&self.lifts[i], ai));
            match &self.slot[i] {
                Ok(idx) => out = h.mul(&out, &h.pow(&h.gen(*idx), ai)),
                Err(w) => central = crate::matrix::vec_add(&central, &crate::matrix::vec_scale(w, ai)),
            }
        }
        let z = g.mul(&g.inv(&y), x);
        debug_assert!(is_zero_vec(&z.q));
        let zc = self.central_incl.preimage(&z.c)?;
        let central = crate::matrix::vec_add(&central, &zc);
        Some(h.mul(&out, &h.from_central(&central)))
    }
}

/// A subgroup with its inclusion and a way to rewrite ambient elements.
#[derive(Clone, Debug)]
pub struct Subgroup {
    steps: Vec<LinearStep>,
    pub group: Class2Group,
    pub incl: Class2Hom,
}

impl Subgroup {
    fn from_steps(ambient: &Class2Group, steps: Vec<LinearStep>) -> Self {
        let mut incl = Class2Hom::identity(ambient);
        for s in steps.iter() {
            incl = s.inclusion().then(&incl);
        }
        let group = steps.last().map_or_else(|| ambient.clone(), |s| s.group.clone());
        Subgroup { steps, group, incl }
    }

    /// `{x : L·coords(x) = 0 in A}` for a homomorphism `G → A` given on unreduced coordinates.
    pub fn linear(g: &Class2Group, cond: IntMatrix, target: &FinAbGroup) -> Result<Self> {
        Ok(Self::from_steps(g, vec![LinearStep::new(g, cond, target)?]))
    }

    pub fn whole(g: &Class2Group) -> Self {
        Self::from_steps(g, vec![])
    }

    pub fn ambient(&self) -> &Class2Group {
        &self.incl.target
    }

    pub fn contains(&self, x: &Class2Elem) -> bool {
        self.restrict(x).is_some()
    }

    /// Rewrites an ambient element as an element of the subgroup.
    pub fn restrict(&self, x: &Class2Elem) -> Option<Class2Elem> {
        let mut cur = x.clone();
        for s in &self.steps {
            cur = s.restrict(&cur)?;
        }
        Some(cur)
    }

    /// Refines by a further linear condition on the subgroup.
    pub fn refine(mut self, cond: IntMatrix, target: &FinAbGroup) -> Result<Self> {
        let ambient = self.ambient().clone();
        let step = LinearStep::new(&self.group, cond, target)?;
        self.steps.push(step);
        Ok(Self::from_steps(&ambient, self.steps))
    }
}

fn outer_condition(images: &[Class2Elem], h: &Class2Group) -> IntMatrix {
    IntMatrix::from_cols(h.k(), images.iter().map(|x| x.q.clone()).collect())
}

/// `ker f`.
pub fn kernel(f: &Class2Hom) -> Result<Subgroup> {
    let h = &f.target;
    let s1 = Subgroup::linear(&f.source, outer_condition(f.images(), h), &h.outer())?;
    let imgs: Vec<Class2Elem> = s1.incl.images().iter().map(|x| f.apply(x)).collect();
    let cond = IntMatrix::from_cols(h.m(), imgs.iter().map(|x| x.c.clone()).collect());
    let cond = if imgs.is_empty() { IntMatrix::zeros(h.m(), 0) } else { cond };
    s1.refine(cond, h.central())
}

/// `{x : f(x) = g(x)}` for parallel homomorphisms.
pub fn equalizer(f: &Class2Hom, g: &Class2Hom) -> Result<Subgroup> {
    let h = &f.target;
    let diff: Vec<Class2Elem> = f
        .images()
        .iter()
        .zip(g.images())
        .map(|(x, y)| Class2Elem { q: crate::matrix::vec_sub(&x.q, &y.q), c: zeros(h.m()) })
        .collect();
    let s1 = Subgroup::linear(&f.source, outer_condition(&diff, h), &h.outer())?;
    let mut cols = Vec::new();
    for x in s1.incl.images() {
        let d = h.mul(&h.inv(&f.apply(x)), &g.apply(x));
        if !is_zero_vec(&d.q) {
            return Err(Error::Invalid("equalizer step left the central layer".into()));
        }
        cols.push(d.c);
    }
    let cond = if cols.is_empty() { IntMatrix::zeros(h.m(), 0) } else { IntMatrix::from_cols(h.m(), cols) };
    s1.refine(cond, h.central())
}

/// Some `x` with `f(x) = y`.
pub fn preimage(f: &Class2Hom, y: &Class2Elem) -> Option<Class2Elem> {
    let (g, h) = (&f.source, &f.target);
    let (k, m) = (g.k(), g.m());
    let lq = outer_condition(f.images(), h);
    let big = lq.hstack(&h.outer().relations().transpose());
    let sol = solve(&big, &y.q)?;
    let x0 = g.collect(&sol[..k], &sol[k..k + m]);
    let r = h.mul(&h.inv(&f.apply(&x0)), y);
    debug_assert!(is_zero_vec(&r.q));
    let s1 = Subgroup::linear(g, lq, &h.outer()).ok()?;
    let imgs: Vec<Class2Elem> = s1.incl.images().iter().map(|x| f.apply(x)).collect();
    let k1 = &s1.group;
    let l2 = if imgs.is_empty() {
        IntMatrix::zeros(h.m(), 0)
    } else {
        IntMatrix::from_cols(h.m(), imgs.iter().map(|x| x.c.clone()).collect())
    };
    let big2 = l2.hstack(&h.central().relations().transpose());
    let sol2 = solve(&big2, &r.c)?;
    let z = k1.collect(&sol2[..k1.k()], &sol2[k1.k()..k1.ngens()]);
    Some(g.mul(&x0, &s1.incl.apply(&z)))
}

/// `G / N` with its projection and a section on generators.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Class2Group,
    pub proj: Class2Hom,
    lifts: Vec<Class2Elem>,
}

impl Quotient {
    pub fn ambient(&self) -> &Class2Group {
        &self.proj.source
    }

    /// A preimage of `x` under the projection.
    pub fn lift(&self, x: &Class2Elem) -> Class2Elem {
        let g = self.ambient();
        let q = &self.group;
        let mut acc = g.identity();
        for (i, a) in x.q.iter().enumerate() {
            if !a.is_zero() {
                acc = g.mul(&acc, &g.pow(&self.lifts[i], a));
            }
        }
        for (j, a) in x.c.iter().enumerate() {
            if !a.is_zero() {
                acc = g.mul(&acc, &g.pow(&self.lifts[q.k() + j], a));
            }
        }
        acc
    }

    /// The map `G/N → G'/N'` induced by `f: G → G'`.
    pub fn induced(&self, other: &Quotient, f: &Class2Hom) -> Result<Class2Hom> {
        let images = (0..self.group.ngens())
            .map(|i| other.proj.apply(&f.apply(&self.lift(&self.group.gen(i)))))
            .collect();
        Class2Hom::new(self.group.clone(), other.group.clone(), images)
    }
}

/// Quotient of `G` by the normal closure of `rels`.
pub fn quotient(g: &Class2Group, rels: &[Class2Elem]) -> Result<Quotient> {
    let (k, m) = (g.k(), g.m());
    let mut crels: Vec<AbElem> = Vec::new();
    for s in rels {
        for l in 0..k {
            crels.push(g.lambda_of(&s.q, &unit(k, l)));
        }
    }
    // columns: outer parts of the relators, then d_l e_l
    let finite: Vec<usize> = (0..k).filter(|&l| !g.orders()[l].is_zero()).collect();
    let mut cols: Vec<Vec<Int>> = rels.iter().map(|s| s.q.clone()).collect();
    for &l in &finite {
        cols.push(crate::matrix::vec_scale(&unit(k, l), &g.orders()[l]));
    }
    let lmat = if cols.is_empty() { IntMatrix::zeros(k, 0) } else { IntMatrix::from_cols(k, cols.clone()) };
    let nrel = rels.len();
    let relator_product = |a: &[Int]| -> Class2Elem {
        let mut acc = g.identity();
        for (i, ai) in a[..nrel].iter().enumerate() {
            if !ai.is_zero() {
                acc = g.mul(&acc, &g.pow(&rels[i], ai));
            }
        }
        acc
    };
    for v in kernel_basis(&lmat).col_vecs() {
        let p = relator_product(&v);
        if !is_zero_vec(&p.q) {
            return Err(Error::Invalid("relator product left the central layer".into()));
        }
        crels.push(p.c);
    }
    let cnew = g.central().quotient(&crels).0;

    let outer_rel = FinAbGroup::from_relation_rows(k, cols);
    let s = smith_normal_form(outer_rel.relations());
    let mut deltas = vec![int(0); k];
    for (i, d) in s.diag.iter().enumerate() {
        deltas[i] = d.clone();
    }
    let rows: Vec<Vec<Int>> = (0..k).map(|i| s.v_inv.row(i)).collect();
    let gi: Vec<Class2Elem> = rows.iter().map(|r| g.collect(r, &zeros(m))).collect();

    // central value of an element whose outer part lies in the relator lattice
    let central_mod_rels = |x: &Class2Elem| -> Result<AbElem> {
        let a = solve(&lmat, &x.q).ok_or_else(|| Error::Invalid("outer part outside relator lattice".into()))?;
        let p = relator_product(&a);
        let z = g.mul(x, &g.inv(&p));
        if !is_zero_vec(&z.q) {
            return Err(Error::Invalid("quotient reduction left the central layer".into()));
        }
        Ok(z.c)
    };

    let mut kept = Vec::new();
    let mut dropped_w: Vec<Option<AbElem>> = vec![None; k];
    for i in 0..k {
        if deltas[i].is_one() {
            dropped_w[i] = Some(central_mod_rels(&gi[i])?);
        } else {
            kept.push(i);
        }
    }
    let mut powers = Vec::new();
    for &i in &kept {
        if deltas[i].is_zero() {
            powers.push(zeros(m));
        } else {
            powers.push(central_mod_rels(&g.pow(&gi[i], &deltas[i]))?);
        }
    }
    let lambda: Vec<Vec<AbElem>> = kept
        .iter()
        .map(|&i| kept.iter().map(|&j| g.lambda_of(&rows[i], &rows[j])).collect())
        .collect();
    let qnames = kept
        .iter()
        .map(|&i| match rows[i].iter().position(|x| !x.is_zero()) {
            Some(p) if rows[i] == unit(k, p) => g.qnames()[p].clone(),
            _ => format!("u{}", i + 1),
        })
        .collect();
    let orders = kept.iter().map(|&i| deltas[i].clone()).collect();
    let group = Class2Group::new(qnames, orders, powers, cnew, g.cnames().to_vec(), lambda)?;

    let mut images = Vec::with_capacity(g.ngens());
    for l in 0..k {
        let y = s.v.row(l);
        let mut prod = g.identity();
        for i in 0..k {
            if !y[i].is_zero() {
                prod = g.mul(&prod, &g.pow(&gi[i], &y[i]));
            }
        }
        let z = g.mul(&g.inv(&prod), &g.gen(l));
        debug_assert!(is_zero_vec(&z.q));
        let mut central = z.c;
        let mut img = group.identity();
        for (slot, &i) in kept.iter().enumerate() {
            if !y[i].is_zero() {
                img = group.mul(&img, &group.pow(&group.gen(slot), &y[i]));
            }
        }
        for i in 0..k {
            if let Some(w) = &dropped_w[i] {
                central = crate::matrix::vec_add(&central, &crate::matrix::vec_scale(w, &y[i]));
            }
        }
        images.push(group.mul(&img, &group.from_central(&central)));
    }
    for j in 0..m {
        images.push(group.from_central(&unit(m, j)));
    }
    let proj = Class2Hom::new(g.clone(), group.clone(), images)?;
    let mut lifts: Vec<Class2Elem> = kept.iter().map(|&i| gi[i].clone()).collect();
    lifts.extend((0..m).map(|j| g.gen(k + j)));
    Ok(Quotient { group, proj, lifts })
}

/// `H / ⟨⟨f(G)⟩⟩`.
pub fn cokernel(f: &Class2Hom) -> Result<Quotient> {
    quotient(&f.target, f.images())
}

/// The center `Z(G)`.
pub fn center(g: &Class2Group) -> Result<Subgroup> {
    let (k, m) = (g.k(), g.m());
    let target = (0..k).fold(FinAbGroup::trivial(), |acc, _| acc.direct_sum(g.central()));
    let mut cols = Vec::with_capacity(k + m);
    for i in 0..k {
        let mut col = Vec::with_capacity(k * m);
        for l in 0..k {
            col.extend(g.lambda(i, l).iter().cloned());
        }
        cols.push(col);
    }
    cols.extend((0..m).map(|_| zeros(k * m)));
    let cond = if cols.is_empty() { IntMatrix::zeros(k * m, 0) } else { IntMatrix::from_cols(k * m, cols) };
    Subgroup::linear(g, cond, &target)
}

/// `[G, G]` as an abelian group.
pub fn commutator_subgroup(g: &Class2Group) -> FinAbGroup {
    let k = g.k();
    let gens: Vec<AbElem> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).map(|(i, j)| g.lambda(i, j).clone()).collect();
    let f = AbMap::new_unchecked(
        FinAbGroup::free(gens.len()),
        g.central().clone(),
        if gens.is_empty() { IntMatrix::zeros(g.m(), 0) } else { IntMatrix::from_cols(g.m(), gens.clone()) },
    );
    let (_, incl) = f.kernel();
    FinAbGroup::free(gens.len()).quotient(&incl.matrix.col_vecs()).0
}

/// A subgroup that happens to be abelian, as a presented abelian group.
pub fn as_abelian_group(h: &Class2Group) -> Result<FinAbGroup> {
    h.as_abelian().ok_or_else(|| Error::Invalid("group is not abelian".into()))
}

/// Isomorphism invariants: abelianization, center and commutator subgroup.
pub fn invariants(g: &Class2Group) -> Result<(FinAbGroup, FinAbGroup, FinAbGroup)> {
    let z = center(g)?;
    Ok((g.abelianization(), as_abelian_group(&z.group)?, commutator_subgroup(g)))
}

/// Necessary conditions for `G ≅ H`; complete for abelian groups.
pub fn plausibly_isomorphic(g: &Class2Group, h: &Class2Group) -> Result<bool> {
    let (a1, z1, c1) = invariants(g)?;
    let (a2, z2, c2) = invariants(h)?;
    let same = a1.is_isomorphic(&a2) && z1.is_isomorphic(&z2) && c1.is_isomorphic(&c2);
    if let (Some(o1), Some(o2)) = (g.order(), h.order()) {
        return Ok(same && o1 == o2);
    }
    Ok(same)
}

/// The inverse of a bijective endomorphism, or an error naming the failure.
pub fn inverse_automorphism(f: &Class2Hom) -> Result<Class2Hom> {
    let g = &f.source;
    let mut images = Vec::with_capacity(g.ngens());
    for i in 0..g.ngens() {
        let x = preimage(f, &g.gen(i)).ok_or_else(|| Error::Invalid("map is not surjective".into()))?;
        images.push(x);
    }
    let inv = Class2Hom::new(f.target.clone(), g.clone(), images)?;
    if !f.then(&inv).equals(&Class2Hom::identity(g)) {
        return Err(Error::Invalid("map is not injective".into()));
    }
    Ok(inv)
}

/// Injective and surjective.
pub fn is_isomorphism(f: &Class2Hom) -> Result<bool> {
    Ok(kernel(f)?.group.is_trivial() && cokernel(f)?.group.is_trivial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ints;
    use crate::nil2::free_nil_on;

    #[test]
    fn kernel_of_abelianization_is_commutators() {
        let g = free_nil_on(&["a", "b", "c"]);
        let ab = g.abelianization();
        let f = Class2Group::from_abelian(&ab, (0..g.ngens()).map(|i| format!("y{}", i)).collect());
        let h = Class2Hom::new(
            g.clone(),
            f.clone(),
            (0..g.ngens()).map(|i| f.from_central(&g.ab_coords(&g.gen(i)))).collect(),
        )
        .unwrap();
        let k = kernel(&h).unwrap();
        assert_eq!(k.group.k(), 0);
        assert!(k.group.central().is_isomorphic(&FinAbGroup::free(3)));
        let x = g.commutator(&g.gen(0), &g.gen(2));
        let r = k.restrict(&x).unwrap();
        assert_eq!(k.incl.apply(&r), x);
        assert!(k.restrict(&g.gen(0)).is_none());
    }

    #[test]
    fn identity_has_trivial_kernel_and_cokernel() {
        let g = free_nil_on(&["a", "b"]);
        let id = Class2Hom::identity(&g);
        assert!(kernel(&id).unwrap().group.is_trivial());
        assert!(cokernel(&id).unwrap().group.is_trivial());
        assert!(is_isomorphism(&id).unwrap());
    }

    #[test]
    fn cokernel_of_letter_inclusion() {
        let z = free_nil_on(&["t"]);
        let g = free_nil_on(&["a", "b"]);
        let f = Class2Hom::new(z, g.clone(), vec![g.gen(0)]).unwrap();
        let q = cokernel(&f).unwrap();
        assert!(q.group.as_abelian().unwrap().is_isomorphic(&FinAbGroup::free(1)));
        assert_eq!(q.proj.apply(&g.gen(1)), q.group.gen(0));
    }

    #[test]
    fn quotient_by_central_layer() {
        let g = free_nil_on(&["a", "b"]);
        let q = quotient(&g, &[g.gen(2)]).unwrap();
        assert!(q.group.as_abelian().unwrap().is_isomorphic(&FinAbGroup::free(2)));
    }

    #[test]
    fn quotient_with_torsion_and_lifts() {
        let g = free_nil_on(&["a", "b"]);
        // a^2 = 1, b^3 = 1 forces [a,b]^6 = 1 and in fact [a,b] = 1
        let q = quotient(&g, &[g.pow(&g.gen(0), &int(2)), g.pow(&g.gen(1), &int(3))]).unwrap();
        assert_eq!(q.group.order(), Some(int(6)));
        for i in 0..q.group.ngens() {
            let x = q.group.gen(i);
            assert_eq!(q.proj.apply(&q.lift(&x)), x);
        }
        // a^4 = 1, b^4 = 1 gives a group of order 4 * 4 * 4
        let q = quotient(&g, &[g.pow(&g.gen(0), &int(4)), g.pow(&g.gen(1), &int(4))]).unwrap();
        assert_eq!(q.group.order(), Some(int(64)));
    }

    #[test]
    fn preimage_and_equalizer() {
        let g = free_nil_on(&["a", "b"]);
        let a = g.gen(0);
        let b = g.gen(1);
        let f = Class2Hom::new(g.clone(), g.clone(), vec![g.mul(&a, &b), b.clone(), g.gen(2)]).unwrap();
        let y = g.product([&b, &a, &a, &g.gen(2)]);
        let x = preimage(&f, &y).unwrap();
        assert_eq!(f.apply(&x), y);
        let e = equalizer(&f, &Class2Hom::identity(&g)).unwrap();
        // fixed points: generated by b and the commutator
        assert!(e.contains(&b));
        assert!(!e.contains(&a));
        assert!(e.contains(&g.gen(2)));
        for im in e.incl.images() {
            assert_eq!(f.apply(im), im.clone());
        }
    }

    #[test]
    fn center_of_free_nil() {
        let g = free_nil_on(&["a", "b"]);
        let z = center(&g).unwrap();
        assert!(as_abelian_group(&z.group).unwrap().is_isomorphic(&FinAbGroup::free(1)));
        assert!(commutator_subgroup(&g).is_isomorphic(&FinAbGroup::free(1)));
        let c2 = FinAbGroup::cyclic(2);
        let z1 = ints(&[1]);
        let q = Class2Group::new(
            vec!["i".into(), "j".into()],
            ints(&[2, 2]),
            vec![z1.clone(), z1.clone()],
            c2,
            vec!["z".into()],
            vec![vec![ints(&[0]), z1.clone()], vec![z1.clone(), ints(&[0])]],
        )
        .unwrap();
        let (ab, zz, cc) = invariants(&q).unwrap();
        assert!(ab.is_isomorphic(&FinAbGroup::from_orders(&ints(&[2, 2]))));
        assert!(zz.is_isomorphic(&FinAbGroup::cyclic(2)));
        assert!(cc.is_isomorphic(&FinAbGroup::cyclic(2)));
    }
}
