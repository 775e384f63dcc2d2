use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::abelian::{AbElem, FinAbGroup};
use crate::error::{Error, Result};
use crate::matrix::{int, vec_add, vec_neg, vec_scale, vec_sub, zeros, Int, IntMatrix};

/// A group of nilpotency class at most two in collected form.
///
/// Elements are `e_1^{q_1} ... e_k^{q_k} c` with `c` in the central layer `C`.
/// Generator `e_i` has order `d_i` modulo `C` (`0` for infinite) and
/// `e_i^{d_i} = t_i`. Commutators of generators are `λ(e_i, e_j) ∈ C`.
#[derive(Clone, PartialEq)]
pub struct Class2Group {
    qnames: Vec<String>,
    orders: Vec<Int>,
    powers: Vec<AbElem>,
    central: FinAbGroup,
    cnames: Vec<String>,
    lambda: Vec<Vec<AbElem>>,
}

/// Abelianization on the generators that survive unit eliminations.
#[derive(Clone, Debug, PartialEq)]
pub struct AbReduced {
    pub group: FinAbGroup,
    /// Maps abelianization coordinates (all generators) to reduced coordinates.
    pub to_reduced: IntMatrix,
    /// Indices of the surviving generators; each lifts to that generator of `G`.
    pub kept: Vec<usize>,
    pub names: Vec<String>,
}

impl AbReduced {
    pub fn class(&self, g: &Class2Group, x: &Class2Elem) -> AbElem {
        self.group.normalize(&self.to_reduced.apply(&g.ab_coords(x)))
    }

    /// A preimage in `G` of a reduced generator.
    pub fn lift_gen(&self, g: &Class2Group, i: usize) -> Class2Elem {
        g.gen(self.kept[i])
    }

    pub fn lift(&self, g: &Class2Group, v: &[Int]) -> Class2Elem {
        let mut acc = g.identity();
        for (i, a) in v.iter().enumerate() {
            if !a.is_zero() {
                acc = g.mul(&acc, &g.pow(&self.lift_gen(g, i), a));
            }
        }
        acc
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Class2Elem {
    pub q: Vec<Int>,
    pub c: AbElem,
}

impl Class2Group {
    pub fn new(
        qnames: Vec<String>,
        orders: Vec<Int>,
        powers: Vec<AbElem>,
        central: FinAbGroup,
        cnames: Vec<String>,
        lambda: Vec<Vec<AbElem>>,
    ) -> Result<Self> {
        let k = qnames.len();
        let m = central.ngens();
        if orders.len() != k || powers.len() != k || lambda.len() != k || cnames.len() != m {
            return Err(Error::Shape("class-2 group data has inconsistent sizes".into()));
        }
        if orders.iter().any(|d| d.is_negative()) {
            return Err(Error::Invalid("negative generator order".into()));
        }
        for t in &powers {
            if t.len() != m {
                return Err(Error::Shape("power value has wrong length".into()));
            }
        }
        for i in 0..k {
            if lambda[i].len() != k || lambda[i].iter().any(|v| v.len() != m) {
                return Err(Error::Shape("commutator table has wrong shape".into()));
            }
            if !central.is_zero(&lambda[i][i]) {
                return Err(Error::Invalid(format!("[{0},{0}] must be trivial", qnames[i])));
            }
            for j in 0..k {
                if !central.is_zero(&vec_add(&lambda[i][j], &lambda[j][i])) {
                    return Err(Error::Invalid(format!("commutator table is not alternating at ({}, {})", i, j)));
                }
                if !orders[i].is_zero() && !central.is_zero(&vec_scale(&lambda[i][j], &orders[i])) {
                    return Err(Error::Invalid(format!(
                        "{}^{} is not central",
                        qnames[i], orders[i]
                    )));
                }
            }
        }
        let powers = powers.iter().map(|t| central.normalize(t)).collect();
        let lambda = lambda.iter().map(|row| row.iter().map(|v| central.normalize(v)).collect()).collect();
        Ok(Class2Group { qnames, orders, powers, central, cnames, lambda })
    }

    pub fn from_abelian(a: &FinAbGroup, names: Vec<String>) -> Self {
        Class2Group {
            qnames: vec![],
            orders: vec![],
            powers: vec![],
            central: a.clone(),
            cnames: names,
            lambda: vec![],
        }
    }

    pub fn trivial() -> Self {
        Self::from_abelian(&FinAbGroup::trivial(), vec![])
    }

    pub fn k(&self) -> usize {
        self.qnames.len()
    }

    pub fn m(&self) -> usize {
        self.central.ngens()
    }

    pub fn ngens(&self) -> usize {
        self.k() + self.m()
    }

    pub fn qnames(&self) -> &[String] {
        &self.qnames
    }

    pub fn cnames(&self) -> &[String] {
        &self.cnames
    }

    /// Names of all generators, outer ones first.
    pub fn gen_names(&self) -> Vec<String> {
        self.qnames.iter().chain(&self.cnames).cloned().collect()
    }

    pub fn orders(&self) -> &[Int] {
        &self.orders
    }

    pub fn power(&self, i: usize) -> &AbElem {
        &self.powers[i]
    }

    pub fn central(&self) -> &FinAbGroup {
        &self.central
    }

    pub fn lambda(&self, i: usize, j: usize) -> &AbElem {
        &self.lambda[i][j]
    }

    pub fn with_names(mut self, qnames: Vec<String>, cnames: Vec<String>) -> Self {
        assert_eq!(qnames.len(), self.k());
        assert_eq!(cnames.len(), self.m());
        self.qnames = qnames;
        self.cnames = cnames;
        self
    }

    pub fn identity(&self) -> Class2Elem {
        Class2Elem { q: zeros(self.k()), c: zeros(self.m()) }
    }

    /// Collects `e^q c` for arbitrary integer exponents.
    pub fn collect(&self, q: &[Int], c: &[Int]) -> Class2Elem {
        let mut q = q.to_vec();
        let mut c = c.to_vec();
        for i in 0..self.k() {
            let d = &self.orders[i];
            if !d.is_zero() {
                let (a, r) = q[i].div_mod_floor(d);
                q[i] = r;
                if !a.is_zero() {
                    c = vec_add(&c, &vec_scale(&self.powers[i], &a));
                }
            }
        }
        Class2Elem { q, c: self.central.normalize(&c) }
    }

    /// The i-th generator overall: outer generators first, then central ones.
    pub fn gen(&self, i: usize) -> Class2Elem {
        let k = self.k();
        if i < k {
            self.collect(&crate::matrix::unit(k, i), &zeros(self.m()))
        } else {
            self.from_central(&crate::matrix::unit(self.m(), i - k))
        }
    }

    pub fn from_central(&self, c: &[Int]) -> Class2Elem {
        Class2Elem { q: zeros(self.k()), c: self.central.normalize(c) }
    }

    /// `λ(q, q')`, the commutator of two outer parts.
    pub fn lambda_of(&self, q: &[Int], q2: &[Int]) -> AbElem {
        let mut out = zeros(self.m());
        for i in 0..self.k() {
            if q[i].is_zero() {
                continue;
            }
            for j in 0..self.k() {
                if i != j && !q2[j].is_zero() {
                    out = vec_add(&out, &vec_scale(&self.lambda[i][j], &(&q[i] * &q2[j])));
                }
            }
        }
        out
    }

    /// The collection cocycle: moving `e_i^{q'_i}` left past `e_j^{q_j}` for `j > i`.
    pub fn beta(&self, q: &[Int], q2: &[Int]) -> AbElem {
        let mut out = zeros(self.m());
        for j in 0..self.k() {
            if q[j].is_zero() {
                continue;
            }
            for i in 0..j {
                if !q2[i].is_zero() {
                    out = vec_add(&out, &vec_scale(&self.lambda[j][i], &(&q[j] * &q2[i])));
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &Class2Elem, y: &Class2Elem) -> Class2Elem {
        let q = vec_add(&x.q, &y.q);
        let c = vec_add(&vec_add(&x.c, &y.c), &self.beta(&x.q, &y.q));
        self.collect(&q, &c)
    }

    pub fn inv(&self, x: &Class2Elem) -> Class2Elem {
        let c = vec_add(&vec_neg(&x.c), &self.beta(&x.q, &x.q));
        self.collect(&vec_neg(&x.q), &c)
    }

    pub fn pow(&self, x: &Class2Elem, n: &Int) -> Class2Elem {
        let base = if n.is_negative() { self.inv(x) } else { x.clone() };
        let mut e = n.abs();
        let mut acc = self.identity();
        let mut sq = base;
        while !e.is_zero() {
            if e.is_odd() {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if !e.is_zero() {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: &Class2Elem, y: &Class2Elem) -> Class2Elem {
        self.from_central(&self.lambda_of(&x.q, &y.q))
    }

    /// `y⁻¹ x y`.
    pub fn conj(&self, x: &Class2Elem, y: &Class2Elem) -> Class2Elem {
        self.mul(x, &self.commutator(x, y))
    }

    pub fn product<'a>(&self, xs: impl IntoIterator<Item = &'a Class2Elem>) -> Class2Elem {
        xs.into_iter().fold(self.identity(), |acc, x| self.mul(&acc, x))
    }

    pub fn is_identity(&self, x: &Class2Elem) -> bool {
        is_zero(&x.q) && self.central.is_zero(&x.c)
    }

    pub fn is_central(&self, x: &Class2Elem) -> bool {
        (0..self.k()).all(|j| self.central.is_zero(&self.lambda_of(&x.q, &crate::matrix::unit(self.k(), j))))
    }

    pub fn is_abelian(&self) -> bool {
        self.lambda.iter().flatten().all(|v| self.central.is_zero(v))
    }

    /// `G_ab`, presented on all generators.
    pub fn abelianization(&self) -> FinAbGroup {
        let (k, m) = (self.k(), self.m());
        let mut rows = Vec::new();
        for i in 0..k {
            if !self.orders[i].is_zero() {
                let mut r = zeros(k + m);
                r[i] = self.orders[i].clone();
                for (j, t) in self.powers[i].iter().enumerate() {
                    r[k + j] = -t;
                }
                rows.push(r);
            }
            for j in i + 1..k {
                let mut r = zeros(k);
                r.extend(self.lambda[i][j].iter().cloned());
                rows.push(r);
            }
        }
        for rel in self.central.relations().row_vecs() {
            let mut r = zeros(k);
            r.extend(rel);
            rows.push(r);
        }
        FinAbGroup::from_relation_rows(k + m, rows)
    }

    /// `G_ab` with every generator killed by a unit relation eliminated.
    pub fn ab_reduced(&self) -> AbReduced {
        let n = self.ngens();
        let ab = self.abelianization();
        let mut rows = ab.relations().row_vecs();
        let mut alive = vec![true; n];
        let mut exprs: Vec<Option<Vec<Int>>> = vec![None; n];
        loop {
            let mut changed = false;
            for j in (0..n).rev() {
                if !alive[j] {
                    continue;
                }
                let Some(r) = rows.iter().position(|row| row[j].abs().is_one()) else { continue };
                let pivot = rows.remove(r);
                let sign = pivot[j].clone();
                for row in rows.iter_mut() {
                    if !row[j].is_zero() {
                        let f = &row[j] * &sign;
                        *row = vec_sub(row, &vec_scale(&pivot, &f));
                    }
                }
                // e_j = -sign * (pivot without e_j)
                let mut e = vec_scale(&pivot, &(-&sign));
                e[j] = Int::zero();
                for x in exprs.iter_mut().flatten() {
                    if !x[j].is_zero() {
                        let f = x[j].clone();
                        x[j] = Int::zero();
                        *x = vec_add(x, &vec_scale(&e, &f));
                    }
                }
                exprs[j] = Some(e);
                alive[j] = false;
                changed = true;
            }
            if !changed {
                break;
            }
        }
        let kept: Vec<usize> = (0..n).filter(|&j| alive[j]).collect();
        let restrict = |v: &[Int]| -> Vec<Int> { kept.iter().map(|&j| v[j].clone()).collect() };
        let rel_rows: Vec<Vec<Int>> = rows.iter().map(|r| restrict(r)).filter(|r| !is_zero(r)).collect();
        let group = FinAbGroup::from_relation_rows(kept.len(), rel_rows);
        let cols: Vec<Vec<Int>> = (0..n)
            .map(|l| match &exprs[l] {
                Some(e) => restrict(e),
                None => crate::matrix::unit(kept.len(), kept.iter().position(|&j| j == l).unwrap()),
            })
            .collect();
        let to_reduced =
            if n == 0 { IntMatrix::zeros(kept.len(), 0) } else { IntMatrix::from_cols(kept.len(), cols) };
        let names = self.gen_names();
        AbReduced { names: kept.iter().map(|&j| names[j].clone()).collect(), group, to_reduced, kept }
    }

    /// Coordinates of `x` in [`Class2Group::abelianization`].
    pub fn ab_coords(&self, x: &Class2Elem) -> AbElem {
        x.q.iter().chain(&x.c).cloned().collect()
    }

    /// The outer quotient `G / C` as `⊕ Z/d_i`.
    pub fn outer(&self) -> FinAbGroup {
        FinAbGroup::from_orders(&self.orders)
    }

    /// The abelian group itself when `G` is commutative.
    pub fn as_abelian(&self) -> Option<FinAbGroup> {
        self.is_abelian().then(|| self.abelianization())
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|d| !d.is_zero()) && self.central.is_finite()
    }

    pub fn order(&self) -> Option<Int> {
        if !self.is_finite() {
            return None;
        }
        Some(self.orders.iter().product::<Int>() * self.central.order().unwrap())
    }

    pub fn elements(&self) -> Result<Vec<Class2Elem>> {
        let order = self.order().ok_or_else(|| Error::Infinite("class-2 group".into()))?;
        if order > int(1_000_000) {
            return Err(Error::CapExceeded { what: "class-2 group elements".into(), cap: 1_000_000 });
        }
        let cs = self.central.elements()?;
        let mut qs = vec![zeros(self.k())];
        for i in 0..self.k() {
            let d: i64 = i64::try_from(&self.orders[i]).expect("small order");
            qs = qs
                .into_iter()
                .flat_map(|q| {
                    (0..d).map(move |a| {
                        let mut q2 = q.clone();
                        q2[i] = int(a);
                        q2
                    })
                })
                .collect();
        }
        Ok(qs
            .iter()
            .flat_map(|q| cs.iter().map(move |c| Class2Elem { q: q.clone(), c: c.clone() }))
            .collect())
    }

    /// Random element with small exponents, for property tests.
    pub fn random_elem<R: Rng>(&self, rng: &mut R, bound: i64) -> Class2Elem {
        let q: Vec<Int> = (0..self.k()).map(|_| int(rng.gen_range(-bound..=bound))).collect();
        let c: Vec<Int> = (0..self.m()).map(|_| int(rng.gen_range(-bound..=bound))).collect();
        self.collect(&q, &c)
    }

    /// `G × H` with outer generators of `G` first, then those of `H`.
    pub fn direct_product(&self, other: &Class2Group) -> Class2Group {
        let (k1, k2, m1, m2) = (self.k(), other.k(), self.m(), other.m());
        let pad = |v: &AbElem, left: bool| -> AbElem {
            if left {
                v.iter().cloned().chain(zeros(m2)).collect()
            } else {
                zeros(m1).into_iter().chain(v.iter().cloned()).collect()
            }
        };
        let mut lambda = vec![vec![zeros(m1 + m2); k1 + k2]; k1 + k2];
        for i in 0..k1 {
            for j in 0..k1 {
                lambda[i][j] = pad(&self.lambda[i][j], true);
            }
        }
        for i in 0..k2 {
            for j in 0..k2 {
                lambda[k1 + i][k1 + j] = pad(&other.lambda[i][j], false);
            }
        }
        Class2Group {
            qnames: self.qnames.iter().chain(&other.qnames).cloned().collect(),
            orders: self.orders.iter().chain(&other.orders).cloned().collect(),
            powers: self.powers.iter().map(|t| pad(t, true)).chain(other.powers.iter().map(|t| pad(t, false))).collect(),
            central: self.central.direct_sum(&other.central),
            cnames: self.cnames.iter().chain(&other.cnames).cloned().collect(),
            lambda,
        }
    }

    /// Joins `x ∈ G` and `y ∈ H` into `self = G × H`.
    pub fn join(&self, x: &Class2Elem, y: &Class2Elem) -> Class2Elem {
        let q: Vec<Int> = x.q.iter().chain(&y.q).cloned().collect();
        let c: Vec<Int> = x.c.iter().chain(&y.c).cloned().collect();
        self.collect(&q, &c)
    }

    /// Describes `G` by the relation matrix of its central layer and power/commutator data.
    /// Collected form in generator names, e.g. `a^2 b [a,b]^-1`; the identity is `1`.
    pub fn show(&self, x: &Class2Elem) -> String {
        let names = self.gen_names();
        let parts: Vec<String> = x
            .q
            .iter()
            .chain(&x.c)
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| if e.is_one() { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn describe(&self) -> String {
        if self.k() == 0 {
            return self.central.describe();
        }
        if self.is_abelian() {
            return format!("{} (abelian)", self.abelianization().describe());
        }
        let outer = self.outer().describe();
        format!("class-2 extension of {} by {}", outer, self.central.describe())
    }

    pub fn lambda_matrix(&self) -> IntMatrix {
        let k = self.k();
        let mut cols = Vec::new();
        for i in 0..k {
            for j in 0..k {
                cols.push(self.lambda[i][j].clone());
            }
        }
        IntMatrix::from_cols(self.m(), cols)
    }

    /// Subtracts two elements of `C`.
    pub fn csub(&self, a: &[Int], b: &[Int]) -> AbElem {
        self.central.normalize(&vec_sub(a, b))
    }

    pub fn is_trivial(&self) -> bool {
        self.order().is_some_and(|o| o.is_one())
    }
}

fn is_zero(v: &[Int]) -> bool {
    v.iter().all(|x| x.is_zero())
}

impl fmt::Debug for Class2Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Class2Group(outer {:?}, orders {:?}, central {:?})", self.qnames, self.orders, self.central)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ints;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// The quaternion group: i^2 = j^2 = z, [i, j] = z, z^2 = 1.
    pub(crate) fn quaternion() -> Class2Group {
        let c = FinAbGroup::cyclic(2);
        let z = ints(&[1]);
        Class2Group::new(
            names(&["i", "j"]),
            ints(&[2, 2]),
            vec![z.clone(), z.clone()],
            c,
            names(&["z"]),
            vec![vec![ints(&[0]), z.clone()], vec![z.clone(), ints(&[0])]],
        )
        .unwrap()
    }

    #[test]
    fn quaternion_group_laws() {
        let g = quaternion();
        assert_eq!(g.order(), Some(int(8)));
        let els = g.elements().unwrap();
        let (i, j) = (g.gen(0), g.gen(1));
        let z = g.gen(2);
        assert_eq!(g.mul(&i, &i), z);
        assert_eq!(g.pow(&i, &int(4)), g.identity());
        let ij = g.mul(&i, &j);
        let ji = g.mul(&j, &i);
        assert_eq!(ij, g.mul(&ji, &z));
        for x in &els {
            assert!(g.is_identity(&g.mul(x, &g.inv(x))));
            for y in &els {
                for w in &els {
                    assert_eq!(g.mul(&g.mul(x, y), w), g.mul(x, &g.mul(y, w)));
                }
            }
        }
        assert!(g.abelianization().is_isomorphic(&FinAbGroup::from_orders(&ints(&[2, 2]))));
    }

    #[test]
    fn rejects_non_central_power() {
        let c = FinAbGroup::free(1);
        let res = Class2Group::new(
            names(&["a", "b"]),
            ints(&[2, 0]),
            vec![ints(&[0]), ints(&[0])],
            c,
            names(&["z"]),
            vec![vec![ints(&[0]), ints(&[1])], vec![ints(&[-1]), ints(&[0])]],
        );
        assert!(res.is_err());
    }

    #[test]
    fn random_associativity_and_commutators() {
        let g = quaternion().direct_product(&quaternion());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (x, y, z) = (g.random_elem(&mut rng, 5), g.random_elem(&mut rng, 5), g.random_elem(&mut rng, 5));
            assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
            let direct = g.product([&g.inv(&x), &g.inv(&y), &x, &y]);
            assert_eq!(direct, g.commutator(&x, &y));
            assert!(g.is_central(&g.commutator(&x, &y)));
        }
    }

    #[test]
    fn reduced_abelianization_of_free_nil() {
        let g = crate::nil2::free_nil_on(&["a", "b", "c"]);
        let r = g.ab_reduced();
        assert_eq!(r.names, names(&["a", "b", "c"]));
        assert!(r.group.is_isomorphic(&FinAbGroup::free(3)));
        let q = quaternion();
        let rq = q.ab_reduced();
        assert!(rq.group.is_isomorphic(&FinAbGroup::from_orders(&ints(&[2, 2]))));
        let x = q.mul(&q.gen(0), &q.gen(2));
        assert_eq!(rq.class(&q, &x), rq.class(&q, &q.gen(0)));
    }
}
