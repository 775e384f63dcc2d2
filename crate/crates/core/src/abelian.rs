//! Finitely generated abelian groups given by integer presentations.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{
    int, is_zero_vec, kernel_basis, lattice_basis, smith_normal_form, solve, unit, zeros, Int, IntMatrix,
};

/// Coefficient vector over a group's generators.
pub type AbElem = Vec<Int>;

/// `Z^k / (row span of relations)`, with its Smith canonical form computed eagerly.
#[derive(Clone)]
pub struct FinAbGroup {
    ngens: usize,
    relations: IntMatrix,
    /// `d_j` in the basis given by the columns of `basis`; zero marks a free coordinate.
    diag: Vec<Int>,
    basis: IntMatrix,
    basis_inv: IntMatrix,
}

impl FinAbGroup {
    pub fn new(ngens: usize, relations: IntMatrix) -> Self {
        assert_eq!(relations.cols(), ngens, "relation width must equal the number of generators");
        let s = smith_normal_form(&relations);
        let mut diag = zeros(ngens);
        for (i, d) in s.diag.iter().enumerate() {
            diag[i] = d.clone();
        }
        FinAbGroup { ngens, relations, diag, basis: s.v, basis_inv: s.v_inv }
    }

    pub fn from_relation_rows(ngens: usize, rows: Vec<Vec<Int>>) -> Self {
        Self::new(ngens, IntMatrix::from_rows(ngens, rows))
    }

    pub fn free(k: usize) -> Self {
        Self::new(k, IntMatrix::zeros(0, k))
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn cyclic(n: i64) -> Self {
        Self::new(1, IntMatrix::from_i64(&[&[n]]))
    }

    /// `Z/d_1 + ... ` with one generator per entry; `0` gives a copy of `Z`.
    pub fn from_orders(orders: &[Int]) -> Self {
        let k = orders.len();
        let rows = orders
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(i, d)| {
                let mut r = zeros(k);
                r[i] = d.clone();
                r
            })
            .collect();
        Self::from_relation_rows(k, rows)
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn zero(&self) -> AbElem {
        zeros(self.ngens)
    }

    pub fn gen(&self, i: usize) -> AbElem {
        unit(self.ngens, i)
    }

    /// Coordinates in the Smith basis, reduced; trivial coordinates are zero.
    pub fn canonical_coords(&self, x: &[Int]) -> Vec<Int> {
        assert_eq!(x.len(), self.ngens, "element has wrong length");
        let mut y: Vec<Int> = (0..self.ngens)
            .map(|j| {
                let mut acc = Int::zero();
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() {
                        acc += xi * &self.basis[(i, j)];
                    }
                }
                acc
            })
            .collect();
        for (yj, dj) in y.iter_mut().zip(&self.diag) {
            if !dj.is_zero() {
                *yj = yj.mod_floor(dj);
            }
        }
        y
    }

    /// Canonical representative of the class of `x`, in the original generators.
    pub fn normalize(&self, x: &[Int]) -> AbElem {
        let y = self.canonical_coords(x);
        (0..self.ngens)
            .map(|i| {
                let mut acc = Int::zero();
                for (j, yj) in y.iter().enumerate() {
                    if !yj.is_zero() {
                        acc += yj * &self.basis_inv[(j, i)];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self, x: &[Int]) -> bool {
        is_zero_vec(&self.canonical_coords(x))
    }

    pub fn eq_elems(&self, x: &[Int], y: &[Int]) -> bool {
        let d: Vec<Int> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero(&d)
    }

    pub fn add(&self, x: &[Int], y: &[Int]) -> AbElem {
        self.normalize(&crate::matrix::vec_add(x, y))
    }

    pub fn neg(&self, x: &[Int]) -> AbElem {
        self.normalize(&crate::matrix::vec_neg(x))
    }

    pub fn scale(&self, x: &[Int], s: &Int) -> AbElem {
        self.normalize(&crate::matrix::vec_scale(x, s))
    }

    /// Invariant factors greater than one, in divisibility order.
    pub fn torsion_invariants(&self) -> Vec<Int> {
        self.diag.iter().filter(|d| **d > Int::one()).cloned().collect()
    }

    pub fn free_rank(&self) -> usize {
        self.diag.iter().filter(|d| d.is_zero()).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank() == 0 && self.torsion_invariants().is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    pub fn order(&self) -> Option<Int> {
        self.is_finite().then(|| self.torsion_invariants().iter().product())
    }

    pub fn is_isomorphic(&self, other: &FinAbGroup) -> bool {
        self.free_rank() == other.free_rank() && self.torsion_invariants() == other.torsion_invariants()
    }

    /// Same group, presented by its invariant factors.
    pub fn canonical(&self) -> FinAbGroup {
        let mut orders = self.torsion_invariants();
        orders.extend(std::iter::repeat_n(Int::zero(), self.free_rank()));
        FinAbGroup::from_orders(&orders)
    }

    /// Isomorphism onto [`FinAbGroup::canonical`] and its inverse.
    pub fn to_canonical(&self) -> (AbMap, AbMap) {
        let target = self.canonical();
        let keep: Vec<usize> = (0..self.ngens).filter(|&j| !self.diag[j].is_one()).collect();
        // torsion coordinates come first in `diag`, free ones last; matches `canonical`
        let fwd = IntMatrix::from_rows(self.ngens, keep.iter().map(|&j| self.basis.col(j)).collect());
        let back = IntMatrix::from_cols(self.ngens, keep.iter().map(|&j| self.basis_inv.row(j)).collect());
        (
            AbMap::new_unchecked(self.clone(), target.clone(), fwd),
            AbMap::new_unchecked(target, self.clone(), back),
        )
    }

    /// Every element, as canonical representatives. Only for finite groups.
    pub fn elements(&self) -> Result<Vec<AbElem>> {
        let order = self.order().ok_or_else(|| Error::Infinite("abelian group".into()))?;
        if order > int(10_000_000) {
            return Err(Error::CapExceeded { what: "abelian group elements".into(), cap: 10_000_000 });
        }
        let mut coords = vec![zeros(self.ngens)];
        for j in 0..self.ngens {
            let d = &self.diag[j];
            if d.is_one() {
                continue;
            }
            let n: i64 = i64::try_from(d).expect("small order");
            let mut next = Vec::with_capacity(coords.len() * n as usize);
            for c in &coords {
                for a in 0..n {
                    let mut c2 = c.clone();
                    c2[j] = int(a);
                    next.push(c2);
                }
            }
            coords = next;
        }
        Ok(coords
            .into_iter()
            .map(|y| {
                (0..self.ngens)
                    .map(|i| {
                        let mut acc = Int::zero();
                        for (j, yj) in y.iter().enumerate() {
                            acc += yj * &self.basis_inv[(j, i)];
                        }
                        acc
                    })
                    .collect()
            })
            .collect())
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let k = self.ngens + other.ngens;
        let mut rows = Vec::new();
        for r in self.relations.row_vecs() {
            let mut row = r;
            row.extend(zeros(other.ngens));
            rows.push(row);
        }
        for r in other.relations.row_vecs() {
            let mut row = zeros(self.ngens);
            row.extend(r);
            rows.push(row);
        }
        FinAbGroup::from_relation_rows(k, rows)
    }

    /// Quotient by the subgroup generated by `elems`.
    pub fn quotient(&self, elems: &[AbElem]) -> (FinAbGroup, AbMap) {
        let mut rel = self.relations.clone();
        if !elems.is_empty() {
            rel = rel.vstack(&IntMatrix::from_rows(self.ngens, elems.to_vec()));
        }
        let q = FinAbGroup::new(self.ngens, rel);
        let p = AbMap::new_unchecked(self.clone(), q.clone(), IntMatrix::identity(self.ngens));
        (q, p)
    }

    /// Is `x` in the subgroup generated by `gens`?
    pub fn in_subgroup(&self, x: &[Int], gens: &[AbElem]) -> bool {
        let (q, _) = self.quotient(gens);
        q.is_zero(x)
    }

    /// Sizes and torsion for a compact description like `Z^2 + Z/2`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.torsion_invariants().iter().map(|d| format!("Z/{}", d)).collect();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{}", r)),
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup({} gens, rel {}) = {}", self.ngens, self.relations, self.describe())
    }
}

impl PartialEq for FinAbGroup {
    /// Presentation equality, not isomorphism; see [`FinAbGroup::is_isomorphic`].
    fn eq(&self, other: &Self) -> bool {
        self.ngens == other.ngens && self.relations == other.relations
    }
}

/// Homomorphism of presented abelian groups; `matrix` acts on column vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct AbMap {
    pub source: FinAbGroup,
    pub target: FinAbGroup,
    pub matrix: IntMatrix,
}

impl AbMap {
    /// Checks that every source relation maps into the target relation lattice.
    pub fn new(source: FinAbGroup, target: FinAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(Error::Shape(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.ngens(),
                source.ngens()
            )));
        }
        for r in source.relations().row_vecs() {
            if !target.is_zero(&matrix.apply(&r)) {
                return Err(Error::NotWellDefined(format!("relation {:?} does not map to zero", r)));
            }
        }
        Ok(AbMap { source, target, matrix })
    }

    pub(crate) fn new_unchecked(source: FinAbGroup, target: FinAbGroup, matrix: IntMatrix) -> Self {
        debug_assert!(AbMap::new(source.clone(), target.clone(), matrix.clone()).is_ok());
        AbMap { source, target, matrix }
    }

    pub fn from_images(source: FinAbGroup, target: FinAbGroup, images: Vec<AbElem>) -> Result<Self> {
        let m = IntMatrix::from_cols(target.ngens(), images);
        let m = if source.ngens() == 0 { IntMatrix::zeros(target.ngens(), 0) } else { m };
        AbMap::new(source, target, m)
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        AbMap { source: g.clone(), target: g.clone(), matrix: IntMatrix::identity(g.ngens()) }
    }

    pub fn zero(source: &FinAbGroup, target: &FinAbGroup) -> Self {
        AbMap { source: source.clone(), target: target.clone(), matrix: IntMatrix::zeros(target.ngens(), source.ngens()) }
    }

    pub fn apply(&self, x: &[Int]) -> AbElem {
        self.target.normalize(&self.matrix.apply(x))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AbMap) -> AbMap {
        assert_eq!(self.target.ngens(), other.source.ngens(), "composition mismatch");
        AbMap { source: self.source.clone(), target: other.target.clone(), matrix: other.matrix.mul(&self.matrix) }
    }

    pub fn add(&self, other: &AbMap) -> AbMap {
        AbMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.add(&other.matrix) }
    }

    pub fn neg(&self) -> AbMap {
        AbMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.scale(&int(-1)) }
    }

    /// Equal as homomorphisms (agree on every generator).
    pub fn equals(&self, other: &AbMap) -> bool {
        (0..self.source.ngens()).all(|i| {
            self.target.eq_elems(&self.matrix.col(i), &other.matrix.col(i))
        })
    }

    pub fn is_zero(&self) -> bool {
        (0..self.source.ngens()).all(|i| self.target.is_zero(&self.matrix.col(i)))
    }

    /// Some `x` with `self(x) = y`.
    pub fn preimage(&self, y: &[Int]) -> Option<AbElem> {
        let k = self.source.ngens();
        let big = self.matrix.hstack(&self.target.relations().transpose());
        solve(&big, y).map(|sol| self.source.normalize(&sol[..k]))
    }

    /// Kernel as a presented group together with its inclusion.
    pub fn kernel(&self) -> (FinAbGroup, AbMap) {
        let k = self.source.ngens();
        let big = self.matrix.hstack(&self.target.relations().transpose());
        let kb = kernel_basis(&big);
        let gens = IntMatrix::from_cols(k, kb.col_vecs().into_iter().map(|c| c[..k].to_vec()).collect());
        let gens = if kb.cols() == 0 { IntMatrix::zeros(k, 0) } else { gens };
        let basis = lattice_basis(&gens);
        let s = basis.cols();
        let rels = self
            .source
            .relations()
            .row_vecs()
            .into_iter()
            .map(|r| solve(&basis, &r).expect("source relations lie in the kernel lattice"))
            .collect();
        let kg = FinAbGroup::from_relation_rows(s, rels);
        let incl = AbMap { source: kg.clone(), target: self.source.clone(), matrix: basis };
        (kg, incl)
    }

    pub fn cokernel(&self) -> (FinAbGroup, AbMap) {
        self.target.quotient(&self.matrix.col_vecs())
    }

    /// Generators of the image, as target elements.
    pub fn image_gens(&self) -> Vec<AbElem> {
        self.matrix.col_vecs()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_trivial()
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

/// Checks `ker(g) == im(f)` for `A --f--> B --g--> C`.
pub fn is_exact_at(f: &AbMap, g: &AbMap) -> bool {
    if !f.then(g).is_zero() {
        return false;
    }
    let (_, incl) = g.kernel();
    let img = f.image_gens();
    incl.image_gens().iter().all(|x| f.target.in_subgroup(x, &img))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ints;

    #[test]
    fn free_group_has_no_torsion() {
        let g = FinAbGroup::free(3);
        assert_eq!(g.free_rank(), 3);
        assert!(g.torsion_invariants().is_empty());
    }

    #[test]
    fn canonical_form_is_stable() {
        let g = FinAbGroup::new(3, IntMatrix::from_i64(&[&[2, 4, 0], &[0, 6, 3]]));
        let again = FinAbGroup::new(3, g.relations().clone());
        assert_eq!(g.torsion_invariants(), again.torsion_invariants());
        assert_eq!(g.describe(), "Z/6 + Z");
    }

    #[test]
    fn zero_map_kernel_and_cokernel() {
        let f = AbMap::zero(&FinAbGroup::free(2), &FinAbGroup::free(1));
        let (k, _) = f.kernel();
        let (c, _) = f.cokernel();
        assert!(k.is_isomorphic(&FinAbGroup::free(2)));
        assert!(c.is_isomorphic(&FinAbGroup::free(1)));
    }

    #[test]
    fn doubling_on_z() {
        let z = FinAbGroup::free(1);
        let f = AbMap::new(z.clone(), z, IntMatrix::from_i64(&[&[2]])).unwrap();
        assert!(f.kernel().0.is_trivial());
        assert!(f.cokernel().0.is_isomorphic(&FinAbGroup::cyclic(2)));
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        let z2 = FinAbGroup::cyclic(2);
        let z = FinAbGroup::free(1);
        assert!(AbMap::new(z2, z, IntMatrix::from_i64(&[&[1]])).is_err());
    }

    #[test]
    fn kernel_of_map_with_torsion_source() {
        // Z/4 -> Z/2, 1 -> 1 has kernel Z/2
        let f = AbMap::new(FinAbGroup::cyclic(4), FinAbGroup::cyclic(2), IntMatrix::from_i64(&[&[1]])).unwrap();
        let (k, incl) = f.kernel();
        assert!(k.is_isomorphic(&FinAbGroup::cyclic(2)));
        assert!(incl.then(&f).is_zero());
        assert!(incl.is_injective());
    }

    #[test]
    fn canonical_iso_round_trips() {
        let g = FinAbGroup::new(3, IntMatrix::from_i64(&[&[2, 4, 0], &[0, 6, 3]]));
        let (fwd, back) = g.to_canonical();
        assert!(fwd.then(&back).equals(&AbMap::identity(&g)));
        assert!(back.then(&fwd).equals(&AbMap::identity(&g.canonical())));
    }

    #[test]
    fn elements_of_finite_group() {
        let g = FinAbGroup::from_orders(&ints(&[2, 3]));
        let els = g.elements().unwrap();
        assert_eq!(els.len(), 6);
        for (i, a) in els.iter().enumerate() {
            for b in &els[i + 1..] {
                assert!(!g.eq_elems(a, b));
            }
        }
    }

    #[test]
    fn exactness_of_short_sequence() {
        // Z --2--> Z --> Z/2
        let z = FinAbGroup::free(1);
        let f = AbMap::new(z.clone(), z.clone(), IntMatrix::from_i64(&[&[2]])).unwrap();
        let (_, p) = f.cokernel();
        assert!(is_exact_at(&f, &p));
        let g = AbMap::identity(&z);
        assert!(!is_exact_at(&f, &g));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn unimodular(n: usize, ops: Vec<(usize, usize, i64)>) -> IntMatrix {
            let mut m = IntMatrix::identity(n);
            for (i, j, q) in ops {
                if i % n != j % n {
                    let (i, j) = (i % n, j % n);
                    let mut e = IntMatrix::identity(n);
                    e[(i, j)] = int(q);
                    m = e.mul(&m);
                }
            }
            m
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]
            /// Changing presentation by unimodular transforms preserves the invariants.
            #[test]
            fn isomorphism_invariant_under_change_of_presentation(
                rels in proptest::collection::vec(-6i64..7, 9),
                ops in proptest::collection::vec((0usize..3, 0usize..3, -3i64..4), 0..6),
                rops in proptest::collection::vec((0usize..3, 0usize..3, -3i64..4), 0..6),
            ) {
                let r = IntMatrix::from_rows(3, rels.chunks(3).map(ints).collect());
                let g = FinAbGroup::new(3, r.clone());
                let h = FinAbGroup::new(3, unimodular(3, rops).mul(&r).mul(&unimodular(3, ops)));
                prop_assert!(g.is_isomorphic(&h));
            }

            /// rank(ker) + rank(im) = rank(source) on free sources.
            #[test]
            fn rank_nullity(entries in proptest::collection::vec(-5i64..6, 12)) {
                let m = IntMatrix::from_rows(4, entries.chunks(4).map(ints).collect());
                let f = AbMap::new(FinAbGroup::free(4), FinAbGroup::free(3), m).unwrap();
                let (k, incl) = f.kernel();
                prop_assert!(incl.then(&f).is_zero());
                let img_rank = smith_normal_form(&f.matrix).rank();
                prop_assert_eq!(k.free_rank() + img_rank, 4);
                let (c, p) = f.cokernel();
                prop_assert!(is_exact_at(&f, &p));
                prop_assert_eq!(c.free_rank(), 3 - img_rank);
            }
        }
    }
}
