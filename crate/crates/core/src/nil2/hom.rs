use crate::abelian::{AbMap, FinAbGroup};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

use super::{Class2Elem, Class2Group};

/// A homomorphism of class-2 groups, given by the images of all generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Class2Hom {
    pub source: Class2Group,
    pub target: Class2Group,
    images: Vec<Class2Elem>,
}

impl Class2Hom {
    /// Checks every defining relation of the source in the target.
    pub fn new(source: Class2Group, target: Class2Group, images: Vec<Class2Elem>) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::Shape(format!(
                "expected {} generator images, got {}",
                source.ngens(),
                images.len()
            )));
        }
        let images: Vec<Class2Elem> = images.into_iter().map(|x| target.collect(&x.q, &x.c)).collect();
        let f = Class2Hom { source, target, images };
        if let Some(msg) = f.relation_failure() {
            return Err(Error::NotWellDefined(msg));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Class2Group, target: Class2Group, images: Vec<Class2Elem>) -> Self {
        let f = Class2Hom { source, target, images };
        debug_assert!(f.relation_failure().is_none(), "{:?}", f.relation_failure());
        f
    }

    fn relation_failure(&self) -> Option<String> {
        super::present::relation_failure(&self.source, &self.target, &self.images)
    }

    pub fn images(&self) -> &[Class2Elem] {
        &self.images
    }

    pub fn image_of_gen(&self, i: usize) -> &Class2Elem {
        &self.images[i]
    }

    pub fn apply(&self, x: &Class2Elem) -> Class2Elem {
        super::present::evaluate(&self.source, &self.target, &self.images, x)
    }

    pub fn identity(g: &Class2Group) -> Self {
        Class2Hom { source: g.clone(), target: g.clone(), images: (0..g.ngens()).map(|i| g.gen(i)).collect() }
    }

    pub fn trivial(source: &Class2Group, target: &Class2Group) -> Self {
        Class2Hom { source: source.clone(), target: target.clone(), images: vec![target.identity(); source.ngens()] }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Class2Hom) -> Class2Hom {
        Class2Hom {
            source: self.source.clone(),
            target: other.target.clone(),
            images: self.images.iter().map(|x| other.apply(x)).collect(),
        }
    }

    /// Agreement on generators.
    pub fn equals(&self, other: &Class2Hom) -> bool {
        self.images == other.images
    }

    /// Pointwise product; a homomorphism when the images commute.
    pub fn pointwise_mul(&self, other: &Class2Hom) -> Result<Class2Hom> {
        let t = &self.target;
        let images = self.images.iter().zip(&other.images).map(|(x, y)| t.mul(x, y)).collect();
        Class2Hom::new(self.source.clone(), t.clone(), images)
    }

    /// Induced map on abelianizations.
    pub fn abelianization(&self) -> AbMap {
        let (s, t) = (&self.source, &self.target);
        let cols = self.images.iter().map(|x| t.ab_coords(x)).collect();
        AbMap::new_unchecked(s.abelianization(), t.abelianization(), IntMatrix::from_cols(t.ngens(), cols))
    }

    /// Induced map on the outer quotients `G/C → H/C'`; defined only when `f(C) ⊆ C'`.
    pub fn outer_map(&self) -> Result<AbMap> {
        let k = self.source.k();
        if self.images[k..].iter().any(|x| !crate::matrix::is_zero_vec(&x.q)) {
            return Err(Error::Invalid("central layer does not map into central layer".into()));
        }
        let cols = self.images[..k].iter().map(|x| x.q.clone()).collect();
        AbMap::new(self.source.outer(), self.target.outer(), IntMatrix::from_cols(self.target.k(), cols))
    }

    /// The linear map `Z^{k+m} → target_ab` sending unreduced coordinates to abelianized images.
    pub fn ab_matrix(&self) -> IntMatrix {
        let t = &self.target;
        IntMatrix::from_cols(t.ngens(), self.images.iter().map(|x| t.ab_coords(x)).collect())
    }

    /// A homomorphism into an abelian group, given as a map out of the abelianization.
    pub fn to_abelian(g: &Class2Group, a: &FinAbGroup, matrix: IntMatrix) -> Result<AbMap> {
        AbMap::new(g.abelianization(), a.clone(), matrix)
    }

    /// Combines `self: G → H` and `other: G → K` into `G → H × K`.
    pub fn pairing(&self, other: &Class2Hom, product: &Class2Group) -> Result<Class2Hom> {
        let images = self.images.iter().zip(&other.images).map(|(x, y)| product.join(x, y)).collect();
        Class2Hom::new(self.source.clone(), product.clone(), images)
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|x| self.target.is_identity(x))
    }
}

/// Projections and inclusions of `G × H`.
pub struct ProductMaps {
    pub group: Class2Group,
    pub pr1: Class2Hom,
    pub pr2: Class2Hom,
    pub in1: Class2Hom,
    pub in2: Class2Hom,
}

pub fn direct_product(g: &Class2Group, h: &Class2Group) -> ProductMaps {
    let p = g.direct_product(h);
    let (k1, k2, m1, m2) = (g.k(), h.k(), g.m(), h.m());
    // generator order in p: outer of g, outer of h, central of g, central of h
    let mut pr1 = Vec::new();
    let mut pr2 = Vec::new();
    for i in 0..k1 {
        pr1.push(g.gen(i));
        pr2.push(h.identity());
    }
    for i in 0..k2 {
        pr1.push(g.identity());
        pr2.push(h.gen(i));
    }
    for j in 0..m1 {
        pr1.push(g.gen(k1 + j));
        pr2.push(h.identity());
    }
    for j in 0..m2 {
        pr1.push(g.identity());
        pr2.push(h.gen(k2 + j));
    }
    let in1 = (0..g.ngens()).map(|i| p.join(&g.gen(i), &h.identity())).collect();
    let in2 = (0..h.ngens()).map(|i| p.join(&g.identity(), &h.gen(i))).collect();
    ProductMaps {
        pr1: Class2Hom::new_unchecked(p.clone(), g.clone(), pr1),
        pr2: Class2Hom::new_unchecked(p.clone(), h.clone(), pr2),
        in1: Class2Hom::new_unchecked(g.clone(), p.clone(), in1),
        in2: Class2Hom::new_unchecked(h.clone(), p.clone(), in2),
        group: p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{int, ints};
    use crate::nil2::free_nil_on;

    #[test]
    fn identity_and_composition() {
        let g = free_nil_on(&["a", "b"]);
        let id = Class2Hom::identity(&g);
        let a = g.gen(0);
        let b = g.gen(1);
        // a -> a b, b -> b
        let f = Class2Hom::new(g.clone(), g.clone(), vec![g.mul(&a, &b), b.clone(), g.identity()]);
        assert!(f.is_err(), "central generator must go to the new commutator");
        let f = Class2Hom::new(g.clone(), g.clone(), vec![g.mul(&a, &b), b.clone(), g.commutator(&g.mul(&a, &b), &b)])
            .unwrap();
        assert!(id.then(&f).equals(&f));
        assert!(f.then(&id).equals(&f));
        let x = g.product([&a, &b, &g.inv(&a), &b, &b]);
        let fx = f.apply(&x);
        let expected = g.product([&f.apply(&a), &f.apply(&b), &g.inv(&f.apply(&a)), &f.apply(&b), &f.apply(&b)]);
        assert_eq!(fx, expected);
    }

    #[test]
    fn product_projections() {
        let g = free_nil_on(&["a", "b"]);
        let h = Class2Group::from_abelian(&FinAbGroup::cyclic(3), vec!["z".into()]);
        let pm = direct_product(&g, &h);
        assert!(pm.in1.then(&pm.pr1).equals(&Class2Hom::identity(&g)));
        assert!(pm.in2.then(&pm.pr2).equals(&Class2Hom::identity(&h)));
        assert!(pm.in1.then(&pm.pr2).is_trivial());
        let x = pm.group.join(&g.gen(2), &h.from_central(&ints(&[4])));
        assert_eq!(pm.pr2.apply(&x), h.from_central(&[int(1)]));
    }
}
