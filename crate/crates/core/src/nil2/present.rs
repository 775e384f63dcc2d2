use num_traits::{Signed, Zero};

use crate::matrix::Int;

use super::{Class2Elem, Class2Group};

/// Just enough group structure to evaluate class-2 presentations.
pub trait GroupLike {
    type Elem: Clone;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    fn equal(&self, x: &Self::Elem, y: &Self::Elem) -> bool;

    fn pow(&self, x: &Self::Elem, n: &Int) -> Self::Elem {
        let base = if n.is_negative() { self.inv(x) } else { x.clone() };
        let e = n.abs();
        let mut acc = self.identity();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, &base);
            }
        }
        acc
    }

    fn commutator(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let a = self.mul(&self.inv(x), &self.inv(y));
        self.mul(&self.mul(&a, x), y)
    }

    fn is_identity(&self, x: &Self::Elem) -> bool {
        self.equal(x, &self.identity())
    }
}

impl GroupLike for Class2Group {
    type Elem = Class2Elem;

    fn identity(&self) -> Class2Elem {
        Class2Group::identity(self)
    }

    fn mul(&self, x: &Class2Elem, y: &Class2Elem) -> Class2Elem {
        Class2Group::mul(self, x, y)
    }

    fn inv(&self, x: &Class2Elem) -> Class2Elem {
        Class2Group::inv(self, x)
    }

    fn equal(&self, x: &Class2Elem, y: &Class2Elem) -> bool {
        x == y
    }

    fn pow(&self, x: &Class2Elem, n: &Int) -> Class2Elem {
        Class2Group::pow(self, x, n)
    }
}

/// The image of `x` under the assignment `gen(i) ↦ images[i]`.
pub fn evaluate<T: GroupLike>(g: &Class2Group, t: &T, images: &[T::Elem], x: &Class2Elem) -> T::Elem {
    debug_assert_eq!(images.len(), g.ngens());
    let mut acc = t.identity();
    for (i, a) in x.q.iter().chain(&x.c).enumerate() {
        if !a.is_zero() {
            acc = t.mul(&acc, &t.pow(&images[i], a));
        }
    }
    acc
}

fn central_value<T: GroupLike>(g: &Class2Group, t: &T, images: &[T::Elem], c: &[Int]) -> T::Elem {
    let k = g.k();
    c.iter().enumerate().fold(t.identity(), |acc, (j, a)| {
        if a.is_zero() {
            acc
        } else {
            t.mul(&acc, &t.pow(&images[k + j], a))
        }
    })
}

/// The first defining relation of `g` that fails for the assignment `gen(i) ↦ images[i]`.
pub fn relation_failure<T: GroupLike>(g: &Class2Group, t: &T, images: &[T::Elem]) -> Option<String> {
    let (k, m) = (g.k(), g.m());
    let names = g.gen_names();
    for j in 0..m {
        let z = &images[k + j];
        for (i, x) in images.iter().enumerate() {
            if !t.is_identity(&t.commutator(z, x)) {
                return Some(format!(
                    "image of central generator {} does not commute with image of {}",
                    names[k + j],
                    names[i]
                ));
            }
        }
    }
    for rel in g.central().relations().row_vecs() {
        if !t.is_identity(&central_value(g, t, images, &rel)) {
            return Some(format!("central relation {:?} is not preserved", rel));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let lhs = t.commutator(&images[i], &images[j]);
            if !t.equal(&lhs, &central_value(g, t, images, g.lambda(i, j))) {
                return Some(format!("commutator [{}, {}] is not preserved", names[i], names[j]));
            }
        }
        let d = &g.orders()[i];
        if !d.is_zero() {
            let lhs = t.pow(&images[i], d);
            if !t.equal(&lhs, &central_value(g, t, images, g.power(i))) {
                return Some(format!("power relation {}^{} is not preserved", names[i], d));
            }
        }
    }
    None
}
