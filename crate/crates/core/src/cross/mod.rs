//! Objects of `cross(n)`: pointed groupoids, crossed modules and quadratic
//! modules, their morphisms, `h0`/`h1` and weak equivalences.

mod base;
mod coset;
mod finite;
mod groupoid;
mod homotopy;
mod morphism;
mod objects;

pub use base::{exponent_of, kernel_into_free, word_root, Base, BaseElem, GroupMap};
pub use coset::{CosetTable, PresentedGroup};
pub use finite::FiniteGroup;
pub use groupoid::{Arrow, GroupoidFunctor, PointedGroupoid};
pub use homotopy::{h0, h0_equal, h1, is_weak_equivalence, H0, H1, COSET_CAP};
pub use morphism::CrossMorphism;
pub use objects::{tensor_group, CrossObject, CrossedModule, QuadModule, Violation};
