//! Groups of nilpotency class two: free nil-groups, collected arithmetic,
//! homomorphisms, kernels and quotients.

mod free;
mod group;
mod hom;
mod present;
mod sub;

pub use free::*;
pub use group::{AbReduced, Class2Elem, Class2Group};
pub use hom::{direct_product, Class2Hom, ProductMaps};
pub use present::{evaluate, relation_failure, GroupLike};
pub use sub::*;
