use crate::cross::{Base, CrossObject, CrossedModule, GroupMap, QuadModule};
use crate::error::{Error, Result};
use crate::nil2::{boundary, free_nil, Class2Group, PointedSet};

/// The small model of `π_{n,*}` of a wedge of `n`-spheres indexed by `E − {*}`.
///
/// * `n = 1`: `0 → ⟨E⟩`
/// * `n = 2`: `⊗²Z[E] →id ⊗²Z[E] →∂ ⟨E⟩_nil`
/// * `n ≥ 3`: `⊗²Z[E] →σ̄ ⊗̂²Z[E] →∂ ⟨E⟩_nil`
pub fn wedge_model(n: u32, e: &PointedSet) -> Result<CrossObject> {
    match n {
        0 => Err(Error::Invalid("wedge models start at n = 1".into())),
        1 => {
            let m = Class2Group::trivial();
            let base = Base::Free(e.clone());
            let del = GroupMap::trivial(&Base::Nil(m.clone()), &base);
            Ok(CrossObject::Crossed(CrossedModule::trivial_action(m, base, del)?))
        }
        _ => {
            let del = boundary(n, e)?;
            let m = del.source.clone();
            let k = e.len();
            // generator i*k+j of ⊗²Z[E] goes to the class of the same generator
            let omega = (0..k * k).map(|i| m.gen(i)).collect();
            Ok(CrossObject::Quadratic(QuadModule::new(n, m, free_nil(e), del, omega)?))
        }
    }
}
