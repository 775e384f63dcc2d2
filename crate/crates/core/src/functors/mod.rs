//! Fibers, the forgetful functors `φ_n` and their left adjoints `Ad_n`.

mod adjunction;
mod fiber;
mod free;
mod loops;
mod suspension;

pub use adjunction::{adjunction_check, crossed_homs, quadratic_homs, AdjunctionReport, ENUMERATION_CAP};
pub use fiber::{fiber, six_term_sequence, FiberResult, SixTerm};
pub use free::{ad1, PresentedCrossedModule};
pub use loops::{phi, phi1, phi2, phi3, phi_morphism, ActionGroupoid};
pub use suspension::{ad2, ad3, counit2, counit3, Suspended};
