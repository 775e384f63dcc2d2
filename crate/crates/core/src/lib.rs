//! Computations with secondary homotopy groups: class-two nilpotent groups,
//! crossed and quadratic modules, tracks and the functors between them.

pub mod abelian;
pub mod cross;
pub mod error;
pub mod functors;
pub mod matrix;
pub mod models;
pub mod nil2;
pub mod quadratic;
pub mod text;
pub mod tracks;
pub mod verify;

pub use abelian::{AbElem, AbMap, FinAbGroup};
pub use error::{Error, Result};
pub use matrix::{Int, IntMatrix};
