//! Small fixed objects, random instance generators, independent oracles and the
//! acceptance suite shared by the tests and the `selftest` command.

pub mod acceptance;
pub mod fixtures;
pub mod oracles;
pub mod random;
