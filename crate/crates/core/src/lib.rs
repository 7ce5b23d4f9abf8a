//! Exact algebra for Macdonald, q-Whittaker and Jack polynomials and the
//! Baxter operators acting on them.

pub mod baxter;
mod error;
pub mod gamma;
pub mod gcd;
pub mod jack;
pub mod laurent;
pub mod macdonald;
pub mod memo;
pub mod partition;
pub mod pfunc;
pub mod qwhittaker;
pub mod poly;
pub mod ratfunc;
pub mod report;
pub mod symfunc;
pub mod xpoly;

pub use error::Error;
pub use partition::Partition;
pub use poly::{Mono, Poly, Var};
pub use ratfunc::RatFunc;
pub use report::Report;
