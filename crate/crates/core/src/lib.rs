//! Exact computations in finite conformal algebras over `H = Q[D]`.
//!
//! Algebras are given by λ-product tables on a free `H`-basis. The crate
//! checks their axioms as polynomial identities and builds finite faithful
//! representations.

pub mod builtins;
pub mod confcore;
pub mod constructions;
pub mod error;
pub mod exactmath;
pub mod hlinalg;
pub mod par;
pub mod report;
pub mod repr;

pub use error::{Error, Result};
pub use par::Exec;
pub use report::{CheckReport, Witness};
