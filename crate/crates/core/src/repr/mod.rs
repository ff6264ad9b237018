//! Conformal modules over finite conformal algebras.
//!
//! A module is a finitely generated `H`-module `⊕ H/(hᵢ)eᵢ` and an action
//! table `b∘_λ eᵢ = Σ φ_{b,i}^j(D, λ)e_j`. Everything is compared after
//! reducing coordinates modulo the relations.

mod kernel;
mod module;
mod rep;
mod scalars;

pub(crate) use kernel::annihilator;
pub use kernel::{is_faithful, rep_kernel};
pub use module::HModulePresentation;
pub use rep::{
    check_rep, direct_sum, make_rep, make_right_rep, regular_rep, trivial_rep, ActionEntries,
    ConfRep,
};
pub use scalars::{restrict_scalars, ExtPoly, ExtRep};
