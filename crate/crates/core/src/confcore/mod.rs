//! Finite conformal algebras given by λ-product tables on a free `H`-basis.
//!
//! Checks run on basis tuples only. Both sides of associativity and Jacobi
//! are sesqui-linear in every argument, so agreement on a free basis implies
//! agreement everywhere.

mod algebra;
mod checks;
mod derived;
mod element;
mod growth;

pub use algebra::{table_product, ConfAlgebra, Kind, Table};
pub use checks::{check_associativity, check_identities, check_lie, check_with};
pub use derived::{
    commutator_algebra, derived_series, find_unit, opposite_algebra, DerivedSeries, Side,
    UnitSearch,
};
pub(crate) use element::fmt_combination;
pub use element::{ConfElement, LambdaElem};
pub use growth::{growth_profile, GrowthAmbient};
