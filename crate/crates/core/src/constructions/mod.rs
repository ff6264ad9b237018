//! Faithful finite representations built from the algebra itself: adjoining
//! a unit, the double construction, the central PBW module and the solvable
//! pipeline on top of it.

mod central;
mod double;
mod solvable;
mod unit;

pub use central::{
    central_action, central_action_basis, check_central_pbw, pbw_violations, CentralElement,
    CentralSource, ExtLieTable, LocalityBound, PbwViolation, Scalar,
};
pub use double::{check_double_conditions, double_rep, pairing_kernel, Pairing};
pub use solvable::{
    central_pbw_rep, change_basis, solvable_bounds, solvable_bounds_for, solvable_faithful_rep,
    solvable_faithful_rep_ext, ExtPipeline, TriangularBasis,
};
pub use unit::{adjoin_unit_rep, table_degree_bound, AdjoinedUnit};
