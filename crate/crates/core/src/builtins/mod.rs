//! The concrete algebras: current, Virasoro, differential, `Cend_n` with its
//! one-sided ideals and `τ`, and split null extensions.

mod catalog;
mod cend;
mod ordinary;

pub use catalog::*;
pub use cend::{
    cend_act, cend_act_at, cend_braced_at, cend_ideal_element, cend_n_product, cend_product,
    cend_product_at, cend_right_braced, cend_right_product_at, in_c0, split_null_product,
    split_null_product_at, tau_transpose, Cend, IdealSide, MatrixConfElem, SplitNullBase,
    SplitNullElem,
};
pub use ordinary::{current_algebra, differential_algebra, virasoro, OrdinaryAlgebra};
