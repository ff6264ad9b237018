//! Linear algebra over the PIDs `Q[D]` and `Q[λ]`.

mod matrix;
mod normal;
mod submodule;

pub use matrix::PolyMatrix;
pub use normal::{hermite_normal_form, smith_normal_form, syzygy_kernel};
pub use submodule::{torsion_decomposition, SubmoduleBasis, TorsionDecomposition};
