//! Exact linear algebra over the principal ideal domains `Z` and `F_q[t]`.
//!
//! A finite set of points over such a ring admits a degree-`d` form that is a
//! unit at every point exactly when the evaluation matrix of the degree-`d`
//! monomials has a vector of units in its column lattice. That is decided
//! with Smith normal forms.

mod presets;
mod ring;
mod smith;

pub use presets::{verify_arithmetic_example, LatticeReport, PointValue, Preset};
pub use ring::{FpPoly, Integers, Pid};
pub use smith::{
    determinant, evaluation_matrix, smith_normal_form, solve_membership, unit_vector_in_image, unit_vector_witness,
    PidMatrix, SmithForm,
};
