//! Exact cohomology of left-symmetric color algebras.
//!
//! Everything is generic over a [`scalar::Field`]; the aliases below fix the
//! cyclotomic field, which covers every bicharacter value a finite grading
//! group can produce.

pub mod algebra;
pub mod bimodule;
pub mod cohomology;
pub mod glinalg;
pub mod grading;
pub mod scalar;
#[cfg(test)]
mod testing;
pub mod variety;

pub use grading::{Degree, GradingGroup};
pub use scalar::{Cyclotomic, Field};

pub type CycScalar = scalar::Cyclotomic;
pub type CycBicharacter = grading::Bicharacter<CycScalar>;
pub type CycMatrix = glinalg::Matrix<CycScalar>;
pub type CycAlgebra = algebra::ColorAlgebra<CycScalar>;
pub type CycLieAlgebra = algebra::LieColorAlgebra<CycScalar>;
pub type CycBimodule = bimodule::Bimodule<CycScalar>;
pub type CycComplex = cohomology::CochainComplex<CycScalar>;
pub type CycFamily = variety::FamilySpec<CycScalar>;
