//! Cochain complexes of left-symmetric and Lie color algebras.

mod assemble;
mod basis;
mod complex;
mod lie;
mod lsca;
mod oracle;
mod table;
mod theorem;

pub use basis::CochainBasis;
pub use complex::{CochainComplex, CohomologyError, ComplexKind};
pub use lie::{lie_coboundary, lie_cochain_basis};
pub use lsca::{lsca_coboundary, lsca_cochain_basis, lsca_d0, lsca_level_zero, InvariantLevel};
pub use oracle::naive_oracle_table;
pub use table::{cohomology_table, CohomologyEntry, CohomologyTable};
pub use theorem::{
    intertwining_residual, lie_side, phi_matrix, verify_main_theorem, LieSide, TheoremCheck, TheoremReport,
};
