//! Positive and negative p-energies of Hermitian matrices and graphs.
//!
//! The crate bundles a dense symmetric eigensolver, p-energy and
//! Schatten-norm computations, pinching/super-additivity gap checks for
//! block partitions, isomorphism-free enumeration of small connected
//! graphs, and an exhaustive verification harness for a family of
//! graph-energy inequalities and conjecture scans.
//!
//! Start with the runnable examples (`cargo run --example ...`) or the
//! `penergy` binary; the library surface mirrors both.

pub mod canon;
pub mod eigen;
pub mod energy;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod pinching;

pub use eigen::{default_zero_tol, eigenvalues, spectral_parts, Inertia, Spectrum};
pub use energy::{
    energy_upper_bounds, p_energy, pnorm_sandwich, scaling_bounds, schatten_norm, EnergyReport,
};
pub use error::{Error, Result};
pub use exact::exact_inertia;
pub use graph::{family, Family, Graph};
pub use matrix::{HermitianMatrix, SymmetricMatrix};
pub use pinching::{
    conformal_permutation, diagonal_blocks, pinching_gap, superadditivity_gap, BlockPartition,
    GapReport,
};
pub mod cli;
