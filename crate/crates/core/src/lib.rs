//! Exact tensor-power multiplicities for A-type Lie algebras and Lie superalgebras.
//!
//! The `L`-th tensor power of the symmetric power `Sym^{2s}` decomposes into
//! irreducibles with multiplicities `mu_lambda`. This crate computes those
//! multiplicities by applying the shift operator of a Weyl denominator to the
//! monomial-expansion coefficients `c(M)` of the power of the character, and
//! cross-checks every answer against brute-force oracles (Vandermonde
//! coefficient extraction, iterated Pieri insertion, hook-Schur linear solves).
//!
//! Arithmetic is generic over the coefficient ring through [`Scalar`]; the
//! aliases below fix it to arbitrary-precision integers, which is what every
//! public convenience entry point uses.

pub mod diffformula;
pub mod error;
pub mod occupancy;
pub mod oracle;
pub mod partitions;
pub mod report;
pub mod scalar;
pub mod sympoly;
pub mod weyl;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use diffformula::{
    apply_shift, branching_multiplicity, multiplicity, sl_m_in_sl_m1_branching,
    super_branching_multiplicity, super_multiplicity, Multiplicities, SubalgebraWeight,
    SuperMultiplicities,
};
pub use occupancy::{
    occupancy_coefficient, occupancy_table, super_occupancy_coefficient,
    verify_symmetry_identities, Backend, OccupancyTable, SpinConfig, SymmetryReport,
};
pub use partitions::{HookPartition, MVector, Partition, SuperMVector};
pub use weyl::{RootSubset, SubalgebraSpec, SuperRootSubset};

/// Exact integer type used for every count the library reports.
pub type Integer = num_bigint::BigInt;

/// Sparse polynomial with arbitrary-precision integer coefficients.
pub type Poly = sympoly::SparsePoly<Integer>;

/// Shift-operator expansion with arbitrary-precision integer coefficients.
pub type Expansion = weyl::SignedExpansion<Integer>;

/// Occupancy evaluator over arbitrary-precision integers.
pub type Occupancy = occupancy::Occupancy<Integer>;
