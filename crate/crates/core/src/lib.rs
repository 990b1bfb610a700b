//! Exact computations for lowest-weight representations of the Virasoro and
//! Heisenberg algebras: Shapovalov forms and unitarity, the discrete series,
//! the oscillator (free boson) realization, q-series characters with
//! multiplicity extraction, and WZW central charges.
//!
//! Everything is computed over ℚ(i) with arbitrary precision; nothing here
//! touches floating point. The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod characters;
pub mod discrete;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod partition;
pub mod qseries;
pub mod scalar;
pub mod vector;
pub mod verma;
pub mod wzw;

pub use error::Error;
pub use partition::{partition_count, partitions_of, symmetry_factor, Partition};
pub use qseries::{qs_invert_unit, qs_mul, qs_partition_generating, qs_theta, QSeries};
pub use scalar::{scalar_arith, scalar_conj, ArithKind, ExactScalar, GaussianScalar};
pub use vector::GradedVector;
