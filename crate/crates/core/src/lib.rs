//! Hilbert coefficients of Cohen-Macaulay local rings.

pub mod classifier;
pub mod config;
pub mod constructions;
pub mod error;
pub mod field;
pub mod filtration;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod ring;
pub mod semigroup;
pub mod spec;
pub mod truncated;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use spec::{parse_ring_spec, RingSpec};
