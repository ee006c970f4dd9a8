//! Carriers, group tables on `B₁`, and finite-field arithmetic.

mod field;
mod group;

pub use field::{modulus_for, Field, MODULI};
pub use group::{validate_group, Carrier, GroupTable, UNIT, ZERO};
