//! Finite right near-domains, phi-systems and sharply 2-transitive groups.
//!
//! Every structure lives on a carrier `B = {0, .., n-1}` where index `0` is the
//! additive zero and index `1` is the multiplicative unit `e`. The nonzero part
//! `B₁ = {1, .., n-1}` carries a group given by an explicit table.
//!
//! - [`algebra`]: carriers, group tables on `B₁`, and `GF(p^k)` arithmetic.
//! - [`phi`]: systems `(B, ·, ⁻¹, φ, 0)` and their axioms.
//! - [`near_domain`]: right near-domains `(B, ·, +, −, ⁻¹, L, 0)`, their
//!   witnesses `h`, `r`, `v`, closed forms, and classification.
//! - [`equivalence`]: the translations between the two kinds of system,
//!   isomorphism search and round trips.
//! - [`two_transitive`]: the pair group on distinct pairs and recovery of a
//!   phi-system from a sharply 2-transitive permutation group.
//! - [`families`]: the two affine-style example families over finite fields.
//! - [`search`]: exhaustive enumeration of phi-systems over small groups.

pub mod algebra;
pub mod equivalence;
pub mod error;
pub mod families;
pub mod json;
pub mod near_domain;
pub mod phi;
pub mod report;
pub mod search;
pub mod two_transitive;

pub use algebra::{validate_group, Carrier, Field, GroupTable, UNIT, ZERO};
pub use equivalence::{a_map, f_l_map, iso_check_near_domain, iso_check_phi, IsoKind, IsoWitness};
pub use error::{Error, Result};
pub use families::{make_example, verify_example_formulas, ExampleSpec, Family};
pub use near_domain::{
    classify, lemma_closed_forms, validate_near_domain, Classification, NearDomain, WitnessTables,
};
pub use phi::{check_derived_identities, validate_phi, PhiSystem};
pub use report::{Check, Report};
pub use search::{nearfield_census, search_phi, Census, SearchResult};
pub use two_transitive::{
    build_group, from_group, PairElement, PairGroup, PermutationAction, Recovered,
};
