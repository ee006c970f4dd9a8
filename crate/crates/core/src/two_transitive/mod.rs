//! Sharply 2-transitive groups and phi-systems.
//!
//! A phi-system `S` yields a group on the distinct pairs `B̂²`: the pair
//! `(y₁, y₂)` acts on `B` by `x ↦ f(x, y₁, y₂) = φ(x·φ(y₁y₂⁻¹))·y₂` and sends the
//! base pair `(e, 0)` to `(y₁, y₂)`. Conversely, a sharply 2-transitive
//! permutation group with a base pair `(e₁, e₂)` is coordinatized by the images
//! of that pair, and the stabilizer of `e₂` together with the involution
//! swapping `e₁, e₂` yields a phi-system.

mod action;
mod pair;
mod recover;

pub use action::PermutationAction;
pub use pair::{build_group, f_action, pair_inv, pair_mul, PairElement, PairGroup};
pub use recover::{from_group, roundtrip_theorem2_action, roundtrip_theorem2_phi, Recovered};
