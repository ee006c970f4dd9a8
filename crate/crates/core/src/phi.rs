//! Systems `(B, ·, ⁻¹, φ, 0)`: a group on `B₁` and a self-map `φ` of `B`.
//!
//! Axioms, for `x ∈ B` and `y ∈ B₁`:
//!
//! - F1: `(B₁, ·, ⁻¹)` is a group with unit `e`;
//! - F2: `0·y = 0`;
//! - F3: `φ(e) = 0`;
//! - F4: `φ(φ(x)φ(y)) = φ(xφ(y⁻¹))y` for `y ≠ e`.
//!
//! Products are taken in the extended groupoid of [`PhiSystem::ext_mul`],
//! where `x·0 = φ(x)` and `0⁻¹ = 0`.

use itertools::iproduct;

use crate::algebra::{validate_group, Field, GroupTable, UNIT, ZERO};
use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// How the F4 quantifier is read. Printed by verbose CLI validation.
pub const F4_DOMAIN_NOTE: &str =
    "F4 is quantified over x in B and y in B1 \\ {e}; the undefined symbol e1 in its \
     domain is read as the multiplicative unit e";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiSystem {
    group: GroupTable,
    phi: Vec<usize>,
}

impl PhiSystem {
    pub fn new(group: GroupTable, phi: Vec<usize>) -> Result<Self> {
        let n = group.n();
        if phi.len() != n {
            return Err(Error::structure(
                "phi map",
                format!("length must be n = {n}, got {}", phi.len()),
            ));
        }
        if let Some((x, &v)) = phi.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::structure(
                "phi map",
                format!("phi[{x}] = {v} lies outside B"),
            ));
        }
        Ok(PhiSystem { group, phi })
    }

    /// The system over `GF(q)` with `φ(x) = 1 − x`.
    pub fn standard(field: &Field) -> Self {
        let phi = field.elements().map(|x| field.sub(1, x)).collect();
        PhiSystem::new(field.mul_group(), phi).expect("1 - x maps GF(q) into itself")
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    #[inline]
    pub fn phi(&self, x: usize) -> usize {
        self.phi[x]
    }

    pub fn phi_map(&self) -> &[usize] {
        &self.phi
    }

    /// Total product on `B`: the group on `B₁`, `0·y = 0`, and `x·0 = φ(x)`.
    #[inline]
    pub fn ext_mul(&self, x: usize, y: usize) -> usize {
        match (x, y) {
            (_, ZERO) => self.phi[x],
            (ZERO, _) => ZERO,
            _ => self.group.mul(x, y),
        }
    }

    /// Group inverse on `B₁`, with `0⁻¹ = 0`.
    #[inline]
    pub fn ext_inv(&self, x: usize) -> usize {
        if x == ZERO {
            ZERO
        } else {
            self.group.inv(x)
        }
    }

    /// Transport along a carrier bijection fixing `0` and `e`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<Self> {
        let group = self.group.relabel(sigma)?;
        let mut phi = vec![0; self.n()];
        for x in 0..self.n() {
            phi[sigma[x]] = sigma[self.phi[x]];
        }
        PhiSystem::new(group, phi)
    }
}

/// Checks F1–F4 exhaustively, F4 over every `x ∈ B`, `y ∈ B₁ ∖ {e}`.
///
/// Both products in F4 have a right factor `φ(y)` or `φ(y⁻¹)` that must lie in
/// `B₁`; a cell where either is `0` fails F4. Without this the extended
/// groupoid admits maps such as `φ = 0` away from `0` that satisfy the bare
/// equation but not `φ(0) = e`.
pub fn validate_phi(s: &PhiSystem) -> Report {
    let n = s.n();
    let mut report = Report::new(format!("phi-system F1..F4 (n={n})"));

    let group = validate_group(s.group());
    let f1 = match group.failures().next() {
        None => Check::pass("F1", group.checks.iter().map(|c| c.cells).sum()),
        Some(c) => {
            let cx = c
                .counterexample
                .clone()
                .expect("failed check has a counterexample");
            Check::fail("F1", cx.cell, format!("group {}: {}", c.name, cx.detail))
        }
    };
    report.push(f1);

    report.push(Check::scan("F2", (1..n).map(|y| vec![y]), |c| {
        let v = s.ext_mul(ZERO, c[0]);
        (v != ZERO).then(|| format!("0*y = {v}"))
    }));
    report.push(if s.phi(UNIT) == ZERO {
        Check::pass("F3", 1)
    } else {
        Check::fail("F3", vec![UNIT], format!("phi(e) = {}", s.phi(UNIT)))
    });
    report.push(Check::scan(
        "F4",
        iproduct!(0..n, 2..n).map(|(x, y)| vec![x, y]),
        |c| {
            let (x, y) = (c[0], c[1]);
            if s.phi(y) == ZERO || s.phi(s.ext_inv(y)) == ZERO {
                return Some(
                    "phi(y) or phi(y^-1) is 0, outside the domain B x B1 of the product".into(),
                );
            }
            let left = s.phi(s.ext_mul(s.phi(x), s.phi(y)));
            let right = s.ext_mul(s.phi(s.ext_mul(x, s.phi(s.ext_inv(y)))), y);
            (left != right)
                .then(|| format!("phi(phi(x)phi(y)) = {left}, phi(x phi(y^-1))y = {right}"))
        },
    ));
    report
}

/// The identities that follow from F1–F4, each reported on its own:
/// `φ(0) = e`, `φ² = id`, `φEφ = EφE` on `B₁ ∖ {e}`, `φ` preserving
/// `B ∖ {0, e}`, F4 in its `φE`-substituted form, and the two-variable identity
/// `φ(φ(x)Eφ(y)) = φ(xy⁻¹)EφE(y)`.
pub fn check_derived_identities(s: &PhiSystem) -> Report {
    let n = s.n();
    let e = |x: usize| s.ext_inv(x);
    let phi = |x: usize| s.phi(x);
    let mut report = Report::new(format!("phi-system derived identities (n={n})"));

    report.push(if phi(ZERO) == UNIT {
        Check::pass("phi_zero_is_unit", 1)
    } else {
        Check::fail(
            "phi_zero_is_unit",
            vec![ZERO],
            format!("phi(0) = {}", phi(ZERO)),
        )
    });
    report.push(Check::scan(
        "phi_involution",
        (0..n).map(|x| vec![x]),
        |c| {
            let v = phi(phi(c[0]));
            (v != c[0]).then(|| format!("phi(phi(x)) = {v}"))
        },
    ));
    report.push(Check::scan("phi_E_phi", (2..n).map(|y| vec![y]), |c| {
        let y = c[0];
        let (l, r) = (phi(e(phi(y))), e(phi(e(y))));
        (l != r).then(|| format!("phi E phi(y) = {l}, E phi E(y) = {r}"))
    }));
    report.push(Check::scan(
        "phi_preserves_rest",
        (2..n).map(|x| vec![x]),
        |c| {
            let v = phi(c[0]);
            (v == ZERO || v == UNIT).then(|| format!("phi(x) = {v}"))
        },
    ));
    report.push(Check::scan(
        "F4_restated",
        iproduct!(0..n, 2..n).map(|(x, t)| vec![x, t]),
        |c| {
            let (x, t) = (c[0], c[1]);
            let phi_e_t = phi(e(t));
            let left = phi(s.ext_mul(phi(x), phi(t)));
            let right = s.ext_mul(phi(s.ext_mul(x, phi_e_t)), t);
            (left != right).then(|| format!("lhs = {left}, rhs = {right}"))
        },
    ));
    report.push(Check::scan(
        "phi_quotient_identity",
        iproduct!(0..n, 2..n).map(|(x, y)| vec![x, y]),
        |c| {
            let (x, y) = (c[0], c[1]);
            let left = phi(s.ext_mul(phi(x), e(phi(y))));
            let right = s.ext_mul(phi(s.ext_mul(x, e(y))), e(phi(e(y))));
            (left != right).then(|| format!("lhs = {left}, rhs = {right}"))
        },
    ));
    report
}
