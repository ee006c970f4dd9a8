//! The two example families over `GF(q)` with `φ(x) = 1 − x`.
//!
//! - scaling, `L(x) = a·x`: `x ⊕ y = −x·a⁻¹ + y`, `x ⊖ y = −x·a + a·y`;
//! - inverse, `L(x) = −x⁻¹`: `x ⊕ y = x·y² + y`, `x ⊖ y = x·y⁻² − y⁻¹`.

use std::fmt;

use itertools::iproduct;
use serde::Serialize;

use crate::algebra::{Field, ZERO};
use crate::error::{Error, Result};
use crate::near_domain::{NearDomain, WitnessTables};
use crate::report::{Check, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Scaling { a: usize },
    Inverse,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Scaling { a } => write!(f, "scaling(a={a})"),
            Family::Inverse => write!(f, "inverse"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExampleSpec {
    pub q: usize,
    pub family: Family,
}

impl ExampleSpec {
    pub fn scaling(q: usize, a: usize) -> Self {
        ExampleSpec {
            q,
            family: Family::Scaling { a },
        }
    }

    pub fn inverse(q: usize) -> Self {
        ExampleSpec {
            q,
            family: Family::Inverse,
        }
    }

    pub fn field(&self) -> Result<Field> {
        let f = Field::of_order(self.q)?;
        if let Family::Scaling { a } = self.family {
            if a == ZERO || a >= self.q {
                return Err(Error::Domain(format!(
                    "scaling parameter a = {a} must be a nonzero element of GF({})",
                    self.q
                )));
            }
        }
        Ok(f)
    }
}

/// Builds the add and sub tables straight from the closed forms.
pub fn make_example(spec: &ExampleSpec) -> Result<NearDomain> {
    let f = spec.field()?;
    let inv = |x: usize| f.inv(x).expect("nonzero");
    match spec.family {
        Family::Scaling { a } => {
            let a_inv = inv(a);
            NearDomain::from_fns(
                f.mul_group(),
                |x, y| f.add(f.neg(f.mul(x, a_inv)), y),
                |x, y| f.add(f.neg(f.mul(x, a)), f.mul(a, y)),
                |x| f.mul(a, x),
            )
        }
        Family::Inverse => NearDomain::from_fns(
            f.mul_group(),
            |x, y| f.add(f.mul(x, f.mul(y, y)), y),
            |x, y| {
                let yi = inv(y);
                f.sub(f.mul(x, f.mul(yi, yi)), yi)
            },
            |x| f.neg(inv(x)),
        ),
    }
}

/// Compares the witnesses found by validation with the family's formulas:
/// `r(y,z) = −a⁻¹` and `v(z) = a⁻²` for scaling, `h(y,z) = z⁻¹` and
/// `r(y,z) = y²z(z+y)⁻¹(yz+1)` for inverse. The last formula is compared only
/// where `y ⊕ z ≠ 0` and the field sum `z + y ≠ 0`.
pub fn verify_example_formulas(
    spec: &ExampleSpec,
    d: &NearDomain,
    w: &WitnessTables,
) -> Result<Report> {
    let f = spec.field()?;
    let n = f.order();
    if d.n() != n {
        return Err(Error::Domain(format!(
            "near-domain has n = {}, spec has q = {n}",
            d.n()
        )));
    }
    let inv = |x: usize| f.inv(x).expect("nonzero");
    let mut report = Report::new(format!("{} family over GF({n})", spec.family));
    let loop_defined = || {
        iproduct!(1..n, 1..n)
            .filter(|&(y, z)| d.add(y, z) != ZERO)
            .map(|(y, z)| vec![y, z])
    };
    let compare = |got: Option<usize>, want: usize, what: &str| -> Option<String> {
        match got {
            Some(v) if v == want => None,
            Some(v) => Some(format!("{what} witness = {v}, formula = {want}")),
            None => Some(format!("{what} witness missing")),
        }
    };
    match spec.family {
        Family::Scaling { a } => {
            let want_r = f.neg(inv(a));
            let want_v = inv(f.mul(a, a));
            report.push(Check::scan("r_formula", loop_defined(), |c| {
                compare(w.r(c[0], c[1]), want_r, "r")
            }));
            report.push(Check::scan("v_formula", (1..n).map(|z| vec![z]), |c| {
                compare(w.v(c[0]), want_v, "v")
            }));
        }
        Family::Inverse => {
            report.push(Check::scan(
                "h_formula",
                iproduct!(1..n, 1..n).map(|(y, z)| vec![y, z]),
                |c| compare(w.h(c[0], c[1]), inv(c[1]), "h"),
            ));
            let cells: Vec<_> = loop_defined().collect();
            let total = cells.len();
            let both: Vec<_> = cells
                .into_iter()
                .filter(|c| f.add(c[1], c[0]) != ZERO)
                .collect();
            let skipped = total - both.len();
            let check = Check::scan("r_formula", both, |c| {
                let (y, z) = (c[0], c[1]);
                let want = f.mul(
                    f.mul(f.mul(y, y), z),
                    f.mul(inv(f.add(z, y)), f.add(f.mul(y, z), 1)),
                );
                compare(w.r(y, z), want, "r")
            });
            report.push(check.with_note(format!(
                "{skipped} cells with z + y = 0 in the field checked against the witness only"
            )));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::near_domain::validate_near_domain;

    #[test]
    fn scaling_gf5_a2_sum() {
        let d = make_example(&ExampleSpec::scaling(5, 2)).unwrap();
        assert_eq!(d.add(1, 1), 3);
        assert_eq!(d.l(1), 2);
    }

    #[test]
    fn inverse_gf5_sum() {
        let d = make_example(&ExampleSpec::inverse(5)).unwrap();
        assert_eq!(d.add(1, 2), 1);
    }

    #[test]
    fn scaling_a1_is_reversed_subtraction() {
        let f = Field::new(3, 1).unwrap();
        let d = make_example(&ExampleSpec::scaling(3, 1)).unwrap();
        for x in 0..3 {
            for y in 1..3 {
                assert_eq!(d.add(x, y), f.sub(y, x));
            }
        }
        for x in 1..3 {
            assert_eq!(d.sub(x, x), 0);
        }
    }

    #[test]
    fn rejects_zero_scaling() {
        assert!(matches!(
            make_example(&ExampleSpec::scaling(5, 0)),
            Err(Error::Domain(_))
        ));
        assert!(make_example(&ExampleSpec::scaling(6, 1)).is_err());
    }

    #[test]
    fn scaling_gf7_a3_formulas() {
        let spec = ExampleSpec::scaling(7, 3);
        let d = make_example(&spec).unwrap();
        let (r, w) = validate_near_domain(&d);
        assert!(r.passed());
        for z in 1..7 {
            assert_eq!(w.v(z), Some(4));
        }
        assert!(verify_example_formulas(&spec, &d, &w).unwrap().passed());
    }

    #[test]
    fn inverse_h_formula() {
        let spec = ExampleSpec::inverse(5);
        let d = make_example(&spec).unwrap();
        let (r, w) = validate_near_domain(&d);
        assert!(r.passed(), "{r}");
        let rep = verify_example_formulas(&spec, &d, &w).unwrap();
        assert!(rep.holds("h_formula"));
        assert_eq!(rep.get("h_formula").unwrap().cells, 16);
    }
}
