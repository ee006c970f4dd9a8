use std::collections::HashMap;

use crate::algebra::{GroupTable, UNIT, ZERO};
use crate::error::{Error, Result};
use crate::phi::{validate_phi, PhiSystem};
use crate::report::{Check, Report};
use crate::two_transitive::action::compose;
use crate::two_transitive::{build_group, PairElement, PermutationAction};

/// A phi-system read off a sharply 2-transitive group.
#[derive(Debug, Clone)]
pub struct Recovered {
    pub system: PhiSystem,
    /// `relabel[point] = carrier index`: `e₂ ↦ 0`, `e₁ ↦ 1`, remaining points
    /// in ascending order.
    pub relabel: Vec<usize>,
    pub base: (usize, usize),
    /// Structural facts about the group checked during recovery.
    pub checks: Report,
}

impl Recovered {
    /// Inverse of [`Recovered::relabel`].
    pub fn points(&self) -> Vec<usize> {
        let mut pts = vec![0; self.relabel.len()];
        for (p, &c) in self.relabel.iter().enumerate() {
            pts[c] = p;
        }
        pts
    }
}

/// Coordinatizes every element `g` by `[g(e₁), g(e₂)]`, multiplies points of
/// `B ∖ {e₂}` by `x∘y = x·[y, e₂]`, sets `φ(x) = x·[e₂, e₁]`, and relabels so
/// that `e₂` becomes `0` and `e₁` becomes `e`.
pub fn from_group(p: &PermutationAction) -> Result<Recovered> {
    let validity = p.validate();
    if !validity.passed() {
        return Err(Error::Invalid(validity.summary()));
    }
    let n = p.degree();
    let (e1, e2) = p.base();

    let mut coords: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, g) in p.perms().iter().enumerate() {
        if coords.insert((g[e1], g[e2]), i).is_some() {
            return Err(Error::Invalid(format!(
                "two elements send the base pair to ({}, {})",
                g[e1], g[e2]
            )));
        }
    }
    let elem = |x1: usize, x2: usize| -> &[usize] { &p.perms()[coords[&(x1, x2)]] };

    let mut relabel = vec![0; n];
    relabel[e2] = ZERO;
    relabel[e1] = UNIT;
    let rest = (0..n).filter(|&x| x != e1 && x != e2);
    for (k, x) in rest.enumerate() {
        relabel[x] = k + 2;
    }
    let mut points = vec![0; n];
    for (x, &c) in relabel.iter().enumerate() {
        points[c] = x;
    }

    // partial product on points, e2 as left zero
    let star = |x: usize, y: usize| -> usize { elem(y, e2)[x] };
    let swap = elem(e2, e1);

    let mut checks = Report::new(format!("recovery from base pair ({e1}, {e2})"));
    let identity: Vec<usize> = (0..n).collect();
    checks.push(if elem(e1, e2) == identity.as_slice() {
        Check::pass("identity_is_base", 1)
    } else {
        Check::fail(
            "identity_is_base",
            vec![e1, e2],
            "[e1, e2] is not the identity",
        )
    });
    checks.push(Check::scan(
        "left_zero",
        (0..n).filter(|&y| y != e2).map(|y| vec![y]),
        |c| {
            let v = star(e2, c[0]);
            (v != e2).then(|| format!("e2 * y = {v}"))
        },
    ));
    checks.push(if compose(swap, swap) == identity {
        Check::pass("swap_involution", 1)
    } else {
        Check::fail(
            "swap_involution",
            vec![e2, e1],
            "[e2, e1]^2 is not the identity",
        )
    });

    let group = GroupTable::from_fn(n, |x, y| relabel[star(points[x], points[y])])?;
    let phi = (0..n).map(|x| relabel[swap[points[x]]]).collect();
    let system = PhiSystem::new(group, phi)?;

    // [x1, x2] = [φ(x1 x2⁻¹), e2][e2, e1][x2, e2] for x2 ≠ e2
    checks.push(Check::scan(
        "decomposition",
        p.perms()
            .iter()
            .map(|g| vec![g[e1], g[e2]])
            .filter(|c| c[1] != e2),
        |c| {
            let (x1, x2) = (relabel[c[0]], relabel[c[1]]);
            let ratio = system.ext_mul(x1, system.ext_inv(x2));
            let first = elem(points[system.phi(ratio)], e2);
            let product = compose(&compose(first, swap), elem(c[1], e2));
            (product != elem(c[0], c[1])).then(|| "factorization differs".to_string())
        },
    ));

    Ok(Recovered {
        system,
        relabel,
        base: (e1, e2),
        checks,
    })
}

/// Builds the pair group of `s`, recovers a phi-system from it at `base`, and
/// compares table for table through `x ↦ φ(x·φ(e₁e₂⁻¹))·e₂` followed by the
/// canonical relabeling.
pub fn roundtrip_theorem2_phi(s: &PhiSystem, base: (usize, usize)) -> Result<Report> {
    let group = build_group(s)?;
    let action = group.to_permutation_action(base)?;
    let rec = from_group(&action)?;
    let (e1, e2) = base;
    let n = s.n();

    let mut report = Report::new(format!(
        "phi -> pair group -> phi at base ({e1}, {e2}), |G| = {}",
        group.order()
    ));
    report.absorb("recovery", rec.checks.clone());
    let connecting: Vec<usize> = (0..n)
        .map(|x| {
            let ratio = s.ext_mul(e1, s.ext_inv(e2));
            rec.relabel[s.ext_mul(s.phi(s.ext_mul(x, s.phi(ratio))), e2)]
        })
        .collect();
    report.push(if connecting[ZERO] == ZERO && connecting[UNIT] == UNIT {
        Check::pass("connecting_map_fixes_constants", 1)
    } else {
        Check::fail(
            "connecting_map_fixes_constants",
            connecting.clone(),
            "0 or e moved",
        )
    });
    let validity = validate_phi(&rec.system);
    report.push(if validity.passed() {
        Check::pass("recovered_valid", 1)
    } else {
        Check::fail("recovered_valid", vec![], validity.summary())
    });
    report.push(match s.relabel(&connecting) {
        Ok(moved) if moved == rec.system => Check::pass("table_exact", n * n),
        Ok(moved) => {
            let diff = (0..n).find(|&x| moved.phi(x) != rec.system.phi(x));
            Check::fail(
                "table_exact",
                diff.into_iter().collect(),
                "transported tables differ from the recovered ones",
            )
        }
        Err(e) => Check::fail("table_exact", connecting.clone(), e.to_string()),
    });
    if base == (UNIT, ZERO) {
        let identity: Vec<usize> = (0..n).collect();
        report.push(if connecting == identity {
            Check::pass("identity_connecting_map", n)
        } else {
            Check::fail("identity_connecting_map", connecting, "not the identity")
        });
    }
    Ok(report)
}

/// Recovers a phi-system from `p`, rebuilds its pair group, and checks that
/// every rebuilt element, read back on the original points, is the element of
/// `p` with the same coordinates.
pub fn roundtrip_theorem2_action(p: &PermutationAction) -> Result<Report> {
    let rec = from_group(p)?;
    let group = build_group(&rec.system)?;
    let points = rec.points();
    let (e1, e2) = p.base();
    let n = p.degree();

    let mut report = Report::new(format!(
        "permutation group -> phi -> pair group at base ({e1}, {e2}), |G| = {}",
        p.order()
    ));
    report.absorb("recovery", rec.checks.clone());
    report.push(if group.order() == p.order() {
        Check::pass("order", 1)
    } else {
        Check::fail("order", vec![group.order(), p.order()], "orders differ")
    });
    let by_coords: HashMap<(usize, usize), &Vec<usize>> =
        p.perms().iter().map(|g| ((g[e1], g[e2]), g)).collect();
    report.push(Check::scan(
        "element_by_element",
        (0..group.order()).map(|i| vec![i]),
        |c| {
            let PairElement { x1, x2 } = group.elements()[c[0]];
            let rebuilt = group.permutation(c[0]);
            let mut on_points = vec![0; n];
            for t in 0..n {
                on_points[points[t]] = points[rebuilt[t]];
            }
            match by_coords.get(&(points[x1], points[x2])) {
                Some(&g) if *g == on_points => None,
                Some(_) => Some(format!("[{x1}, {x2}] acts differently")),
                None => Some(format!("[{x1}, {x2}] has no counterpart")),
            }
        },
    ));
    Ok(report)
}
