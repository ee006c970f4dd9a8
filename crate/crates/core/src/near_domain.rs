//! Right near-domains `(B, ·, +, −, ⁻¹, L, 0)`.
//!
//! Addition and subtraction are partial, `B × B₁ → B`, and stored as
//! `n × (n−1)` tables. Axioms, for `x ∈ B` and `y, z ∈ B₁`:
//!
//! - A1 `(x − y) + y = x`, A2 `(x + y) − y = x`, A3 `y − y = 0`;
//! - A4 `(B₁, ·, ⁻¹)` is a group;
//! - A5 `(x + y)z = x·h(y,z) + yz`;
//! - A6 `(x + y) + z = x·r(y,z) + (y + z)` whenever `y + z ≠ 0`;
//! - A7 `(x + (0 − z)) + z = x·v(z)`;
//!
//! with witnesses `h`, `r`, `v` in `B₁` that do not depend on `x`.

use itertools::iproduct;
use serde::Serialize;

use crate::algebra::{validate_group, GroupTable, ZERO};
use crate::error::{Error, Result};
use crate::report::{Check, Report};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NearDomain {
    group: GroupTable,
    add: Vec<usize>,
    sub: Vec<usize>,
    left_inv: Vec<usize>,
}

impl NearDomain {
    /// `add` and `sub` have one row per `x ∈ B` and one column per `y ∈ B₁`;
    /// `l[i]` is `L(i + 1)`.
    pub fn new(
        group: GroupTable,
        add: Vec<Vec<usize>>,
        sub: Vec<Vec<usize>>,
        l: Vec<usize>,
    ) -> Result<Self> {
        let n = group.n();
        let flatten = |what: &'static str, t: Vec<Vec<usize>>| -> Result<Vec<usize>> {
            if t.len() != n || t.iter().any(|row| row.len() != n - 1) {
                return Err(Error::structure(what, format!("must be {n}x{}", n - 1)));
            }
            let flat: Vec<usize> = t.into_iter().flatten().collect();
            if let Some(i) = flat.iter().position(|&v| v >= n) {
                return Err(Error::structure(
                    what,
                    format!(
                        "entry [{}][{}] = {} lies outside B",
                        i / (n - 1),
                        i % (n - 1),
                        flat[i]
                    ),
                ));
            }
            Ok(flat)
        };
        let add = flatten("addition table", add)?;
        let sub = flatten("subtraction table", sub)?;
        if l.len() != n - 1 {
            return Err(Error::structure("L", format!("length must be {}", n - 1)));
        }
        let mut seen = vec![false; n];
        for &v in &l {
            if v == ZERO || v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::structure("L", "not a bijection of B1"));
            }
        }
        Ok(NearDomain {
            group,
            add,
            sub,
            left_inv: l,
        })
    }

    pub fn from_fns(
        group: GroupTable,
        add: impl Fn(usize, usize) -> usize,
        sub: impl Fn(usize, usize) -> usize,
        l: impl Fn(usize) -> usize,
    ) -> Result<Self> {
        let n = group.n();
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..n).map(|x| (1..n).map(|y| f(x, y)).collect()).collect()
        };
        let add_t = table(&add);
        let sub_t = table(&sub);
        NearDomain::new(group, add_t, sub_t, (1..n).map(l).collect())
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    /// `x + y` for `x ∈ B`, `y ∈ B₁`.
    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        debug_assert!(y != ZERO);
        self.add[x * (self.n() - 1) + y - 1]
    }

    /// `x − y` for `x ∈ B`, `y ∈ B₁`.
    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        debug_assert!(y != ZERO);
        self.sub[x * (self.n() - 1) + y - 1]
    }

    #[inline]
    pub fn l(&self, x: usize) -> usize {
        self.left_inv[x - 1]
    }

    pub fn l_map(&self) -> &[usize] {
        &self.left_inv
    }

    /// `x·y` for `x ∈ B`, `y ∈ B₁`, with `0·y = 0`.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        if x == ZERO {
            ZERO
        } else {
            self.group.mul(x, y)
        }
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.group.inv(x)
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add
            .chunks(self.n() - 1)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn sub_rows(&self) -> Vec<Vec<usize>> {
        self.sub
            .chunks(self.n() - 1)
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Transport along a carrier bijection fixing `0` and `e`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<Self> {
        let group = self.group.relabel(sigma)?;
        let n = self.n();
        let mut inverse = vec![0; n];
        for (x, &s) in sigma.iter().enumerate() {
            inverse[s] = x;
        }
        NearDomain::from_fns(
            group,
            |x, y| sigma[self.add(inverse[x], inverse[y])],
            |x, y| sigma[self.sub(inverse[x], inverse[y])],
            |x| sigma[self.l(inverse[x])],
        )
    }
}

/// Witnesses of A5, A6 and A7 found by exhaustive search.
///
/// A cell is `None` when no witness exists, when several do, or (for `r`) when
/// `y + z = 0` and A6 does not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessTables {
    n: usize,
    h: Vec<Option<usize>>,
    r: Vec<Option<usize>>,
    v: Vec<Option<usize>>,
}

impl WitnessTables {
    fn cell(&self, y: usize, z: usize) -> usize {
        (y - 1) * (self.n - 1) + (z - 1)
    }

    pub fn h(&self, y: usize, z: usize) -> Option<usize> {
        self.h[self.cell(y, z)]
    }

    pub fn r(&self, y: usize, z: usize) -> Option<usize> {
        self.r[self.cell(y, z)]
    }

    pub fn v(&self, z: usize) -> Option<usize> {
        self.v[z - 1]
    }
}

enum Witness {
    None,
    Unique(usize),
    Multiple(usize, usize),
}

/// Ascending search over `B₁` for the elements satisfying `holds`.
fn find_witness(n: usize, mut holds: impl FnMut(usize) -> bool) -> Witness {
    let mut found = Witness::None;
    for w in 1..n {
        if holds(w) {
            found = match found {
                Witness::None => Witness::Unique(w),
                Witness::Unique(a) => return Witness::Multiple(a, w),
                m => m,
            };
        }
    }
    found
}

fn witness_check(
    name: &str,
    cells: Vec<Vec<usize>>,
    n: usize,
    out: &mut [Option<usize>],
    slot: impl Fn(&[usize]) -> usize,
    mut equation: impl FnMut(&[usize], usize, usize) -> bool,
) -> Check {
    let count = cells.len();
    for cell in cells {
        match find_witness(n, |w| (0..n).all(|x| equation(&cell, w, x))) {
            Witness::Unique(w) => out[slot(&cell)] = Some(w),
            Witness::None => {
                return Check::fail(
                    name,
                    cell,
                    "no witness in B1 satisfies the equation for all x",
                )
            }
            Witness::Multiple(a, b) => {
                return Check::fail(
                    name,
                    cell,
                    format!("witness not unique: {a} and {b} both work"),
                )
            }
        }
    }
    Check::pass(name, count)
}

/// Checks A1–A7 and returns the witness tables found for A5–A7.
///
/// Besides the axioms the report carries `L_is_zero_minus` (`L(x) = 0 − x`)
/// and `L_left_inverse` (`L(x) + x = 0`).
pub fn validate_near_domain(d: &NearDomain) -> (Report, WitnessTables) {
    let n = d.n();
    let m = n - 1;
    let mut report = Report::new(format!("right near-domain A1..A7 (n={n})"));
    let xy = || {
        iproduct!(0..n, 1..n)
            .map(|(x, y)| vec![x, y])
            .collect::<Vec<_>>()
    };
    let yz = || {
        iproduct!(1..n, 1..n)
            .map(|(y, z)| vec![y, z])
            .collect::<Vec<_>>()
    };

    report.push(Check::scan("A1", xy(), |c| {
        let v = d.add(d.sub(c[0], c[1]), c[1]);
        (v != c[0]).then(|| format!("(x-y)+y = {v}"))
    }));
    report.push(Check::scan("A2", xy(), |c| {
        let v = d.sub(d.add(c[0], c[1]), c[1]);
        (v != c[0]).then(|| format!("(x+y)-y = {v}"))
    }));
    report.push(Check::scan("A3", (1..n).map(|x| vec![x]), |c| {
        let v = d.sub(c[0], c[0]);
        (v != ZERO).then(|| format!("x-x = {v}"))
    }));
    let group = validate_group(d.group());
    report.push(match group.failures().next() {
        None => Check::pass("A4", group.checks.iter().map(|c| c.cells).sum()),
        Some(c) => {
            let cx = c
                .counterexample
                .clone()
                .expect("failed check has a counterexample");
            Check::fail("A4", cx.cell, format!("group {}: {}", c.name, cx.detail))
        }
    });
    report.push(Check::scan(
        "L_is_zero_minus",
        (1..n).map(|x| vec![x]),
        |c| {
            let (l, s) = (d.l(c[0]), d.sub(ZERO, c[0]));
            (l != s).then(|| format!("L(x) = {l}, 0-x = {s}"))
        },
    ));
    report.push(Check::scan(
        "L_left_inverse",
        (1..n).map(|x| vec![x]),
        |c| {
            let v = d.add(d.l(c[0]), c[0]);
            (v != ZERO).then(|| format!("L(x)+x = {v}"))
        },
    ));

    let mut h = vec![None; m * m];
    let mut r = vec![None; m * m];
    let mut v = vec![None; m];
    let slot = |c: &[usize]| (c[0] - 1) * m + (c[1] - 1);

    report.push(witness_check("A5", yz(), n, &mut h, slot, |c, w, x| {
        let (y, z) = (c[0], c[1]);
        d.mul(d.add(x, y), z) == d.add(d.mul(x, w), d.group().mul(y, z))
    }));

    let a6_cells: Vec<_> = yz()
        .into_iter()
        .filter(|c| d.add(c[0], c[1]) != ZERO)
        .collect();
    report.push(witness_check("A6", a6_cells, n, &mut r, slot, |c, w, x| {
        let (y, z) = (c[0], c[1]);
        d.add(d.add(x, y), z) == d.add(d.mul(x, w), d.add(y, z))
    }));

    let a7 = match (1..n).find(|&z| d.sub(ZERO, z) == ZERO) {
        Some(z) => Check::fail("A7", vec![z], "0-z = 0 leaves the domain of +"),
        None => witness_check(
            "A7",
            (1..n).map(|z| vec![z]).collect(),
            n,
            &mut v,
            |c| c[0] - 1,
            |c, w, x| {
                let z = c[0];
                d.add(d.add(x, d.sub(ZERO, z)), z) == d.mul(x, w)
            },
        ),
    };
    report.push(a7);

    (report, WitnessTables { n, h, r, v })
}

/// Checks the closed forms the witnesses must take in any right near-domain:
///
/// 1. `0·x = 0`, with `0·x` computed through A5 as `L(y)h(y,x) + yx`;
/// 2. `h(x,y) = EL(x)·L(xy)`, and the same with `L(xy)` read as `0 − xy`;
/// 3. `r(y,z) = E(L(z) − y)·L(y + z)` where `y + z ≠ 0`;
/// 4. `x − z = x·Ev(z) + L(z)`;
/// 5. `v(z) = EL²(z)·z`;
///
/// plus the cocycle identity `h(y,z)h(yz,t) = h(y,zt)`.
pub fn lemma_closed_forms(d: &NearDomain, w: &WitnessTables) -> Report {
    let n = d.n();
    let g = d.group();
    let e = |x: usize| g.inv(x);
    let pairs = || iproduct!(1..n, 1..n).map(|(a, b)| vec![a, b]);
    let missing = "witness missing".to_string();
    let mut report = Report::new(format!("right near-domain closed forms (n={n})"));

    report.push(Check::scan("zero_left_absorbing", pairs(), |c| {
        let (y, x) = (c[0], c[1]);
        let Some(hyx) = w.h(y, x) else {
            return Some(missing.clone());
        };
        let v = d.add(d.mul(d.l(y), hyx), g.mul(y, x));
        (v != ZERO).then(|| format!("0*x evaluates to {v}"))
    }));
    report.push(Check::scan("h_closed_form", pairs(), |c| {
        let (x, y) = (c[0], c[1]);
        let Some(hxy) = w.h(x, y) else {
            return Some(missing.clone());
        };
        let want = g.mul(e(d.l(x)), d.l(g.mul(x, y)));
        (hxy != want).then(|| format!("h = {hxy}, EL(x)L(xy) = {want}"))
    }));
    report.push(Check::scan("h_via_subtraction", pairs(), |c| {
        let (x, y) = (c[0], c[1]);
        let Some(hxy) = w.h(x, y) else {
            return Some(missing.clone());
        };
        let diff = d.sub(ZERO, g.mul(x, y));
        if diff == ZERO {
            return Some("0 - xy = 0".into());
        }
        let want = g.mul(e(d.l(x)), diff);
        (hxy != want).then(|| format!("h = {hxy}, EL(x)(0-xy) = {want}"))
    }));

    let r_cells: Vec<_> = pairs().filter(|c| d.add(c[0], c[1]) != ZERO).collect();
    let skipped = r_cells.iter().filter(|c| d.l(c[1]) == c[0]).count();
    let r_check = Check::scan(
        "r_closed_form",
        r_cells.into_iter().filter(|c| d.l(c[1]) != c[0]),
        |c| {
            let (y, z) = (c[0], c[1]);
            let Some(ryz) = w.r(y, z) else {
                return Some(missing.clone());
            };
            let t = d.sub(d.l(z), y);
            if t == ZERO {
                return Some("L(z) - y = 0".into());
            }
            let want = g.mul(e(t), d.l(d.add(y, z)));
            (ryz != want).then(|| format!("r = {ryz}, E(L(z)-y)L(y+z) = {want}"))
        },
    );
    report.push(if skipped > 0 {
        r_check.with_note(format!("{skipped} cells with L(z) = y skipped"))
    } else {
        r_check
    });

    report.push(Check::scan(
        "sub_closed_form",
        iproduct!(0..n, 1..n).map(|(x, z)| vec![x, z]),
        |c| {
            let (x, z) = (c[0], c[1]);
            let Some(vz) = w.v(z) else {
                return Some(missing.clone());
            };
            let want = d.add(d.mul(x, e(vz)), d.l(z));
            let got = d.sub(x, z);
            (got != want).then(|| format!("x-z = {got}, xEv(z)+L(z) = {want}"))
        },
    ));
    report.push(Check::scan("v_closed_form", (1..n).map(|z| vec![z]), |c| {
        let z = c[0];
        let Some(vz) = w.v(z) else {
            return Some(missing.clone());
        };
        let want = g.mul(e(d.l(d.l(z))), z);
        (vz != want).then(|| format!("v = {vz}, EL^2(z)z = {want}"))
    }));
    report.push(Check::scan(
        "h_cocycle",
        iproduct!(1..n, 1..n, 1..n).map(|(y, z, t)| vec![y, z, t]),
        |c| {
            let (y, z, t) = (c[0], c[1], c[2]);
            let (Some(a), Some(b), Some(rhs)) =
                (w.h(y, z), w.h(g.mul(y, z), t), w.h(y, g.mul(z, t)))
            else {
                return Some(missing.clone());
            };
            let lhs = g.mul(a, b);
            (lhs != rhs).then(|| format!("h(y,z)h(yz,t) = {lhs}, h(y,zt) = {rhs}"))
        },
    ));
    report
}

/// Bijectivity of `x ↦ x + y` for each `y ∈ B₁` and injectivity of
/// `y ↦ x + y` for each `x ∈ B`.
pub fn translation_properties(d: &NearDomain) -> Report {
    let n = d.n();
    let mut report = Report::new(format!("right loop translations (n={n})"));
    let distinct = |vals: Vec<usize>| -> Option<usize> {
        let mut seen = vec![false; n];
        vals.into_iter()
            .find(|&v| std::mem::replace(&mut seen[v], true))
    };
    report.push(Check::scan(
        "right_translation_bijective",
        (1..n).map(|y| vec![y]),
        |c| {
            distinct((0..n).map(|x| d.add(x, c[0])).collect()).map(|v| format!("value {v} repeats"))
        },
    ));
    report.push(Check::scan(
        "left_translation_injective",
        (0..n).map(|x| vec![x]),
        |c| {
            distinct((1..n).map(|y| d.add(c[0], y)).collect()).map(|v| format!("value {v} repeats"))
        },
    ));
    report
}

/// Flags comparing a right near-domain with the classical near-domain axioms,
/// each evaluated only where the partial operations are defined.
///
/// `near_field_candidate` requires additive associativity together with every
/// classical condition expressible here: right distributivity, symmetric zero
/// and a two-sided zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub additive_associative: bool,
    pub right_distributive: bool,
    pub left_distributive: bool,
    /// Triples `(z, x, y) ∈ B × B × B₁` left out of the left-distributivity
    /// check because `z = 0`, `x = 0` or `x + y = 0`.
    pub left_distributive_excluded: usize,
    pub symmetric_zero: bool,
    /// Setting `x + 0 = x` turns `(B, +)` into a loop with two-sided zero,
    /// i.e. `{x + y : y ∈ B₁} = B ∖ {x}` for every `x`.
    pub two_sided_zero: bool,
    pub l_additive: bool,
    pub near_field_candidate: bool,
    pub details: Report,
}

pub fn classify(d: &NearDomain) -> Classification {
    let n = d.n();
    let g = d.group();
    let mut details = Report::new(format!("right near-domain classification (n={n})"));

    details.push(Check::scan(
        "additive_associative",
        iproduct!(0..n, 1..n, 1..n)
            .filter(|&(_, y, z)| d.add(y, z) != ZERO)
            .map(|(x, y, z)| vec![x, y, z]),
        |c| {
            let (x, y, z) = (c[0], c[1], c[2]);
            let (l, r) = (d.add(d.add(x, y), z), d.add(x, d.add(y, z)));
            (l != r).then(|| format!("(x+y)+z = {l}, x+(y+z) = {r}"))
        },
    ));
    details.push(Check::scan(
        "right_distributive",
        iproduct!(0..n, 1..n, 1..n).map(|(x, y, z)| vec![x, y, z]),
        |c| {
            let (x, y, z) = (c[0], c[1], c[2]);
            let (l, r) = (d.mul(d.add(x, y), z), d.add(d.mul(x, z), g.mul(y, z)));
            (l != r).then(|| format!("(x+y)z = {l}, xz+yz = {r}"))
        },
    ));
    let all = n * n * (n - 1);
    let left = Check::scan(
        "left_distributive",
        iproduct!(1..n, 1..n, 1..n)
            .filter(|&(_, x, y)| d.add(x, y) != ZERO)
            .map(|(z, x, y)| vec![z, x, y]),
        |c| {
            let (z, x, y) = (c[0], c[1], c[2]);
            let (l, r) = (g.mul(z, d.add(x, y)), d.add(g.mul(z, x), g.mul(z, y)));
            (l != r).then(|| format!("z(x+y) = {l}, zx+zy = {r}"))
        },
    );
    let excluded = all - left.cells;
    details.push(left.with_note(format!("{excluded} triples outside the partial signature")));
    details.push(Check::scan(
        "symmetric_zero",
        (1..n).map(|x| vec![x]),
        |c| {
            let x = c[0];
            let (a, b) = (d.add(d.l(x), x), d.add(x, d.l(x)));
            (a != ZERO || b != ZERO).then(|| format!("L(x)+x = {a}, x+L(x) = {b}"))
        },
    ));
    details.push(Check::scan(
        "two_sided_zero",
        (0..n).map(|x| vec![x]),
        |c| {
            let x = c[0];
            (1..n)
                .find(|&y| d.add(x, y) == x)
                .map(|y| format!("x+y = x for y = {y}, so x+0 = x breaks the loop"))
        },
    ));
    details.push(Check::scan(
        "l_additive",
        iproduct!(1..n, 1..n)
            .filter(|&(x, y)| d.add(x, y) != ZERO)
            .map(|(x, y)| vec![x, y]),
        |c| {
            let (x, y) = (c[0], c[1]);
            let (l, r) = (d.l(d.add(x, y)), d.add(d.l(x), d.l(y)));
            (l != r).then(|| format!("L(x+y) = {l}, L(x)+L(y) = {r}"))
        },
    ));

    let flag = |name| details.holds(name);
    let additive_associative = flag("additive_associative");
    let right_distributive = flag("right_distributive");
    let symmetric_zero = flag("symmetric_zero");
    let two_sided_zero = flag("two_sided_zero");
    Classification {
        additive_associative,
        right_distributive,
        left_distributive: flag("left_distributive"),
        left_distributive_excluded: excluded,
        symmetric_zero,
        two_sided_zero,
        l_additive: flag("l_additive"),
        near_field_candidate: additive_associative
            && right_distributive
            && symmetric_zero
            && two_sided_zero,
        details,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    /// The field itself: `+`, `−` from GF(q) and `L(x) = −x`.
    fn field_nd(q: usize) -> NearDomain {
        let f = Field::of_order(q).unwrap();
        NearDomain::from_fns(
            f.mul_group(),
            |x, y| f.add(x, y),
            |x, y| f.sub(x, y),
            |x| f.neg(x),
        )
        .unwrap()
    }

    #[test]
    fn gf3_field_has_trivial_witnesses() {
        let d = field_nd(3);
        let (r, w) = validate_near_domain(&d);
        assert!(r.passed(), "{r}");
        for y in 1..3 {
            assert_eq!(w.v(y), Some(1));
            for z in 1..3 {
                assert_eq!(w.h(y, z), Some(z));
                if d.add(y, z) != 0 {
                    assert_eq!(w.r(y, z), Some(1));
                } else {
                    assert_eq!(w.r(y, z), None);
                }
            }
        }
        assert!(lemma_closed_forms(&d, &w).passed());
        assert!(translation_properties(&d).passed());
    }

    #[test]
    fn corrupted_cell_fails_a1_or_a2() {
        let d = field_nd(3);
        let mut add = d.add_rows();
        // 0 + 1 should be 1 in GF(3); set it to 2
        add[0][0] = 2;
        let bad =
            NearDomain::new(d.group().clone(), add, d.sub_rows(), d.l_map().to_vec()).unwrap();
        let (r, _) = validate_near_domain(&bad);
        assert!(!r.passed());
        let a1 = r.get("A1").unwrap();
        let a2 = r.get("A2").unwrap();
        assert!(!a1.passed || !a2.passed);
        let cx = if a2.passed { a1 } else { a2 };
        assert_eq!(cx.counterexample.as_ref().unwrap().cell, vec![0, 1]);
    }

    #[test]
    fn gf5_field_closed_forms() {
        let d = field_nd(5);
        let (r, w) = validate_near_domain(&d);
        assert!(r.passed());
        for z in 1..5 {
            assert_eq!(w.v(z), Some(1));
        }
        assert!(lemma_closed_forms(&d, &w).passed());
    }

    #[test]
    fn field_is_near_field_candidate() {
        let c = classify(&field_nd(3));
        assert!(c.additive_associative);
        assert!(c.right_distributive);
        assert!(c.left_distributive);
        assert!(c.symmetric_zero);
        assert!(c.two_sided_zero);
        assert!(c.l_additive);
        assert!(c.near_field_candidate);
        // 3*3*2 triples; z=0 or x=0 removes 10, x+y=0 with x,z != 0 removes 4
        assert_eq!(c.left_distributive_excluded, 14);
    }

    #[test]
    fn structural_errors() {
        let d = field_nd(3);
        let g = d.group().clone();
        assert!(NearDomain::new(g.clone(), d.add_rows(), d.sub_rows(), vec![2, 2]).is_err());
        assert!(NearDomain::new(g.clone(), d.add_rows(), d.sub_rows(), vec![0, 2]).is_err());
        let mut add = d.add_rows();
        add[2][1] = 3;
        assert!(NearDomain::new(g.clone(), add, d.sub_rows(), vec![2, 1]).is_err());
        let mut sub = d.sub_rows();
        sub.pop();
        assert!(NearDomain::new(g, d.add_rows(), sub, vec![2, 1]).is_err());
    }

    #[test]
    fn relabel_preserves_validity() {
        let d = field_nd(5);
        let moved = d.relabel(&[0, 1, 4, 2, 3]).unwrap();
        assert_ne!(moved, d);
        let (r, w) = validate_near_domain(&moved);
        assert!(r.passed());
        assert!(lemma_closed_forms(&moved, &w).passed());
    }
}
