use std::fmt;

use itertools::iproduct;
use serde::Serialize;

use crate::algebra::{UNIT, ZERO};
use crate::error::{Error, Result};
use crate::phi::PhiSystem;
use crate::report::{Check, Report};
use crate::two_transitive::PermutationAction;

/// An ordered pair of distinct carrier points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairElement {
    pub x1: usize,
    pub x2: usize,
}

impl PairElement {
    pub fn new(x1: usize, x2: usize) -> Result<Self> {
        if x1 == x2 {
            return Err(Error::Domain(format!(
                "({x1}, {x2}) is not a pair of distinct points"
            )));
        }
        Ok(PairElement { x1, x2 })
    }

    /// The unit `(e, 0)`.
    pub fn unit() -> Self {
        PairElement { x1: UNIT, x2: ZERO }
    }
}

impl fmt::Display for PairElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

#[inline]
fn act(s: &PhiSystem, x: usize, y1: usize, y2: usize) -> usize {
    let ratio = s.ext_mul(y1, s.ext_inv(y2));
    s.ext_mul(s.phi(s.ext_mul(x, s.phi(ratio))), y2)
}

/// `f(x, y₁, y₂) = φ(x·φ(y₁·y₂⁻¹))·y₂` in the extended groupoid; for `y₂ = 0`
/// this is `x·y₁`.
pub fn f_action(s: &PhiSystem, x: usize, y1: usize, y2: usize) -> Result<usize> {
    let n = s.n();
    if x >= n || y1 >= n || y2 >= n {
        return Err(Error::Domain(format!("point outside B (n = {n})")));
    }
    let g = PairElement::new(y1, y2)?;
    Ok(act(s, x, g.x1, g.x2))
}

pub fn pair_mul(s: &PhiSystem, a: PairElement, b: PairElement) -> PairElement {
    PairElement {
        x1: act(s, a.x1, b.x1, b.x2),
        x2: act(s, a.x2, b.x1, b.x2),
    }
}

/// `(x₁, x₂)⁻¹ = (φ(x₂⁻¹)·Eφ(x₁x₂⁻¹), Eφ(x₁x₂⁻¹))` for `x₂ ≠ 0`, and
/// `(x₁⁻¹, 0)` on the stabilizer of `0`, where the formula read with
/// `0⁻¹ = 0` would give `(?, x₁⁻¹)`.
pub fn pair_inv(s: &PhiSystem, a: PairElement) -> PairElement {
    if a.x2 == ZERO {
        return PairElement {
            x1: s.ext_inv(a.x1),
            x2: ZERO,
        };
    }
    let e_phi = s.ext_inv(s.phi(s.ext_mul(a.x1, s.ext_inv(a.x2))));
    PairElement {
        x1: s.ext_mul(s.phi(s.ext_inv(a.x2)), e_phi),
        x2: e_phi,
    }
}

/// The group on `B̂²` built from a phi-system, with its Cayley table.
#[derive(Debug, Clone)]
pub struct PairGroup {
    base: PhiSystem,
    elements: Vec<PairElement>,
    index: Vec<Option<usize>>,
    table: Vec<usize>,
    report: Report,
}

impl PairGroup {
    pub fn base(&self) -> &PhiSystem {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic order of `(x₁, x₂)`.
    pub fn elements(&self) -> &[PairElement] {
        &self.elements
    }

    pub fn index_of(&self, p: PairElement) -> Option<usize> {
        let n = self.base.n();
        if p.x1 >= n || p.x2 >= n {
            return None;
        }
        self.index[p.x1 * n + p.x2]
    }

    /// Product of two elements given by index.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    /// The checks run while building the group.
    pub fn report(&self) -> &Report {
        &self.report
    }

    /// The permutation `x ↦ f(x, x₁, x₂)` of the element at index `i`.
    pub fn permutation(&self, i: usize) -> Vec<usize> {
        let p = self.elements[i];
        (0..self.base.n())
            .map(|x| act(&self.base, x, p.x1, p.x2))
            .collect()
    }

    pub fn to_permutation_action(&self, base: (usize, usize)) -> Result<PermutationAction> {
        let perms = (0..self.order()).map(|i| self.permutation(i)).collect();
        PermutationAction::new(self.base.n(), perms, base)
    }
}

/// Materializes the pair group and verifies it exhaustively.
///
/// Associativity is checked over all triples for `n <= 5`; for larger carriers
/// the check is that the action is a homomorphism, `t·(ab) = (t·a)·b`, which
/// implies associativity because distinct pairs act differently on `(e, 0)`.
pub fn build_group(s: &PhiSystem) -> Result<PairGroup> {
    let n = s.n();
    let elements: Vec<PairElement> = iproduct!(0..n, 0..n)
        .filter(|(a, b)| a != b)
        .map(|(x1, x2)| PairElement { x1, x2 })
        .collect();
    let m = elements.len();
    let mut index = vec![None; n * n];
    for (i, p) in elements.iter().enumerate() {
        index[p.x1 * n + p.x2] = Some(i);
    }
    let mut report = Report::new(format!("pair group over B^2 minus diagonal (n={n})"));
    let pairs = || elements.iter().map(|p| vec![p.x1, p.x2]);

    report.push(Check::scan("magma_injective", pairs(), |c| {
        let mut seen = vec![false; n];
        (0..n)
            .map(|x| act(s, x, c[0], c[1]))
            .find(|&v| std::mem::replace(&mut seen[v], true))
            .map(|v| format!("x -> f(x, y1, y2) repeats {v}"))
    }));

    let mut table = Vec::with_capacity(m * m);
    let mut closure_failure = None;
    for a in &elements {
        for b in &elements {
            let c = pair_mul(s, *a, *b);
            match index[c.x1 * n + c.x2] {
                Some(k) => table.push(k),
                None => {
                    closure_failure.get_or_insert((*a, *b, c));
                    table.push(usize::MAX);
                }
            }
        }
    }
    match closure_failure {
        Some((a, b, c)) => {
            report.push(Check::fail(
                "closure",
                vec![a.x1, a.x2, b.x1, b.x2],
                format!("{a}{b} = {c} lies on the diagonal"),
            ));
            return Err(Error::Invalid(report.to_string()));
        }
        None => report.push(Check::pass("closure", m * m)),
    }

    let group = PairGroup {
        base: s.clone(),
        elements,
        index,
        table,
        report: Report::new(""),
    };
    let unit = group
        .index_of(PairElement::unit())
        .expect("(e, 0) is a pair");
    let at = |i: usize| group.elements[i];

    report.push(Check::scan("unit", (0..m).map(|i| vec![i]), |c| {
        let i = c[0];
        (group.mul(i, unit) != i || group.mul(unit, i) != i)
            .then(|| format!("{} is not fixed by (e, 0)", at(i)))
    }));
    report.push(Check::scan("inverse", (0..m).map(|i| vec![i]), |c| {
        let a = at(c[0]);
        let b = pair_inv(s, a);
        let (l, r) = (pair_mul(s, b, a), pair_mul(s, a, b));
        (l != PairElement::unit() || r != PairElement::unit())
            .then(|| format!("{a}^-1 = {b}, {b}{a} = {l}, {a}{b} = {r}"))
    }));
    if n <= 5 {
        report.push(Check::scan(
            "associativity",
            iproduct!(0..m, 0..m, 0..m).map(|(a, b, c)| vec![a, b, c]),
            |c| {
                let (a, b, d) = (c[0], c[1], c[2]);
                let l = group.mul(group.mul(a, b), d);
                let r = group.mul(a, group.mul(b, d));
                (l != r).then(|| format!("(ab)c = {}, a(bc) = {}", at(l), at(r)))
            },
        ));
    } else {
        report.push(Check::scan(
            "action_homomorphism",
            iproduct!(0..m, 0..m).map(|(a, b)| vec![a, b]),
            |c| {
                let (a, b) = (at(c[0]), at(c[1]));
                let ab = at(group.mul(c[0], c[1]));
                (0..n)
                    .find(|&t| act(s, t, ab.x1, ab.x2) != act(s, act(s, t, a.x1, a.x2), b.x1, b.x2))
                    .map(|t| format!("t = {t}: t(ab) != (ta)b"))
            },
        ));
    }
    report.push(sharply_two_transitive(n, m, |i, x| {
        let p = at(i);
        act(s, x, p.x1, p.x2)
    }));
    report.push(if m == n * (n - 1) {
        Check::pass("order", 1)
    } else {
        Check::fail("order", vec![m], format!("expected {}", n * (n - 1)))
    });

    if !report.passed() {
        return Err(Error::Invalid(report.to_string()));
    }
    Ok(PairGroup { report, ..group })
}

/// For every source pair `(a, b)` and target pair `(c, d)` of distinct points,
/// exactly one of the `m` elements sends `a ↦ c` and `b ↦ d`. Elements are
/// given by their action `image(i, x)`.
pub(crate) fn sharply_two_transitive(
    n: usize,
    m: usize,
    image: impl Fn(usize, usize) -> usize,
) -> Check {
    let sources: Vec<_> = iproduct!(0..n, 0..n).filter(|(a, b)| a != b).collect();
    let mut count = vec![0u32; n * n];
    let mut checked = 0;
    for &(a, b) in &sources {
        count.iter_mut().for_each(|c| *c = 0);
        for i in 0..m {
            count[image(i, a) * n + image(i, b)] += 1;
        }
        for (c, d) in iproduct!(0..n, 0..n).filter(|(c, d)| c != d) {
            checked += 1;
            let k = count[c * n + d];
            if k != 1 {
                return Check::fail(
                    "sharply_2_transitive",
                    vec![a, b, c, d],
                    format!("{k} elements map ({a}, {b}) to ({c}, {d})"),
                );
            }
        }
    }
    Check::pass("sharply_2_transitive", checked)
}
