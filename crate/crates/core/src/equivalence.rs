//! Translations between right near-domains and phi-systems.
//!
//! [`a_map`] sends a near-domain to the phi-system `φ(x) = x·a + e` with
//! `a = 0 − e`. [`f_l_map`] goes back for any bijection `L` of `B₁`:
//! `x + y = φ(x·EL(y))·y` and `x − y = φ(x·y⁻¹)·L(y)`.
//!
//! Applying `f_l_map` and then `a_map` returns the original phi-system. In the
//! other direction the near-domain is recovered exactly when `L` is its own
//! left-inverse map.

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{UNIT, ZERO};
use crate::error::{Error, Result};
use crate::near_domain::{validate_near_domain, NearDomain};
use crate::phi::PhiSystem;
use crate::report::{Check, Report};

/// All bijections of `B₁ = {1, .., n-1}` as arrays `l[i] = L(i + 1)`, in
/// lexicographic order starting from the identity.
pub fn bijections(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..n).permutations(n - 1)
}

pub fn a_map(d: &NearDomain) -> Result<PhiSystem> {
    let (report, _) = validate_near_domain(d);
    if !report.passed() {
        return Err(Error::Invalid(report.summary()));
    }
    let a = d.sub(ZERO, UNIT);
    let phi = (0..d.n()).map(|x| d.add(d.mul(x, a), UNIT)).collect();
    PhiSystem::new(d.group().clone(), phi)
}

pub fn f_l_map(s: &PhiSystem, l: &[usize]) -> Result<NearDomain> {
    let n = s.n();
    let mut seen = vec![false; n];
    if l.len() != n - 1
        || l.iter()
            .any(|&v| v == ZERO || v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::structure("L", "not a bijection of B1"));
    }
    let big_l = |y: usize| l[y - 1];
    NearDomain::from_fns(
        s.group().clone(),
        |x, y| s.ext_mul(s.phi(s.ext_mul(x, s.ext_inv(big_l(y)))), y),
        |x, y| s.ext_mul(s.phi(s.ext_mul(x, s.ext_inv(y))), big_l(y)),
        big_l,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoKind {
    PhiSystemIso,
    NearDomainIso,
}

/// A carrier bijection `map` with `map[0] = 0`, `map[1] = 1` carrying every
/// operation of the source onto the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub map: Vec<usize>,
    pub kind: IsoKind,
}

/// Operation tables over `B`; `None` marks arguments outside an operation's
/// domain.
struct Signature {
    n: usize,
    binary: Vec<Vec<Option<usize>>>,
    unary: Vec<Vec<Option<usize>>>,
}

impl Signature {
    fn of_phi(s: &PhiSystem) -> Self {
        let n = s.n();
        let table = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| Some(s.ext_mul(x, y)))
            .collect();
        Signature {
            n,
            binary: vec![table],
            unary: vec![s.phi_map().iter().copied().map(Some).collect()],
        }
    }

    fn of_near_domain(d: &NearDomain) -> Self {
        let n = d.n();
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Option<usize>> {
            (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .map(|(x, y)| (y != ZERO).then(|| f(x, y)))
                .collect()
        };
        let l = std::iter::once(None)
            .chain((1..n).map(|x| Some(d.l(x))))
            .collect();
        Signature {
            n,
            binary: vec![
                table(&|x, y| d.mul(x, y)),
                table(&|x, y| d.add(x, y)),
                table(&|x, y| d.sub(x, y)),
            ],
            unary: vec![l],
        }
    }

    /// Whether the partial `map` violates any constraint among assigned points.
    fn consistent(&self, other: &Signature, map: &[Option<usize>]) -> bool {
        let n = self.n;
        let agree = |src: Option<usize>, dst: Option<usize>| match (src, dst) {
            (None, None) => true,
            (Some(v), Some(w)) => map[v].is_none_or(|mv| mv == w),
            _ => false,
        };
        for (a, b) in self.unary.iter().zip(&other.unary) {
            for x in 0..n {
                if let Some(mx) = map[x] {
                    if !agree(a[x], b[mx]) {
                        return false;
                    }
                }
            }
        }
        for (a, b) in self.binary.iter().zip(&other.binary) {
            for x in 0..n {
                let Some(mx) = map[x] else { continue };
                for y in 0..n {
                    let Some(my) = map[y] else { continue };
                    if !agree(a[x * n + y], b[mx * n + my]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn find_iso(&self, other: &Signature) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let n = self.n;
        let mut map = vec![None; n];
        let mut used = vec![false; n];
        map[ZERO] = Some(ZERO);
        map[UNIT] = Some(UNIT);
        used[ZERO] = true;
        used[UNIT] = true;
        if !self.consistent(other, &map) {
            return None;
        }
        self.extend(other, 2, &mut map, &mut used)
            .then(|| map.into_iter().map(|m| m.expect("complete map")).collect())
    }

    fn extend(
        &self,
        other: &Signature,
        next: usize,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if next == self.n {
            return true;
        }
        for target in 2..self.n {
            if used[target] {
                continue;
            }
            map[next] = Some(target);
            used[target] = true;
            if self.consistent(other, map) && self.extend(other, next + 1, map, used) {
                return true;
            }
            map[next] = None;
            used[target] = false;
        }
        false
    }
}

/// Backtracking search for an isomorphism `s1 → s2` fixing `0` and `e`.
pub fn iso_check_phi(s1: &PhiSystem, s2: &PhiSystem) -> Option<IsoWitness> {
    Signature::of_phi(s1)
        .find_iso(&Signature::of_phi(s2))
        .map(|map| IsoWitness {
            map,
            kind: IsoKind::PhiSystemIso,
        })
}

pub fn iso_check_near_domain(d1: &NearDomain, d2: &NearDomain) -> Option<IsoWitness> {
    Signature::of_near_domain(d1)
        .find_iso(&Signature::of_near_domain(d2))
        .map(|map| IsoWitness {
            map,
            kind: IsoKind::NearDomainIso,
        })
}

/// For every bijection `L` of `B₁`: `f_l_map(s, L)` is a right near-domain,
/// satisfies `(x + L(z)) + z = x·EL²(z)·z`, and `a_map` takes it back to a
/// system isomorphic (in fact equal) to `s`. Counterexample cells are `L`.
pub fn roundtrip_theorem1_phi(s: &PhiSystem) -> Report {
    let n = s.n();
    let ls: Vec<_> = bijections(n).collect();
    let mut report = Report::new(format!(
        "phi -> near-domain -> phi over {} maps L (n={n})",
        ls.len()
    ));
    let built: Vec<_> = ls
        .iter()
        .map(|l| f_l_map(s, l).expect("bijection"))
        .collect();

    report.push(Check::scan("F_L_valid", ls.clone(), |l| {
        let d = &built[ls.iter().position(|x| x == l).unwrap()];
        let (r, _) = validate_near_domain(d);
        (!r.passed()).then(|| r.summary())
    }));
    report.push(Check::scan("A7_closed_form", ls.clone(), |l| {
        let d = &built[ls.iter().position(|x| x == l).unwrap()];
        let g = d.group();
        for x in 0..n {
            for z in 1..n {
                let lhs = d.add(d.add(x, d.l(z)), z);
                let rhs = d.mul(x, g.mul(g.inv(d.l(d.l(z))), z));
                if lhs != rhs {
                    return Some(format!("x = {x}, z = {z}: {lhs} != {rhs}"));
                }
            }
        }
        None
    }));
    let back: Vec<_> = built.iter().map(a_map).collect();
    report.push(Check::scan("A_F_L_isomorphic", ls.clone(), |l| match &back
        [ls.iter().position(|x| x == l).unwrap()]
    {
        Ok(t) => iso_check_phi(s, t)
            .is_none()
            .then(|| "no isomorphism".to_string()),
        Err(e) => Some(e.to_string()),
    }));
    report.push(Check::scan("A_F_L_identical", ls.clone(), |l| match &back
        [ls.iter().position(|x| x == l).unwrap()]
    {
        Ok(t) => (t != s).then(|| format!("phi = {:?}", t.phi_map())),
        Err(e) => Some(e.to_string()),
    }));
    report
}

/// `f_l_map(a_map(d), L')` reproduces `d` table for table when `L' = d.L`
/// and differs from it for every other bijection.
pub fn roundtrip_theorem1_near_domain(d: &NearDomain) -> Result<Report> {
    let s = a_map(d)?;
    let n = d.n();
    let mut report = Report::new(format!("near-domain -> phi -> near-domain (n={n})"));
    let own = f_l_map(&s, d.l_map())?;
    report.push(if own == *d {
        Check::pass("own_L_identical", 1)
    } else {
        Check::fail("own_L_identical", d.l_map().to_vec(), "tables differ")
    });
    report.push(Check::scan(
        "other_L_differ",
        bijections(n).filter(|l| l != d.l_map()),
        |l| {
            let other = f_l_map(&s, l).expect("bijection");
            (other == *d).then(|| "tables coincide for a different L".to_string())
        },
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::phi::validate_phi;

    fn gf(q: usize) -> (Field, PhiSystem) {
        let f = Field::of_order(q).unwrap();
        let s = PhiSystem::standard(&f);
        (f, s)
    }

    fn field_nd(f: &Field) -> NearDomain {
        NearDomain::from_fns(
            f.mul_group(),
            |x, y| f.add(x, y),
            |x, y| f.sub(x, y),
            |x| f.neg(x),
        )
        .unwrap()
    }

    #[test]
    fn a_map_of_gf3_field() {
        let (f, _) = gf(3);
        let s = a_map(&field_nd(&f)).unwrap();
        assert_eq!(s.phi_map(), &[1, 0, 2]);
        assert_eq!(s.phi(UNIT), ZERO);
    }

    #[test]
    fn f_l_map_with_identity_l_is_reversed_subtraction() {
        let (f, s) = gf(3);
        let d = f_l_map(&s, &[1, 2]).unwrap();
        for x in 0..3 {
            for y in 1..3 {
                assert_eq!(d.add(x, y), f.sub(y, x));
            }
        }
        let (r, _) = validate_near_domain(&d);
        assert!(r.holds("A1") && r.holds("A2") && r.holds("A3"));
    }

    #[test]
    fn f_l_map_with_negation_recovers_field_addition() {
        let (f, s) = gf(3);
        let d = f_l_map(&s, &[2, 1]).unwrap();
        assert_eq!(d, field_nd(&f));
    }

    #[test]
    fn zero_plus_y_is_y() {
        let (_, s) = gf(5);
        for l in bijections(5) {
            let d = f_l_map(&s, &l).unwrap();
            for y in 1..5 {
                assert_eq!(d.add(ZERO, y), y);
            }
        }
    }

    #[test]
    fn f_l_map_rejects_non_bijection() {
        let (_, s) = gf(3);
        assert!(matches!(f_l_map(&s, &[1, 1]), Err(Error::Structure { .. })));
        assert!(matches!(f_l_map(&s, &[0, 1]), Err(Error::Structure { .. })));
    }

    #[test]
    fn a_map_rejects_invalid_input() {
        let (f, _) = gf(3);
        let d = field_nd(&f);
        let mut add = d.add_rows();
        add[0][0] = 2;
        let bad =
            NearDomain::new(d.group().clone(), add, d.sub_rows(), d.l_map().to_vec()).unwrap();
        assert!(matches!(a_map(&bad), Err(Error::Invalid(_))));
    }

    #[test]
    fn iso_with_itself_is_identity() {
        let (_, s) = gf(5);
        let w = iso_check_phi(&s, &s).unwrap();
        assert_eq!(w.map, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.kind, IsoKind::PhiSystemIso);
        let (_, s3) = gf(3);
        assert_eq!(iso_check_phi(&s3, &s3).unwrap().map, vec![0, 1, 2]);
    }

    #[test]
    fn iso_finds_relabeling() {
        let (_, s) = gf(5);
        let sigma = vec![0, 1, 4, 2, 3];
        let t = s.relabel(&sigma).unwrap();
        assert!(validate_phi(&t).passed());
        let w = iso_check_phi(&s, &t).unwrap();
        assert_eq!(w.map, sigma);
    }

    #[test]
    fn non_isomorphic_groups_are_rejected() {
        let (_, s4) = gf(4);
        let (_, s5) = gf(5);
        assert!(iso_check_phi(&s4, &s5).is_none());
        let klein = PhiSystem::new(
            crate::algebra::GroupTable::klein_four(),
            s5.phi_map().to_vec(),
        )
        .unwrap();
        assert!(iso_check_phi(&s5, &klein).is_none());
    }

    #[test]
    fn near_domain_iso() {
        let (f, _) = gf(5);
        let d = field_nd(&f);
        let moved = d.relabel(&[0, 1, 3, 4, 2]).unwrap();
        let w = iso_check_near_domain(&d, &moved).unwrap();
        assert_eq!(w.map, vec![0, 1, 3, 4, 2]);
        assert_eq!(w.kind, IsoKind::NearDomainIso);
    }

    #[test]
    fn gf3_round_trips() {
        let (f, s) = gf(3);
        let r = roundtrip_theorem1_phi(&s);
        assert!(r.passed(), "{r}");
        assert_eq!(r.get("F_L_valid").unwrap().cells, 2);

        let d = field_nd(&f);
        let r = roundtrip_theorem1_near_domain(&d).unwrap();
        assert!(r.passed(), "{r}");
        let s = a_map(&d).unwrap();
        let other = f_l_map(&s, &[1, 2]).unwrap();
        assert_ne!(other.add_rows(), d.add_rows());
    }
}
