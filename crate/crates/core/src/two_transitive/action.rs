use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::two_transitive::pair::sharply_two_transitive;

/// A permutation group on `{0, .., degree-1}` listed element by element, with a
/// designated base pair `(e₁, e₂)`.
///
/// Permutations act on the right: the product `g·h` applies `g` first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationAction {
    degree: usize,
    perms: Vec<Vec<usize>>,
    base: (usize, usize),
}

fn is_bijection(degree: usize, p: &[usize]) -> bool {
    let mut seen = vec![false; degree];
    p.len() == degree
        && p.iter()
            .all(|&v| v < degree && !std::mem::replace(&mut seen[v], true))
}

impl PermutationAction {
    pub fn new(degree: usize, perms: Vec<Vec<usize>>, base: (usize, usize)) -> Result<Self> {
        if degree < 2 {
            return Err(Error::structure(
                "permutation group",
                "degree must be at least 2",
            ));
        }
        if let Some(i) = perms.iter().position(|p| !is_bijection(degree, p)) {
            return Err(Error::structure(
                "permutation group",
                format!("perms[{i}] is not a bijection of 0..{degree}"),
            ));
        }
        let (e1, e2) = base;
        if e1 == e2 || e1 >= degree || e2 >= degree {
            return Err(Error::structure(
                "permutation group",
                format!("base ({e1}, {e2}) must be two distinct points"),
            ));
        }
        Ok(PermutationAction {
            degree,
            perms,
            base,
        })
    }

    /// Saturates the generators under composition.
    pub fn from_generators(
        degree: usize,
        generators: Vec<Vec<usize>>,
        base: (usize, usize),
    ) -> Result<Self> {
        if let Some(i) = generators.iter().position(|p| !is_bijection(degree, p)) {
            return Err(Error::structure(
                "permutation group",
                format!("generator {i} is not a bijection of 0..{degree}"),
            ));
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
        let mut elements = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for h in &generators {
                let gh = compose(&g, h);
                if seen.insert(gh.clone()) {
                    elements.push(gh.clone());
                    queue.push_back(gh);
                }
            }
        }
        PermutationAction::new(degree, elements, base)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn base(&self) -> (usize, usize) {
        self.base
    }

    pub fn with_base(&self, base: (usize, usize)) -> Result<Self> {
        PermutationAction::new(self.degree, self.perms.clone(), base)
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// Identity, closure, inverses and sharp 2-transitivity.
    pub fn validate(&self) -> Report {
        let n = self.degree;
        let m = self.perms.len();
        let set: HashSet<&[usize]> = self.perms.iter().map(Vec::as_slice).collect();
        let mut report = Report::new(format!("permutation group of order {m} on {n} points"));
        let identity: Vec<usize> = (0..n).collect();

        report.push(if set.len() == m {
            Check::pass("distinct", m)
        } else {
            Check::fail("distinct", vec![m - set.len()], "repeated permutations")
        });
        report.push(if set.contains(identity.as_slice()) {
            Check::pass("identity", 1)
        } else {
            Check::fail("identity", vec![], "identity permutation missing")
        });
        report.push(Check::scan(
            "closure",
            (0..m).flat_map(|i| (0..m).map(move |j| vec![i, j])),
            |c| {
                let gh = compose(&self.perms[c[0]], &self.perms[c[1]]);
                (!set.contains(gh.as_slice())).then(|| "product not in the list".to_string())
            },
        ));
        report.push(Check::scan("inverse", (0..m).map(|i| vec![i]), |c| {
            let inv = invert(&self.perms[c[0]]);
            (!set.contains(inv.as_slice())).then(|| "inverse not in the list".to_string())
        }));
        report.push(sharply_two_transitive(n, m, |i, x| self.perms[i][x]));
        report
    }
}

/// `g` then `h`.
pub(crate) fn compose(g: &[usize], h: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| h[x]).collect()
}

pub(crate) fn invert(g: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; g.len()];
    for (x, &y) in g.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn affine(q: usize) -> Vec<Vec<usize>> {
        let mut perms = Vec::new();
        for a in 1..q {
            for b in 0..q {
                perms.push((0..q).map(|x| (a * x + b) % q).collect());
            }
        }
        perms
    }

    #[test]
    fn affine_group_is_sharply_two_transitive() {
        for q in [3, 5, 7] {
            let p = PermutationAction::new(q, affine(q), (1, 0)).unwrap();
            let r = p.validate();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn generators_saturate_to_the_affine_group() {
        let shift = vec![1, 2, 3, 4, 0];
        let double = vec![0, 2, 4, 1, 3];
        let p = PermutationAction::from_generators(5, vec![shift, double], (1, 0)).unwrap();
        assert_eq!(p.order(), 20);
        assert!(p.validate().passed());
    }

    #[test]
    fn symmetric_group_is_not_sharp() {
        let gens = vec![vec![1, 2, 3, 0], vec![1, 0, 2, 3]];
        let p = PermutationAction::from_generators(4, gens, (1, 0)).unwrap();
        assert_eq!(p.order(), 24);
        let r = p.validate();
        assert!(r.holds("closure"));
        assert!(!r.holds("sharply_2_transitive"));
    }

    #[test]
    fn structural_errors() {
        assert!(PermutationAction::new(3, vec![vec![0, 0, 1]], (1, 0)).is_err());
        assert!(PermutationAction::new(3, vec![vec![0, 1, 2]], (1, 1)).is_err());
        assert!(PermutationAction::new(3, vec![vec![0, 1]], (1, 0)).is_err());
    }

    #[test]
    fn missing_element_fails_closure() {
        let mut perms = affine(3);
        perms.pop();
        let r = PermutationAction::new(3, perms, (1, 0)).unwrap().validate();
        assert!(!r.passed());
    }
}
