//! Brute-force oracles written against raw tables only. Nothing here calls
//! the library's validators, so agreement with them is a real cross-check.

#![allow(dead_code)]

use itertools::Itertools;

/// A group on `B₁ = {1..n-1}` as a plain table, `rows[x-1][y-1] = x·y`.
#[derive(Clone)]
pub struct RawGroup {
    pub n: usize,
    pub rows: Vec<Vec<usize>>,
}

impl RawGroup {
    pub fn from_rows(n: usize, rows: Vec<Vec<usize>>) -> Self {
        RawGroup { n, rows }
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.rows[x - 1][y - 1]
    }

    pub fn unit(&self) -> usize {
        (1..self.n)
            .find(|&e| (1..self.n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
            .expect("group has a unit")
    }

    pub fn inv(&self, x: usize) -> usize {
        let e = self.unit();
        (1..self.n)
            .find(|&y| self.mul(x, y) == e)
            .expect("inverse exists")
    }

    pub fn is_group(&self) -> bool {
        let n = self.n;
        let assoc = (1..n)
            .cartesian_product(1..n)
            .cartesian_product(1..n)
            .all(|((x, y), z)| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)));
        let latin = (1..n).all(|x| {
            (1..n).map(|y| self.mul(x, y)).sorted().eq(1..n)
                && (1..n).map(|y| self.mul(y, x)).sorted().eq(1..n)
        });
        assoc && latin && self.unit() == 1
    }
}

/// `a·b` with `b ∈ B₁` and `a ∈ B`; zero is left absorbing.
fn times(g: &RawGroup, a: usize, b: usize) -> usize {
    assert!(b != 0);
    if a == 0 {
        0
    } else {
        g.mul(a, b)
    }
}

/// F1..F4 read straight off the definitions. F4 is only meaningful when both
/// inner right factors are nonzero; a map making either zero is rejected.
pub fn oracle_phi_ok(g: &RawGroup, phi: &[usize]) -> bool {
    let n = g.n;
    if !g.is_group() || phi[1] != 0 {
        return false;
    }
    for x in 0..n {
        for y in 2..n {
            let (py, pyi) = (phi[y], phi[g.inv(y)]);
            if py == 0 || pyi == 0 {
                return false;
            }
            let lhs = phi[times(g, phi[x], py)];
            let inner = phi[times(g, x, pyi)];
            let rhs = times(g, inner, y);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Every map `B → B` passing the oracle, in lexicographic order.
pub fn oracle_survivors(g: &RawGroup) -> Vec<Vec<usize>> {
    let n = g.n;
    (0..n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .filter(|phi| oracle_phi_ok(g, phi))
        .collect()
}

fn is_iso(g: &RawGroup, a: &[usize], b: &[usize], sigma: &[usize]) -> bool {
    let n = g.n;
    (1..n)
        .cartesian_product(1..n)
        .all(|(x, y)| sigma[g.mul(x, y)] == g.mul(sigma[x], sigma[y]))
        && (0..n).all(|x| sigma[a[x]] == b[sigma[x]])
}

/// Survivors sorted into classes under carrier permutations fixing `0` and `1`
/// that are automorphisms of the group and intertwine the two maps.
pub fn oracle_classes(g: &RawGroup, survivors: &[Vec<usize>]) -> usize {
    let n = g.n;
    let sigmas: Vec<Vec<usize>> = (2..n)
        .permutations(n.saturating_sub(2))
        .map(|rest| [vec![0, 1], rest].concat())
        .collect();
    let mut reps: Vec<&Vec<usize>> = Vec::new();
    for s in survivors {
        if !reps
            .iter()
            .any(|r| sigmas.iter().any(|sig| is_iso(g, r, s, sig)))
        {
            reps.push(s);
        }
    }
    reps.len()
}

/// `x + y = φ(x·L(y)⁻¹)·y` from raw tables.
pub fn oracle_add(g: &RawGroup, phi: &[usize], l: &[usize], x: usize, y: usize) -> usize {
    let ly = l[y - 1];
    let inner = phi[times(g, x, g.inv(ly))];
    times(g, inner, y)
}

/// Direct triple check of `(x+y)+z = x+(y+z)` over `x ∈ B`, `y, z ∈ B₁`,
/// wherever `y + z ≠ 0`.
pub fn oracle_associative(g: &RawGroup, phi: &[usize], l: &[usize]) -> bool {
    let n = g.n;
    let add = |x, y| oracle_add(g, phi, l, x, y);
    (0..n)
        .cartesian_product(1..n)
        .cartesian_product(1..n)
        .all(|((x, y), z)| {
            let yz = add(y, z);
            yz == 0 || add(add(x, y), z) == add(x, yz)
        })
}

/// For every ordered pair of distinct points and every target pair, the number
/// of permutations carrying one to the other.
pub fn oracle_sharply_two_transitive(degree: usize, perms: &[Vec<usize>]) -> bool {
    let pairs: Vec<(usize, usize)> = (0..degree)
        .cartesian_product(0..degree)
        .filter(|(a, b)| a != b)
        .collect();
    pairs.iter().all(|&(a, b)| {
        pairs
            .iter()
            .all(|&(c, d)| perms.iter().filter(|p| p[a] == c && p[b] == d).count() == 1)
    })
}

/// Cyclic group of order `m` on `{1..m}`, unit `1`.
pub fn raw_cyclic(m: usize) -> RawGroup {
    let rows = (0..m)
        .map(|i| (0..m).map(|j| 1 + (i + j) % m).collect())
        .collect();
    RawGroup::from_rows(m + 1, rows)
}

/// Klein four-group on `{1..4}`, unit `1`.
pub fn raw_klein() -> RawGroup {
    let rows = (0..4)
        .map(|i| (0..4).map(|j| 1 + (i ^ j)).collect())
        .collect();
    RawGroup::from_rows(5, rows)
}
