use std::ops::Range;

use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// Carrier index of the additive zero.
pub const ZERO: usize = 0;
/// Carrier index of the multiplicative unit `e`.
pub const UNIT: usize = 1;

/// A finite set `B = {0, .., n-1}` with `0` and `e = 1` distinguished.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Carrier {
    n: usize,
}

impl Carrier {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::structure(
                "carrier",
                format!("need n >= 2 so that B1 contains a unit, got n = {n}"),
            ));
        }
        Ok(Carrier { n })
    }

    pub fn size(self) -> usize {
        self.n
    }

    pub fn elements(self) -> Range<usize> {
        0..self.n
    }

    /// `B₁ = B ∖ {0}`.
    pub fn nonzero(self) -> Range<usize> {
        1..self.n
    }

    pub fn contains(self, x: usize) -> bool {
        x < self.n
    }
}

/// A multiplication table on `B₁` together with its inverse map.
///
/// Rows and columns are positioned by `carrier index - 1`, entries are carrier
/// indices in `1..n`. The unit is carrier index [`UNIT`]. A `GroupTable` is
/// only structurally checked on construction; the group axioms are checked by
/// [`validate_group`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupTable {
    carrier: Carrier,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl GroupTable {
    pub fn new(n: usize, mul: Vec<Vec<usize>>, inv: Vec<usize>) -> Result<Self> {
        let carrier = Carrier::new(n)?;
        let m = n - 1;
        if mul.len() != m || mul.iter().any(|row| row.len() != m) {
            return Err(Error::structure(
                "group table",
                format!("mul must be {m}x{m} for n = {n}"),
            ));
        }
        if inv.len() != m {
            return Err(Error::structure(
                "group table",
                format!("inv must have length {m}, got {}", inv.len()),
            ));
        }
        let flat: Vec<usize> = mul.into_iter().flatten().collect();
        for (i, &v) in flat.iter().enumerate() {
            if v == ZERO || v >= n {
                return Err(Error::structure(
                    "group table",
                    format!(
                        "mul[{}][{}] = {v} is not a B1 index (1..{})",
                        i / m,
                        i % m,
                        n - 1
                    ),
                ));
            }
        }
        for (i, &v) in inv.iter().enumerate() {
            if v == ZERO || v >= n {
                return Err(Error::structure(
                    "group table",
                    format!("inv[{i}] = {v} is not a B1 index (1..{})", n - 1),
                ));
            }
        }
        Ok(GroupTable {
            carrier,
            mul: flat,
            inv,
        })
    }

    /// Builds a table from a product on `B₁` and derives inverses from it.
    pub fn from_fn(n: usize, mut product: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let carrier = Carrier::new(n)?;
        let rows: Vec<Vec<usize>> = carrier
            .nonzero()
            .map(|x| carrier.nonzero().map(|y| product(x, y)).collect())
            .collect();
        let mut inv = Vec::with_capacity(n - 1);
        for x in carrier.nonzero() {
            let row = &rows[x - 1];
            match carrier.nonzero().find(|&y| row[y - 1] == UNIT) {
                Some(y) => inv.push(y),
                None => {
                    return Err(Error::structure(
                        "group table",
                        format!("element {x} has no right inverse"),
                    ))
                }
            }
        }
        GroupTable::new(n, rows, inv)
    }

    /// Cyclic group of the given order; carrier index `k + 1` is `g^k`.
    pub fn cyclic(order: usize) -> Result<Self> {
        GroupTable::from_fn(order + 1, |x, y| (x - 1 + y - 1) % order + 1)
    }

    /// `C₂ × C₂` with carrier indices `1 + (a + 2b)` for `(a, b) ∈ {0,1}²`.
    pub fn klein_four() -> Self {
        GroupTable::from_fn(5, |x, y| ((x - 1) ^ (y - 1)) + 1).expect("klein table is well formed")
    }

    /// The symmetric group on three letters, listed in lexicographic order of
    /// the image arrays so that the identity comes first.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = itertools::Itertools::permutations(0..3usize, 3)
            .map(|p| [p[0], p[1], p[2]])
            .collect();
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        GroupTable::from_fn(7, |x, y| {
            let (a, b) = (perms[x - 1], perms[y - 1]);
            // apply a then b
            index([b[a[0]], b[a[1]], b[a[2]]]) + 1
        })
        .expect("S3 table is well formed")
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn n(&self) -> usize {
        self.carrier.n
    }

    pub fn order(&self) -> usize {
        self.carrier.n - 1
    }

    /// Product of two elements of `B₁`.
    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        debug_assert!(x != ZERO && y != ZERO, "group product on B1 only");
        let m = self.order();
        self.mul[(x - 1) * m + (y - 1)]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        debug_assert!(x != ZERO);
        self.inv[x - 1]
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.order())
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn inv_map(&self) -> &[usize] {
        &self.inv
    }

    /// The table transported along a carrier bijection fixing `0` and `e`:
    /// the result satisfies `relabeled.mul(σx, σy) = σ(self.mul(x, y))`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<Self> {
        check_relabeling(self.n(), sigma)?;
        let n = self.n();
        let mut rows = vec![vec![0; n - 1]; n - 1];
        let mut inv = vec![0; n - 1];
        for x in 1..n {
            for y in 1..n {
                rows[sigma[x] - 1][sigma[y] - 1] = sigma[self.mul(x, y)];
            }
            inv[sigma[x] - 1] = sigma[self.inv(x)];
        }
        GroupTable::new(n, rows, inv)
    }
}

pub(crate) fn check_relabeling(n: usize, sigma: &[usize]) -> Result<()> {
    if sigma.len() != n {
        return Err(Error::structure(
            "relabeling",
            format!("length must be {n}"),
        ));
    }
    let mut seen = vec![false; n];
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(Error::structure("relabeling", "not a bijection of B"));
        }
    }
    if sigma[ZERO] != ZERO || sigma[UNIT] != UNIT {
        return Err(Error::structure("relabeling", "must fix 0 and e"));
    }
    Ok(())
}

/// Exhaustively checks the group axioms, reporting the first counterexample
/// for each of unit, inverse, associativity and the Latin-square property.
pub fn validate_group(table: &GroupTable) -> Report {
    let b1 = table.carrier().nonzero();
    let mut report = Report::new(format!("group on B1 (order {})", table.order()));

    report.push(Check::scan("unit", b1.clone().map(|x| vec![x]), |c| {
        let x = c[0];
        let (l, r) = (table.mul(UNIT, x), table.mul(x, UNIT));
        (l != x || r != x).then(|| format!("e*x = {l}, x*e = {r}"))
    }));
    report.push(Check::scan("inverse", b1.clone().map(|x| vec![x]), |c| {
        let x = c[0];
        let y = table.inv(x);
        let (l, r) = (table.mul(y, x), table.mul(x, y));
        (l != UNIT || r != UNIT).then(|| format!("inv = {y}, inv*x = {l}, x*inv = {r}"))
    }));
    report.push(Check::scan("associativity", triples(b1.clone()), |c| {
        let (x, y, z) = (c[0], c[1], c[2]);
        let left = table.mul(table.mul(x, y), z);
        let right = table.mul(x, table.mul(y, z));
        (left != right).then(|| format!("(xy)z = {left}, x(yz) = {right}"))
    }));
    report.push(Check::scan("latin", b1.clone().map(|x| vec![x]), |c| {
        let x = c[0];
        let n = table.n();
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for y in 1..n {
            if std::mem::replace(&mut row[table.mul(x, y)], true) {
                return Some(format!("row {x} repeats {}", table.mul(x, y)));
            }
            if std::mem::replace(&mut col[table.mul(y, x)], true) {
                return Some(format!("column {x} repeats {}", table.mul(y, x)));
            }
        }
        None
    }));
    report
}

fn triples(range: Range<usize>) -> impl Iterator<Item = Vec<usize>> {
    itertools::iproduct!(range.clone(), range.clone(), range).map(|(x, y, z)| vec![x, y, z])
}
