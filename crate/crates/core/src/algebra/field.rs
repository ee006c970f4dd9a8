use crate::algebra::GroupTable;
use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// Pinned irreducible moduli for `GF(p^k)`, `k > 1`, `p^k <= 64`.
///
/// Coefficients are listed from the constant term up and every modulus is
/// monic. Elements of `GF(p^k)` are encoded as integers `Σ c_i p^i`, so `0` and
/// `1` are the field zero and one.
pub const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),             // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),          // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0, 1]),       // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0, 1]),    // x^5 + x^2 + 1
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]), // x^6 + x + 1
    (3, 2, &[1, 0, 1]),             // x^2 + 1
    (3, 3, &[1, 2, 0, 1]),          // x^3 + 2x + 1
    (5, 2, &[2, 0, 1]),             // x^2 + 2
    (7, 2, &[1, 0, 1]),             // x^2 + 1
];

const MAX_ORDER: usize = 64;

pub fn modulus_for(p: u32, k: u32) -> Option<&'static [u32]> {
    MODULI
        .iter()
        .find(|&&(mp, mk, _)| mp == p && mk == k)
        .map(|&(_, _, m)| m)
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// `GF(p^k)` with precomputed operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    k: u32,
    q: usize,
    modulus: Vec<u32>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
}

impl Field {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        let err = |reason: String| Error::Field { p, k, reason };
        if !is_prime(p) {
            return Err(err(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(err("degree must be positive".into()));
        }
        let q = (p as usize)
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| err(format!("order exceeds the table limit {MAX_ORDER}")))?;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            modulus_for(p, k)
                .ok_or_else(|| err("no irreducible modulus is configured".into()))?
                .to_vec()
        };

        let digits = |mut v: usize| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let d = (v % p as usize) as u32;
                    v /= p as usize;
                    d
                })
                .collect()
        };
        let encode = |c: &[u32]| -> usize {
            c.iter()
                .rev()
                .fold(0, |acc, &d| acc * p as usize + d as usize)
        };

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);
                mul[a * q + b] = encode(&poly_mulmod(&da, &db, &modulus, p));
            }
        }
        let neg = (0..q)
            .map(|a| {
                (0..q)
                    .find(|&b| add[a * q + b] == 0)
                    .expect("additive inverse")
            })
            .collect();
        let mut inv = vec![0; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .ok_or_else(|| err(format!("element {a} has no inverse; modulus is reducible")))?;
        }
        Ok(Field {
            p,
            k,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    /// `GF(q)` for a prime power `q`.
    pub fn of_order(q: usize) -> Result<Self> {
        let q32 = u32::try_from(q).map_err(|_| Error::Domain(format!("q = {q} too large")))?;
        for p in 2..=q32 {
            if q32 % p == 0 {
                let mut k = 0;
                let mut rest = q32;
                while rest % p == 0 {
                    rest /= p;
                    k += 1;
                }
                if rest != 1 {
                    break;
                }
                return Field::new(p, k);
            }
        }
        Err(Error::Domain(format!("{q} is not a prime power")))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.q
    }

    /// Monic modulus coefficients from the constant term up (`[0, 1]` for a
    /// prime field).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// Multiplicative inverse; `None` at zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a])
    }

    pub fn div(&self, a: usize, b: usize) -> Option<usize> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    pub fn pow(&self, a: usize, e: u32) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// The integer `m` reduced into the prime subfield.
    pub fn from_int(&self, m: i64) -> usize {
        m.rem_euclid(self.p as i64) as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.q
    }

    /// The multiplicative group `GF(q) ∖ {0}` on carrier indices equal to the
    /// field encodings, so field `0` is index 0 and field `1` is index 1.
    pub fn mul_group(&self) -> GroupTable {
        GroupTable::from_fn(self.q, |x, y| self.mul(x, y)).expect("field multiplication is a group")
    }

    /// Exhaustive check of the field axioms.
    pub fn check_axioms(&self) -> Report {
        let q = self.q;
        let mut r = Report::new(format!("GF({}^{})", self.p, self.k));
        let triples = || itertools::iproduct!(0..q, 0..q, 0..q).map(|(a, b, c)| vec![a, b, c]);
        let pairs = || itertools::iproduct!(0..q, 0..q).map(|(a, b)| vec![a, b]);
        r.push(Check::scan("add_associative", triples(), |c| {
            let (a, b, d) = (c[0], c[1], c[2]);
            (self.add(self.add(a, b), d) != self.add(a, self.add(b, d))).then(String::new)
        }));
        r.push(Check::scan("mul_associative", triples(), |c| {
            let (a, b, d) = (c[0], c[1], c[2]);
            (self.mul(self.mul(a, b), d) != self.mul(a, self.mul(b, d))).then(String::new)
        }));
        r.push(Check::scan("distributive", triples(), |c| {
            let (a, b, d) = (c[0], c[1], c[2]);
            (self.mul(a, self.add(b, d)) != self.add(self.mul(a, b), self.mul(a, d)))
                .then(String::new)
        }));
        r.push(Check::scan("commutative", pairs(), |c| {
            let (a, b) = (c[0], c[1]);
            (self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a)).then(String::new)
        }));
        r.push(Check::scan("identities", (0..q).map(|a| vec![a]), |c| {
            let a = c[0];
            (self.add(a, 0) != a || self.mul(a, 1) != a || self.add(a, self.neg(a)) != 0)
                .then(String::new)
        }));
        r.push(Check::scan("inverses", (1..q).map(|a| vec![a]), |c| {
            (self.mul(c[0], self.inv[c[0]]) != 1).then(String::new)
        }));
        r
    }
}

/// Product of two polynomials over `GF(p)` reduced by a monic modulus.
fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..prod.len()).rev() {
        let lead = prod[deg];
        if lead == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + p * p - lead * m % p) % p;
        }
    }
    prod.truncate(k);
    prod
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_group;

    #[test]
    fn gf3_one_plus_two_is_zero() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.add(1, 2), 0);
    }

    #[test]
    fn gf4_x_squared_is_x_plus_one() {
        // x is encoded as 2, x + 1 as 3
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 1), 3);
    }

    #[test]
    fn gf5_inverse_of_two() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn gf9_modulus_is_x2_plus_1() {
        let f = Field::new(3, 2).unwrap();
        // x = 3, x^2 = -1 = 2
        assert_eq!(f.mul(3, 3), 2);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::new(4, 1), Err(Error::Field { .. })));
        assert!(matches!(Field::new(1, 1), Err(Error::Field { .. })));
        assert!(matches!(Field::new(11, 2), Err(Error::Field { .. })));
        assert!(matches!(Field::new(3, 4), Err(Error::Field { .. })));
        assert!(Field::of_order(6).is_err());
        assert_eq!(Field::of_order(8).unwrap().degree(), 3);
    }

    #[test]
    fn every_pinned_field_satisfies_the_axioms() {
        for &(p, k, _) in MODULI {
            let f = Field::new(p, k).unwrap();
            let r = f.check_axioms();
            assert!(r.passed(), "{r}");
        }
        for p in [2, 3, 5, 7, 11, 13] {
            assert!(Field::new(p, 1).unwrap().check_axioms().passed());
        }
    }

    #[test]
    fn multiplicative_groups() {
        let g3 = Field::new(3, 1).unwrap().mul_group();
        assert_eq!(g3.mul_rows(), vec![vec![1, 2], vec![2, 1]]);

        let f5 = Field::new(5, 1).unwrap();
        let g5 = f5.mul_group();
        assert!(validate_group(&g5).passed());
        // 2 generates: powers of 2 mod 5
        let mut x = 1;
        let mut seen = Vec::new();
        for _ in 0..4 {
            x = g5.mul(x, 2);
            seen.push(x);
        }
        assert_eq!(seen, vec![2, 4, 3, 1]);

        let g4 = Field::new(2, 2).unwrap().mul_group();
        assert!(validate_group(&g4).passed());
        // C3: every non-unit has order 3
        for x in 2..4 {
            assert_ne!(g4.mul(x, x), 1);
            assert_eq!(g4.mul(g4.mul(x, x), x), 1);
        }
    }
}
