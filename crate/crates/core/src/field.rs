//! Small finite fields GF(q) with table-driven arithmetic.
//!
//! Elements are plain `u8` indices into a canonical table. An element of
//! GF(p^k) is the polynomial `c0 + c1 x + ... + c(k-1) x^(k-1)` over GF(p),
//! stored as the base-`p` number `c0 + c1 p + ... `. Index 0 is the additive
//! identity and index 1 the multiplicative identity.

use std::fmt;

use thiserror::Error;

/// Element of a [`Field`], identified by its index in the canonical table.
pub type Elem = u8;

/// Cardinalities accepted by [`Field::new`].
pub const SUPPORTED_ORDERS: [usize; 12] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("unsupported field cardinality {0}; choose one of {SUPPORTED_ORDERS:?}")]
    UnsupportedCardinality(usize),
}

/// Fixed modulus for each prime-power order, lowest coefficient first,
/// monic leading coefficient included.
fn modulus(q: usize) -> Option<(usize, &'static [u8])> {
    Some(match q {
        2 | 3 | 5 | 7 | 11 | 13 => (q, &[0, 1]),
        // x^2 + x + 1
        4 => (2, &[1, 1, 1]),
        // x^3 + x + 1
        8 => (2, &[1, 1, 0, 1]),
        // x^4 + x + 1
        16 => (2, &[1, 1, 0, 0, 1]),
        // x^2 + 1
        9 => (3, &[1, 0, 1]),
        // x^3 + 2x + 1
        27 => (3, &[1, 2, 0, 1]),
        // x^2 + 2
        25 => (5, &[2, 0, 1]),
        _ => return None,
    })
}

#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    q: usize,
    p: usize,
    k: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl Field {
    pub fn new(q: usize) -> Result<Self, FieldError> {
        let (p, modulus) = modulus(q).ok_or(FieldError::UnsupportedCardinality(q))?;
        let k = modulus.len() - 1;

        let digits = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let pack = |ds: &[usize]| -> Elem { ds.iter().rev().fold(0, |acc, &d| acc * p + d) as Elem };

        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = pack(&sum);

                // schoolbook product, then reduce from the top degree down
                let mut prod = vec![0usize; 2 * k - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (k..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    for (i, &m) in modulus.iter().enumerate() {
                        let at = deg - k + i;
                        prod[at] = (prod[at] + (p - c) * m as usize) % p;
                    }
                }
                mul[a * q + b] = pack(&prod[..k]);
            }
        }

        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Elem).collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * q + b] == 1).expect("modulus is irreducible") as Elem
                }
            })
            .collect();

        Ok(Field { q, p, k, add, mul, neg, inv })
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    /// Extension degree `k` with `q = p^k`.
    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|e| e as Elem)
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_arithmetic() {
        let f = Field::new(3).unwrap();
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.inv(2), Some(2));
        assert_eq!(f.inv(0), None);
        assert_eq!((f.characteristic(), f.degree()), (3, 1));
    }

    #[test]
    fn gf2_unit() {
        let f = Field::new(2).unwrap();
        assert_eq!(f.mul(1, 1), 1);
        assert_eq!(f.add(1, 1), 0);
    }

    #[test]
    fn unsupported_orders_rejected() {
        for q in [0, 1, 6, 10, 12, 32, 49] {
            assert_eq!(Field::new(q), Err(FieldError::UnsupportedCardinality(q)));
        }
    }

    #[test]
    fn construction_is_deterministic() {
        for q in SUPPORTED_ORDERS {
            assert_eq!(Field::new(q).unwrap(), Field::new(q).unwrap());
        }
    }

    #[test]
    fn sub_inverts_add() {
        let f = Field::new(9).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.sub(f.add(a, b), b), a);
            }
        }
    }
}
