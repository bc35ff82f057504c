//! Prime fields `F_p` with exact arithmetic.
//!
//! The field is a small copyable context object; matrices and subspaces store
//! raw residues (`u64` values in `0..p`) next to their field. [`Scalar`] wraps
//! a residue together with its field for use at API boundaries and in tests.

use crate::error::{Error, Result};

/// The field `F_p` for a prime `2 <= p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1u64 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn reduce_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // Extended Euclid on (a, p).
        let (mut t, mut new_t): (i64, i64) = (0, 1);
        let (mut r, mut new_r): (i64, i64) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        t.rem_euclid(self.p as i64) as u64
    }

    /// All residues `0..p`.
    pub fn elements(self) -> impl Iterator<Item = u64> {
        0..self.p
    }

    pub fn scalar(self, value: i64) -> Scalar {
        Scalar {
            value: self.reduce_i64(value),
            field: self,
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue together with its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u64,
    field: PrimeField,
}

impl Scalar {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn inv(self) -> Scalar {
        Scalar {
            value: self.field.inv(self.value),
            field: self.field,
        }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.field, rhs.field, "mixed fields");
        Scalar {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.field, rhs.field, "mixed fields");
        Scalar {
            value: self.field.sub(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.field, rhs.field, "mixed fields");
        Scalar {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(2147483647).is_ok()); // 2^31 - 1 is prime
        assert!(PrimeField::new(1 << 31).is_err());
    }

    #[test]
    fn field_axioms_small_primes() {
        for p in [2u64, 3, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), (a + b) % p);
                    assert_eq!(f.mul(a, b), (a * b) % p);
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn scalar_ops() {
        let f = PrimeField::new(5).unwrap();
        let a = f.scalar(7); // 2
        let b = f.scalar(-1); // 4
        assert_eq!((a + b).value(), 1);
        assert_eq!((a * b).value(), 3);
        assert_eq!((a - b).value(), 3);
        assert_eq!(b.inv().value(), 4);
    }
}
