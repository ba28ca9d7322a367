//! Prime-field arithmetic with a context-carried modulus.

use crate::error::{Error, Result};

/// A residue in `[0, p-1]`. The modulus lives in the enclosing
/// [`PrimeField`] (usually reached through a ring), not in the element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Arithmetic context for `F_p`. Supported range: `2 <= p <= 2^31`,
/// so products of reduced residues fit in `u64` without widening.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<PrimeField> {
        if !(2..=1 << 31).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary signed integer to a residue.
    pub fn from_i64(&self, n: i64) -> FieldElement {
        let p = self.p as i64;
        FieldElement(n.rem_euclid(p) as u64)
    }

    pub fn from_u64(&self, n: u64) -> FieldElement {
        FieldElement(n % self.p)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 * b.0 % self.p)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero (callers guard).
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "inverse of zero in F_{}", self.p);
        // Fermat: a^(p-2).
        self.pow(a, self.p - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        assert_eq!(PrimeField::new(4), Err(Error::NonPrimeModulus(4)));
        assert_eq!(PrimeField::new(1), Err(Error::ModulusOutOfRange(1)));
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(2147483647).is_ok()); // 2^31 - 1
    }

    #[test]
    fn inverse_exists_for_all_nonzero() {
        let f = PrimeField::new(13).unwrap();
        for a in 1..13 {
            let a = FieldElement(a);
            assert_eq!(f.mul(a, f.inv(a)), FieldElement::ONE);
        }
    }

    #[test]
    fn signed_reduction() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.from_i64(-1), FieldElement(4));
        assert_eq!(f.from_i64(-10), FieldElement(0));
        assert_eq!(f.from_i64(7), FieldElement(2));
    }
}
