//! Exponent vectors.

use crate::error::{Error, Result};
use smallvec::SmallVec;

/// One exponent vector, one slot per ring variable. Inline storage covers
/// the 27-variable double determinantal instances plus an auxiliary variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u16; 28]>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, index: usize) -> Monomial {
        let mut m = Self::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        Monomial(SmallVec::from_slice(exps))
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.0[var]
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.nvars() <= 64);
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1 << i))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise power; errors instead of wrapping since Frobenius
    /// powers multiply exponents by p.
    pub fn checked_pow(&self, k: u64) -> Result<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for &e in &self.0 {
            let v = (e as u64).checked_mul(k).ok_or(Error::ExponentOverflow)?;
            if v > u16::MAX as u64 {
                return Err(Error::ExponentOverflow);
            }
            out.push(v as u16);
        }
        Ok(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a <= b)
    }

    /// Exact componentwise quotient `self / other`; caller checks divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Remaps exponents into another variable arrangement. `var_map[i]` is the
    /// target slot of source variable `i`, or `None` if the variable is being
    /// dropped (in which case its exponent must be zero).
    pub fn map_vars(&self, target_nvars: usize, var_map: &[Option<usize>]) -> Option<Monomial> {
        let mut out = SmallVec::from_elem(0u16, target_nvars);
        for (i, &e) in self.0.iter().enumerate() {
            match var_map[i] {
                Some(j) => out[j] = e,
                None if e == 0 => {}
                None => return None,
            }
        }
        Some(Monomial(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_lcm_quotient_are_componentwise() {
        let a = Monomial::from_exponents(&[2, 0, 1]);
        let b = Monomial::from_exponents(&[1, 0, 1]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.div(&b), Monomial::from_exponents(&[1, 0, 0]));
        let c = Monomial::from_exponents(&[0, 3, 1]);
        assert_eq!(a.lcm(&c), Monomial::from_exponents(&[2, 3, 1]));
        assert_eq!(a.total_degree(), 3);
    }

    #[test]
    fn checked_pow_overflow() {
        let a = Monomial::from_exponents(&[40000]);
        assert_eq!(a.checked_pow(2), Err(Error::ExponentOverflow));
        assert_eq!(
            a.checked_pow(1).unwrap(),
            Monomial::from_exponents(&[40000])
        );
    }

    #[test]
    fn var_mapping() {
        let a = Monomial::from_exponents(&[1, 0, 2]);
        // Drop middle variable.
        let m = a.map_vars(2, &[Some(0), None, Some(1)]).unwrap();
        assert_eq!(m, Monomial::from_exponents(&[1, 2]));
        // Dropping a used variable fails.
        assert!(a.map_vars(2, &[Some(0), Some(1), None]).is_none());
    }
}
