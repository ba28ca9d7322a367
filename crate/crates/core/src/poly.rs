//! Sparse multivariate polynomials over a prime field.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::ring::Ring;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// A polynomial with terms held in descending order of the ring's term
/// order. No zero coefficients are ever stored; the zero polynomial has an
/// empty term list. Values are immutable once built.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, FieldElement)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    /// Normalizing constructor: merges duplicate monomials, drops zeros,
    /// sorts descending in the ring's order.
    pub fn from_terms(ring: Ring, terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        let field = *ring.field();
        let mut terms: Vec<(Monomial, FieldElement)> = {
            let mut acc: HashMap<Monomial, FieldElement> = HashMap::with_capacity(terms.len());
            for (m, c) in terms {
                debug_assert_eq!(m.nvars(), ring.nvars());
                let e = acc.entry(m).or_insert(FieldElement::ZERO);
                *e = field.add(*e, c);
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        let order = ring.order().clone();
        terms.sort_unstable_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial { ring, terms }
    }

    /// Fast path for term lists already normalized and sorted descending
    /// under the ring's own order.
    pub(crate) fn from_sorted_terms(ring: Ring, terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == FieldElement::ONE
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn constant_value(&self) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(FieldElement::ZERO),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    /// True when no term is divisible by `var`.
    pub fn free_of(&self, var: usize) -> bool {
        self.terms.iter().all(|(m, _)| m.exponent(var) == 0)
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        self.ring == other.ring
    }

    fn assert_ring(&self, other: &Polynomial) {
        assert!(self.same_ring(other), "operands belong to different rings");
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_ring(other) {
            return Err(Error::RingMismatch);
        }
        Ok(self.add(other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if !self.same_ring(other) {
            return Err(Error::RingMismatch);
        }
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_ring(other);
        let field = *self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.compare(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(self.terms[i].1, other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial::from_sorted_terms(self.ring.clone(), out)
    }

    pub fn neg(&self) -> Polynomial {
        let field = *self.ring.field();
        Polynomial::from_sorted_terms(
            self.ring.clone(),
            self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect(),
        )
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        let field = *self.ring.field();
        let c = field.from_u64(c.value());
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial::from_sorted_terms(
            self.ring.clone(),
            self.terms.iter().map(|(m, k)| (m.clone(), field.mul(*k, c))).collect(),
        )
    }

    /// Multiplication by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Polynomial {
        let field = *self.ring.field();
        if c.is_zero() {
            return self.ring.zero();
        }
        // Multiplying all terms by one monomial preserves the sort order.
        Polynomial::from_sorted_terms(
            self.ring.clone(),
            self.terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), field.mul(*k, c)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_ring(other);
        let field = *self.ring.field();
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, *c);
        }
        let mut acc: HashMap<Monomial, FieldElement> =
            HashMap::with_capacity(small.terms.len() * large.terms.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = field.mul(*ca, *cb);
                let e = acc.entry(m).or_insert(FieldElement::ZERO);
                *e = field.add(*e, c);
            }
        }
        Polynomial::from_terms(
            self.ring.clone(),
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        )
    }

    pub fn pow(&self, e: u64) -> Polynomial {
        self.checked_pow(e, u64::MAX).expect("term budget unreachable")
    }

    /// Square-and-multiply powering with a cap on intermediate term counts.
    pub fn checked_pow(&self, mut e: u64, term_budget: u64) -> Result<Polynomial> {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
            if acc.num_terms() as u64 > term_budget || base.num_terms() as u64 > term_budget {
                return Err(Error::PowTermBudgetExceeded(term_budget));
            }
        }
        Ok(acc)
    }

    /// The p-th power, computed term-wise: over `F_p` raising to the p-th
    /// power fixes coefficients and multiplies exponents by p.
    pub fn frobenius_pow(&self) -> Result<Polynomial> {
        let p = self.ring.modulus();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.checked_pow(p)?, *c));
        }
        // x -> x^p is strictly monotone for any multiplicative order.
        Ok(Polynomial::from_sorted_terms(self.ring.clone(), terms))
    }

    /// Sum of the terms of maximal degree in `var`; zero maps to zero.
    pub fn initial_form(&self, var: usize) -> Polynomial {
        let d = self.degree_in(var);
        Polynomial::from_sorted_terms(
            self.ring.clone(),
            self.terms
                .iter()
                .filter(|(m, _)| m.exponent(var) == d)
                .cloned()
                .collect(),
        )
    }

    /// The greatest term under `order`.
    pub fn leading_term(&self, order: &TermOrder) -> Result<(Monomial, FieldElement)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if order == self.ring.order() {
            return Ok(self.terms[0].clone());
        }
        Ok(self
            .terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .cloned()
            .unwrap())
    }

    /// Divides by a single term, erroring when any term is not divisible.
    pub fn div_term_exact(&self, m: &Monomial, c: FieldElement) -> Result<Polynomial> {
        let field = *self.ring.field();
        let cinv = field.inv(c);
        let mut out = Vec::with_capacity(self.terms.len());
        for (mm, k) in &self.terms {
            if !m.divides(mm) {
                return Err(Error::ExactDivisionFailure(format!(
                    "term {} not divisible",
                    display_monomial(&self.ring, mm)
                )));
            }
            out.push((mm.div(m), field.mul(*k, cinv)));
        }
        Ok(Polynomial::from_sorted_terms(self.ring.clone(), out))
    }

    /// Exact polynomial division `self / divisor`; errors when the divisor
    /// does not divide exactly. Verified by re-multiplication.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.assert_ring(divisor);
        if divisor.is_zero() {
            return Err(Error::ExactDivisionFailure("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(self.ring.zero());
        }
        let order = self.ring.order().clone();
        let field = *self.ring.field();
        let (dm, dc) = divisor.terms[0].clone();
        let dcinv = field.inv(dc);
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, FieldElement)> = Vec::new();
        while !rem.is_zero() {
            let (lm, lc) = rem.terms[0].clone();
            if !dm.divides(&lm) {
                return Err(Error::ExactDivisionFailure(
                    "leading term not divisible".into(),
                ));
            }
            let qm = lm.div(&dm);
            let qc = field.mul(lc, dcinv);
            quot.push((qm.clone(), qc));
            rem = rem.sub(&divisor.mul_term(&qm, qc));
        }
        let q = Polynomial::from_terms(self.ring.clone(), quot);
        if q.mul(divisor) != *self {
            return Err(Error::ExactDivisionFailure("re-multiplication mismatch".into()));
        }
        let _ = order;
        Ok(q)
    }

    /// Monic rescaling (leading coefficient under the ring order becomes 1).
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.terms[0].1;
        if lc == FieldElement::ONE {
            self.clone()
        } else {
            self.scale(self.ring.field().inv(lc))
        }
    }

    /// Indices of variables occurring in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for v in m.support() {
                seen[v] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
    }

    /// Transplants the polynomial into `target` using `var_map` (source
    /// variable -> target slot, `None` = dropped). Errors when a dropped
    /// variable occurs.
    pub fn map_ring(&self, target: &Ring, var_map: &[Option<usize>]) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            match m.map_vars(target.nvars(), var_map) {
                Some(mm) => terms.push((mm, *c)),
                None => {
                    let v = m
                        .support()
                        .find(|&v| var_map[v].is_none())
                        .expect("offending variable");
                    return Err(Error::VariableOccurs(self.ring.var_name(v).to_string()));
                }
            }
        }
        Ok(Polynomial::from_terms(target.clone(), terms))
    }

    /// Evaluates the polynomial with each variable replaced by the given
    /// polynomial (all images in one common ring).
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(images.len(), self.ring.nvars());
        let target = match images.first() {
            Some(f) => f.ring().clone(),
            None => self.ring.clone(),
        };
        if images.iter().any(|f| f.ring() != &target) {
            return Err(Error::RingMismatch);
        }
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(*c);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[v].pow(e as u64));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

fn display_monomial(ring: &Ring, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (v, &e) in m.exponents().iter().enumerate() {
        if e == 1 {
            parts.push(ring.var_name(v).to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", ring.var_name(v), e));
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    /// Canonical form: terms descending in the ring order, coefficients as
    /// residues in `[1, p-1]`, explicit `*` and `^`. Parsing the output
    /// reproduces the polynomial exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", c.value())?;
            } else if c.value() == 1 {
                write!(f, "{}", display_monomial(&self.ring, m))?;
            } else {
                write!(f, "{}*{}", c.value(), display_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}
