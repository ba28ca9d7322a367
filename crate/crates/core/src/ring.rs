//! Polynomial ring descriptors.

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
struct RingInner {
    field: PrimeField,
    vars: Vec<String>,
    var_index: HashMap<String, usize>,
    order: TermOrder,
}

/// `F_p[x_1, ..., x_n]` with a distinguished term order. Cheap to clone;
/// immutable after construction.
#[derive(Debug, Clone)]
pub struct Ring {
    inner: Arc<RingInner>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.vars == other.inner.vars
                && self.inner.order == other.inner.order)
    }
}
impl Eq for Ring {}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn with_order<S: AsRef<str>>(p: u64, vars: &[S], order: TermOrder) -> Result<Ring> {
        let field = PrimeField::new(p)?;
        let mut var_index = HashMap::new();
        let mut names = Vec::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            let name = v.as_ref().to_string();
            if !valid_name(&name) {
                return Err(Error::InvalidVariableName(name));
            }
            if var_index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name));
            }
            names.push(name);
        }
        if !order.is_valid_for(names.len()) {
            return Err(Error::Invalid("term order does not fit the variable count".into()));
        }
        Ok(Ring { inner: Arc::new(RingInner { field, vars: names, var_index, order }) })
    }

    /// Lexicographic order, first variable largest.
    pub fn lex<S: AsRef<str>>(p: u64, vars: &[S]) -> Result<Ring> {
        let n = vars.len();
        Self::with_order(p, vars, TermOrder::lex(n))
    }

    /// Graded reverse lexicographic order, first variable largest.
    pub fn grevlex<S: AsRef<str>>(p: u64, vars: &[S]) -> Result<Ring> {
        let n = vars.len();
        Self::with_order(p, vars, TermOrder::grevlex(n))
    }

    pub fn field(&self) -> &PrimeField {
        &self.inner.field
    }

    pub fn modulus(&self) -> u64 {
        self.inner.field.modulus()
    }

    pub fn nvars(&self) -> usize {
        self.inner.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.inner.vars
    }

    pub fn order(&self) -> &TermOrder {
        &self.inner.order
    }

    /// The order used for cached canonical bases and ideal equality:
    /// graded reverse lexicographic over the declared variable sequence.
    pub fn canonical_order(&self) -> TermOrder {
        TermOrder::grevlex(self.nvars())
    }

    pub fn var(&self, name: &str) -> Result<usize> {
        self.inner
            .var_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn var_name(&self, index: usize) -> &str {
        &self.inner.vars[index]
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::from_terms(self.clone(), Vec::new())
    }

    pub fn one(&self) -> Polynomial {
        self.constant(FieldElement::ONE)
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            self.zero()
        } else {
            Polynomial::from_terms(self.clone(), vec![(Monomial::one(self.nvars()), c)])
        }
    }

    pub fn constant_i64(&self, n: i64) -> Polynomial {
        self.constant(self.field().from_i64(n))
    }

    pub fn var_poly(&self, index: usize) -> Polynomial {
        Polynomial::from_terms(
            self.clone(),
            vec![(Monomial::var(self.nvars(), index), FieldElement::ONE)],
        )
    }

    pub fn var_poly_named(&self, name: &str) -> Result<Polynomial> {
        Ok(self.var_poly(self.var(name)?))
    }

    pub fn monomial(&self, exps: &[u16]) -> Polynomial {
        assert_eq!(exps.len(), self.nvars());
        Polynomial::from_terms(
            self.clone(),
            vec![(Monomial::from_exponents(exps), FieldElement::ONE)],
        )
    }

    /// Product of all the variables.
    pub fn product_of_variables(&self) -> Polynomial {
        self.monomial(&vec![1u16; self.nvars()])
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(self, text).map_err(|e| Error::Invalid(e.to_string()))
    }

    /// Extends the ring by fresh variables appended as the least ones.
    /// Returns the new ring and the source-to-target variable map.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<(Ring, Vec<Option<usize>>)> {
        let mut vars: Vec<String> = self.inner.vars.clone();
        for v in extra {
            vars.push(v.as_ref().to_string());
        }
        let var_map: Vec<Option<usize>> = (0..self.nvars()).map(Some).collect();
        let order = self.inner.order.map_vars(
            &(0..self.nvars()).map(Some).collect::<Vec<_>>(),
        );
        // Appended variables rank below the existing ones in the carried order.
        let order = match order {
            TermOrder::Lex { mut priority } => {
                priority.extend(self.nvars()..vars.len());
                TermOrder::Lex { priority }
            }
            TermOrder::Grevlex { mut priority } => {
                priority.extend(self.nvars()..vars.len());
                TermOrder::Grevlex { priority }
            }
            other => {
                // Composite orders are call-site specific; fall back to
                // grevlex on the extended ring.
                let _ = other;
                TermOrder::grevlex(vars.len())
            }
        };
        let ring = Ring::with_order(self.modulus(), &vars, order)?;
        Ok((ring, var_map))
    }

    /// Picks a variable name not already used, based on `stem`.
    pub fn fresh_var_name(&self, stem: &str) -> String {
        if !self.inner.var_index.contains_key(stem) {
            return stem.to_string();
        }
        for i in 0.. {
            let cand = format!("{stem}_{i}");
            if !self.inner.var_index.contains_key(&cand) {
                return cand;
            }
        }
        unreachable!()
    }

    /// Drops one variable, keeping the relative order of the rest.
    /// Returns the contracted ring and the source-to-target variable map.
    pub fn without_var(&self, var: usize) -> Result<(Ring, Vec<Option<usize>>)> {
        let mut vars = Vec::with_capacity(self.nvars() - 1);
        let mut var_map = Vec::with_capacity(self.nvars());
        for (i, name) in self.inner.vars.iter().enumerate() {
            if i == var {
                var_map.push(None);
            } else {
                var_map.push(Some(vars.len()));
                vars.push(name.clone());
            }
        }
        let order = self.inner.order.map_vars(&var_map);
        let order = if order.is_valid_for(vars.len()) {
            order
        } else {
            TermOrder::grevlex(vars.len())
        };
        let ring = Ring::with_order(self.modulus(), &vars, order)?;
        Ok((ring, var_map))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.modulus(), self.inner.vars.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(Ring::lex(2, &["x", "x"]), Err(Error::DuplicateVariable(_))));
        assert!(matches!(Ring::lex(2, &["1x"]), Err(Error::InvalidVariableName(_))));
        assert!(matches!(Ring::lex(9, &["x"]), Err(Error::NonPrimeModulus(9))));
    }

    #[test]
    fn extend_and_contract() {
        let r = Ring::lex(3, &["x", "y"]).unwrap();
        let (ext, map) = r.extend(&["t"]).unwrap();
        assert_eq!(ext.nvars(), 3);
        assert_eq!(map, vec![Some(0), Some(1)]);
        let (back, map2) = ext.without_var(2).unwrap();
        assert_eq!(back.variables(), r.variables());
        assert_eq!(map2, vec![Some(0), Some(1), None]);
    }
}
