//! Ideal-level operations: sums, intersections, quotients, saturation,
//! Frobenius powers, equality, radical membership and dimension.

use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

const SATURATION_ITERATION_CAP: u32 = 256;

/// An ideal given by generators, with an internal cache of reduced Gröbner
/// bases keyed by term order. Equality semantics are mathematical (same
/// ideal), decided through reduced bases under a canonical order.
/// Logically immutable; the cache tolerates concurrent readers and its
/// inserts are idempotent (the basis computation is deterministic).
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Arc<RwLock<HashMap<(TermOrder, bool), Arc<GroebnerBasis>>>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| g.ring() != &ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Arc::new(RwLock::new(HashMap::new())),
        })
    }

    pub fn zero(ring: Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: Ring) -> Ideal {
        let one = ring.one();
        Ideal::new(ring, vec![one]).unwrap()
    }

    /// Parses each generator in `ring`'s variables.
    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let gens = gens
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring.clone(), gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Reduced basis under `order`, memoized.
    pub fn gb(&self, order: &TermOrder) -> Result<Arc<GroebnerBasis>> {
        self.gb_inner(order, false)
    }

    /// Reduced basis with cofactor tracking (opt-in: quadratic memory).
    pub fn gb_with_cofactors(&self, order: &TermOrder) -> Result<Arc<GroebnerBasis>> {
        self.gb_inner(order, true)
    }

    fn gb_inner(&self, order: &TermOrder, cofactors: bool) -> Result<Arc<GroebnerBasis>> {
        let key = (order.clone(), cofactors);
        if let Some(b) = self.cache.read().unwrap().get(&key) {
            return Ok(b.clone());
        }
        let basis = if self.generators.is_empty() {
            // The zero ideal: empty basis; synthesize through a zero
            // generator to keep the ring.
            groebner::buchberger(&[self.ring.zero()], order, cofactors)
        } else {
            groebner::buchberger(&self.generators, order, cofactors)
        }?;
        let basis = Arc::new(basis);
        self.cache
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| basis.clone());
        Ok(basis)
    }

    /// Basis under the canonical comparison order (grevlex over the
    /// declared variable sequence), used for equality and membership.
    pub fn canonical_gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.gb(&self.ring.canonical_order())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.generators.is_empty() || self.canonical_gb()?.is_zero_ideal())
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.generators.is_empty() {
            return Ok(false);
        }
        Ok(self.canonical_gb()?.contains_one())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        groebner::is_member(f, self.canonical_gb()?.as_ref())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        groebner::normal_form(f, self.canonical_gb()?.as_ref())
    }

    /// Mathematical equality via reduced canonical bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.canonical_gb()?.elements() == other.canonical_gb()?.elements())
    }

    /// `I + J`: concatenated generators.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    /// Product ideal, generated by pairwise products.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// `I ∩ J` through one auxiliary variable: eliminate `t` from
    /// `t·I + (1-t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.generators.is_empty() || other.generators.is_empty() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let tname = self.ring.fresh_var_name("t");
        let (ext, var_map) = self.ring.extend(&[tname.as_str()])?;
        let t = ext.var_poly(ext.nvars() - 1);
        let one_minus_t = ext.one().sub(&t);
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(g.map_ring(&ext, &var_map)?.mul(&t));
        }
        for g in &other.generators {
            gens.push(g.map_ring(&ext, &var_map)?.mul(&one_minus_t));
        }
        let keep: Vec<usize> = (0..self.ring.nvars()).collect();
        let elim = groebner::eliminate(&gens, &keep, false)?;
        let back: Vec<Option<usize>> = (0..self.ring.nvars())
            .map(Some)
            .chain(std::iter::once(None))
            .collect();
        let gens = elim
            .iter()
            .map(|g| g.map_ring(&self.ring, &back))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring.clone(), gens)
    }

    /// Colon by a single polynomial: `I : (g)`, computed by intersecting
    /// with `(g)` and dividing each generator by `g`.
    pub fn colon_single(&self, g: &Polynomial) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Ok(Ideal::unit(self.ring.clone()));
        }
        let principal = Ideal::new(self.ring.clone(), vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .generators
            .iter()
            .map(|h| h.div_exact(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring.clone(), gens)
    }

    /// `I : J = ∩_g I : (g)` over the generators of `J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.generators.is_empty() {
            // I : (0) = (1)
            return Ok(Ideal::unit(self.ring.clone()));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let part = self.colon_single(g)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// `I : J^∞` by iterating the colon until it stabilizes.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut current = self.clone();
        for _ in 0..SATURATION_ITERATION_CAP {
            let next = current.quotient(other)?;
            if next.equals(&current)? {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::SaturationDiverged(SATURATION_ITERATION_CAP))
    }

    /// `I : g^∞` for principal `J = (g)` via one auxiliary variable:
    /// eliminate `t` from `I + (1 - t·g)`. Cross-checked against the
    /// iterative route in tests.
    pub fn saturate_principal_rabinowitsch(&self, g: &Polynomial) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Ok(Ideal::unit(self.ring.clone()));
        }
        let tname = self.ring.fresh_var_name("t");
        let (ext, var_map) = self.ring.extend(&[tname.as_str()])?;
        let t = ext.var_poly(ext.nvars() - 1);
        let mut gens = self
            .generators
            .iter()
            .map(|f| f.map_ring(&ext, &var_map))
            .collect::<Result<Vec<_>>>()?;
        gens.push(ext.one().sub(&t.mul(&g.map_ring(&ext, &var_map)?)));
        let keep: Vec<usize> = (0..self.ring.nvars()).collect();
        let elim = groebner::eliminate(&gens, &keep, false)?;
        let back: Vec<Option<usize>> = (0..self.ring.nvars())
            .map(Some)
            .chain(std::iter::once(None))
            .collect();
        let gens = elim
            .iter()
            .map(|g| g.map_ring(&self.ring, &back))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring.clone(), gens)
    }

    /// `I^{[p]}`: the ideal generated by the p-th powers of the generators.
    pub fn frobenius_power(&self) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.frobenius_pow())
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring.clone(), gens)
    }

    /// `f ∈ √I`, decided with the auxiliary-variable trick:
    /// `1 ∈ I + (1 - t·f)`.
    pub fn radical_member(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        if self.contains(f)? {
            return Ok(true);
        }
        let tname = self.ring.fresh_var_name("t");
        let (ext, var_map) = self.ring.extend(&[tname.as_str()])?;
        let t = ext.var_poly(ext.nvars() - 1);
        let mut gens = self
            .generators
            .iter()
            .map(|g| g.map_ring(&ext, &var_map))
            .collect::<Result<Vec<_>>>()?;
        gens.push(ext.one().sub(&t.mul(&f.map_ring(&ext, &var_map)?)));
        let gb = groebner::buchberger(&gens, &ext.canonical_order(), false)?;
        Ok(gb.contains_one())
    }

    /// Krull dimension of `S/I`: the maximum size of a variable subset
    /// meeting the support of no leading monomial of the reduced basis
    /// (the dimension of the initial monomial ideal). Branch-and-bound on
    /// the complementary vertex cover; errors on the unit ideal.
    pub fn dimension(&self) -> Result<u32> {
        let gb = self.canonical_gb()?;
        if gb.contains_one() {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring.nvars();
        let supports: Vec<u64> = (0..gb.elements().len())
            .map(|i| gb.leading_monomial(i).support_mask())
            .collect();
        let cover = min_cover(&supports, n as u32);
        Ok(n as u32 - cover)
    }
}

/// Minimum number of variables hitting every support set.
fn min_cover(supports: &[u64], nvars: u32) -> u32 {
    fn rec(supports: &[u64], covered: u64, used: u32, best: &mut u32) {
        if used >= *best {
            return;
        }
        // first support not yet hit
        let Some(&s) = supports.iter().find(|&&s| s & covered == 0) else {
            *best = used;
            return;
        };
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            rec(supports, covered | (1 << v), used + 1, best);
        }
    }
    let mut best = nvars;
    rec(supports, 0, 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(ring, gens).unwrap()
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = Ring::lex(2, &["x", "y"]).unwrap();
        let i = ideal(&r, &["x"]);
        let j = ideal(&r, &["y"]);
        let meet = i.intersect(&j).unwrap();
        assert!(meet.equals(&ideal(&r, &["x*y"])).unwrap());
    }

    #[test]
    fn monomial_colon() {
        let r = Ring::lex(2, &["x11", "x12", "x21", "x22"]).unwrap();
        let i = ideal(&r, &["x11*x22"]);
        let q = i.colon_single(&r.parse("x22").unwrap()).unwrap();
        assert!(q.equals(&ideal(&r, &["x11"])).unwrap());
    }

    #[test]
    fn saturation_of_initial_ideal_of_minors() {
        // in_{x23}(2-minors of the 2x3 generic matrix) : x23^inf =
        // (x11, x12) together with the deletion part; the link is the
        // column-variable ideal.
        let r = Ring::lex(2, &["x11", "x12", "x13", "x21", "x22", "x23"]).unwrap();
        let iny = ideal(&r, &["x11*x23", "x12*x23", "x11*x22 - x12*x21"]);
        let y = ideal(&r, &["x23"]);
        let sat = iny.saturate(&y).unwrap();
        assert!(sat.equals(&ideal(&r, &["x11", "x12"])).unwrap());
        // Rabinowitsch route agrees
        let sat2 = iny
            .saturate_principal_rabinowitsch(&r.parse("x23").unwrap())
            .unwrap();
        assert!(sat.equals(&sat2).unwrap());
    }

    #[test]
    fn frobenius_power_examples() {
        let r = Ring::lex(2, &["x", "y"]).unwrap();
        let i = ideal(&r, &["x", "y"]);
        assert!(i
            .frobenius_power()
            .unwrap()
            .equals(&ideal(&r, &["x^2", "y^2"]))
            .unwrap());
        let z = Ideal::zero(r.clone());
        assert!(z.frobenius_power().unwrap().is_zero().unwrap());
        let r3 = Ring::lex(3, &["x", "y"]).unwrap();
        let i3 = ideal(&r3, &["x + y"]);
        assert!(i3
            .frobenius_power()
            .unwrap()
            .equals(&ideal(&r3, &["x^3 + y^3"]))
            .unwrap());
    }

    #[test]
    fn equality_and_membership() {
        let r = Ring::lex(5, &["x", "y"]).unwrap();
        assert!(ideal(&r, &["x", "y"]).equals(&ideal(&r, &["y", "x + y"])).unwrap());
        assert!(!ideal(&r, &["x*y"]).contains(&r.parse("x").unwrap()).unwrap());
    }

    #[test]
    fn radical_membership() {
        let r = Ring::lex(3, &["x", "y"]).unwrap();
        let i = ideal(&r, &["x^2"]);
        assert!(i.radical_member(&r.parse("x").unwrap()).unwrap());
        assert!(!i.radical_member(&r.parse("y").unwrap()).unwrap());
        assert!(i.radical_member(&r.zero()).unwrap());
    }

    #[test]
    fn dimension_examples_and_oracle() {
        let r = Ring::lex(2, &["x11", "x12", "x21", "x22"]).unwrap();
        assert_eq!(ideal(&r, &["x11*x22"]).dimension().unwrap(), 3);
        assert_eq!(Ideal::zero(r.clone()).dimension().unwrap(), 4);
        assert!(Ideal::unit(r.clone()).dimension().is_err());

        // randomized agreement with the brute-force all-subsets oracle
        let r = Ring::grevlex(3, &["x", "y", "z", "w"]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let gens: Vec<Polynomial> = (0..rng.gen_range(1..4))
                .map(|_| {
                    let e: Vec<u16> = (0..4).map(|_| rng.gen_range(0..3)).collect();
                    r.monomial(&e)
                })
                .filter(|m: &Polynomial| !m.is_one())
                .collect();
            let i = Ideal::new(r.clone(), gens).unwrap();
            if i.is_unit().unwrap() {
                continue;
            }
            let dim = i.dimension().unwrap();
            // oracle: enumerate every subset of the variables
            let gb = i.canonical_gb().unwrap();
            let supports: Vec<u64> = (0..gb.elements().len())
                .map(|k| gb.leading_monomial(k).support_mask())
                .collect();
            // a subset U is independent when no support is contained in U
            let mut best = 0u32;
            for mask in 0u64..16 {
                let contained = supports.iter().any(|&s| s & !mask == 0);
                if !contained {
                    best = best.max(mask.count_ones());
                }
            }
            assert_eq!(dim, best, "ideal {:?}", i.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn quotient_saturation_containments_randomized() {
        let r = Ring::grevlex(2, &["x", "y", "z"]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let random_ideal = |rng: &mut ChaCha8Rng| {
            let gens: Vec<Polynomial> = (0..rng.gen_range(1..3))
                .map(|_| {
                    let t1: Vec<u16> = (0..3).map(|_| rng.gen_range(0..2)).collect();
                    let t2: Vec<u16> = (0..3).map(|_| rng.gen_range(0..2)).collect();
                    r.monomial(&t1).add(&r.monomial(&t2))
                })
                .collect();
            Ideal::new(r.clone(), gens).unwrap()
        };
        for _ in 0..25 {
            let i = random_ideal(&mut rng);
            let j = random_ideal(&mut rng);
            let q = i.quotient(&j).unwrap();
            // quotient(I, J) * J ⊆ I and I ⊆ quotient(I, J)
            for a in q.generators() {
                for b in j.generators() {
                    assert!(i.contains(&a.mul(b)).unwrap());
                }
            }
            for g in i.generators() {
                assert!(q.contains(g).unwrap());
            }
            // saturation is a fixed point of further quotients
            let s = i.saturate(&j).unwrap();
            assert!(s.quotient(&j).unwrap().equals(&s).unwrap());
            // intersection/sum containments
            let m = i.intersect(&j).unwrap();
            for g in m.generators() {
                assert!(i.contains(g).unwrap() && j.contains(g).unwrap());
            }
            let sum = i.sum(&j).unwrap();
            for g in i.generators().iter().chain(j.generators()) {
                assert!(sum.contains(g).unwrap());
            }
            // Frobenius power members
            for g in i.frobenius_power().unwrap().generators() {
                assert!(i.contains(g).unwrap());
            }
        }
    }
}
