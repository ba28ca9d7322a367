//! The trace map, splitting verification, and compatibility checks
//! (membership criterion plus a small brute-force oracle).

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::par;
use crate::poly::Polynomial;
use crate::ring::Ring;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

/// Default cap on intermediate term counts while computing `f^(p-1)`;
/// override with `FROBSPLIT_POW_TERM_BUDGET`.
const DEFAULT_POW_TERM_BUDGET: u64 = 5_000_000;

fn pow_term_budget() -> u64 {
    std::env::var("FROBSPLIT_POW_TERM_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_POW_TERM_BUDGET)
}

/// The canonical p^{-1}-linear projection: a monomial `m` maps to
/// `(m·x_1⋯x_n)^{1/p} / (x_1⋯x_n)` when `m·x_1⋯x_n` is a p-th power and to
/// zero otherwise; coefficients are fixed (c^{1/p} = c on the prime field).
pub fn trace(g: &Polynomial) -> Polynomial {
    let ring = g.ring();
    let p = ring.modulus();
    let mut terms = Vec::new();
    'term: for (m, c) in g.terms() {
        let mut out = Vec::with_capacity(m.nvars());
        for &e in m.exponents() {
            // need e + 1 ≡ 0 mod p; image exponent is (e+1)/p - 1
            if (e as u64 + 1) % p != 0 {
                continue 'term;
            }
            out.push(((e as u64 + 1) / p - 1) as u16);
        }
        terms.push((Monomial::from_exponents(&out), *c));
    }
    Polynomial::from_terms(ring.clone(), terms)
}

/// A candidate Frobenius splitting `Tr(f^(p-1) · —)`. The power is
/// computed once and cached; it is the dominant cost at p = 5 on larger
/// rings, so powering respects a configurable term budget.
#[derive(Debug)]
pub struct SplittingCandidate {
    f: Polynomial,
    power: OnceLock<Polynomial>,
}

impl Clone for SplittingCandidate {
    fn clone(&self) -> Self {
        SplittingCandidate { f: self.f.clone(), power: OnceLock::new() }
    }
}

/// Outcome of the exact splitting check on `Tr(f^(p-1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitStatus {
    /// `Tr(f^(p-1)) = 1`.
    Unit,
    /// A nonzero constant `c ≠ 1`: a splitting after rescaling `f`'s
    /// coefficient; compatibility is unaffected by the rescaling.
    UnitAfterScaling(FieldElement),
    /// Anything else; carries the computed trace.
    Not(Polynomial),
}

impl SplittingCandidate {
    pub fn new(f: Polynomial) -> SplittingCandidate {
        SplittingCandidate { f, power: OnceLock::new() }
    }

    /// The standard splitting polynomial `x_1⋯x_n` of a ring.
    pub fn standard(ring: &Ring) -> SplittingCandidate {
        SplittingCandidate::new(ring.product_of_variables())
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn ring(&self) -> &Ring {
        self.f.ring()
    }

    /// `f^(p-1)`, cached.
    pub fn multiplier(&self) -> Result<&Polynomial> {
        if let Some(p) = self.power.get() {
            return Ok(p);
        }
        let pw = self
            .f
            .checked_pow(self.f.ring().modulus() - 1, pow_term_budget())?;
        Ok(self.power.get_or_init(|| pw))
    }

    /// `Tr(f^(p-1) · g)`.
    pub fn apply(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.ring() != self.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(trace(&self.multiplier()?.mul(g)))
    }

    /// Exact verification: the candidate splits iff `Tr(f^(p-1)) = 1`
    /// (by p^{-1}-linearity this forces `φ ∘ F = id`). A nonzero constant
    /// is reported as a splitting after scaling rather than a failure.
    pub fn split_status(&self) -> Result<SplitStatus> {
        let t = trace(self.multiplier()?);
        Ok(match t.constant_value() {
            Some(c) if c == FieldElement::ONE => SplitStatus::Unit,
            Some(c) if !c.is_zero() => SplitStatus::UnitAfterScaling(c),
            _ => SplitStatus::Not(t),
        })
    }

    pub fn is_splitting(&self) -> Result<bool> {
        Ok(!matches!(self.split_status()?, SplitStatus::Not(_)))
    }

    /// Cheap sufficient pre-check: the leading term of `f` under `order`
    /// is the product of all the variables.
    pub fn leading_product_precheck(&self, order: &TermOrder) -> bool {
        match self.f.leading_term(order) {
            Ok((m, _)) => m.exponents().iter().all(|&e| e == 1),
            Err(_) => false,
        }
    }
}

/// Membership form of the compatibility criterion: `φ_f(I) ⊆ I` iff
/// `f^(p-1)·g ∈ I^{[p]}` for every generator `g`. Exact; the brute-force
/// check below is the independent definition-level oracle.
pub fn is_compatible_fedder(cand: &SplittingCandidate, ideal: &Ideal) -> Result<bool> {
    is_compatible_fedder_with(cand, ideal, true)
}

pub fn is_compatible_fedder_with(
    cand: &SplittingCandidate,
    ideal: &Ideal,
    parallel: bool,
) -> Result<bool> {
    if cand.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if ideal.generators().is_empty() {
        return Ok(true);
    }
    let fp = ideal.frobenius_power()?;
    let gb = fp.canonical_gb()?;
    let mult = cand.multiplier()?.clone();
    let gens = ideal.generators();
    let oks = par::map_indexed(
        gens.len(),
        gens,
        |_, g| crate::groebner::is_member(&mult.mul(g), gb.as_ref()),
        parallel,
    );
    for r in oks {
        if !r? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Size guard for the brute-force oracle.
#[derive(Debug, Clone, Copy)]
pub struct BruteForceLimit {
    pub max_vars: usize,
    pub max_p: u64,
}

impl Default for BruteForceLimit {
    fn default() -> Self {
        BruteForceLimit { max_vars: 6, max_p: 3 }
    }
}

/// Definition-level compatibility check: `φ(m·g) ∈ I` for every generator
/// `g` and every monomial `m` with exponents in `[0, p-1]`. Sufficient by
/// additivity and p^{-1}-linearity (`φ(s^p·a) = s·φ(a)`) and clearly
/// necessary. Refuses instances beyond the configured size.
pub fn is_compatible_bruteforce(
    cand: &SplittingCandidate,
    ideal: &Ideal,
    limit: BruteForceLimit,
) -> Result<bool> {
    is_compatible_bruteforce_with(cand, ideal, limit, true)
}

pub fn is_compatible_bruteforce_with(
    cand: &SplittingCandidate,
    ideal: &Ideal,
    limit: BruteForceLimit,
    parallel: bool,
) -> Result<bool> {
    if cand.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let p = ring.modulus();
    if n > limit.max_vars || p > limit.max_p {
        return Err(Error::InstanceTooLarge(format!(
            "{n} variables at p = {p} exceeds the limit ({} vars, p <= {})",
            limit.max_vars, limit.max_p
        )));
    }
    if ideal.generators().is_empty() {
        return Ok(true);
    }
    let gb = ideal.canonical_gb()?;
    let mult = cand.multiplier()?.clone();
    let total = (p as usize).pow(n as u32);
    let ok = par::all_indices(
        total,
        |idx| {
            let mut exps = vec![0u16; n];
            let mut k = idx;
            for e in exps.iter_mut() {
                *e = (k % p as usize) as u16;
                k /= p as usize;
            }
            let m = ring.monomial(&exps);
            ideal.generators().iter().all(|g| {
                let image = trace(&mult.mul(&m.mul(g)));
                crate::groebner::is_member(&image, gb.as_ref()).unwrap_or(false)
            })
        },
        parallel,
    );
    Ok(ok)
}

/// Per-law verification that compatibility is preserved by the closure
/// operations, for one splitting candidate and two compatibly split
/// ideals. Precondition violations are reported, not thrown.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub splits: bool,
    pub compat_first: bool,
    pub compat_second: bool,
    pub precondition_ok: bool,
    pub sum_compatible: Option<bool>,
    pub intersection_compatible: Option<bool>,
    pub quotient_compatible: Option<bool>,
    pub image_in_ideal: Option<bool>,
    pub radical_spot_check: Option<bool>,
}

impl ClosureReport {
    pub fn all_pass(&self) -> bool {
        self.precondition_ok
            && self.sum_compatible == Some(true)
            && self.intersection_compatible == Some(true)
            && self.quotient_compatible == Some(true)
            && self.image_in_ideal == Some(true)
            && self.radical_spot_check == Some(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "preconditionOk": self.precondition_ok,
            "splits": self.splits,
            "compatFirst": self.compat_first,
            "compatSecond": self.compat_second,
            "sumCompatible": self.sum_compatible,
            "intersectionCompatible": self.intersection_compatible,
            "quotientCompatible": self.quotient_compatible,
            "imageInIdeal": self.image_in_ideal,
            "radicalSpotCheck": self.radical_spot_check,
        })
    }
}

/// Checks that `I+J`, `I∩J` and `I:J` stay compatibly split, that the
/// splitting maps generators of `I` back into `I`, and spot-checks
/// radicality of `I` (random `h` with `h^p ∈ I` must lie in `I`).
pub fn check_closure_laws(
    cand: &SplittingCandidate,
    first: &Ideal,
    second: &Ideal,
) -> Result<ClosureReport> {
    let splits = cand.is_splitting()?;
    let compat_first = is_compatible_fedder(cand, first)?;
    let compat_second = is_compatible_fedder(cand, second)?;
    let precondition_ok = splits && compat_first && compat_second;
    let mut report = ClosureReport {
        splits,
        compat_first,
        compat_second,
        precondition_ok,
        sum_compatible: None,
        intersection_compatible: None,
        quotient_compatible: None,
        image_in_ideal: None,
        radical_spot_check: None,
    };
    if !precondition_ok {
        return Ok(report);
    }
    report.sum_compatible = Some(is_compatible_fedder(cand, &first.sum(second)?)?);
    report.intersection_compatible = Some(is_compatible_fedder(cand, &first.intersect(second)?)?);
    report.quotient_compatible = Some(is_compatible_fedder(cand, &first.quotient(second)?)?);

    let mut image_ok = true;
    for g in first.generators() {
        if !first.contains(&cand.apply(g)?)? {
            image_ok = false;
        }
    }
    report.image_in_ideal = Some(image_ok);

    // Radicality spot check with a fixed seed: for random low-degree h the
    // implication h^p ∈ I ⟹ h ∈ I must hold.
    let ring = first.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut radical_ok = true;
    for _ in 0..24 {
        let h = random_low_degree(ring, &mut rng);
        if h.is_zero() {
            continue;
        }
        let hp = h.frobenius_pow()?;
        if first.contains(&hp)? && !first.contains(&h)? {
            radical_ok = false;
        }
    }
    report.radical_spot_check = Some(radical_ok);
    Ok(report)
}

fn random_low_degree(ring: &Ring, rng: &mut ChaCha8Rng) -> Polynomial {
    let n = ring.nvars();
    let p = ring.modulus();
    let nterms = rng.gen_range(1..=2);
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let mut exps = vec![0u16; n];
        for e in exps.iter_mut() {
            *e = rng.gen_range(0..2);
        }
        terms.push((
            Monomial::from_exponents(&exps),
            ring.field().from_u64(rng.gen_range(1..p)),
        ));
    }
    Polynomial::from_terms(ring.clone(), terms)
}

/// Report for the descent of a splitting through the degeneration at one
/// variable: the initial form of `f` must split and compatibly split the
/// initial-form ideal, its colon and sum with the variable, and the link
/// and deletion extracted from it.
#[derive(Debug, Clone)]
pub struct DescentReport {
    pub precondition_ok: bool,
    pub descended: Polynomial,
    pub descended_splits: bool,
    pub initial_ideal_compatible: Option<bool>,
    pub colon_compatible: Option<bool>,
    pub plus_var_compatible: Option<bool>,
    pub link_compatible: Option<bool>,
    pub deletion_compatible: Option<bool>,
}

impl DescentReport {
    pub fn all_pass(&self) -> bool {
        self.precondition_ok
            && self.descended_splits
            && self.initial_ideal_compatible == Some(true)
            && self.colon_compatible == Some(true)
            && self.plus_var_compatible == Some(true)
            && self.link_compatible == Some(true)
            && self.deletion_compatible == Some(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "preconditionOk": self.precondition_ok,
            "descended": self.descended.to_string(),
            "descendedSplits": self.descended_splits,
            "initialIdealCompatible": self.initial_ideal_compatible,
            "colonCompatible": self.colon_compatible,
            "plusVarCompatible": self.plus_var_compatible,
            "linkCompatible": self.link_compatible,
            "deletionCompatible": self.deletion_compatible,
        })
    }
}

/// Verifies that the splitting induced by `in_y(f)` compatibly splits
/// `in_y(I)`, `in_y(I):y`, `in_y(I)+(y)`, the link `in_y(I):y^∞` and the
/// deletion. Precondition: `cand` splits and compatibly splits `I`.
pub fn verify_knutson_descent(
    cand: &SplittingCandidate,
    ideal: &Ideal,
    y: usize,
) -> Result<DescentReport> {
    let ring = ideal.ring();
    if cand.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let precondition_ok = cand.is_splitting()? && is_compatible_fedder(cand, ideal)?;
    let descended_poly = cand.polynomial().initial_form(y);
    let descended = SplittingCandidate::new(descended_poly.clone());
    let mut report = DescentReport {
        precondition_ok,
        descended: descended_poly,
        descended_splits: false,
        initial_ideal_compatible: None,
        colon_compatible: None,
        plus_var_compatible: None,
        link_compatible: None,
        deletion_compatible: None,
    };
    if !precondition_ok {
        return Ok(report);
    }
    report.descended_splits = descended.is_splitting()?;

    // in_y(I) from the reduced basis under a y-largest refinement.
    let gvd_order = TermOrder::var_then(y, ring.order().clone());
    let gb = ideal.gb(&gvd_order)?;
    let in_gens: Vec<Polynomial> = gb.elements().iter().map(|g| g.initial_form(y)).collect();
    let iny = Ideal::new(ring.clone(), in_gens)?;
    let yvar = Ideal::new(ring.clone(), vec![ring.var_poly(y)])?;
    report.initial_ideal_compatible = Some(is_compatible_fedder(&descended, &iny)?);
    report.colon_compatible = Some(is_compatible_fedder(&descended, &iny.quotient(&yvar)?)?);
    report.plus_var_compatible = Some(is_compatible_fedder(&descended, &iny.sum(&yvar)?)?);
    report.link_compatible = Some(is_compatible_fedder(&descended, &iny.saturate(&yvar)?)?);
    let deletion_gens = crate::groebner::eliminate(
        ideal.generators(),
        &(0..ring.nvars()).filter(|&v| v != y).collect::<Vec<_>>(),
        false,
    )?;
    let deletion = Ideal::new(ring.clone(), deletion_gens)?;
    report.deletion_compatible = Some(is_compatible_fedder(&descended, &deletion)?);
    Ok(report)
}
