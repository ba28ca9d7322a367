//! Lifting a splitting through a nondegenerate geometric vertex
//! decomposition: from `Tr((y·g)^(p-1)·—)` compatibly splitting link and
//! deletion to a splitting compatibly splitting the decomposed ideal,
//! with machine-checkable certificates.

use crate::error::Error;
use crate::field::FieldElement;
use crate::frobenius::{self, SplittingCandidate};
use crate::groebner;
use crate::gvd::{Degeneracy, GvdDecomposition};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use thiserror::Error;

/// Default bound on the support size of coefficient tuples searched for a
/// nonzerodivisor pair.
pub const DEFAULT_PAIR_SEARCH_SUPPORT: usize = 3;

/// Typed failures naming the violated hypothesis.
#[derive(Debug, Clone, Error)]
pub enum LiftError {
    #[error("the decomposition does not satisfy the linearity condition (some basis element is nonlinear in the variable)")]
    LinearityFails,
    #[error("the decomposition is not nondegenerate (classified {0:?})")]
    NotNondegenerate(Degeneracy),
    #[error("the decomposition is not degenerate (classified {0:?})")]
    NotDegenerate(Degeneracy),
    #[error("the polynomial `{0}` has a term divisible by the decomposition variable")]
    InvolvesVariable(String),
    #[error("Tr((y·g)^(p-1)) is not a unit: y·g does not induce a splitting")]
    NotASplitting,
    #[error("the given splitting does not compatibly split the link")]
    NotCompatibleWithLink,
    #[error("the given splitting does not compatibly split the deletion")]
    NotCompatibleWithDeletion,
    #[error("the factor u does not lie in the link")]
    FactorNotInLink,
    #[error("the factor u does not divide g")]
    FactorDoesNotDivide,
    #[error("the factor u divides zero modulo the deletion (N : u ≠ N)")]
    FactorZeroDivisor,
    #[error("no nonzerodivisor pair found among F_p-combinations of basis pairs with support ≤ {0}")]
    SearchExhausted(usize),
    #[error("membership failure: {0}")]
    Membership(String),
    #[error("linearization failed: {0}")]
    Linearization(String),
    #[error("the supplied ideal differs from the decomposed ideal")]
    IdealMismatch,
    #[error(transparent)]
    Algebra(#[from] Error),
}

pub type LiftResult<T> = std::result::Result<T, LiftError>;

/// Verification flags recorded on a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateChecks {
    /// `u·(y·q + r) - v·q ∈ N` (well-definedness of the isomorphism).
    pub well_defined: bool,
    /// `v ∈ I`.
    pub v_in_ideal: bool,
    /// `f_new ∈ I`.
    pub f_new_in_ideal: bool,
    /// `in_y(f_new) = y·g`.
    pub initial_form_matches: bool,
    /// `Tr(f_new^(p-1)) = 1`.
    pub trace_is_unit: bool,
    /// `f_new^(p-1)·g_i ∈ I^{[p]}` for every generator.
    pub fedder_compatible: bool,
}

impl CertificateChecks {
    pub fn all(&self) -> bool {
        self.well_defined
            && self.v_in_ideal
            && self.f_new_in_ideal
            && self.initial_form_matches
            && self.trace_is_unit
            && self.fedder_compatible
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "wellDefined": self.well_defined,
            "vInIdeal": self.v_in_ideal,
            "fNewInIdeal": self.f_new_in_ideal,
            "initialFormMatches": self.initial_form_matches,
            "traceIsUnit": self.trace_is_unit,
            "fedderCompatible": self.fedder_compatible,
        })
    }
}

/// The data witnessing one application of the lift. Certificates are
/// always emitted with per-check flags, never silently accepted, so
/// negative instances produce inspectable artifacts.
#[derive(Debug, Clone)]
pub struct LiftCertificate {
    pub ideal: Ideal,
    pub decomposition: GvdDecomposition,
    pub g: Polynomial,
    pub u: Polynomial,
    pub q: Polynomial,
    pub r: Polynomial,
    pub s: Polynomial,
    pub v: Polynomial,
    pub f_new: Polynomial,
    pub checks: CertificateChecks,
}

impl LiftCertificate {
    pub fn is_valid(&self) -> bool {
        self.checks.all()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "variable": self.decomposition.variable_name(),
            "ideal": self.ideal.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "g": self.g.to_string(),
            "u": self.u.to_string(),
            "q": self.q.to_string(),
            "r": self.r.to_string(),
            "s": self.s.to_string(),
            "v": self.v.to_string(),
            "fNew": self.f_new.to_string(),
            "checks": self.checks.to_json(),
            "valid": self.is_valid(),
        })
    }
}

fn is_nzd(n: &Ideal, f: &Polynomial) -> LiftResult<bool> {
    if f.is_zero() {
        return Ok(n.is_unit()?);
    }
    Ok(n.colon_single(f)?.equals(n)?)
}

/// Searches the span of the basis pairs `(q_j, r_j)` for `(q, r)` with
/// both `q` and `y·q + r` nonzerodivisors modulo the deletion. Single
/// pairs are tried first in basis order, then F_p-linear combinations
/// with support of increasing size up to `max_support`.
pub fn find_q_r(
    d: &GvdDecomposition,
    max_support: usize,
) -> LiftResult<(Polynomial, Polynomial)> {
    if !d.condition1() {
        return Err(LiftError::LinearityFails);
    }
    let ring = d.ring().clone();
    let n = d.deletion();
    let y = d.variable();
    let yp = ring.var_poly(y);
    let pairs = d.pairs();
    let p = ring.modulus();

    let try_candidate = |q: &Polynomial, r: &Polynomial| -> LiftResult<bool> {
        if q.is_zero() {
            return Ok(false);
        }
        let member = yp.mul(q).add(r);
        Ok(is_nzd(n, q)? && is_nzd(n, &member)?)
    };

    // support size 1: single pairs (scaling does not change the checks)
    for (q, r) in pairs {
        if try_candidate(q, r)? {
            return Ok((q.clone(), r.clone()));
        }
    }
    // larger supports: F_p-combinations over index combinations, the
    // first nonzero coefficient pinned to 1
    for support in 2..=max_support.min(pairs.len()) {
        let mut indices: Vec<usize> = (0..support).collect();
        'combos: loop {
            let mut coeffs = vec![1u64; support];
            loop {
                let mut q = ring.zero();
                let mut r = ring.zero();
                for (k, &idx) in indices.iter().enumerate() {
                    let c = FieldElement(coeffs[k]);
                    q = q.add(&pairs[idx].0.scale(c));
                    r = r.add(&pairs[idx].1.scale(c));
                }
                if try_candidate(&q, &r)? {
                    return Ok((q, r));
                }
                // odometer over coeffs[1..] in [1, p-1]
                let mut pos = support - 1;
                loop {
                    if pos == 0 {
                        break;
                    }
                    coeffs[pos] += 1;
                    if coeffs[pos] < p {
                        break;
                    }
                    coeffs[pos] = 1;
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
            }
            // next index combination
            let mut i = support;
            while i > 0 {
                i -= 1;
                indices[i] += 1;
                if indices[i] + (support - 1 - i) < pairs.len() {
                    for j in i + 1..support {
                        indices[j] = indices[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    break 'combos;
                }
            }
        }
    }
    Err(LiftError::SearchExhausted(max_support))
}

/// A representative `g_f ∈ I` of the image of `f ∈ C` under the
/// isomorphism `C/N → I/N` induced by the decomposition: writes
/// `f·(y·q + r)` in the ideal `(q) + N` and takes the cofactor of `q`.
/// Postcondition (verified): `f·(y·q+r) - g_f·q ∈ N` and `g_f ∈ I`.
pub fn psi_image(
    d: &GvdDecomposition,
    q: &Polynomial,
    r: &Polynomial,
    f: &Polynomial,
) -> LiftResult<Polynomial> {
    let ring = d.ring().clone();
    if !d.link().contains(f)? {
        return Err(LiftError::FactorNotInLink);
    }
    let y = ring.var_poly(d.variable());
    let member = y.mul(q).add(r);
    let w = f.mul(&member);
    let mut gens = vec![q.clone()];
    gens.extend(d.deletion().generators().iter().cloned());
    let aux = Ideal::new(ring, gens)?;
    let gb = aux.gb_with_cofactors(d.order())?;
    let Some(coeffs) = groebner::express_in_ideal(&w, gb.as_ref())? else {
        return Err(LiftError::Membership(
            "f·(y·q + r) is not a member of (q) + N; hypotheses violated upstream".into(),
        ));
    };
    let g_f = coeffs[0].clone();
    let residual = w.sub(&g_f.mul(q));
    if !d.deletion().contains(&residual)? {
        return Err(LiftError::Membership(
            "f·(y·q + r) - g_f·q is not in the deletion".into(),
        ));
    }
    if !d.ideal().contains(&g_f)? {
        return Err(LiftError::Membership("g_f is not in the ideal".into()));
    }
    Ok(g_f)
}

/// Turns a representative `g_u` of `ψ(u)` into the linear form
/// `v = y·u + s` with `s` free of `y`. The deletion's reduced basis is
/// free of `y`, so normal forms respect the `y`-grading and the reduction
/// gives the unique linear coset representative directly.
pub fn linearize_representative(
    d: &GvdDecomposition,
    u: &Polynomial,
    g_u: &Polynomial,
) -> LiftResult<Polynomial> {
    let ring = d.ring().clone();
    let y = d.variable();
    if !u.free_of(y) {
        return Err(LiftError::InvolvesVariable(u.to_string()));
    }
    let ngb = d.deletion().gb(d.order())?;
    let w = groebner::normal_form(g_u, ngb.as_ref())?;
    if w.degree_in(y) > 1 {
        return Err(LiftError::Linearization(format!(
            "normal form has degree {} in the variable; no linear representative exists",
            w.degree_in(y)
        )));
    }
    // split w = y·w1 + w0
    let mut w1_terms = Vec::new();
    let mut w0_terms = Vec::new();
    for (m, c) in w.terms() {
        if m.exponent(y) == 1 {
            let mut e = m.exponents().to_vec();
            e[y] = 0;
            w1_terms.push((crate::monomial::Monomial::from_exponents(&e), *c));
        } else {
            w0_terms.push((m.clone(), *c));
        }
    }
    let w1 = Polynomial::from_terms(ring.clone(), w1_terms);
    let w0 = Polynomial::from_terms(ring.clone(), w0_terms);
    if !groebner::normal_form(&w1.sub(u), ngb.as_ref())?.is_zero() {
        return Err(LiftError::Linearization(
            "the degree-one coefficient of the normal form is not u modulo the deletion".into(),
        ));
    }
    let v = ring.var_poly(y).mul(u).add(&w0);
    if !d.deletion().contains(&v.sub(g_u))? {
        return Err(LiftError::Linearization("v - g_u is not in the deletion".into()));
    }
    if !d.ideal().contains(&v)? {
        return Err(LiftError::Linearization("v is not in the ideal".into()));
    }
    Ok(v)
}

/// The lift: given a nondegenerate decomposition of `I` at `y`, a
/// splitting `Tr((y·g)^(p-1)·—)` compatibly splitting link and deletion,
/// and a factor `u | g` lying in the link and not dividing zero modulo
/// the deletion, produces `f_new = v·(g/u)` with `v = y·u + s` the linear
/// representative of the image of `u`, so that `in_y(f_new) = y·g` and
/// `Tr(f_new^(p-1)·—)` compatibly splits `I`. Every check is recorded;
/// a failed check marks the certificate invalid rather than being
/// swallowed.
pub fn lift_splitting(
    ideal: &Ideal,
    d: &GvdDecomposition,
    g: &Polynomial,
    u: &Polynomial,
) -> LiftResult<LiftCertificate> {
    let ring = d.ring().clone();
    let y = d.variable();
    if !ideal.equals(d.ideal())? {
        return Err(LiftError::IdealMismatch);
    }
    if !d.condition1() {
        return Err(LiftError::LinearityFails);
    }
    if d.degeneracy() != Degeneracy::Nondegenerate {
        return Err(LiftError::NotNondegenerate(d.degeneracy()));
    }
    if !g.free_of(y) {
        return Err(LiftError::InvolvesVariable(g.to_string()));
    }
    let given = SplittingCandidate::new(ring.var_poly(y).mul(g));
    if !given.is_splitting()? {
        return Err(LiftError::NotASplitting);
    }
    if !frobenius::is_compatible_fedder(&given, d.link())? {
        return Err(LiftError::NotCompatibleWithLink);
    }
    if !frobenius::is_compatible_fedder(&given, d.deletion())? {
        return Err(LiftError::NotCompatibleWithDeletion);
    }
    if !u.free_of(y) {
        return Err(LiftError::InvolvesVariable(u.to_string()));
    }
    if !d.link().contains(u)? {
        return Err(LiftError::FactorNotInLink);
    }
    let g_over_u = g.div_exact(u).map_err(|_| LiftError::FactorDoesNotDivide)?;
    if !is_nzd(d.deletion(), u)? {
        return Err(LiftError::FactorZeroDivisor);
    }

    let (q, r) = find_q_r(d, DEFAULT_PAIR_SEARCH_SUPPORT)?;
    let g_u = psi_image(d, &q, &r, u)?;
    let v = linearize_representative(d, u, &g_u)?;
    let s = v.sub(&ring.var_poly(y).mul(u));
    let f_new = v.mul(&g_over_u);

    let yqr = ring.var_poly(y).mul(&q).add(&r);
    let cand = SplittingCandidate::new(f_new.clone());
    let checks = CertificateChecks {
        well_defined: d.deletion().contains(&u.mul(&yqr).sub(&v.mul(&q)))?,
        v_in_ideal: ideal.contains(&v)?,
        f_new_in_ideal: ideal.contains(&f_new)?,
        initial_form_matches: f_new.initial_form(y) == ring.var_poly(y).mul(g),
        trace_is_unit: matches!(cand.split_status()?, frobenius::SplitStatus::Unit),
        fedder_compatible: frobenius::is_compatible_fedder(&cand, ideal)?,
    };
    Ok(LiftCertificate {
        ideal: ideal.clone(),
        decomposition: d.clone(),
        g: g.clone(),
        u: u.clone(),
        q,
        r,
        s,
        v,
        f_new,
        checks,
    })
}

/// Re-derives every certificate check from first principles, using only
/// basis and trace primitives (none of the construction code above), so
/// it serves as an independent checker.
pub fn validate_certificate(cert: &LiftCertificate) -> LiftResult<CertificateChecks> {
    let d = &cert.decomposition;
    let ring = d.ring().clone();
    let y = d.variable();
    let yp = ring.var_poly(y);

    let order = ring.canonical_order();
    let deletion_gb = groebner::buchberger(
        &std::iter::once(ring.zero())
            .chain(d.deletion().generators().iter().cloned())
            .collect::<Vec<_>>(),
        &order,
        false,
    )?;
    let ideal_gb = groebner::buchberger(
        &std::iter::once(ring.zero())
            .chain(cert.ideal.generators().iter().cloned())
            .collect::<Vec<_>>(),
        &order,
        false,
    )?;

    let tilde = cert
        .u
        .mul(&yp.mul(&cert.q).add(&cert.r))
        .sub(&cert.v.mul(&cert.q));
    let well_defined = groebner::is_member(&tilde, &deletion_gb)?;
    let v_in_ideal = groebner::is_member(&cert.v, &ideal_gb)?;
    let f_new_in_ideal = groebner::is_member(&cert.f_new, &ideal_gb)?;
    let initial_form_matches = cert.f_new.initial_form(y) == yp.mul(&cert.g);

    let p = ring.modulus();
    let power = cert.f_new.pow(p - 1);
    let trace_is_unit = frobenius::trace(&power).is_one();

    let frob_gens: Vec<Polynomial> = std::iter::once(ring.zero())
        .chain(
            cert.ideal
                .generators()
                .iter()
                .map(|g| g.frobenius_pow())
                .collect::<Result<Vec<_>, _>>()?,
        )
        .collect();
    let frob_gb = groebner::buchberger(&frob_gens, &order, false)?;
    let mut fedder_compatible = true;
    for gen in cert.ideal.generators() {
        if !groebner::is_member(&power.mul(gen), &frob_gb)? {
            fedder_compatible = false;
        }
    }
    Ok(CertificateChecks {
        well_defined,
        v_in_ideal,
        f_new_in_ideal,
        initial_form_matches,
        trace_is_unit,
        fedder_compatible,
    })
}

/// Writes `i·u = v·c + m` with `c` in the link and `m` in the deletion,
/// following the proof recipe: express `i·q` in `(y·q + r) + N`, then
/// recover `m = (c·ñ + n·u)/q` by exact division with `ñ = u·r - s·q`.
pub fn decompose_iu(
    d: &GvdDecomposition,
    q: &Polynomial,
    r: &Polynomial,
    u: &Polynomial,
    v: &Polynomial,
    i: &Polynomial,
) -> LiftResult<(Polynomial, Polynomial)> {
    let ring = d.ring().clone();
    if !d.ideal().contains(i)? {
        return Err(LiftError::Membership("i is not in the ideal".into()));
    }
    let yp = ring.var_poly(d.variable());
    let yqr = yp.mul(q).add(r);
    let mut gens = vec![yqr.clone()];
    gens.extend(d.deletion().generators().iter().cloned());
    let aux = Ideal::new(ring.clone(), gens)?;
    let gb = aux.gb_with_cofactors(d.order())?;
    let w = i.mul(q);
    let Some(coeffs) = groebner::express_in_ideal(&w, gb.as_ref())? else {
        return Err(LiftError::Membership(
            "i·q is not a member of (y·q + r) + N".into(),
        ));
    };
    let c = coeffs[0].clone();
    let n_part = w.sub(&c.mul(&yqr));
    let s = v.sub(&yp.mul(u));
    let tilde = u.mul(r).sub(&s.mul(q));
    let m = c
        .mul(&tilde)
        .add(&n_part.mul(u))
        .div_exact(q)
        .map_err(|e| LiftError::Linearization(format!("exact division by q failed: {e}")))?;
    if i.mul(u) != v.mul(&c).add(&m) {
        return Err(LiftError::Linearization("i·u ≠ v·c + m".into()));
    }
    if !d.deletion().contains(&m)? {
        return Err(LiftError::Membership("m is not in the deletion".into()));
    }
    if !d.link().contains(&c)? {
        return Err(LiftError::Membership("c is not in the link".into()));
    }
    Ok((c, m))
}

/// Outcome of the degenerate lift.
#[derive(Debug, Clone)]
pub struct DegenerateLift {
    pub candidate: SplittingCandidate,
    /// The linear binding `ℓ = y + r` when the link is the unit ideal.
    pub ell: Option<Polynomial>,
    pub splits: bool,
    pub compatible: bool,
}

impl DegenerateLift {
    pub fn verified(&self) -> bool {
        self.splits && self.compatible
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "candidate": self.candidate.polynomial().to_string(),
            "ell": self.ell.as_ref().map(|p| p.to_string()),
            "splits": self.splits,
            "compatible": self.compatible,
        })
    }
}

/// Degenerate case: with `C = (1)` the basis contains an element `y + r`
/// and `(y + r)·g` compatibly splits `I = N + (y + r)`; with equal
/// radicals `I = N` and the original candidate is returned unchanged.
pub fn degenerate_lift(
    ideal: &Ideal,
    d: &GvdDecomposition,
    g: &Polynomial,
) -> LiftResult<DegenerateLift> {
    let ring = d.ring().clone();
    let y = d.variable();
    if !ideal.equals(d.ideal())? {
        return Err(LiftError::IdealMismatch);
    }
    if !g.free_of(y) {
        return Err(LiftError::InvolvesVariable(g.to_string()));
    }
    let given = SplittingCandidate::new(ring.var_poly(y).mul(g));
    if !given.is_splitting()? {
        return Err(LiftError::NotASplitting);
    }
    if !frobenius::is_compatible_fedder(&given, d.link())? {
        return Err(LiftError::NotCompatibleWithLink);
    }
    if !frobenius::is_compatible_fedder(&given, d.deletion())? {
        return Err(LiftError::NotCompatibleWithDeletion);
    }
    match d.degeneracy() {
        Degeneracy::DegenerateUnitLink => {
            let pair = d.pairs().iter().find(|(q, _)| q.is_one()).ok_or_else(|| {
                LiftError::Membership(
                    "no basis element with unit coefficient despite unit link".into(),
                )
            })?;
            let ell = ring.var_poly(y).add(&pair.1);
            let candidate = SplittingCandidate::new(ell.mul(g));
            let splits = candidate.is_splitting()?;
            let compatible = frobenius::is_compatible_fedder(&candidate, ideal)?;
            Ok(DegenerateLift { candidate, ell: Some(ell), splits, compatible })
        }
        Degeneracy::DegenerateEqualRadicals => {
            let splits = given.is_splitting()?;
            let compatible = frobenius::is_compatible_fedder(&given, ideal)?;
            Ok(DegenerateLift { candidate: given, ell: None, splits, compatible })
        }
        other => Err(LiftError::NotDegenerate(other)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::{is_compatible_bruteforce, BruteForceLimit};
    use crate::gvd::decompose;
    use crate::ring::Ring;

    fn minors_2x3(p: u64) -> (Ring, Ideal) {
        let r = Ring::lex(p, &["x11", "x12", "x13", "x21", "x22", "x23"]).unwrap();
        let i = Ideal::parse(
            &r,
            &["x11*x22 - x12*x21", "x11*x23 - x13*x21", "x12*x23 - x13*x22"],
        )
        .unwrap();
        (r, i)
    }

    #[test]
    fn find_q_r_on_minors() {
        let (r, i) = minors_2x3(2);
        let d = decompose(&i, r.var("x23").unwrap()).unwrap();
        let (q, _r) = find_q_r(&d, 3).unwrap();
        // oracle for the nonzerodivisor condition: quotient(N, q) = N
        assert!(d.deletion().colon_single(&q).unwrap().equals(d.deletion()).unwrap());
    }

    #[test]
    fn find_q_r_with_zero_deletion() {
        // N = (0): any pair with q != 0 works, so the first is returned.
        let r = Ring::lex(3, &["x11", "x12", "x21", "x22"]).unwrap();
        let i = Ideal::parse(&r, &["x11*x22 - x12*x21"]).unwrap();
        let d = decompose(&i, r.var("x22").unwrap()).unwrap();
        let (q, rr) = find_q_r(&d, 3).unwrap();
        assert_eq!(q, r.parse("x11").unwrap());
        assert_eq!(rr, r.parse("-x12*x21").unwrap());
    }

    #[test]
    fn psi_image_of_q_is_the_pair_member() {
        let (r, i) = minors_2x3(3);
        let d = decompose(&i, r.var("x23").unwrap()).unwrap();
        let (q, rr) = find_q_r(&d, 3).unwrap();
        let img = psi_image(&d, &q, &rr, &q).unwrap();
        let v = linearize_representative(&d, &q, &img).unwrap();
        let expected = r.var_poly(r.var("x23").unwrap()).mul(&q).add(&rr);
        assert_eq!(v, expected);
    }

    #[test]
    fn psi_image_of_column_variable_is_a_minor() {
        // ψ(x12) ≡ x12*x23 - x13*x22 modulo the deletion.
        let (r, i) = minors_2x3(2);
        let d = decompose(&i, r.var("x23").unwrap()).unwrap();
        let (q, rr) = find_q_r(&d, 3).unwrap();
        let u = r.parse("x12").unwrap();
        let img = psi_image(&d, &q, &rr, &u).unwrap();
        let minor = r.parse("x12*x23 - x13*x22").unwrap();
        assert!(d.deletion().contains(&img.sub(&minor)).unwrap());
        let v = linearize_representative(&d, &u, &img).unwrap();
        assert_eq!(v, minor);
    }

    #[test]
    fn psi_is_well_defined_mod_deletion() {
        // Different q,r choices give images agreeing modulo the deletion.
        let (r, i) = minors_2x3(3);
        let d = decompose(&i, r.var("x23").unwrap()).unwrap();
        let pairs = d.pairs().to_vec();
        assert!(pairs.len() >= 2);
        let u = r.parse("x11").unwrap();
        let img1 = psi_image(&d, &pairs[0].0, &pairs[0].1, &u).unwrap();
        let img2 = psi_image(&d, &pairs[1].0, &pairs[1].1, &u).unwrap();
        assert!(d.deletion().contains(&img1.sub(&img2)).unwrap());
    }

    #[test]
    fn lift_on_principal_minor() {
        // I = (minor) in four variables; the standard splitting is y·g
        // with y = x22, u = x11.
        let r = Ring::lex(2, &["x11", "x12", "x21", "x22"]).unwrap();
        let i = Ideal::parse(&r, &["x11*x22 - x12*x21"]).unwrap();
        let d = decompose(&i, r.var("x22").unwrap()).unwrap();
        let g = r.parse("x11*x12*x21").unwrap();
        let u = r.parse("x11").unwrap();
        let cert = lift_splitting(&i, &d, &g, &u).unwrap();
        assert!(cert.is_valid(), "{:?}", cert.checks);
        let expected = r.parse("(x11*x22 - x12*x21)*x12*x21").unwrap();
        assert_eq!(cert.f_new, expected);
        // independent validator agrees
        let rechecked = validate_certificate(&cert).unwrap();
        assert!(rechecked.all());
        // brute-force oracle cross-check at this small size
        let brute = is_compatible_bruteforce(
            &SplittingCandidate::new(cert.f_new.clone()),
            &i,
            BruteForceLimit::default(),
        )
        .unwrap();
        assert!(brute);
    }

    #[test]
    fn decompose_iu_identities() {
        let (r, i) = minors_2x3(3);
        let d = decompose(&i, r.var("x23").unwrap()).unwrap();
        let (q, rr) = find_q_r(&d, 3).unwrap();
        let u = r.parse("x12").unwrap();
        let img = psi_image(&d, &q, &rr, &u).unwrap();
        let v = linearize_representative(&d, &u, &img).unwrap();
        // i = v: the identity re-substitutes
        let (c, m) = decompose_iu(&d, &q, &rr, &u, &v, &v).unwrap();
        assert_eq!(v.mul(&u), v.mul(&c).add(&m));
        // i in the deletion: m absorbs everything
        let n_member = r.parse("x11*x22 - x12*x21").unwrap();
        let (c2, m2) = decompose_iu(&d, &q, &rr, &u, &v, &n_member).unwrap();
        assert_eq!(n_member.mul(&u), v.mul(&c2).add(&m2));
        // an arbitrary degree-2 member
        let member = i.generators()[1].clone();
        let (c3, m3) = decompose_iu(&d, &q, &rr, &u, &v, &member).unwrap();
        assert_eq!(member.mul(&u), v.mul(&c3).add(&m3));
    }

    #[test]
    fn degenerate_lift_unit_link() {
        let r = Ring::lex(2, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["y + x"]).unwrap();
        let d = decompose(&i, r.var("y").unwrap()).unwrap();
        let out = degenerate_lift(&i, &d, &r.parse("x").unwrap()).unwrap();
        assert!(out.verified(), "{out:?}");
        assert_eq!(out.ell.unwrap(), r.parse("y + x").unwrap());
    }

    #[test]
    fn degenerate_lift_equal_radicals() {
        let r = Ring::lex(2, &["x1", "x2", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x1*x2"]).unwrap();
        let d = decompose(&i, r.var("y").unwrap()).unwrap();
        let out = degenerate_lift(&i, &d, &r.parse("x1*x2").unwrap()).unwrap();
        assert!(out.verified());
        assert!(out.ell.is_none());
        assert_eq!(out.candidate.polynomial(), &r.parse("y*x1*x2").unwrap());
    }

    #[test]
    fn degenerate_lift_with_monomial_deletion() {
        // I = (x1*x2, y + x3) at p = 2; oracle is the brute-force check.
        let r = Ring::lex(2, &["x1", "x2", "x3", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x1*x2", "y + x3"]).unwrap();
        let d = decompose(&i, r.var("y").unwrap()).unwrap();
        assert_eq!(d.degeneracy(), Degeneracy::DegenerateUnitLink);
        let g = r.parse("x1*x2*x3").unwrap();
        let out = degenerate_lift(&i, &d, &g).unwrap();
        assert!(out.verified(), "{out:?}");
        let brute =
            is_compatible_bruteforce(&out.candidate, &i, BruteForceLimit::default()).unwrap();
        assert!(brute);
    }

    #[test]
    fn nonsplitting_input_raises_typed_error() {
        let r = Ring::lex(2, &["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x*y"]).unwrap();
        let d = decompose(&i, r.var("y").unwrap()).unwrap();
        let err = degenerate_lift(&i, &d, &r.parse("x^2").unwrap()).unwrap_err();
        assert!(matches!(err, LiftError::NotASplitting));
    }
}
