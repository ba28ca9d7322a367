//! Buchberger's algorithm with reduced output, normal forms, cofactor
//! tracking and elimination.

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

/// Default cap on processed S-pairs; override with `FROBSPLIT_PAIR_BUDGET`.
const DEFAULT_PAIR_BUDGET: u64 = 5_000_000;

fn pair_budget() -> u64 {
    std::env::var("FROBSPLIT_PAIR_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_PAIR_BUDGET)
}

/// Term list sorted descending under the active (not necessarily the
/// ring's) order.
type OrdTerms = Vec<(Monomial, FieldElement)>;

fn to_ord(p: &Polynomial, order: &TermOrder) -> OrdTerms {
    let mut t: OrdTerms = p.terms().to_vec();
    t.sort_unstable_by(|a, b| order.compare(&b.0, &a.0));
    t
}

fn from_ord(ring: &Ring, t: OrdTerms) -> Polynomial {
    Polynomial::from_terms(ring.clone(), t)
}

fn mul_term_ord(t: &OrdTerms, m: &Monomial, c: FieldElement, field: &PrimeField) -> OrdTerms {
    t.iter().map(|(mm, k)| (mm.mul(m), field.mul(*k, c))).collect()
}

/// `a - c * m * b`, all term lists sorted descending under `order`.
fn sub_mul_term(
    a: &OrdTerms,
    m: &Monomial,
    c: FieldElement,
    b: &OrdTerms,
    field: &PrimeField,
    order: &TermOrder,
) -> OrdTerms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match order.compare(&a[i].0, &bm) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((bm, field.neg(field.mul(b[j].1, c))));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let coeff = field.sub(a[i].1, field.mul(b[j].1, c));
                if !coeff.is_zero() {
                    out.push((a[i].0.clone(), coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((b[j].0.mul(m), field.neg(field.mul(b[j].1, c))));
        j += 1;
    }
    out
}

fn scale_ord(t: &mut OrdTerms, c: FieldElement, field: &PrimeField) {
    for (_, k) in t.iter_mut() {
        *k = field.mul(*k, c);
    }
}

/// Full multivariate division: every term of the remainder is irreducible
/// by every listed leading term. Divisors are scanned in index order, so
/// the result is deterministic for fixed input.
fn divide<'a, D>(
    f: OrdTerms,
    ndiv: usize,
    get: D,
    skip: Option<usize>,
    order: &TermOrder,
    field: &PrimeField,
    track: bool,
) -> (OrdTerms, Option<Vec<OrdTerms>>)
where
    D: Fn(usize) -> &'a OrdTerms,
{
    let mut quotients = track.then(|| vec![OrdTerms::new(); ndiv]);
    let mut tail = f;
    let mut rem: OrdTerms = Vec::new();
    'outer: loop {
        let mut k = 0;
        while k < tail.len() {
            let lm = &tail[k].0;
            let mut found = None;
            for di in 0..ndiv {
                if Some(di) == skip {
                    continue;
                }
                let d = get(di);
                if !d.is_empty() && d[0].0.divides(lm) {
                    found = Some(di);
                    break;
                }
            }
            match found {
                None => {
                    rem.push(tail[k].clone());
                    k += 1;
                }
                Some(di) => {
                    let rest = tail.split_off(k);
                    let d = get(di);
                    let qm = rest[0].0.div(&d[0].0);
                    let qc = field.mul(rest[0].1, field.inv(d[0].1));
                    tail = sub_mul_term(&rest, &qm, qc, d, field, order);
                    if let Some(q) = quotients.as_mut() {
                        // Quotient terms arrive in strictly decreasing order.
                        q[di].push((qm, qc));
                    }
                    continue 'outer;
                }
            }
        }
        break;
    }
    (rem, quotients)
}

/// A reduced Gröbner basis: every element monic, no term of any element
/// divisible by the leading term of another, all S-pairs reducing to zero.
/// When cofactors are tracked, `elements[i] = Σ_j cofactors[i][j] *
/// generators[j]` exactly.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: TermOrder,
    generators: Vec<Polynomial>,
    elements: Vec<Polynomial>,
    ord_elements: Vec<OrdTerms>,
    cofactors: Option<Vec<Vec<Polynomial>>>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// The nonzero input generators the cofactor matrix refers to.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn cofactors(&self) -> Option<&[Vec<Polynomial>]> {
        self.cofactors.as_deref()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains_one(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    /// Leading monomial of element `i` under the basis order.
    pub fn leading_monomial(&self, i: usize) -> &Monomial {
        &self.ord_elements[i][0].0
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ring": self.ring.to_string(),
            "basis": self.elements.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

struct Work {
    terms: OrdTerms,
    cof: Option<Vec<OrdTerms>>,
}

/// Buchberger with the normal selection strategy (minimal lcm degree
/// first, ties by pair index), the coprimality criterion and the chain
/// criterion. Empty and zero generators are dropped; an all-zero input
/// yields the zero ideal's empty basis.
pub fn buchberger(
    generators: &[Polynomial],
    order: &TermOrder,
    track_cofactors: bool,
) -> Result<GroebnerBasis> {
    let ring = match generators.first() {
        Some(g) => g.ring().clone(),
        None => {
            return Err(Error::Invalid(
                "buchberger requires at least one generator to fix the ring".into(),
            ))
        }
    };
    if generators.iter().any(|g| g.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    if !order.is_valid_for(ring.nvars()) {
        return Err(Error::OrderMismatch);
    }
    let field = *ring.field();
    let gens: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let ngens = gens.len();

    let mut basis: Vec<Work> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        let mut t = to_ord(g, order);
        let lcinv = field.inv(t[0].1);
        scale_ord(&mut t, lcinv, &field);
        let cof = track_cofactors.then(|| {
            let mut row = vec![OrdTerms::new(); ngens];
            row[j] = vec![(Monomial::one(ring.nvars()), lcinv)];
            row
        });
        basis.push(Work { terms: t, cof });
    }

    // Pair queue keyed by (lcm degree, i, j); `queued` supports the chain
    // criterion's "companion pairs already handled" test.
    let mut queue: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let mut queued: HashSet<(usize, usize)> = HashSet::new();
    fn push_pairs(
        queue: &mut BinaryHeap<Reverse<(u32, usize, usize)>>,
        queued: &mut HashSet<(usize, usize)>,
        basis: &[Work],
        j: usize,
    ) {
        for i in 0..j {
            let lcm = basis[i].terms[0].0.lcm(&basis[j].terms[0].0);
            queue.push(Reverse((lcm.total_degree(), i, j)));
            queued.insert((i, j));
        }
    }
    for j in 0..basis.len() {
        push_pairs(&mut queue, &mut queued, &basis, j);
    }

    let budget = pair_budget();
    let mut processed: u64 = 0;
    while let Some(Reverse((_, i, j))) = queue.pop() {
        queued.remove(&(i, j));
        processed += 1;
        if processed > budget {
            return Err(Error::PairBudgetExceeded(budget));
        }
        let lti = basis[i].terms[0].0.clone();
        let ltj = basis[j].terms[0].0.clone();
        if lti.gcd_is_one(&ltj) {
            continue;
        }
        let lcm = lti.lcm(&ltj);
        let mut skip = false;
        for (k, w) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            if w.terms[0].0.divides(&lcm) {
                let p1 = (i.min(k), i.max(k));
                let p2 = (j.min(k), j.max(k));
                if !queued.contains(&p1) && !queued.contains(&p2) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }

        // S-polynomial of two monic elements: (lcm/lt_i)·b_i - (lcm/lt_j)·b_j.
        let mi = lcm.div(&lti);
        let mj = lcm.div(&ltj);
        let spoly = {
            let a = mul_term_ord(&basis[i].terms, &mi, FieldElement::ONE, &field);
            sub_mul_term(&a, &mj, FieldElement::ONE, &basis[j].terms, &field, order)
        };
        let spoly_cof = track_cofactors.then(|| {
            (0..ngens)
                .map(|g| {
                    let a = mul_term_ord(
                        &basis[i].cof.as_ref().unwrap()[g],
                        &mi,
                        FieldElement::ONE,
                        &field,
                    );
                    sub_mul_term(
                        &a,
                        &mj,
                        FieldElement::ONE,
                        &basis[j].cof.as_ref().unwrap()[g],
                        &field,
                        order,
                    )
                })
                .collect::<Vec<_>>()
        });

        let (rem, quots) = divide(
            spoly,
            basis.len(),
            |k| &basis[k].terms,
            None,
            order,
            &field,
            track_cofactors,
        );
        if rem.is_empty() {
            continue;
        }
        let lcinv = field.inv(rem[0].1);
        let mut rem = rem;
        scale_ord(&mut rem, lcinv, &field);
        let cof = spoly_cof.map(|mut rows| {
            let quots = quots.unwrap();
            for (k, q) in quots.iter().enumerate() {
                for (qm, qc) in q {
                    for (g, row) in rows.iter_mut().enumerate() {
                        *row = sub_mul_term(row, qm, *qc, &basis[k].cof.as_ref().unwrap()[g], &field, order);
                    }
                }
            }
            for row in rows.iter_mut() {
                scale_ord(row, lcinv, &field);
            }
            rows
        });
        basis.push(Work { terms: rem, cof });
        let jj = basis.len() - 1;
        push_pairs(&mut queue, &mut queued, &basis, jj);
    }

    interreduce(&mut basis, order, &field, track_cofactors, ngens);

    // Sort descending by leading monomial.
    basis.sort_by(|a, b| order.compare(&b.terms[0].0, &a.terms[0].0));
    let mut elements = Vec::with_capacity(basis.len());
    let mut ord_elements = Vec::with_capacity(basis.len());
    let mut cof_rows = track_cofactors.then(Vec::new);
    for w in &basis {
        elements.push(from_ord(&ring, w.terms.clone()));
        ord_elements.push(w.terms.clone());
        if let Some(rows) = cof_rows.as_mut() {
            let row: Vec<Polynomial> = w
                .cof
                .as_ref()
                .unwrap()
                .iter()
                .map(|t| from_ord(&ring, t.clone()))
                .collect();
            rows.push(row);
        }
    }

    Ok(GroebnerBasis {
        ring,
        order: order.clone(),
        generators: gens,
        elements,
        ord_elements,
        cofactors: cof_rows,
    })
}

fn interreduce(
    basis: &mut Vec<Work>,
    order: &TermOrder,
    field: &PrimeField,
    track: bool,
    _ngens: usize,
) {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let (rem, quots) = divide(
                basis[i].terms.clone(),
                basis.len(),
                |k| &basis[k].terms,
                Some(i),
                order,
                field,
                track,
            );
            if rem == basis[i].terms {
                i += 1;
                continue;
            }
            changed = true;
            if track {
                let quots = quots.unwrap();
                let mut row = basis[i].cof.take().unwrap();
                for (k, q) in quots.iter().enumerate() {
                    for (qm, qc) in q {
                        for (g, entry) in row.iter_mut().enumerate() {
                            *entry = sub_mul_term(
                                entry,
                                qm,
                                *qc,
                                &basis[k].cof.as_ref().unwrap()[g],
                                field,
                                order,
                            );
                        }
                    }
                }
                basis[i].cof = Some(row);
            }
            if rem.is_empty() {
                basis.remove(i);
            } else {
                let lcinv = field.inv(rem[0].1);
                let mut rem = rem;
                scale_ord(&mut rem, lcinv, field);
                if let Some(row) = basis[i].cof.as_mut() {
                    for t in row.iter_mut() {
                        scale_ord(t, lcinv, field);
                    }
                }
                basis[i].terms = rem;
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
}

/// The unique remainder of `f` modulo the reduced basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring() != gb.ring() {
        return Err(Error::RingMismatch);
    }
    let (rem, _) = divide(
        to_ord(f, &gb.order),
        gb.ord_elements.len(),
        |k| &gb.ord_elements[k],
        None,
        &gb.order,
        gb.ring.field(),
        false,
    );
    Ok(from_ord(&gb.ring, rem))
}

pub fn is_member(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    Ok(normal_form(f, gb)?.is_zero())
}

/// Writes a member `f` as a polynomial combination of the *original*
/// generators; `None` when `f` is not in the ideal. Requires a basis
/// computed with cofactor tracking. Re-substitution is exact.
pub fn express_in_ideal(f: &Polynomial, gb: &GroebnerBasis) -> Result<Option<Vec<Polynomial>>> {
    if f.ring() != gb.ring() {
        return Err(Error::RingMismatch);
    }
    let cof = gb.cofactors.as_ref().ok_or(Error::NoCofactors)?;
    let field = gb.ring.field();
    let (rem, quots) = divide(
        to_ord(f, &gb.order),
        gb.ord_elements.len(),
        |k| &gb.ord_elements[k],
        None,
        &gb.order,
        field,
        true,
    );
    if !rem.is_empty() {
        return Ok(None);
    }
    let quots = quots.unwrap();
    let ngens = gb.generators.len();
    let mut out = vec![gb.ring.zero(); ngens];
    for (i, q) in quots.iter().enumerate() {
        if q.is_empty() {
            continue;
        }
        let qp = from_ord(&gb.ring, q.clone());
        for (g, entry) in out.iter_mut().enumerate() {
            if !cof[i][g].is_zero() {
                *entry = entry.add(&qp.mul(&cof[i][g]));
            }
        }
    }
    Ok(Some(out))
}

/// Generators of the elimination ideal keeping only the listed variables,
/// computed with a block order (or pure lex on request). Outputs live in
/// the same ambient ring.
pub fn eliminate(gens: &[Polynomial], keep: &[usize], pure_lex: bool) -> Result<Vec<Polynomial>> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Ok(Vec::new()),
    };
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(Vec::new());
    }
    let keep_set: HashSet<usize> = keep.iter().copied().collect();
    let eliminated: Vec<usize> = (0..ring.nvars()).filter(|v| !keep_set.contains(v)).collect();
    let order = if pure_lex {
        let mut priority = eliminated.clone();
        priority.extend((0..ring.nvars()).filter(|v| keep_set.contains(v)));
        TermOrder::Lex { priority }
    } else {
        TermOrder::block_then(eliminated.clone(), ring.canonical_order())
    };
    let gb = buchberger(gens, &order, false)?;
    Ok(gb
        .elements()
        .iter()
        .filter(|p| p.support_vars().iter().all(|v| keep_set.contains(v)))
        .cloned()
        .collect())
}

/// S-polynomial of two nonzero polynomials; used by tests asserting the
/// reduction-to-zero property of finished bases.
pub fn s_polynomial(a: &Polynomial, b: &Polynomial, order: &TermOrder) -> Result<Polynomial> {
    let (ma, ca) = a.leading_term(order)?;
    let (mb, cb) = b.leading_term(order)?;
    let field = a.ring().field();
    let lcm = ma.lcm(&mb);
    let ta = a.mul_term(&lcm.div(&ma), field.inv(ca));
    let tb = b.mul_term(&lcm.div(&mb), field.inv(cb));
    Ok(ta.sub(&tb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gb(ring: &Ring, gens: &[&str], order: &TermOrder) -> GroebnerBasis {
        let gens: Vec<Polynomial> = gens.iter().map(|s| ring.parse(s).unwrap()).collect();
        buchberger(&gens, order, false).unwrap()
    }

    #[test]
    fn principal_ideal() {
        let r = Ring::lex(2, &["x", "y"]).unwrap();
        let basis = gb(&r, &["x"], &TermOrder::lex(2));
        assert_eq!(basis.elements(), &[r.parse("x").unwrap()]);
    }

    #[test]
    fn two_by_three_minors_are_their_own_basis() {
        // Row-major variable order, x23 smallest... then lex with x23
        // largest via explicit priority. The three maximal minors form a
        // diagonal (hence reduced) basis.
        let r = Ring::lex(2, &["x11", "x12", "x13", "x21", "x22", "x23"]).unwrap();
        let minors = [
            "x11*x22 - x12*x21",
            "x11*x23 - x13*x21",
            "x12*x23 - x13*x22",
        ];
        let basis = gb(&r, &minors, r.order());
        assert_eq!(basis.elements().len(), 3);
        for m in minors {
            let p = r.parse(m).unwrap();
            assert!(basis.elements().contains(&p));
        }
        // Same under lex with x23 largest.
        let y_first = TermOrder::var_then(r.var("x23").unwrap(), r.order().clone());
        let basis2 = gb(&r, &minors, &y_first);
        assert_eq!(basis2.elements().len(), 3);
    }

    #[test]
    fn textbook_lex_basis() {
        // {x^2 - y, x^3 - z} under lex(x>y>z): reduced basis
        // {x^2 - y, x*y - z, x*z - y^2, y^3 - z^2}.
        let r = Ring::lex(7, &["x", "y", "z"]).unwrap();
        let basis = gb(&r, &["x^2 - y", "x^3 - z"], &TermOrder::lex(3));
        let expected = ["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"];
        assert_eq!(basis.elements().len(), expected.len());
        for e in expected {
            assert!(basis.elements().contains(&r.parse(e).unwrap()), "missing {e}");
        }
    }

    #[test]
    fn normal_form_examples() {
        let r = Ring::lex(2, &["x11", "x12", "x13", "x21", "x22", "x23"]).unwrap();
        let minors = [
            "x11*x22 - x12*x21",
            "x11*x23 - x13*x21",
            "x12*x23 - x13*x22",
        ];
        let basis = gb(&r, &minors, r.order());
        // member reduces to zero
        for m in minors {
            assert!(is_member(&r.parse(m).unwrap(), &basis).unwrap());
        }
        // 1 stays 1 modulo a proper ideal
        assert_eq!(normal_form(&r.one(), &basis).unwrap(), r.one());
        // subtract a known member: the remainder is the leftover summand
        let f = r.parse("x12*x23 - x13*x22 + x11").unwrap();
        assert_eq!(normal_form(&f, &basis).unwrap(), r.parse("x11").unwrap());
        // idempotence
        let g = r.parse("x11^2*x22 + x13 + x21").unwrap();
        let nf = normal_form(&g, &basis).unwrap();
        assert_eq!(normal_form(&nf, &basis).unwrap(), nf);
    }

    #[test]
    fn express_in_ideal_resubstitutes() {
        let r = Ring::lex(3, &["x", "y", "z"]).unwrap();
        let gens = [r.parse("x*y - z").unwrap(), r.parse("y^2 - z").unwrap()];
        let basis = buchberger(&gens, &TermOrder::lex(3), true).unwrap();
        // each basis element re-substitutes through its cofactor row
        let cof = basis.cofactors().unwrap();
        for (i, e) in basis.elements().iter().enumerate() {
            let mut acc = r.zero();
            for (j, g) in basis.generators().iter().enumerate() {
                acc = acc.add(&cof[i][j].mul(g));
            }
            assert_eq!(&acc, e);
        }
        // a generator itself
        let expr = express_in_ideal(&gens[0], &basis).unwrap().unwrap();
        let mut acc = r.zero();
        for (j, g) in basis.generators().iter().enumerate() {
            acc = acc.add(&expr[j].mul(g));
        }
        assert_eq!(acc, gens[0]);
        // a random member
        let f = gens[0].mul(&r.parse("x + z^2").unwrap()).add(&gens[1].mul(&r.parse("y").unwrap()));
        let expr = express_in_ideal(&f, &basis).unwrap().unwrap();
        let mut acc = r.zero();
        for (j, g) in basis.generators().iter().enumerate() {
            acc = acc.add(&expr[j].mul(g));
        }
        assert_eq!(acc, f);
        // a non-member
        assert!(express_in_ideal(&r.parse("x").unwrap(), &basis).unwrap().is_none());
    }

    #[test]
    fn eliminate_inverse_makes_unit() {
        // t*x - 1: eliminating t leaves nothing (x is invertible on the
        // punctured line, the elimination ideal is zero).
        let r = Ring::lex(5, &["t", "x"]).unwrap();
        let gens = [r.parse("t*x - 1").unwrap()];
        let out = eliminate(&gens, &[r.var("x").unwrap()], false).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn eliminate_twisted_cubic_relation() {
        // {x - t^2, y - t^3}: elimination gives the cuspidal relation.
        // Oracle: substitution x=t^2, y=t^3 annihilates every output, and a
        // brute-force search over monomial differences of bidegree <= 3
        // finds x^3 - y^2 as the least relation.
        let r = Ring::lex(7, &["t", "x", "y"]).unwrap();
        let gens = [r.parse("x - t^2").unwrap(), r.parse("y - t^3").unwrap()];
        let keep = [r.var("x").unwrap(), r.var("y").unwrap()];
        for pure_lex in [false, true] {
            let out = eliminate(&gens, &keep, pure_lex).unwrap();
            assert_eq!(out.len(), 1);
            let g = &out[0];
            let images = vec![
                r.parse("t").unwrap(),
                r.parse("t^2").unwrap(),
                r.parse("t^3").unwrap(),
            ];
            assert!(g.substitute(&images).unwrap().is_zero());
            let target = r.parse("x^3 - y^2").unwrap();
            assert_eq!(g.monic(), target.monic());
        }
        // brute-force least-degree relation search (independent oracle)
        let mut found = Vec::new();
        for a in 0u16..=3 {
            for b in 0u16..=3 {
                for c in 0u16..=3 {
                    for d in 0u16..=3 {
                        if (a, b) == (c, d) {
                            continue;
                        }
                        // x^a y^b - x^c y^d maps to t^(2a+3b) - t^(2c+3d)
                        if 2 * a + 3 * b == 2 * c + 3 * d {
                            found.push(2 * a + 3 * b);
                        }
                    }
                }
            }
        }
        assert_eq!(found.iter().min(), Some(&6)); // degree of t^6 = (x^3, y^2)
    }

    #[test]
    fn four_cycle_toric_kernel() {
        // Edge map e_i -> t_u t_v on the 4-cycle; the kernel is generated
        // by the alternating product relation.
        let r = Ring::lex(3, &["t1", "t2", "t3", "t4", "e1", "e2", "e3", "e4"]).unwrap();
        let edge = |u: &str, v: &str| {
            format!("{u}*{v}")
        };
        let gens = [
            r.parse(&format!("e1 - {}", edge("t1", "t2"))).unwrap(),
            r.parse(&format!("e2 - {}", edge("t2", "t3"))).unwrap(),
            r.parse(&format!("e3 - {}", edge("t3", "t4"))).unwrap(),
            r.parse(&format!("e4 - {}", edge("t4", "t1"))).unwrap(),
        ];
        let keep: Vec<usize> = (4..8).collect();
        let out = eliminate(&gens, &keep, false).unwrap();
        assert_eq!(out.len(), 1);
        let g = out[0].monic();
        let expected = r.parse("e1*e3 - e2*e4").unwrap().monic();
        assert_eq!(g, expected);
    }

    #[test]
    fn reduced_basis_is_input_order_invariant() {
        let r = Ring::grevlex(5, &["x", "y", "z"]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let mut gens: Vec<Polynomial> = (0..3)
                .map(|_| {
                    let terms: Vec<String> = (0..rng.gen_range(1..4))
                        .map(|_| {
                            format!(
                                "{}*x^{}*y^{}*z^{}",
                                rng.gen_range(1..5),
                                rng.gen_range(0..3),
                                rng.gen_range(0..3),
                                rng.gen_range(0..3)
                            )
                        })
                        .collect();
                    r.parse(&terms.join(" + ")).unwrap()
                })
                .filter(|p: &Polynomial| !p.is_zero())
                .collect();
            if gens.is_empty() {
                continue;
            }
            let b1 = buchberger(&gens, &TermOrder::grevlex(3), false).unwrap();
            gens.reverse();
            let b2 = buchberger(&gens, &TermOrder::grevlex(3), false).unwrap();
            assert_eq!(b1.elements(), b2.elements());
        }
    }

    #[test]
    fn all_s_pairs_reduce_to_zero_post_hoc() {
        let r = Ring::lex(3, &["x", "y", "z"]).unwrap();
        let basis = gb(
            &r,
            &["x*y - z^2", "y^2 - z", "x*z - y"],
            &TermOrder::lex(3),
        );
        let els = basis.elements();
        for i in 0..els.len() {
            for j in (i + 1)..els.len() {
                let s = s_polynomial(&els[i], &els[j], basis.order()).unwrap();
                assert!(normal_form(&s, &basis).unwrap().is_zero());
            }
        }
        // reduced: no term of any element divisible by another's lead
        for i in 0..els.len() {
            for (j, e) in els.iter().enumerate() {
                if i == j {
                    continue;
                }
                let lead = basis.leading_monomial(i);
                assert!(e.terms().iter().all(|(m, _)| !lead.divides(m)));
            }
        }
    }

    #[test]
    fn unit_ideal_collapses_to_one() {
        let r = Ring::lex(3, &["x", "y"]).unwrap();
        let basis = gb(&r, &["x", "x + 1"], &TermOrder::lex(2));
        assert!(basis.contains_one());
    }
}
