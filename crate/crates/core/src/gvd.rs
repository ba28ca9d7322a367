//! Geometric vertex decomposition: the degeneration `in_y(I)`, the link
//! `C(y,I) = in_y(I):y^∞`, the deletion `N(y,I)` of members free of `y`,
//! classification, and recursive decomposition trees.

use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::ideal::Ideal;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use std::sync::Arc;

/// Three-valued outcome of the minimal-prime separation test between link
/// and deletion. The exact test needs primary decomposition, which is out
/// of scope, so the procedure is conservative; `Inconclusive` never blocks
/// downstream operations — callers assert the hypothesis instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition2 {
    Holds,
    HoldsByDegenerateEquality,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// `C = (1)`.
    DegenerateUnitLink,
    /// Mutual radical membership between link and deletion generators.
    DegenerateEqualRadicals,
    Nondegenerate,
    /// The reduced basis has an element of y-degree at least two.
    NotAGvd,
}

/// One decomposition step at a variable `y`: the basis under a y-largest
/// order, the pairs `(q_j, r_j)` from the y-linear elements `y·q_j + r_j`,
/// the y-free elements, the three derived ideals, and the classification.
#[derive(Debug, Clone)]
pub struct GvdDecomposition {
    ideal: Ideal,
    y: usize,
    gb: Arc<GroebnerBasis>,
    in_y: Ideal,
    link: Ideal,
    deletion: Ideal,
    pairs: Vec<(Polynomial, Polynomial)>,
    h_part: Vec<Polynomial>,
    condition1: bool,
    condition2: Condition2,
    degeneracy: Degeneracy,
}

impl GvdDecomposition {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn variable(&self) -> usize {
        self.y
    }

    pub fn variable_name(&self) -> &str {
        self.ring().var_name(self.y)
    }

    /// Reduced basis under the y-largest refinement of the ring order.
    pub fn basis(&self) -> &Arc<GroebnerBasis> {
        &self.gb
    }

    /// The order the decomposition was computed under.
    pub fn order(&self) -> &TermOrder {
        self.gb.order()
    }

    pub fn initial_ideal(&self) -> &Ideal {
        &self.in_y
    }

    pub fn link(&self) -> &Ideal {
        &self.link
    }

    pub fn deletion(&self) -> &Ideal {
        &self.deletion
    }

    pub fn pairs(&self) -> &[(Polynomial, Polynomial)] {
        &self.pairs
    }

    pub fn h_part(&self) -> &[Polynomial] {
        &self.h_part
    }

    /// Whether `in_y(I) = C ∩ (N + (y))`, equivalently every reduced-basis
    /// element is at most linear in `y`.
    pub fn condition1(&self) -> bool {
        self.condition1
    }

    pub fn condition2(&self) -> Condition2 {
        self.condition2
    }

    pub fn degeneracy(&self) -> Degeneracy {
        self.degeneracy
    }

    pub fn is_nondegenerate_gvd(&self) -> bool {
        self.condition1 && self.degeneracy == Degeneracy::Nondegenerate
    }

    pub fn to_json(&self) -> serde_json::Value {
        let polys = |v: &[Polynomial]| -> Vec<String> { v.iter().map(|p| p.to_string()).collect() };
        serde_json::json!({
            "variable": self.variable_name(),
            "initialIdeal": polys(self.in_y.generators()),
            "link": polys(self.link.generators()),
            "deletion": polys(self.deletion.generators()),
            "pairs": self.pairs.iter().map(|(q, r)| {
                serde_json::json!({"q": q.to_string(), "r": r.to_string()})
            }).collect::<Vec<_>>(),
            "hPart": polys(&self.h_part),
            "condition1": self.condition1,
            "condition2": match self.condition2 {
                Condition2::Holds => "holds",
                Condition2::HoldsByDegenerateEquality => "holds-by-degenerate-equality",
                Condition2::Inconclusive => "inconclusive",
            },
            "degeneracy": match self.degeneracy {
                Degeneracy::DegenerateUnitLink => "degenerate-unit-link",
                Degeneracy::DegenerateEqualRadicals => "degenerate-equal-radicals",
                Degeneracy::Nondegenerate => "nondegenerate",
                Degeneracy::NotAGvd => "not-a-gvd",
            },
        })
    }
}

/// Splits `f = y·q + r` by the `y`-exponent; `f` must be at most linear.
fn split_linear(f: &Polynomial, y: usize, ring: &Ring) -> (Polynomial, Polynomial) {
    let mut q_terms = Vec::new();
    let mut r_terms = Vec::new();
    for (m, c) in f.terms() {
        match m.exponent(y) {
            0 => r_terms.push((m.clone(), *c)),
            1 => {
                let mut exps = m.exponents().to_vec();
                exps[y] = 0;
                q_terms.push((crate::monomial::Monomial::from_exponents(&exps), *c));
            }
            _ => unreachable!("split_linear on an element of y-degree >= 2"),
        }
    }
    (
        Polynomial::from_terms(ring.clone(), q_terms),
        Polynomial::from_terms(ring.clone(), r_terms),
    )
}

/// Decomposes `I` at the variable `y`. The reduced basis is taken under
/// the order comparing the `y`-exponent first with ties under the ring
/// order; its initial forms generate `in_y(I)`. When every element is at
/// most linear in `y` the link and deletion are read off the basis as
/// `(q_1..q_k, h_1..h_l)` and `(h_1..h_l)`; otherwise condition (1) fails
/// and they fall back to the definitional saturation and elimination.
pub fn decompose(ideal: &Ideal, y: usize) -> Result<GvdDecomposition> {
    let ring = ideal.ring().clone();
    if y >= ring.nvars() {
        return Err(Error::UnknownVariable(format!("#{y}")));
    }
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let order = TermOrder::var_then(y, ring.order().clone());
    let gb = ideal.gb(&order)?;

    let condition1 = gb.elements().iter().all(|g| g.degree_in(y) <= 1);
    let in_gens: Vec<Polynomial> = gb.elements().iter().map(|g| g.initial_form(y)).collect();
    let in_y = Ideal::new(ring.clone(), in_gens)?;

    let mut pairs = Vec::new();
    let mut h_part = Vec::new();
    for g in gb.elements() {
        if g.degree_in(y) == 1 {
            pairs.push(split_linear(g, y, &ring));
        } else if g.degree_in(y) == 0 {
            h_part.push(g.clone());
        }
    }

    let (link, deletion) = if condition1 {
        let mut link_gens: Vec<Polynomial> = pairs.iter().map(|(q, _)| q.clone()).collect();
        link_gens.extend(h_part.iter().cloned());
        (
            Ideal::new(ring.clone(), link_gens)?,
            Ideal::new(ring.clone(), h_part.clone())?,
        )
    } else {
        let yvar = Ideal::new(ring.clone(), vec![ring.var_poly(y)])?;
        let link = in_y.saturate(&yvar)?;
        let keep: Vec<usize> = (0..ring.nvars()).filter(|&v| v != y).collect();
        let del_gens = groebner::eliminate(ideal.generators(), &keep, false)?;
        (link, Ideal::new(ring.clone(), del_gens)?)
    };

    let mut d = GvdDecomposition {
        ideal: ideal.clone(),
        y,
        gb,
        in_y,
        link,
        deletion,
        pairs,
        h_part,
        condition1,
        condition2: Condition2::Inconclusive,
        degeneracy: Degeneracy::NotAGvd,
    };
    if condition1 {
        d.degeneracy = classify_degeneracy(&d)?;
        d.condition2 = check_condition2(&d)?;
    }
    Ok(d)
}

/// Degenerate when the link is the unit ideal or when link and deletion
/// have equal radicals (tested by mutual radical membership of the
/// generators); nondegenerate otherwise. Requires condition (1).
pub fn classify_degeneracy(d: &GvdDecomposition) -> Result<Degeneracy> {
    if !d.condition1 {
        return Ok(Degeneracy::NotAGvd);
    }
    if d.link.is_unit()? {
        return Ok(Degeneracy::DegenerateUnitLink);
    }
    if equal_radicals(&d.link, &d.deletion)? {
        return Ok(Degeneracy::DegenerateEqualRadicals);
    }
    Ok(Degeneracy::Nondegenerate)
}

fn equal_radicals(a: &Ideal, b: &Ideal) -> Result<bool> {
    for g in a.generators() {
        if !b.radical_member(g)? {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !a.radical_member(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conservative three-step decision for "no minimal prime of the link is
/// a minimal prime of the deletion":
/// (a) `N : C = N` — no associated prime of `N` contains `C`;
/// (b) mutual radical membership — the degenerate-equality reading;
/// (c) saturate `N` away from `V(C)` and back toward it, then compare
///     dimensions; a strict drop separates the components. Anything else
///     is inconclusive.
pub fn check_condition2(d: &GvdDecomposition) -> Result<Condition2> {
    if !d.condition1 {
        return Ok(Condition2::Inconclusive);
    }
    let n = &d.deletion;
    let c = &d.link;
    if n.quotient(c)?.equals(n)? {
        return Ok(Condition2::Holds);
    }
    if equal_radicals(c, n)? {
        return Ok(Condition2::HoldsByDegenerateEquality);
    }
    if c.is_unit()? {
        return Ok(Condition2::Holds);
    }
    let away = n.saturate(c)?;
    let toward = n.saturate(&away)?;
    if toward.is_unit()? {
        return Ok(Condition2::Holds);
    }
    if toward.dimension()? < c.dimension()? {
        return Ok(Condition2::Holds);
    }
    Ok(Condition2::Inconclusive)
}

/// Which branch a tree child came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Link,
    Deletion,
}

/// Why a node became a leaf, or that it was decomposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeStatus {
    TerminalZero,
    TerminalUnit,
    /// Generated by a subset of the variables.
    TerminalVariables,
    /// Condition (1) fails here: not decomposable along this sequence.
    NotGvdHere,
    /// The requested variable list was exhausted.
    VariablesExhausted,
    Decomposed,
}

/// A node of the decomposition tree. Ideals at non-root nodes live in the
/// contracted ring obtained by dropping the decomposed variables; the path
/// records the link/deletion choices that led here.
#[derive(Debug)]
pub struct GvdNode {
    pub ring: Ring,
    pub ideal: Ideal,
    pub path: Vec<(String, Branch)>,
    pub status: NodeStatus,
    pub decomposition: Option<GvdDecomposition>,
    pub children: Vec<GvdNode>,
    /// Unmixedness is a caller-supplied assertion, recorded not verified.
    pub asserted_unmixed: bool,
}

impl GvdNode {
    pub fn path_label(&self) -> String {
        if self.path.is_empty() {
            return "root".to_string();
        }
        self.path
            .iter()
            .rev()
            .map(|(v, b)| match b {
                Branch::Link => format!("lk_{v}"),
                Branch::Deletion => format!("del_{v}"),
            })
            .collect::<Vec<_>>()
            .join(" ∘ ")
    }

    pub fn leaves(&self) -> Vec<&GvdNode> {
        if self.children.is_empty() {
            vec![self]
        } else {
            self.children.iter().flat_map(|c| c.leaves()).collect()
        }
    }

    /// Extends this node's ideal back to an ancestor ring containing the
    /// node's variables under the same names.
    pub fn ideal_in(&self, ambient: &Ring) -> Result<Ideal> {
        let map: Vec<Option<usize>> = self
            .ring
            .variables()
            .iter()
            .map(|name| ambient.var(name).map(Some))
            .collect::<Result<Vec<_>>>()?;
        let gens = self
            .ideal
            .generators()
            .iter()
            .map(|g| g.map_ring(ambient, &map))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ambient.clone(), gens)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "path": self.path_label(),
            "ring": self.ring.to_string(),
            "ideal": self.ideal.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "status": match self.status {
                NodeStatus::TerminalZero => "terminal-zero",
                NodeStatus::TerminalUnit => "terminal-unit",
                NodeStatus::TerminalVariables => "terminal-variables",
                NodeStatus::NotGvdHere => "not-lex-compatibly-gvd-at-this-branch",
                NodeStatus::VariablesExhausted => "variables-exhausted",
                NodeStatus::Decomposed => "decomposed",
            },
            "assertedUnmixed": self.asserted_unmixed,
            "decomposition": self.decomposition.as_ref().map(|d| d.to_json()),
            "children": self.children.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// True when the reduced canonical basis consists of single variables.
fn is_variable_generated(ideal: &Ideal) -> Result<bool> {
    let gb = ideal.canonical_gb()?;
    Ok(!gb.elements().is_empty()
        && gb
            .elements()
            .iter()
            .all(|g| g.num_terms() == 1 && g.terms()[0].0.total_degree() == 1))
}

fn terminal_status(ideal: &Ideal) -> Result<Option<NodeStatus>> {
    if ideal.is_zero()? {
        return Ok(Some(NodeStatus::TerminalZero));
    }
    if ideal.is_unit()? {
        return Ok(Some(NodeStatus::TerminalUnit));
    }
    if is_variable_generated(ideal)? {
        return Ok(Some(NodeStatus::TerminalVariables));
    }
    Ok(None)
}

/// Recursively decomposes at the listed variables in order, contracting
/// the link and deletion to the ring without the decomposed variable at
/// each step. Stops early at `(0)`, `(1)` and variable-generated ideals;
/// a node where condition (1) fails is marked rather than recursed into.
pub fn lex_gvd_tree(ideal: &Ideal, variables: &[&str], asserted_unmixed: bool) -> Result<GvdNode> {
    build_tree(
        ideal.ring().clone(),
        ideal.clone(),
        Vec::new(),
        variables,
        asserted_unmixed,
    )
}

fn build_tree(
    ring: Ring,
    ideal: Ideal,
    path: Vec<(String, Branch)>,
    variables: &[&str],
    asserted_unmixed: bool,
) -> Result<GvdNode> {
    if let Some(status) = terminal_status(&ideal)? {
        return Ok(GvdNode {
            ring,
            ideal,
            path,
            status,
            decomposition: None,
            children: Vec::new(),
            asserted_unmixed,
        });
    }
    let Some((head, rest)) = variables.split_first() else {
        return Ok(GvdNode {
            ring,
            ideal,
            path,
            status: NodeStatus::VariablesExhausted,
            decomposition: None,
            children: Vec::new(),
            asserted_unmixed,
        });
    };
    let y = ring.var(head)?;
    let d = decompose(&ideal, y)?;
    if !d.condition1() {
        return Ok(GvdNode {
            ring,
            ideal,
            path,
            status: NodeStatus::NotGvdHere,
            decomposition: Some(d),
            children: Vec::new(),
            asserted_unmixed,
        });
    }
    let (small, var_map) = ring.without_var(y)?;
    let contract = |i: &Ideal| -> Result<Ideal> {
        let gens = i
            .generators()
            .iter()
            .map(|g| g.map_ring(&small, &var_map))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(small.clone(), gens)
    };
    let link_c = contract(d.link())?;
    let deletion_c = contract(d.deletion())?;
    let mut link_path = path.clone();
    link_path.push((head.to_string(), Branch::Link));
    let mut del_path = path.clone();
    del_path.push((head.to_string(), Branch::Deletion));
    // Deletion first, matching the left-to-right reading of the tree.
    let children = vec![
        build_tree(small.clone(), deletion_c, del_path, rest, asserted_unmixed)?,
        build_tree(small.clone(), link_c, link_path, rest, asserted_unmixed)?,
    ];
    Ok(GvdNode {
        ring,
        ideal,
        path,
        status: NodeStatus::Decomposed,
        decomposition: Some(d),
        children,
        asserted_unmixed,
    })
}
