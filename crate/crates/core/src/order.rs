//! Term orders on monomials.

use crate::monomial::Monomial;
use std::cmp::Ordering;

/// A total order on monomials compatible with multiplication.
///
/// `priority` vectors list variable indices from greatest to least.
/// The composite variants cover the two orders the library manufactures
/// internally: `VarThen` compares the degree in one distinguished variable
/// first (a pure-lex-with-`y`-largest refinement of the weight vector
/// `e_y`), and `BlockThen` is a block elimination order (graded reverse
/// lexicographic inside the eliminated block, then the inner order).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex { priority: Vec<usize> },
    Grevlex { priority: Vec<usize> },
    WeightThenLex { weight: Vec<u32>, priority: Vec<usize> },
    VarThen { var: usize, inner: Box<TermOrder> },
    BlockThen { block: Vec<usize>, inner: Box<TermOrder> },
}

impl TermOrder {
    pub fn lex(nvars: usize) -> TermOrder {
        TermOrder::Lex { priority: (0..nvars).collect() }
    }

    pub fn grevlex(nvars: usize) -> TermOrder {
        TermOrder::Grevlex { priority: (0..nvars).collect() }
    }

    pub fn weight_then_lex(weight: Vec<u32>) -> TermOrder {
        let n = weight.len();
        TermOrder::WeightThenLex { weight, priority: (0..n).collect() }
    }

    /// Degree in `var` first, ties broken by `inner`. With `inner` a term
    /// order this refines the weight vector that is the standard basis
    /// vector at `var`; with `inner = lex` it is a lexicographic order in
    /// which `var` is the largest variable.
    pub fn var_then(var: usize, inner: TermOrder) -> TermOrder {
        TermOrder::VarThen { var, inner: Box::new(inner) }
    }

    pub fn block_then(block: Vec<usize>, inner: TermOrder) -> TermOrder {
        TermOrder::BlockThen { block, inner: Box::new(inner) }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex { priority } => cmp_lex(priority, a, b),
            TermOrder::Grevlex { priority } => cmp_grevlex(priority, a, b),
            TermOrder::WeightThenLex { weight, priority } => {
                let wa: u64 = weight.iter().zip(a.exponents()).map(|(&w, &e)| w as u64 * e as u64).sum();
                let wb: u64 = weight.iter().zip(b.exponents()).map(|(&w, &e)| w as u64 * e as u64).sum();
                wa.cmp(&wb).then_with(|| cmp_lex(priority, a, b))
            }
            TermOrder::VarThen { var, inner } => {
                a.exponent(*var).cmp(&b.exponent(*var)).then_with(|| inner.compare(a, b))
            }
            TermOrder::BlockThen { block, inner } => {
                cmp_grevlex(block, a, b).then_with(|| inner.compare(a, b))
            }
        }
    }

    /// Rewrites variable indices for a ring extension or contraction.
    /// Dropped (`None`) variables disappear from priorities and weights.
    pub fn map_vars(&self, var_map: &[Option<usize>]) -> TermOrder {
        let remap = |priority: &[usize]| -> Vec<usize> {
            priority.iter().filter_map(|&v| var_map[v]).collect()
        };
        match self {
            TermOrder::Lex { priority } => TermOrder::Lex { priority: remap(priority) },
            TermOrder::Grevlex { priority } => TermOrder::Grevlex { priority: remap(priority) },
            TermOrder::WeightThenLex { weight, priority } => {
                let mut neww = vec![0u32; var_map.iter().flatten().count().max(remap(priority).len())];
                for (i, &w) in weight.iter().enumerate() {
                    if let Some(j) = var_map[i] {
                        neww[j] = w;
                    }
                }
                TermOrder::WeightThenLex { weight: neww, priority: remap(priority) }
            }
            TermOrder::VarThen { var, inner } => match var_map[*var] {
                Some(v) => TermOrder::VarThen { var: v, inner: Box::new(inner.map_vars(var_map)) },
                None => inner.map_vars(var_map),
            },
            TermOrder::BlockThen { block, inner } => TermOrder::BlockThen {
                block: remap(block),
                inner: Box::new(inner.map_vars(var_map)),
            },
        }
    }

    /// All variable indices the order mentions must lie below `nvars`, and
    /// plain orders must rank every variable exactly once.
    pub fn is_valid_for(&self, nvars: usize) -> bool {
        fn is_perm(p: &[usize], n: usize) -> bool {
            let mut seen = vec![false; n];
            p.len() == n
                && p.iter().all(|&v| {
                    v < n && !std::mem::replace(&mut seen[v], true)
                })
        }
        match self {
            TermOrder::Lex { priority } | TermOrder::Grevlex { priority } => is_perm(priority, nvars),
            TermOrder::WeightThenLex { weight, priority } => {
                weight.len() == nvars && is_perm(priority, nvars)
            }
            TermOrder::VarThen { var, inner } => *var < nvars && inner.is_valid_for(nvars),
            TermOrder::BlockThen { block, inner } => {
                block.iter().all(|&v| v < nvars) && inner.is_valid_for(nvars)
            }
        }
    }
}

fn cmp_lex(priority: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    for &v in priority {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Graded reverse lexicographic restricted to the listed variables:
/// higher total degree wins; on ties the monomial with the *smaller*
/// exponent at the least variable (scanning the priority list backwards)
/// is the larger one.
fn cmp_grevlex(priority: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = priority.iter().map(|&v| a.exponent(v) as u32).sum();
    let db: u32 = priority.iter().map(|&v| b.exponent(v) as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for &v in priority.iter().rev() {
        match a.exponent(v).cmp(&b.exponent(v)) {
            Ordering::Equal => {}
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn lex_order() {
        let o = TermOrder::lex(3);
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1, 0]), &m(&[1, 0, 5])), Ordering::Greater);
    }

    #[test]
    fn grevlex_order() {
        let o = TermOrder::grevlex(3);
        // x^2yz > xy^2z: equal degree, smaller exponent at the last
        // differing variable (scanning from the least variable) wins.
        assert_eq!(o.compare(&m(&[2, 1, 1]), &m(&[1, 2, 1])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.compare(&m(&[0, 0, 3]), &m(&[1, 1, 0])), Ordering::Greater);
        // classic: x*z vs y^2 in grevlex(x>y>z): equal degree, z-exponents
        // differ, x*z has the larger z-exponent so it is smaller.
        assert_eq!(o.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn weight_refinement() {
        // weight = e_1: degree in variable 1 first.
        let o = TermOrder::weight_then_lex(vec![0, 1, 0]);
        assert_eq!(o.compare(&m(&[0, 1, 0]), &m(&[9, 0, 9])), Ordering::Greater);
        let v = TermOrder::var_then(1, TermOrder::lex(3));
        assert_eq!(v.compare(&m(&[0, 1, 0]), &m(&[9, 0, 9])), Ordering::Greater);
        assert_eq!(v.compare(&m(&[1, 1, 0]), &m(&[0, 1, 9])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates() {
        // Eliminate variable 0: anything containing it beats anything that
        // does not.
        let o = TermOrder::block_then(vec![0], TermOrder::grevlex(3));
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
    }

    #[test]
    fn multiplicativity_spot_check() {
        let orders = [TermOrder::lex(3), TermOrder::grevlex(3), TermOrder::var_then(2, TermOrder::lex(3))];
        let ms = [m(&[1, 2, 0]), m(&[0, 1, 1]), m(&[2, 0, 1]), m(&[0, 0, 0])];
        for o in &orders {
            for a in &ms {
                for b in &ms {
                    for c in &ms {
                        let ab = o.compare(a, b);
                        assert_eq!(o.compare(&a.mul(c), &b.mul(c)), ab);
                    }
                }
            }
        }
    }
}
