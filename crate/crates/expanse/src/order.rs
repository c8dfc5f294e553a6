//! Term orders on monomials: lexicographic, block elimination, and the order
//! induced on `y`-variables by comparing their underlying monomials.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monoset::MonomialSet;
use crate::vector::ExponentVector;

/// A total order on monomials of a fixed ambient dimension.
///
/// All three kinds compare lexicographically along a priority sequence of
/// variable indices, which is what makes a single comparison routine serve
/// the whole crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// Lexicographic order; `perm[0]` is the most significant variable.
    Lex(Vec<usize>),
    /// Block order: the `outer` block of variables is compared first and any
    /// difference there decides, so the outer block is eliminated by a
    /// Gröbner basis intersection with the inner subring.
    Elimination {
        outer: Box<TermOrder>,
        inner: Box<TermOrder>,
    },
    /// Order on monomials in the `y`-variables of a configuration: `y_u > y_v`
    /// exactly when `u > v` under the base order, extended lexicographically
    /// to `y`-monomials. `priority` lists the `y`-variable indices from most
    /// significant down, as computed from the base order.
    InducedSharp {
        base: Box<TermOrder>,
        priority: Vec<usize>,
    },
}

impl TermOrder {
    /// Plain lexicographic order `x1 > x2 > … > xn`.
    pub fn lex(dim: usize) -> Self {
        TermOrder::Lex((0..dim).collect())
    }

    /// Lexicographic order along an explicit variable priority.
    pub fn lex_perm(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &i in &perm {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation { expected: n });
            }
            seen[i] = true;
        }
        Ok(TermOrder::Lex(perm))
    }

    /// Elimination order with the `outer` block ahead of the `inner` block.
    pub fn elimination(outer: TermOrder, inner: TermOrder) -> Self {
        TermOrder::Elimination {
            outer: Box::new(outer),
            inner: Box::new(inner),
        }
    }

    /// The order on `y`-variables of `config` induced by `base`: variables are
    /// ranked by their underlying monomials, largest first. Distinct members
    /// yield distinct ranks, so `y_u = y_v` only when `u = v`.
    pub fn induced_sharp(base: TermOrder, config: &MonomialSet) -> Result<Self> {
        if base.dim() != config.dim() {
            return Err(Error::DimensionMismatch {
                expected: config.dim(),
                found: base.dim(),
            });
        }
        let mut priority: Vec<usize> = (0..config.len()).collect();
        priority.sort_by(|&a, &b| {
            base.cmp_raw(config.member(a).entries(), config.member(b).entries())
                .reverse()
        });
        Ok(TermOrder::InducedSharp {
            base: Box::new(base),
            priority,
        })
    }

    /// Ambient dimension of the monomials this order compares.
    pub fn dim(&self) -> usize {
        match self {
            TermOrder::Lex(perm) => perm.len(),
            TermOrder::Elimination { outer, inner } => outer.dim() + inner.dim(),
            TermOrder::InducedSharp { priority, .. } => priority.len(),
        }
    }

    /// Total comparison of two exponent vectors under this order.
    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        a.check_dim(self.dim())?;
        b.check_dim(self.dim())?;
        Ok(self.cmp_raw(a.entries(), b.entries()))
    }

    pub(crate) fn cmp_raw(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex(perm) => cmp_by_priority(perm, a, b),
            TermOrder::Elimination { outer, inner } => {
                let split = outer.dim();
                outer
                    .cmp_raw(&a[..split], &b[..split])
                    .then_with(|| inner.cmp_raw(&a[split..], &b[split..]))
            }
            TermOrder::InducedSharp { priority, .. } => cmp_by_priority(priority, a, b),
        }
    }

    /// Flattens the order into a lex priority sequence over its ambient
    /// variables. Every order of this crate admits one.
    pub(crate) fn to_priority(&self) -> Vec<usize> {
        match self {
            TermOrder::Lex(perm) => perm.clone(),
            TermOrder::Elimination { outer, inner } => {
                let split = outer.dim();
                let mut p = outer.to_priority();
                p.extend(inner.to_priority().into_iter().map(|i| i + split));
                p
            }
            TermOrder::InducedSharp { priority, .. } => priority.clone(),
        }
    }

    /// The base monomial order of an induced order, or the order itself.
    pub fn base(&self) -> &TermOrder {
        match self {
            TermOrder::InducedSharp { base, .. } => base,
            other => other,
        }
    }
}

fn cmp_by_priority(priority: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &i in priority {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::ExponentVector;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(entries)
    }

    #[test]
    fn lex_first_coordinate_decides() {
        let ord = TermOrder::lex(2);
        assert_eq!(ord.compare(&ev(&[2, 0]), &ev(&[1, 5])).unwrap(), Ordering::Greater);
        assert_eq!(ord.compare(&ev(&[1, 1]), &ev(&[1, 1])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn permuted_lex_reverses_verdict() {
        let ord = TermOrder::lex_perm(vec![1, 0]).unwrap();
        assert_eq!(ord.compare(&ev(&[2, 0]), &ev(&[1, 5])).unwrap(), Ordering::Less);
    }

    #[test]
    fn compare_rejects_dimension_mismatch() {
        let ord = TermOrder::lex(2);
        assert!(ord.compare(&ev(&[1, 2, 3]), &ev(&[1, 2])).is_err());
    }

    #[test]
    fn bad_permutation_rejected() {
        assert!(TermOrder::lex_perm(vec![0, 0]).is_err());
        assert!(TermOrder::lex_perm(vec![1, 2]).is_err());
    }

    #[test]
    fn induced_sharp_ranks_by_underlying_monomial() {
        let config = MonomialSet::new(
            2,
            vec![ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])],
        )
        .unwrap();
        let ord = TermOrder::induced_sharp(TermOrder::lex(2), &config).unwrap();
        // members are stored sorted: [0,2] < [1,1] < [2,0]; under lex the
        // largest monomial is (2,0) at index 2.
        let TermOrder::InducedSharp { priority, .. } = &ord else {
            panic!("expected induced order")
        };
        assert_eq!(priority, &[2, 1, 0]);
        // y_(2,0) beats y_(1,1)^2 at the most significant variable
        assert_eq!(
            ord.compare(&ev(&[0, 0, 1]), &ev(&[0, 2, 0])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn elimination_outer_block_dominates() {
        let ord = TermOrder::elimination(TermOrder::lex(2), TermOrder::lex(1));
        // (0,1 | 0) vs (0,0 | 9): outer block decides
        assert_eq!(
            ord.compare(&ev(&[0, 1, 0]), &ev(&[0, 0, 9])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(ord.to_priority(), vec![0, 1, 2]);
    }

    #[test]
    fn compare_is_total_and_multiplicative() {
        // exhaustive over a small grid: antisymmetry, transitivity and
        // compatibility with multiplication
        let ord = TermOrder::lex_perm(vec![1, 0]).unwrap();
        let grid: Vec<ExponentVector> = (0..3u32)
            .flat_map(|a| (0..3u32).map(move |b| ExponentVector::new(vec![a, b])))
            .collect();
        for u in &grid {
            for v in &grid {
                let uv = ord.compare(u, v).unwrap();
                assert_eq!(uv, ord.compare(v, u).unwrap().reverse());
                assert_eq!(uv == Ordering::Equal, u == v);
                for w in &grid {
                    assert_eq!(ord.compare(&u.plus(w), &v.plus(w)).unwrap(), uv);
                    if uv != Ordering::Greater && ord.compare(v, w).unwrap() != Ordering::Greater {
                        assert_ne!(ord.compare(u, w).unwrap(), Ordering::Greater);
                    }
                }
            }
        }
    }
}
