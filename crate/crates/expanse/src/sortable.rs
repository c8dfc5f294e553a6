//! The sorting operator on equal-degree monomial pairs, sortability of a
//! configuration, and the sorting relations as toric generators.

use crate::error::{Error, Result};
use crate::expansion::{contract_vector, expand_set, ExpansionShape};
use crate::monoset::MonomialSet;
use crate::order::TermOrder;
use crate::toric::{generates, Budget, YBinomial};
use crate::vector::ExponentVector;

/// Merges the variable occurrences of `u·v` in weakly increasing variable
/// order and deals them out alternately: odd positions to the first output,
/// even positions to the second. The outputs sum to `u + v` and are already
/// sorted.
pub fn sort_pair(u: &ExponentVector, v: &ExponentVector) -> Result<(ExponentVector, ExponentVector)> {
    if u.modulus() != v.modulus() {
        return Err(Error::ModulusMismatch { expected: u.modulus(), found: v.modulus() });
    }
    let product = u.plus(v);
    let mut first = vec![0u32; u.dim()];
    let mut second = vec![0u32; u.dim()];
    let mut odd = true;
    for i in 0..u.dim() {
        for _ in 0..product.entry(i) {
            if odd {
                first[i] += 1;
            } else {
                second[i] += 1;
            }
            odd = !odd;
        }
    }
    Ok((ExponentVector::new(first), ExponentVector::new(second)))
}

/// A pair whose sorted image leaves the configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SortWitness {
    pub pair: (ExponentVector, ExponentVector),
    pub image: (ExponentVector, ExponentVector),
}

/// Whether the configuration is closed under the sorting operator. `None`
/// means sortable; otherwise the lexicographically least violating pair is
/// returned.
pub fn is_sortable(a: &MonomialSet) -> Result<Option<SortWitness>> {
    let Some(_) = a.equidegree() else {
        let d = a.member(0).modulus();
        let bad = a.iter().find(|m| m.modulus() != d).expect("unequal modulus");
        return Err(Error::ModulusMismatch { expected: d, found: bad.modulus() });
    };
    for (i, u) in a.iter().enumerate() {
        for v in a.members()[i..].iter() {
            let (s, t) = sort_pair(u, v)?;
            if !a.contains(&s) || !a.contains(&t) {
                return Ok(Some(SortWitness {
                    pair: (u.clone(), v.clone()),
                    image: (s, t),
                }));
            }
        }
    }
    Ok(None)
}

/// The nonzero binomials `y_u y_v − y_{u'} y_{v'}` over unordered pairs whose
/// sorted image differs from the pair itself, sign-normalized under the order
/// induced by `base`.
pub fn sorting_relations(a: &MonomialSet, base: &TermOrder) -> Result<Vec<YBinomial>> {
    if is_sortable(a)?.is_some() {
        return Err(Error::InvalidInput("configuration is not sortable".into()));
    }
    let order = TermOrder::induced_sharp(base.base().clone(), a)?;
    let mut out = std::collections::BTreeSet::new();
    for (i, u) in a.iter().enumerate() {
        for (off, v) in a.members()[i..].iter().enumerate() {
            let j = i + off;
            let (s, t) = sort_pair(u, v)?;
            let is_idx = a.index_of(&s).expect("sortable");
            let it_idx = a.index_of(&t).expect("sortable");
            if let Some(b) = YBinomial::normalized(vec![i, j], vec![is_idx, it_idx], a, &order)? {
                out.insert(b);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// The sortability transfer: a configuration and its expansion are sortable
/// together.
pub fn verify_theorem_sort(a: &MonomialSet, shape: &ExpansionShape) -> Result<bool> {
    let before = is_sortable(a)?.is_none();
    let expanded = expand_set(a, shape)?;
    let after = is_sortable(expanded.set())?.is_none();
    Ok(before == after)
}

/// For a sortable configuration the sorting relations generate the whole
/// toric ideal; this checks that consequence mechanically.
pub fn verify_sorting_generation(
    a: &MonomialSet,
    base: &TermOrder,
    budget: &mut Budget,
) -> Result<bool> {
    let relations = sorting_relations(a, base)?;
    generates(&relations, a, base, budget)
}

/// Sorting commutes with the block-sum contraction: contracting the sorted
/// image of an expanded pair equals sorting the contracted pair.
pub fn sort_commutes_with_contraction(
    a: &MonomialSet,
    shape: &ExpansionShape,
) -> Result<bool> {
    let expanded = expand_set(a, shape)?;
    let set = expanded.set();
    for (i, u) in set.iter().enumerate() {
        for v in set.members()[i..].iter() {
            let (s, t) = sort_pair(u, v)?;
            let (cs, ct) = (contract_vector(&s, shape)?, contract_vector(&t, shape)?);
            let (ds, dt) = sort_pair(&contract_vector(u, shape)?, &contract_vector(v, shape)?)?;
            if (cs, ct) != (ds, dt) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::DEFAULT_BUDGET;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(entries)
    }

    fn set(dim: usize, rows: &[&[u32]]) -> MonomialSet {
        MonomialSet::new(dim, rows.iter().map(|r| ev(r)).collect()).unwrap()
    }

    fn budget() -> Budget {
        Budget::new(DEFAULT_BUDGET)
    }

    #[test]
    fn sort_pair_examples() {
        let u = ev(&[1, 2, 0]);
        assert_eq!(sort_pair(&u, &u).unwrap(), (u.clone(), u.clone()));

        // x1x2^2 with x2x3^2 merges to x1 x2 x2 x2 x3 x3
        let (s, t) = sort_pair(&ev(&[1, 2, 0]), &ev(&[0, 1, 2])).unwrap();
        assert_eq!((s, t), (ev(&[1, 1, 1]), ev(&[0, 2, 1])));

        let (s, t) = sort_pair(&ev(&[2, 0]), &ev(&[0, 2])).unwrap();
        assert_eq!((s, t), (ev(&[1, 1]), ev(&[1, 1])));
    }

    #[test]
    fn sort_pair_is_idempotent_and_sum_preserving() {
        let grid: Vec<ExponentVector> = (0..=3u32)
            .flat_map(|a| (0..=3u32).map(move |b| ExponentVector::new(vec![a, b, 3])))
            .collect();
        for u in &grid {
            for v in &grid {
                if u.modulus() != v.modulus() {
                    continue;
                }
                let (s, t) = sort_pair(u, v).unwrap();
                assert_eq!(s.plus(&t), u.plus(v));
                assert_eq!(sort_pair(&s, &t).unwrap(), (s.clone(), t.clone()));
                // unordered symmetry
                assert_eq!(sort_pair(v, u).unwrap(), (s, t));
            }
        }
    }

    #[test]
    fn sort_pair_rejects_unequal_modulus() {
        assert!(matches!(
            sort_pair(&ev(&[1, 0]), &ev(&[1, 1])),
            Err(Error::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn is_sortable_examples() {
        let all_deg2 = set(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(is_sortable(&all_deg2).unwrap(), None);

        let gap = set(2, &[&[2, 0], &[0, 2]]);
        let w = is_sortable(&gap).unwrap().expect("witness");
        assert_eq!(w.image, (ev(&[1, 1]), ev(&[1, 1])));

        let single = set(3, &[&[1, 1, 1]]);
        assert_eq!(is_sortable(&single).unwrap(), None);
    }

    #[test]
    fn sorting_relations_examples() {
        let all_deg2 = set(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let rels = sorting_relations(&all_deg2, &TermOrder::lex(2)).unwrap();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].degree(), 2);

        // a sorted-closed configuration with every pair already sorted
        let chain = set(2, &[&[1, 1]]);
        assert!(sorting_relations(&chain, &TermOrder::lex(2)).unwrap().is_empty());

        // all degree-2 monomials in three variables: six relations
        let veronese = set(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
        let rels = sorting_relations(&veronese, &TermOrder::lex(3)).unwrap();
        assert_eq!(rels.len(), 6);
    }

    #[test]
    fn sorting_relations_require_sortable() {
        let gap = set(2, &[&[2, 0], &[0, 2]]);
        assert!(sorting_relations(&gap, &TermOrder::lex(2)).is_err());
    }

    #[test]
    fn theorem_sort_examples() {
        let all_deg2 = set(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let shape = ExpansionShape::new(vec![2, 1]).unwrap();
        assert!(verify_theorem_sort(&all_deg2, &shape).unwrap());
        let expanded = expand_set(&all_deg2, &shape).unwrap();
        assert_eq!(is_sortable(expanded.set()).unwrap(), None);

        let gap = set(2, &[&[2, 0], &[0, 2]]);
        let shape = ExpansionShape::new(vec![2, 2]).unwrap();
        assert!(verify_theorem_sort(&gap, &shape).unwrap());
        let expanded = expand_set(&gap, &shape).unwrap();
        assert!(is_sortable(expanded.set()).unwrap().is_some());

        assert!(verify_theorem_sort(&all_deg2, &ExpansionShape::identity(2)).unwrap());
    }

    #[test]
    fn sorting_generation_examples() {
        let all_deg2 = set(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(verify_sorting_generation(&all_deg2, &TermOrder::lex(2), &mut budget()).unwrap());

        let veronese = set(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
        assert!(verify_sorting_generation(&veronese, &TermOrder::lex(3), &mut budget()).unwrap());

        // an expanded sortable set stays sortable and its relations generate
        let shape = ExpansionShape::new(vec![2, 1]).unwrap();
        let expanded = expand_set(&all_deg2, &shape).unwrap();
        assert!(
            verify_sorting_generation(expanded.set(), &TermOrder::lex(3), &mut budget()).unwrap()
        );
    }

    #[test]
    fn contraction_compatibility() {
        let all_deg2 = set(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        for blocks in [[2u32, 1], [2, 2], [3, 1]] {
            let shape = ExpansionShape::new(blocks.to_vec()).unwrap();
            assert!(sort_commutes_with_contraction(&all_deg2, &shape).unwrap());
        }
    }
}
