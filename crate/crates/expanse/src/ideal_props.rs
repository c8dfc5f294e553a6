//! Decision procedures on monomial ideals: polymatroidal, weakly
//! polymatroidal, linear quotients and k-decomposability.
//!
//! The order searches are exhaustive with pruning, never heuristic: the
//! transfer theorems are iff-statements, so a wrong "absent" would poison the
//! harnesses. Sizes beyond the configured limits are explicit errors.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::monoset::MonomialIdeal;
use crate::vector::ExponentVector;

/// Default cap on the ambient dimension for the weakly-polymatroidal order
/// search.
pub const WP_SEARCH_LIMIT: usize = 8;
/// Default cap on the number of generators for the linear-quotients order
/// search.
pub const LQ_SEARCH_LIMIT: usize = 10;
/// Default cap on the number of generators for the shedding-monomial search.
pub const KDECOMP_LIMIT: usize = 10;

/// Equigenerated with the exchange property: for all generators `u, v` and
/// every `i` with `u(i) > v(i)` there is `j` with `u(j) < v(j)` such that
/// `u − ε_i + ε_j` is again a generator.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    let gens = ideal.gens();
    if gens.len() <= 1 {
        return true;
    }
    if gens.equidegree().is_none() {
        return false;
    }
    for u in gens.iter() {
        for v in gens.iter() {
            for i in 0..ideal.dim() {
                if u.entry(i) <= v.entry(i) {
                    continue;
                }
                let ok = (0..ideal.dim()).any(|j| {
                    u.entry(j) < v.entry(j)
                        && u.try_swap(i, j).map_or(false, |w| gens.contains(&w))
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotAPermutation { expected: n });
    }
    let mut seen = vec![false; n];
    for &i in perm {
        if i >= n || seen[i] {
            return Err(Error::NotAPermutation { expected: n });
        }
        seen[i] = true;
    }
    Ok(())
}

/// Weak polymatroidality with respect to a fixed variable order: whenever the
/// first coordinate (in `var_order`) where two generators differ has
/// `u(t) > v(t)`, some later variable `j` with `v(j) > 0` repairs the descent,
/// meaning `x_t·(v/x_j)` lies in the ideal. Membership is tested against the
/// full ideal, not the generator set.
pub fn is_weakly_polymatroidal_wrt(ideal: &MonomialIdeal, var_order: &[usize]) -> Result<bool> {
    check_permutation(var_order, ideal.dim())?;
    let gens = ideal.gens();
    for u in gens.iter() {
        'pair: for v in gens.iter() {
            if u == v {
                continue;
            }
            for (pos, &t) in var_order.iter().enumerate() {
                if u.entry(t) == v.entry(t) {
                    continue;
                }
                if u.entry(t) < v.entry(t) {
                    // the mirrored pair handles this descent
                    continue 'pair;
                }
                let repaired = var_order[pos + 1..].iter().any(|&j| {
                    v.entry(j) > 0
                        && ideal.contains(&v.try_swap(j, t).expect("v(j) > 0"))
                });
                if !repaired {
                    return Ok(false);
                }
                continue 'pair;
            }
        }
    }
    Ok(true)
}

/// Searches for a variable order making the ideal weakly polymatroidal.
///
/// Backtracks over prefixes of the order; a prefix is extended by a variable
/// only when every generator pair whose first difference lands on it can
/// still be repaired by a later variable, and exhausted prefixes are memoized.
/// The witness is the first order in lexicographic enumeration.
pub fn find_weakly_polymatroidal_order(
    ideal: &MonomialIdeal,
    search_limit: usize,
) -> Result<Option<Vec<usize>>> {
    let n = ideal.dim();
    if n > search_limit || n > 64 {
        return Err(Error::SearchTooLarge { size: n, limit: search_limit.min(64) });
    }
    if ideal.num_gens() <= 1 {
        return Ok(Some((0..n).collect()));
    }

    let gens = ideal.gens();
    let pairs: Vec<(&ExponentVector, &ExponentVector)> = gens
        .iter()
        .flat_map(|u| gens.iter().map(move |v| (u, v)))
        .filter(|(u, v)| u != v)
        .collect();

    // appending t to the prefix set is allowed when each pair first differing
    // at t with u(t) > v(t) has a repairing j outside the prefix
    let can_append = |placed: u64, t: usize| -> bool {
        'pair: for &(u, v) in &pairs {
            for j in 0..n {
                if placed >> j & 1 == 1 && u.entry(j) != v.entry(j) {
                    continue 'pair; // first difference already handled earlier
                }
            }
            if u.entry(t) <= v.entry(t) {
                continue;
            }
            let ok = (0..n).any(|j| {
                j != t
                    && placed >> j & 1 == 0
                    && v.entry(j) > 0
                    && ideal.contains(&v.try_swap(j, t).expect("v(j) > 0"))
            });
            if !ok {
                return false;
            }
        }
        true
    };

    let mut dead: HashSet<u64> = HashSet::new();
    let mut prefix: Vec<usize> = Vec::with_capacity(n);

    fn dfs(
        placed: u64,
        n: usize,
        prefix: &mut Vec<usize>,
        dead: &mut HashSet<u64>,
        can_append: &dyn Fn(u64, usize) -> bool,
    ) -> bool {
        if prefix.len() == n {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        for t in 0..n {
            if placed >> t & 1 == 1 {
                continue;
            }
            if !can_append(placed, t) {
                continue;
            }
            prefix.push(t);
            if dfs(placed | 1 << t, n, prefix, dead, can_append) {
                return true;
            }
            prefix.pop();
        }
        dead.insert(placed);
        false
    }

    if dfs(0, n, &mut prefix, &mut dead, &can_append) {
        Ok(Some(prefix))
    } else {
        Ok(None)
    }
}

/// Linear quotients with respect to a fixed ordering of the minimal
/// generators: each colon ideal `(u_1,…,u_{j−1}) : (u_j)` is generated by
/// variables.
pub fn has_linear_quotients_wrt(ideal: &MonomialIdeal, ordering: &[usize]) -> Result<bool> {
    check_permutation(ordering, ideal.num_gens())?;
    let gens = ideal.gens();
    for (i, &gi) in ordering.iter().enumerate() {
        let ui = gens.member(gi);
        for &gj in &ordering[..i] {
            let qj = gens.member(gj).quotient_by_gcd(ui);
            let ok = ordering[..i].iter().any(|&gk| {
                let qk = gens.member(gk).quotient_by_gcd(ui);
                qk.modulus() == 1 && qk.divides(&qj)
            });
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for a generator ordering with linear quotients.
///
/// Whether a generator may come next depends only on the set of generators
/// already placed, so the backtracking memoizes exhausted prefix sets; the
/// witness is the first ordering in lexicographic enumeration.
pub fn find_linear_quotients_order(
    ideal: &MonomialIdeal,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    let r = ideal.num_gens();
    if r > limit || r > 64 {
        return Err(Error::SearchTooLarge { size: r, limit: limit.min(64) });
    }
    if r <= 1 {
        return Ok(Some((0..r).collect()));
    }
    let gens = ideal.gens();

    let can_append = |placed: u64, g: usize| -> bool {
        let ug = gens.member(g);
        let quotients: Vec<ExponentVector> = (0..r)
            .map(|k| gens.member(k).quotient_by_gcd(ug))
            .collect();
        for j in 0..r {
            if placed >> j & 1 == 0 {
                continue;
            }
            let ok = (0..r).any(|k| {
                placed >> k & 1 == 1
                    && quotients[k].modulus() == 1
                    && quotients[k].divides(&quotients[j])
            });
            if !ok {
                return false;
            }
        }
        true
    };

    let mut dead: HashSet<u64> = HashSet::new();
    let mut prefix: Vec<usize> = Vec::with_capacity(r);

    fn dfs(
        placed: u64,
        r: usize,
        prefix: &mut Vec<usize>,
        dead: &mut HashSet<u64>,
        can_append: &dyn Fn(u64, usize) -> bool,
    ) -> bool {
        if prefix.len() == r {
            return true;
        }
        if dead.contains(&placed) {
            return false;
        }
        for g in 0..r {
            if placed >> g & 1 == 1 || !can_append(placed, g) {
                continue;
            }
            prefix.push(g);
            if dfs(placed | 1 << g, r, prefix, dead, can_append) {
                return true;
            }
            prefix.pop();
        }
        dead.insert(placed);
        false
    }

    if dfs(0, r, &mut prefix, &mut dead, &can_append) {
        Ok(Some(prefix))
    } else {
        Ok(None)
    }
}

/// Witness of a k-decomposition: the shedding monomial at each node together
/// with certificates for the two sub-ideals it splits off.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SheddingCertificate {
    /// A principal ideal; the recursion bottoms out here.
    Principal,
    Shed {
        monomial: ExponentVector,
        /// Certificate for `I^u`, the generators `u` clashes with.
        upper: Box<SheddingCertificate>,
        /// Certificate for `I_u`, the generators `u` avoids.
        lower: Box<SheddingCertificate>,
    },
}

impl SheddingCertificate {
    /// Re-checks the certificate against the ideal it claims to decompose.
    pub fn verify(&self, ideal: &MonomialIdeal, k: usize) -> bool {
        match self {
            SheddingCertificate::Principal => ideal.num_gens() == 1,
            SheddingCertificate::Shed { monomial, upper, lower } => {
                if monomial.support().len() > k + 1 {
                    return false;
                }
                let Some((up, lo)) = split_by_shedding(ideal, monomial) else {
                    return false;
                };
                if !shedding_condition(monomial, &up, &lo) {
                    return false;
                }
                upper.verify(&up, k) && lower.verify(&lo, k)
            }
        }
    }
}

/// `[u, M] ≠ 1`: some `i` in the support of `u` has `x_i^{u(i)}` dividing `M`.
fn clashes(u: &ExponentVector, m: &ExponentVector) -> bool {
    u.support().iter().any(|&i| m.entry(i) >= u.entry(i))
}

/// Splits `G(I)` into `(I^u, I_u)`; `None` when either side is empty.
fn split_by_shedding(
    ideal: &MonomialIdeal,
    u: &ExponentVector,
) -> Option<(MonomialIdeal, MonomialIdeal)> {
    let (upper, lower): (Vec<_>, Vec<_>) =
        ideal.gens().iter().cloned().partition(|m| clashes(u, m));
    if upper.is_empty() || lower.is_empty() {
        return None;
    }
    let dim = ideal.dim();
    Some((
        MonomialIdeal::new(dim, upper).expect("subset of a minimal set"),
        MonomialIdeal::new(dim, lower).expect("subset of a minimal set"),
    ))
}

/// For every generator of `I_u` and every `l` in the support of `u`, some
/// generator of `I^u` has colon exactly `x_l`.
fn shedding_condition(u: &ExponentVector, upper: &MonomialIdeal, lower: &MonomialIdeal) -> bool {
    lower.gens().iter().all(|mi| {
        u.support().iter().all(|&l| {
            upper.gens().iter().any(|mj| {
                let q = mj.quotient_by_gcd(mi);
                q.modulus() == 1 && q.entry(l) == 1
            })
        })
    })
}

/// Divisors of `bound` with nonempty support of size at most `max_support`,
/// in ascending entrywise-lexicographic order.
fn bounded_divisors(bound: &ExponentVector, max_support: usize) -> Vec<ExponentVector> {
    let dim = bound.dim();
    let mut out = Vec::new();
    let mut current = vec![0u32; dim];
    fn rec(
        pos: usize,
        support: usize,
        max_support: usize,
        bound: &ExponentVector,
        current: &mut Vec<u32>,
        out: &mut Vec<ExponentVector>,
    ) {
        if pos == bound.dim() {
            if support > 0 {
                out.push(ExponentVector::from_slice(current));
            }
            return;
        }
        for e in 0..=bound.entry(pos) {
            if e > 0 && support + 1 > max_support {
                break;
            }
            current[pos] = e;
            rec(pos + 1, support + usize::from(e > 0), max_support, bound, current, out);
        }
        current[pos] = 0;
    }
    rec(0, 0, max_support, bound, &mut current, &mut out);
    out
}

/// Decides k-decomposability by exhausting shedding candidates.
///
/// Candidates range over the divisors of `lcm(G(I))` with support of size at
/// most `k+1`: the clash test `[u, M]` only inspects `supp(u)` against the
/// generator exponents, so larger exponents would change nothing.
pub fn is_k_decomposable(
    ideal: &MonomialIdeal,
    k: usize,
    limit: usize,
) -> Result<Option<SheddingCertificate>> {
    let r = ideal.num_gens();
    if r > limit {
        return Err(Error::SearchTooLarge { size: r, limit });
    }
    if r == 0 {
        return Ok(None);
    }
    if r == 1 {
        return Ok(Some(SheddingCertificate::Principal));
    }
    let lcm = ideal.gens().lcm().expect("nonempty generator set");
    for u in bounded_divisors(&lcm, k + 1) {
        let Some((upper, lower)) = split_by_shedding(ideal, &u) else {
            continue;
        };
        if !shedding_condition(&u, &upper, &lower) {
            continue;
        }
        let Some(up_cert) = is_k_decomposable(&upper, k, limit)? else {
            continue;
        };
        let Some(lo_cert) = is_k_decomposable(&lower, k, limit)? else {
            continue;
        };
        return Ok(Some(SheddingCertificate::Shed {
            monomial: u,
            upper: Box::new(up_cert),
            lower: Box::new(lo_cert),
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoset::MonomialIdeal;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(entries)
    }

    fn ideal(dim: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(dim, rows.iter().map(|r| ev(r)).collect()).unwrap()
    }

    #[test]
    fn polymatroidal_examples() {
        assert!(is_polymatroidal(&ideal(3, &[&[1, 1, 0], &[1, 0, 1]])));
        assert!(!is_polymatroidal(&ideal(2, &[&[2, 0], &[0, 2]])));
        assert!(is_polymatroidal(&ideal(2, &[&[2, 1]])));
    }

    #[test]
    fn polymatroidal_needs_equal_degrees() {
        assert!(!is_polymatroidal(&ideal(2, &[&[1, 0], &[0, 2]])));
    }

    #[test]
    fn weakly_polymatroidal_wrt_examples() {
        // (x1x2, x2x3) under x1 > x2 > x3
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(is_weakly_polymatroidal_wrt(&i, &[0, 1, 2]).unwrap());

        let j = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(!is_weakly_polymatroidal_wrt(&j, &[0, 1]).unwrap());

        let p = ideal(3, &[&[1, 2, 1]]);
        assert!(is_weakly_polymatroidal_wrt(&p, &[2, 0, 1]).unwrap());
    }

    #[test]
    fn wp_rejects_non_permutation() {
        let i = ideal(2, &[&[1, 0]]);
        assert!(is_weakly_polymatroidal_wrt(&i, &[0, 0]).is_err());
    }

    #[test]
    fn find_wp_order_examples() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let witness = find_weakly_polymatroidal_order(&i, WP_SEARCH_LIMIT)
            .unwrap()
            .expect("witness expected");
        assert!(is_weakly_polymatroidal_wrt(&i, &witness).unwrap());

        let j = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(find_weakly_polymatroidal_order(&j, WP_SEARCH_LIMIT).unwrap(), None);

        let p = ideal(4, &[&[0, 3, 0, 1]]);
        assert!(find_weakly_polymatroidal_order(&p, WP_SEARCH_LIMIT)
            .unwrap()
            .is_some());
    }

    #[test]
    fn find_wp_order_respects_limit() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert!(matches!(
            find_weakly_polymatroidal_order(&i, 2),
            Err(Error::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn linear_quotients_wrt_examples() {
        // (x1x2, x2x3, x3x4) in the given order
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let order: Vec<usize> = (0..3)
            .map(|k| i.gens().index_of(&[ev(&[1, 1, 0, 0]), ev(&[0, 1, 1, 0]), ev(&[0, 0, 1, 1])][k]).unwrap())
            .collect();
        assert!(has_linear_quotients_wrt(&i, &order).unwrap());

        let j = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert!(!has_linear_quotients_wrt(&j, &[0, 1]).unwrap());
        assert!(!has_linear_quotients_wrt(&j, &[1, 0]).unwrap());

        let p = ideal(2, &[&[1, 1]]);
        assert!(has_linear_quotients_wrt(&p, &[0]).unwrap());
    }

    #[test]
    fn find_lq_order_examples() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let witness = find_linear_quotients_order(&i, LQ_SEARCH_LIMIT)
            .unwrap()
            .expect("witness expected");
        assert!(has_linear_quotients_wrt(&i, &witness).unwrap());

        let j = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(find_linear_quotients_order(&j, LQ_SEARCH_LIMIT).unwrap(), None);
    }

    #[test]
    fn polymatroidal_implies_linear_quotients() {
        // implication ladder on an equigenerated example
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(is_polymatroidal(&i));
        assert!(find_weakly_polymatroidal_order(&i, WP_SEARCH_LIMIT)
            .unwrap()
            .is_some());
        assert!(find_linear_quotients_order(&i, LQ_SEARCH_LIMIT).unwrap().is_some());
    }

    #[test]
    fn k_decomposable_examples() {
        let p = ideal(2, &[&[1, 1]]);
        assert_eq!(
            is_k_decomposable(&p, 0, KDECOMP_LIMIT).unwrap(),
            Some(SheddingCertificate::Principal)
        );

        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let cert = is_k_decomposable(&i, 0, KDECOMP_LIMIT)
            .unwrap()
            .expect("0-decomposable");
        assert!(cert.verify(&i, 0));

        let j = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        for k in 0..4 {
            assert_eq!(is_k_decomposable(&j, k, KDECOMP_LIMIT).unwrap(), None);
        }
    }

    #[test]
    fn decomposability_matches_linear_quotients_small() {
        // equivalence on a small sweep of handpicked ideals
        let cases: Vec<MonomialIdeal> = vec![
            ideal(3, &[&[1, 1, 0], &[0, 1, 1]]),
            ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
            ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
            ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]),
            ideal(2, &[&[3, 0], &[2, 1], &[0, 3]]),
        ];
        for i in cases {
            let lq = find_linear_quotients_order(&i, LQ_SEARCH_LIMIT).unwrap().is_some();
            let kd = is_k_decomposable(&i, i.dim().saturating_sub(1), KDECOMP_LIMIT)
                .unwrap()
                .is_some();
            assert_eq!(lq, kd, "ideal {:?}", i);
        }
    }
}
