//! Discrete polymatroids through their base sets: exchange validation, base
//! expansion, double swaps and the swap quadrics, and two independent
//! procedures deciding whether the toric ideal of the base ring is generated
//! by those quadrics.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::expansion::{expand_set, ExpansionShape};
use crate::monoset::MonomialSet;
use crate::order::TermOrder;
use crate::toric::{expanded_base_order, generates, toric_gb, Budget, YBinomial};
use crate::vector::ExponentVector;

/// Why a candidate set of vectors fails to be the base set of a discrete
/// polymatroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSetViolation {
    Empty,
    UnequalModulus {
        u: ExponentVector,
        v: ExponentVector,
    },
    /// `u(i) > v(i)` but no `j` with `u(j) < v(j)` puts `u − ε_i + ε_j` back
    /// into the set.
    Exchange {
        u: ExponentVector,
        v: ExponentVector,
        i: usize,
    },
}

/// Checks the base-set axioms: equal modulus and the exchange property.
/// `None` means the candidate is valid.
pub fn validate_base_set(candidate: &MonomialSet) -> Option<BaseSetViolation> {
    let mut it = candidate.iter();
    let Some(first) = it.next() else {
        return Some(BaseSetViolation::Empty);
    };
    let d = first.modulus();
    for v in it {
        if v.modulus() != d {
            return Some(BaseSetViolation::UnequalModulus { u: first.clone(), v: v.clone() });
        }
    }
    let n = candidate.dim();
    for u in candidate.iter() {
        for v in candidate.iter() {
            for i in 0..n {
                if u.entry(i) <= v.entry(i) {
                    continue;
                }
                let ok = (0..n).any(|j| {
                    u.entry(j) < v.entry(j)
                        && u.try_swap(i, j).map_or(false, |w| candidate.contains(&w))
                });
                if !ok {
                    return Some(BaseSetViolation::Exchange { u: u.clone(), v: v.clone(), i });
                }
            }
        }
    }
    None
}

/// The set of bases of a discrete polymatroid: a nonempty equal-modulus set
/// of vectors closed under the exchange axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSet {
    bases: MonomialSet,
    modulus: u64,
}

impl BaseSet {
    pub fn new(bases: MonomialSet) -> Result<Self> {
        if let Some(violation) = validate_base_set(&bases) {
            return Err(Error::InvalidInput(format!(
                "not a discrete polymatroid base set: {violation:?}"
            )));
        }
        let modulus = bases.member(0).modulus();
        Ok(BaseSet { bases, modulus })
    }

    pub fn ground_size(&self) -> usize {
        self.bases.dim()
    }

    pub fn bases(&self) -> &MonomialSet {
        &self.bases
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Expands every base and revalidates. The expansion of a base set is again a
/// base set; a validation failure here is a bug escalation.
pub fn expand_bases(b: &BaseSet, shape: &ExpansionShape) -> Result<BaseSet> {
    let expanded = expand_set(b.bases(), shape)?;
    if let Some(violation) = validate_base_set(expanded.set()) {
        return Err(Error::PropertyViolation(format!(
            "expansion of a base set failed the exchange axiom: {violation:?}"
        )));
    }
    BaseSet::new(expanded.set().clone())
}

/// A double swap: the pair of bases `(u₁, u₂)` trades a unit between
/// coordinates `i` and `j`, landing on `(v₁, v₂)`, all four of them bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapMove {
    pub u1: usize,
    pub u2: usize,
    pub v1: usize,
    pub v2: usize,
    pub i: usize,
    pub j: usize,
}

/// All double swaps between ordered pairs of bases.
pub fn swap_moves(b: &BaseSet) -> Vec<SwapMove> {
    let set = b.bases();
    let n = b.ground_size();
    let mut out = Vec::new();
    for (a, u1) in set.iter().enumerate() {
        for (c, u2) in set.iter().enumerate() {
            for i in 0..n {
                if u1.entry(i) <= u2.entry(i) {
                    continue;
                }
                for j in 0..n {
                    if u2.entry(j) <= u1.entry(j) {
                        continue;
                    }
                    let (Some(v1), Some(v2)) = (u1.try_swap(i, j), u2.try_swap(j, i)) else {
                        continue;
                    };
                    let (Some(iv1), Some(iv2)) = (set.index_of(&v1), set.index_of(&v2)) else {
                        continue;
                    };
                    out.push(SwapMove { u1: a, u2: c, v1: iv1, v2: iv2, i, j });
                }
            }
        }
    }
    out
}

/// The nonzero quadrics `y_{u₁} y_{u₂} − y_{v₁} y_{v₂}` of the double swaps,
/// sign-normalized under the order induced by `base` and deduplicated.
pub fn swap_quadrics(b: &BaseSet, base: &TermOrder) -> Result<Vec<YBinomial>> {
    let order = TermOrder::induced_sharp(base.base().clone(), b.bases())?;
    let mut out = std::collections::BTreeSet::new();
    for mv in swap_moves(b) {
        if let Some(q) =
            YBinomial::normalized(vec![mv.u1, mv.u2], vec![mv.v1, mv.v2], b.bases(), &order)?
        {
            out.insert(q);
        }
    }
    Ok(out.into_iter().collect())
}

/// Whether the toric ideal of the base ring is generated by the double-swap
/// quadrics, decided through the Gröbner machinery.
pub fn check_white(b: &BaseSet, base: &TermOrder, budget: &mut Budget) -> Result<bool> {
    let quadrics = swap_quadrics(b, base)?;
    generates(&quadrics, b.bases(), base, budget)
}

/// A disconnected fiber: two multisets of bases with the same exponent sum
/// that no chain of double swaps connects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberWitness {
    pub multidegree: Vec<u64>,
    pub component_a: Vec<usize>,
    pub component_b: Vec<usize>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Independent cross-validation of [`check_white`]: for every multidegree
/// realized by at most `degree_bound` bases, the graph on the multisets with
/// that exponent sum, with single double-swap replacements as edges, must be
/// connected. With `degree_bound` at least the maximal degree of a Gröbner
/// basis of the toric ideal, connectivity of all these fibers is equivalent
/// to generation by the swap quadrics.
pub fn fiber_connected_oracle(
    b: &BaseSet,
    degree_bound: usize,
    enumeration_cap: u64,
) -> Result<Option<FiberWitness>> {
    let set = b.bases();
    // replacement table keyed by unordered index pairs, both directions
    let mut moves: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for mv in swap_moves(b) {
        let from = (mv.u1.min(mv.u2), mv.u1.max(mv.u2));
        let to = (mv.v1.min(mv.v2), mv.v1.max(mv.v2));
        if from != to {
            moves.entry(from).or_default().push(to);
            moves.entry(to).or_default().push(from);
        }
    }

    let mut enumerated: u64 = 0;
    for m in 2..=degree_bound {
        // all m-multisets of base indices
        let mut fibers: HashMap<Vec<u64>, Vec<Vec<usize>>> = HashMap::new();
        let mut stack: Vec<usize> = Vec::with_capacity(m);
        enumerate_multisets(set.len(), m, &mut stack, &mut |ms| {
            enumerated += 1;
            let mut deg = vec![0u64; set.dim()];
            for &i in ms {
                for (d, &e) in deg.iter_mut().zip(set.member(i).entries()) {
                    *d += u64::from(e);
                }
            }
            fibers.entry(deg).or_default().push(ms.to_vec());
        });
        if enumerated > enumeration_cap {
            return Err(Error::BudgetExhausted { limit: enumeration_cap });
        }

        let mut keys: Vec<Vec<u64>> = fibers.keys().cloned().collect();
        keys.sort();
        for key in keys {
            let fiber = &fibers[&key];
            if fiber.len() < 2 {
                continue;
            }
            let index: HashMap<&Vec<usize>, usize> =
                fiber.iter().enumerate().map(|(i, ms)| (ms, i)).collect();
            let mut uf = UnionFind::new(fiber.len());
            for (fi, ms) in fiber.iter().enumerate() {
                for p in 0..ms.len() {
                    for q in p + 1..ms.len() {
                        let pair = (ms[p].min(ms[q]), ms[p].max(ms[q]));
                        let Some(replacements) = moves.get(&pair) else {
                            continue;
                        };
                        for &(c, d) in replacements {
                            let mut next = Vec::with_capacity(ms.len());
                            next.extend_from_slice(&ms[..p]);
                            next.extend_from_slice(&ms[p + 1..q]);
                            next.extend_from_slice(&ms[q + 1..]);
                            next.push(c);
                            next.push(d);
                            next.sort_unstable();
                            let ni = index[&next];
                            uf.union(fi, ni);
                        }
                    }
                }
            }
            let root0 = uf.find(0);
            for fi in 1..fiber.len() {
                if uf.find(fi) != root0 {
                    return Ok(Some(FiberWitness {
                        multidegree: key.clone(),
                        component_a: fiber[0].clone(),
                        component_b: fiber[fi].clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn enumerate_multisets(n: usize, size: usize, stack: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if stack.len() == size {
        f(stack);
        return;
    }
    let start = stack.last().copied().unwrap_or(0);
    for i in start..n {
        stack.push(i);
        enumerate_multisets(n, size, stack, f);
        stack.pop();
    }
}

/// Degree bound for the fiber oracle: the maximal degree of the reduced
/// Gröbner basis of the toric ideal, and at least 2.
pub fn oracle_degree_bound(b: &BaseSet, base: &TermOrder, budget: &mut Budget) -> Result<usize> {
    let g = toric_gb(b.bases(), base, budget)?;
    Ok(g.max_degree().max(2))
}

/// The transfer statement for double-swap generation: if the toric ideal of
/// `b` is generated by the swap quadrics, so is the toric ideal of the
/// expanded base set. Vacuously true when the premise fails.
pub fn verify_theorem_main(
    b: &BaseSet,
    shape: &ExpansionShape,
    base: &TermOrder,
    budget: &mut Budget,
) -> Result<bool> {
    if !check_white(b, base, budget)? {
        return Ok(true);
    }
    let expanded = expand_bases(b, shape)?;
    let expanded_order = expanded_base_order(base, shape);
    check_white(&expanded, &expanded_order, budget)
}
