//! Monomial sets and monomial ideals with divisibility-minimal generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::vector::ExponentVector;

/// A finite set of exponent vectors over a declared ambient dimension.
///
/// Members are kept sorted in the canonical entrywise-lexicographic order and
/// deduplicated, so the index of a member is deterministic. That index is what
/// names the corresponding `y`-variable in the toric modules.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialSet {
    dim: usize,
    members: Vec<ExponentVector>,
    divis_minimal: bool,
}

impl MonomialSet {
    pub fn new(dim: usize, vectors: Vec<ExponentVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        for v in &vectors {
            v.check_dim(dim)?;
        }
        let mut members = vectors;
        members.sort();
        members.dedup();
        let divis_minimal = is_antichain(&members);
        Ok(MonomialSet { dim, members, divis_minimal })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[ExponentVector] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &ExponentVector {
        &self.members[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ExponentVector> {
        self.members.iter()
    }

    pub fn contains(&self, v: &ExponentVector) -> bool {
        self.index_of(v).is_some()
    }

    pub fn index_of(&self, v: &ExponentVector) -> Option<usize> {
        self.members.binary_search(v).ok()
    }

    /// Whether no member divides another.
    pub fn is_divis_minimal(&self) -> bool {
        self.divis_minimal
    }

    /// The common modulus of all members, when they are equigenerated.
    pub fn equidegree(&self) -> Option<u64> {
        let d = self.members.first()?.modulus();
        self.members.iter().all(|m| m.modulus() == d).then_some(d)
    }

    /// Entrywise maximum over all members.
    pub fn lcm(&self) -> Option<ExponentVector> {
        let mut it = self.members.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.join(m)))
    }
}

impl fmt::Debug for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members.iter()).finish()
    }
}

fn is_antichain(sorted: &[ExponentVector]) -> bool {
    for (i, u) in sorted.iter().enumerate() {
        for v in &sorted[i + 1..] {
            if u.divides(v) || v.divides(u) {
                return false;
            }
        }
    }
    true
}

/// Keep only the divisibility-minimal elements.
///
/// Every input vector is divisible by some element of the result, and the
/// result is an antichain.
pub fn minimalize(dim: usize, vectors: &[ExponentVector]) -> Result<MonomialSet> {
    for v in vectors {
        v.check_dim(dim)?;
    }
    let mut kept: Vec<ExponentVector> = Vec::new();
    for v in vectors {
        if kept.iter().any(|k| k.divides(v)) {
            continue;
        }
        kept.retain(|k| !v.divides(k));
        kept.push(v.clone());
    }
    MonomialSet::new(dim, kept)
}

/// A monomial ideal, carried by its unique minimal generating set.
///
/// The generator set is recomputed on construction, so two ideals are equal
/// exactly when they carry the same generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: MonomialSet,
}

impl MonomialIdeal {
    pub fn new(dim: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        let gens = minimalize(dim, &generators)?;
        Ok(MonomialIdeal { gens })
    }

    pub fn from_set(set: &MonomialSet) -> Result<Self> {
        Self::new(set.dim(), set.members().to_vec())
    }

    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    pub fn gens(&self) -> &MonomialSet {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    /// Monomial-ideal membership: some generator divides `u`.
    pub fn contains(&self, u: &ExponentVector) -> bool {
        assert_eq!(u.dim(), self.dim(), "ambient dimension mismatch");
        self.gens.iter().any(|g| g.divides(u))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{:?}", self.gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(entries)
    }

    fn set(dim: usize, rows: &[&[u32]]) -> MonomialSet {
        MonomialSet::new(dim, rows.iter().map(|r| ev(r)).collect()).unwrap()
    }

    #[test]
    fn minimalize_keeps_divisors() {
        let out = minimalize(2, &[ev(&[1, 1]), ev(&[1, 2]), ev(&[2, 1])]).unwrap();
        assert_eq!(out, set(2, &[&[1, 1]]));
    }

    #[test]
    fn minimalize_keeps_incomparable_pairs() {
        let out = minimalize(2, &[ev(&[2, 0]), ev(&[0, 2])]).unwrap();
        assert_eq!(out, set(2, &[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn minimalize_antichain_is_fixed() {
        // pairwise incomparable by brute force
        let rows: &[&[u32]] = &[&[3, 0], &[2, 1], &[0, 3]];
        for (i, u) in rows.iter().enumerate() {
            for (j, v) in rows.iter().enumerate() {
                if i != j {
                    assert!(!ev(u).divides(&ev(v)));
                }
            }
        }
        let out = minimalize(2, &rows.iter().map(|r| ev(r)).collect::<Vec<_>>()).unwrap();
        assert_eq!(out.len(), 3);
        assert!(out.is_divis_minimal());
    }

    #[test]
    fn minimalize_is_idempotent() {
        let input = [ev(&[1, 1, 0]), ev(&[1, 2, 0]), ev(&[0, 0, 1]), ev(&[2, 2, 2])];
        let once = minimalize(3, &input).unwrap();
        let twice = minimalize(3, once.members()).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn minimalize_rejects_mixed_dims() {
        let err = minimalize(2, &[ev(&[1, 1]), ev(&[1, 1, 1])]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn ideal_membership_examples() {
        let i = MonomialIdeal::new(2, vec![ev(&[1, 1])]).unwrap();
        assert!(i.contains(&ev(&[2, 3])));
        assert!(!i.contains(&ev(&[2, 0])));

        let j = MonomialIdeal::new(3, vec![ev(&[1, 1, 0]), ev(&[0, 1, 1])]).unwrap();
        assert!(!j.contains(&ev(&[1, 0, 1])));
    }

    #[test]
    fn ideal_membership_is_monotone() {
        let i = MonomialIdeal::new(3, vec![ev(&[1, 1, 0]), ev(&[0, 1, 1])]).unwrap();
        let u = ev(&[1, 1, 0]);
        let bigger = u.plus(&ev(&[0, 0, 2]));
        assert!(i.contains(&u) && i.contains(&bigger));
    }

    #[test]
    fn ideal_recomputes_minimal_generators() {
        let i = MonomialIdeal::new(2, vec![ev(&[1, 1]), ev(&[2, 1]), ev(&[1, 3])]).unwrap();
        assert_eq!(i.gens(), &set(2, &[&[1, 1]]));
    }

    #[test]
    fn members_are_canonically_ordered() {
        let a = set(2, &[&[2, 0], &[0, 2], &[1, 1]]);
        let b = set(2, &[&[1, 1], &[2, 0], &[0, 2]]);
        assert_eq!(a.members(), b.members());
    }
}
