//! Exponent vectors: points of `Z^n_+` standing for monomials.

use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial in a fixed number of variables.
///
/// Entry `i` is the exponent of the variable with flat index `i`. The derived
/// `Ord` is entrywise-lexicographic and serves only as a canonical storage
/// order; monomial term orders live in [`crate::order::TermOrder`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    entries: Vec<u32>,
}

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "ambient dimension must be positive");
        ExponentVector { entries }
    }

    pub fn from_slice(entries: &[u32]) -> Self {
        Self::new(entries.to_vec())
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![0; dim])
    }

    /// The canonical unit vector with a single 1 at position `i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "unit index {i} out of range for dimension {dim}");
        let mut entries = vec![0; dim];
        entries[i] = 1;
        Self::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Total degree: the sum of all entries.
    pub fn modulus(&self) -> u64 {
        self.entries.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Divisibility order: `self ⪯ other`, entrywise `≤`.
    pub fn divides(&self, other: &Self) -> bool {
        self.assert_same_dim(other);
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Entrywise sum. Exponent overflow aborts with a diagnostic; silent
    /// wraparound is never acceptable.
    pub fn plus(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow in vector sum"))
            .collect();
        ExponentVector { entries }
    }

    /// Entrywise `max(self − other, 0)`: the exponent of `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.saturating_sub(*b))
            .collect();
        ExponentVector { entries }
    }

    /// Entrywise maximum (the lcm of the two monomials).
    pub fn join(&self, other: &Self) -> Self {
        self.assert_same_dim(other);
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| *a.max(b))
            .collect();
        ExponentVector { entries }
    }

    /// `self − ε_i + ε_j`, or `None` when entry `i` is zero.
    pub fn try_swap(&self, i: usize, j: usize) -> Option<Self> {
        if self.entries[i] == 0 {
            return None;
        }
        let mut entries = self.entries.clone();
        entries[i] -= 1;
        entries[j] = entries[j]
            .checked_add(1)
            .expect("exponent overflow in swap");
        Some(ExponentVector { entries })
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn to_i64s(&self) -> Vec<i64> {
        self.entries.iter().map(|&e| i64::from(e)).collect()
    }

    fn assert_same_dim(&self, other: &Self) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "ambient dimension mismatch: {} vs {}",
            self.dim(),
            other.dim()
        );
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ExponentVector {
    /// Renders as a monomial string, e.g. `x1^2*x2`; the unit monomial is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.entries.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::from_slice(entries)
    }

    #[test]
    fn quotient_by_gcd_examples() {
        assert_eq!(ev(&[1, 1, 0]).quotient_by_gcd(&ev(&[0, 1, 1])), ev(&[1, 0, 0]));
        let u = ev(&[2, 1, 3]);
        assert!(u.quotient_by_gcd(&u).is_zero());
        assert_eq!(ev(&[2, 1]).quotient_by_gcd(&ev(&[1, 3])), ev(&[1, 0]));
    }

    #[test]
    fn divides_is_entrywise() {
        assert!(ev(&[1, 1]).divides(&ev(&[2, 3])));
        assert!(!ev(&[1, 1]).divides(&ev(&[2, 0])));
    }

    #[test]
    fn modulus_sums_entries() {
        assert_eq!(ev(&[1, 2, 0]).modulus(), 3);
        assert_eq!(ExponentVector::zero(4).modulus(), 0);
    }

    #[test]
    fn display_round_trip_shapes() {
        assert_eq!(ev(&[2, 1, 0, 0]).to_string(), "x1^2*x2");
        assert_eq!(ev(&[0, 0]).to_string(), "1");
        assert_eq!(ev(&[0, 1, 0, 2]).to_string(), "x2*x4^2");
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mixed_dims_abort() {
        ev(&[1, 2]).plus(&ev(&[1, 2, 3]));
    }
}
