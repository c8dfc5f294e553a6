//! Input documents for the command-line surface: a JSON object carrying an
//! ambient dimension, monomials as exponent rows or human-readable strings,
//! and optional shape, kind and order fields.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::ExpansionShape;
use crate::monoset::{MonomialIdeal, MonomialSet};
use crate::order::TermOrder;
use crate::polymatroid::BaseSet;
use crate::vector::ExponentVector;

/// How the monomial list of a document is to be read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigKind {
    Ideal,
    Set,
    Bases,
}

/// A monomial, either as an exponent row or as a string like `x1^2*x2`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonomialEntry {
    Row(Vec<u32>),
    Text(String),
}

/// The single input format of the CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigDocument {
    /// Ambient dimension; every row must have this length.
    pub n: usize,
    pub monomials: Vec<MonomialEntry>,
    /// Expansion shape, one entry of at least 1 per variable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<ConfigKind>,
    /// Variable priority for the lexicographic base order, 1-based and most
    /// significant first; defaults to `x1 > x2 > … > xn`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
}

impl ConfigDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("malformed document: {e}")))
    }

    pub fn vectors(&self) -> Result<Vec<ExponentVector>> {
        if self.n == 0 {
            return Err(Error::InvalidInput("ambient dimension must be positive".into()));
        }
        self.monomials
            .iter()
            .map(|m| match m {
                MonomialEntry::Row(row) => {
                    if row.len() != self.n {
                        return Err(Error::DimensionMismatch {
                            expected: self.n,
                            found: row.len(),
                        });
                    }
                    Ok(ExponentVector::from_slice(row))
                }
                MonomialEntry::Text(text) => parse_monomial(text, self.n),
            })
            .collect()
    }

    pub fn to_set(&self) -> Result<MonomialSet> {
        MonomialSet::new(self.n, self.vectors()?)
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.n, self.vectors()?)
    }

    pub fn to_bases(&self) -> Result<BaseSet> {
        BaseSet::new(self.to_set()?)
    }

    /// The document's shape, or the identity when absent.
    pub fn shape(&self) -> Result<ExpansionShape> {
        match &self.alpha {
            None => Ok(ExpansionShape::identity(self.n)),
            Some(blocks) => {
                if blocks.len() != self.n {
                    return Err(Error::DimensionMismatch {
                        expected: self.n,
                        found: blocks.len(),
                    });
                }
                ExpansionShape::new(blocks.clone())
            }
        }
    }

    /// The base term order of the document.
    pub fn base_order(&self) -> Result<TermOrder> {
        match &self.order {
            None => Ok(TermOrder::lex(self.n)),
            Some(vars) => {
                let perm: Vec<usize> = vars
                    .iter()
                    .map(|&v| {
                        if v == 0 || v > self.n {
                            Err(Error::IndexOutOfRange { index: v, len: self.n })
                        } else {
                            Ok(v - 1)
                        }
                    })
                    .collect::<Result<_>>()?;
                TermOrder::lex_perm(perm)
            }
        }
    }
}

/// Parses `monomial := factor ('*' factor)* ; factor := var ('^' uint)? ;
/// var := 'x' uint`, with `1` accepted for the unit monomial. Errors carry
/// the byte offset of the offending token.
pub fn parse_monomial(text: &str, dim: usize) -> Result<ExponentVector> {
    let bytes = text.as_bytes();
    let bad = |offset: usize, what: &str| {
        Error::InvalidInput(format!("monomial {text:?}, byte {offset}: {what}"))
    };
    let mut entries = vec![0u32; dim];
    if text == "1" {
        return Ok(ExponentVector::new(entries));
    }
    let mut pos = 0usize;
    let mut read_uint = |pos: &mut usize| -> Result<u64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return Err(bad(start, "expected a digit"));
        }
        text[start..*pos]
            .parse::<u64>()
            .map_err(|_| bad(start, "integer out of range"))
    };
    loop {
        if pos >= bytes.len() || bytes[pos] != b'x' {
            return Err(bad(pos, "expected a variable 'x<index>'"));
        }
        let var_at = pos;
        pos += 1;
        let index = read_uint(&mut pos)?;
        if index == 0 || index > dim as u64 {
            return Err(bad(var_at, "variable index out of range"));
        }
        let exponent = if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let e = read_uint(&mut pos)?;
            u32::try_from(e).map_err(|_| bad(pos, "exponent out of range"))?
        } else {
            1
        };
        let slot = &mut entries[index as usize - 1];
        *slot = slot
            .checked_add(exponent)
            .ok_or_else(|| bad(var_at, "exponent overflow"))?;
        if pos == bytes.len() {
            return Ok(ExponentVector::new(entries));
        }
        if bytes[pos] != b'*' {
            return Err(bad(pos, "expected '*' between factors"));
        }
        pos += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_monomial_examples() {
        assert_eq!(
            parse_monomial("x1^2*x2", 4).unwrap(),
            ExponentVector::new(vec![2, 1, 0, 0])
        );
        assert_eq!(parse_monomial("x2*x4^2", 4).unwrap(), ExponentVector::new(vec![0, 1, 0, 2]));
        assert_eq!(parse_monomial("1", 2).unwrap(), ExponentVector::new(vec![0, 0]));
        assert_eq!(parse_monomial("x1*x1", 2).unwrap(), ExponentVector::new(vec![2, 0]));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = parse_monomial("x1^2*y2", 4).unwrap_err().to_string();
        assert!(err.contains("byte 5"), "{err}");
        let err = parse_monomial("x9", 4).unwrap_err().to_string();
        assert!(err.contains("byte 0"), "{err}");
        let err = parse_monomial("x1^", 4).unwrap_err().to_string();
        assert!(err.contains("byte 3"), "{err}");
    }

    #[test]
    fn document_round_trip() {
        let doc = ConfigDocument::from_json(
            r#"{"n": 4, "monomials": ["x1^2*x2", [1, 1, 0, 1], "x1*x3"], "alpha": [1, 1, 1, 2]}"#,
        )
        .unwrap();
        let set = doc.to_set().unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(doc.shape().unwrap().total_dim(), 5);
        assert_eq!(doc.base_order().unwrap(), TermOrder::lex(4));
    }

    #[test]
    fn document_rejects_bad_rows() {
        let doc = ConfigDocument::from_json(r#"{"n": 3, "monomials": [[1, 0]]}"#).unwrap();
        assert!(doc.to_set().is_err());
    }

    #[test]
    fn document_order_descriptor() {
        let doc = ConfigDocument::from_json(
            r#"{"n": 2, "monomials": [[1, 0]], "order": [2, 1]}"#,
        )
        .unwrap();
        assert_eq!(doc.base_order().unwrap(), TermOrder::lex_perm(vec![1, 0]).unwrap());
    }
}
