//! Expansion of monomial ideals, monomial configurations and discrete
//! polymatroids, together with mechanical verification of the properties that
//! transfer along the expansion: polymatroidality, weak polymatroidality,
//! linear quotients, generation of toric ideals by double-swap quadrics,
//! Gröbner basis lifting, sortability, normality and Krull dimension.
//!
//! All arithmetic is exact; no floating point is used anywhere. Every value is
//! immutable after construction and every operation is a pure function, so the
//! whole crate is safe to call concurrently.

pub mod config;
pub mod error;
pub mod vector;
pub mod monoset;
pub mod order;
pub mod report;
pub mod expansion;
pub mod harness;
pub mod ideal_props;
pub(crate) mod linalg;
pub mod polymatroid;
pub mod semigroup;
pub mod sortable;
pub mod toric;

pub use error::{Error, Result};
pub use expansion::{
    contract_vector, expand_ideal, expand_set, expand_vector, relabel_iterated, ExpandedVectorSet,
    ExpansionShape, Relabeling,
};
pub use monoset::{minimalize, MonomialIdeal, MonomialSet};
pub use order::TermOrder;
pub use vector::ExponentVector;
