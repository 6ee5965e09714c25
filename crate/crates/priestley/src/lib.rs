//! Finite Priestley duality and Hofmann-Mislove machinery, checkable end to end.
//!
//! The crate is organized in layers:
//!
//! * [`poset`]: finite posets, order closure, upset enumeration.
//! * [`lattice`]: finite bounded lattices, filters, distributivity,
//!   Scott-openness and compactness checked from their literal definitions.
//! * [`duality`]: the prime-filter dual of a finite distributive lattice,
//!   the clopen-upset reconstruction, and the filter/closed-upset
//!   correspondence with its Scott-open refinements.
//! * [`topspace`]: finite topological spaces, specialization, sobriety,
//!   compact saturated sets, and the open-filter correspondence.
//! * [`symbolic`]: two infinite frames presented by descriptor algebras
//!   (the ω+1 chain and the cofinite sets of ℕ), on which the same
//!   correspondences are decided by rule tables and cross-checked by
//!   sampling. This is where Scott-openness stops being degenerate.
//! * [`corpus`]: generators for the exhaustive test corpus (all small
//!   posets up to isomorphism, chains, Boolean lattices, named fixtures).
//!
//! Everything is deterministic: enumerations are in ascending bitmask
//! order, and nothing iterates a hash map.

pub mod corpus;
pub mod duality;
pub mod error;
pub mod lattice;
pub mod poset;
pub mod set;
pub mod symbolic;
pub mod topspace;

pub use error::{Error, Result};
pub use set::ElemSet;

/// Size limits for the exhaustive procedures.
///
/// `enumeration` caps subset scans (2^n loops) over posets and spaces;
/// `scott` caps the all-subsets Scott-openness and compactness checkers,
/// which touch 2^n joins per filter; `samples` is how far symbolic
/// cross-checks sample generated families and point schemas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub enumeration: usize,
    pub scott: usize,
    pub samples: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            enumeration: 20,
            scott: 12,
            samples: 1000,
        }
    }
}
