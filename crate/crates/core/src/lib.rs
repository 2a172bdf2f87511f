//! Finite models for quasiorders determined by set families, specialization
//! topologies, generalized topologies, and dense-set structure, together with
//! a catalog of machine-checkable statements and exhaustive instance sweeps.
//!
//! The library is organized bottom-up:
//!
//! * [`ground`] — carriers, bitmask subsets, canonically ordered families,
//!   and the closure fixpoints everything else consumes;
//! * [`order`] — quasiorders, up/down sets, specialization topologies,
//!   duals, maximal elements, and the order quotient;
//! * [`topo`] — the generalized topologies `mu[A]` and `mu_tilde[A]`,
//!   closure/interior, dense and nowhere-dense machinery, `I(A)`, superset
//!   and cofinite topologies, and classification flags;
//! * [`props`] — whole-space predicates (separation, iso-density,
//!   resolvability, the dense-intersection formulae `F_d` and `F_d^T`);
//! * [`theorems`] — the statement catalog, per-instance condition reports,
//!   exhaustive and seeded instance streams, and counterexample search;
//! * [`document`] — the JSON documents the command-line front end reads and
//!   writes.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything can be shared freely across threads; the sweep
//! driver in [`theorems`] shards instance ranges and merges results in
//! canonical order.

pub mod document;
pub mod error;
pub mod ground;
pub mod order;
pub mod props;
pub mod theorems;
pub mod topo;

pub use error::{Error, Result};
pub use ground::{GroundSet, SetFamily, Subset};
pub use order::{Quasiorder, QuotientOrder};
pub use topo::GenTopology;

/// Enumeration limits for operations that sweep a powerset.
///
/// `enumeration` bounds any operation listing up to `2^n` subsets (dense
/// families, specialization topologies, superset/cofinite topologies);
/// `resolvability` bounds the `2^(n-1)` density-pair search, which does one
/// pass instead of materializing a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub enumeration: usize,
    pub resolvability: usize,
}

pub const DEFAULT_ENUMERATION_CAP: usize = 16;
pub const DEFAULT_RESOLVABILITY_CAP: usize = 24;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            resolvability: DEFAULT_RESOLVABILITY_CAP,
        }
    }
}

impl Caps {
    /// Caps raised to `n` wherever the default is lower, for callers that
    /// accept slow sweeps.
    pub fn at_least(n: usize) -> Self {
        let d = Caps::default();
        Caps {
            enumeration: d.enumeration.max(n),
            resolvability: d.resolvability.max(n),
        }
    }
}
