//! Generalized topologies and the constructions `mu[A]`, `mu_tilde[A]`,
//! `I(A)`, superset and cofinite topologies, plus closure, interior, dense,
//! nowhere-dense and isolated-point machinery.

use crate::error::{Error, Result};
use crate::ground::{GroundSet, SetFamily, Subset};
use crate::DEFAULT_ENUMERATION_CAP;

/// A generalized topological space: a carrier plus a family of opens that
/// contains ∅ and is closed under pairwise unions (on a finite carrier that
/// is the same as closure under arbitrary unions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenTopology {
    ground: GroundSet,
    opens: SetFamily,
}

impl GenTopology {
    /// Validates the generalized-topology invariants. The union-closure
    /// failure reports the first offending pair of members.
    pub fn new(ground: GroundSet, opens: SetFamily) -> Result<Self> {
        if !opens.contains(Subset::EMPTY) {
            return Err(Error::MissingEmptySet);
        }
        for a in opens.iter() {
            for b in opens.iter() {
                if !opens.contains(a.union(b)) {
                    return Err(Error::NotUnionClosed {
                        a: ground.render(a),
                        b: ground.render(b),
                    });
                }
            }
        }
        Ok(GenTopology { ground, opens })
    }

    /// For families already known to be union-closed (closure outputs).
    pub(crate) fn new_unchecked(ground: GroundSet, opens: SetFamily) -> Self {
        debug_assert!(opens.contains(Subset::EMPTY));
        GenTopology { ground, opens }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn size(&self) -> usize {
        self.ground.size()
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.contains(s)
    }

    pub fn is_closed(&self, s: Subset) -> bool {
        self.opens.contains(s.complement(self.size()))
    }

    /// Union of the opens contained in `e`.
    pub fn interior(&self, e: Subset) -> Subset {
        self.opens
            .iter()
            .filter(|u| u.is_subset_of(e))
            .fold(Subset::EMPTY, Subset::union)
    }

    /// Intersection of the closed sets containing `e`, computed through the
    /// complement-interior duality (one pass over the opens).
    pub fn closure(&self, e: Subset) -> Subset {
        self.interior(e.complement(self.size())).complement(self.size())
    }

    /// True iff `d` meets every nonempty open.
    pub fn is_dense(&self, d: Subset) -> bool {
        self.opens
            .nonempty_members()
            .all(|u| u.intersects(d))
    }

    pub fn is_nowhere_dense(&self, e: Subset) -> bool {
        self.interior(self.closure(e)).is_empty()
    }

    /// `{x : {x} is open}`.
    pub fn isolated_points(&self) -> Subset {
        (0..self.size())
            .filter(|&x| self.is_open(Subset::singleton(x)))
            .fold(Subset::EMPTY, |s, x| s.with(x))
    }

    /// The dense family `D(X)`, canonical order.
    pub fn dense_family(&self) -> Result<SetFamily> {
        self.dense_family_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn dense_family_with_cap(&self, cap: usize) -> Result<SetFamily> {
        let n = self.size();
        if n > cap {
            return Err(Error::CapExceeded { what: "dense family", n, cap });
        }
        Ok(SetFamily::new(
            (0..1u64 << n)
                .map(Subset::from_bits)
                .filter(|d| self.is_dense(*d)),
        ))
    }

    /// `DO(X) = opens ∩ D(X)`; needs no powerset sweep.
    pub fn dense_open_family(&self) -> SetFamily {
        SetFamily::new(self.opens.iter().filter(|u| self.is_dense(*u)))
    }

    /// The nowhere-dense family `ND(X)`.
    pub fn nowhere_dense_family(&self) -> Result<SetFamily> {
        self.nowhere_dense_family_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn nowhere_dense_family_with_cap(&self, cap: usize) -> Result<SetFamily> {
        let n = self.size();
        if n > cap {
            return Err(Error::CapExceeded { what: "nowhere-dense family", n, cap });
        }
        Ok(SetFamily::new(
            (0..1u64 << n)
                .map(Subset::from_bits)
                .filter(|e| self.is_nowhere_dense(*e)),
        ))
    }

    /// `{x : {x} is not nowhere dense}`.
    pub fn not_nowhere_dense_singletons(&self) -> Subset {
        (0..self.size())
            .filter(|&x| !self.is_nowhere_dense(Subset::singleton(x)))
            .fold(Subset::EMPTY, |s, x| s.with(x))
    }
}

/// `mu[A]`: the generalized topology with base `A`, i.e. all unions of
/// subfamilies of `A` plus ∅. Equivalently `{U : every x in U has some
/// A-member between x and U}`; the closure route is the implementation and
/// the pointwise route is checked in tests.
pub fn mu_of_family(family: &SetFamily, ground: &GroundSet) -> GenTopology {
    GenTopology::new_unchecked(ground.clone(), family.union_closure())
}

/// `mu_tilde[A]`: ∅ plus every superset of a nonempty member of `A`.
pub fn mu_tilde_of_family(family: &SetFamily, ground: &GroundSet) -> Result<GenTopology> {
    mu_tilde_of_family_with_cap(family, ground, DEFAULT_ENUMERATION_CAP)
}

pub fn mu_tilde_of_family_with_cap(
    family: &SetFamily,
    ground: &GroundSet,
    cap: usize,
) -> Result<GenTopology> {
    let n = ground.size();
    if n > cap {
        return Err(Error::CapExceeded { what: "mu_tilde", n, cap });
    }
    let opens = SetFamily::new(
        (0..1u64 << n)
            .map(Subset::from_bits)
            .filter(|u| family.nonempty_members().any(|a| a.is_subset_of(*u)))
            .chain([Subset::EMPTY]),
    );
    Ok(GenTopology::new_unchecked(ground.clone(), opens))
}

/// `I(F) = ⋂(F \ {∅})`, undefined when there is no nonempty member.
pub fn cap_i(family: &SetFamily, ground: &GroundSet) -> Result<Subset> {
    let mut it = family.nonempty_members();
    let first = it.next().ok_or(Error::UndefinedIntersection)?;
    let _ = ground;
    Ok(it.fold(first, Subset::intersection))
}

/// The pointed neighborhoods of `x` in a family: `B` is the subfamily of
/// members containing `x`, and `I` is their intersection when `B` is
/// nonempty.
pub fn neighborhoods(family: &SetFamily, x: usize) -> (SetFamily, Option<Subset>) {
    let b = SetFamily::new(family.iter().filter(|a| a.contains(x)));
    let i = b
        .iter()
        .reduce(Subset::intersection);
    (b, i)
}

/// `super(S)`: ∅ plus every superset of `S`. Discrete for `S = ∅`,
/// indiscrete for `S = X`.
pub fn superset_topology(s: Subset, ground: &GroundSet) -> Result<GenTopology> {
    superset_topology_with_cap(s, ground, DEFAULT_ENUMERATION_CAP)
}

pub fn superset_topology_with_cap(s: Subset, ground: &GroundSet, cap: usize) -> Result<GenTopology> {
    let n = ground.size();
    if n > cap {
        return Err(Error::CapExceeded { what: "superset topology", n, cap });
    }
    let opens = SetFamily::new(
        (0..1u64 << n)
            .map(Subset::from_bits)
            .filter(|u| s.is_subset_of(*u))
            .chain([Subset::EMPTY]),
    );
    Ok(GenTopology::new_unchecked(ground.clone(), opens))
}

/// The cofinite topology. Every complement is finite on a finite carrier,
/// so this is the discrete topology here; the distinction only matters on
/// infinite carriers, which are out of range for this library.
pub fn cofinite_topology(ground: &GroundSet) -> Result<GenTopology> {
    cofinite_topology_with_cap(ground, DEFAULT_ENUMERATION_CAP)
}

pub fn cofinite_topology_with_cap(ground: &GroundSet, cap: usize) -> Result<GenTopology> {
    let n = ground.size();
    if n > cap {
        return Err(Error::CapExceeded { what: "cofinite topology", n, cap });
    }
    let opens = SetFamily::new((0..1u64 << n).map(Subset::from_bits));
    Ok(GenTopology::new_unchecked(ground.clone(), opens))
}

/// Classification flags for an arbitrary family of subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyFlags {
    /// ∅ present and closed under pairwise union.
    pub is_generalized_topology: bool,
    /// Additionally contains the carrier.
    pub is_strong: bool,
    /// Additionally closed under pairwise intersection.
    pub is_topology: bool,
    /// Closed under all nonempty intersections. A finite family that is
    /// closed under pairwise intersections is closed under all finite
    /// nonempty ones by induction, so on finite carriers this coincides
    /// with `is_topology`; the flag is kept separate because several
    /// catalog statements quantify over it by name.
    pub is_alexandroff: bool,
}

pub fn classify(family: &SetFamily, ground: &GroundSet) -> ClassifyFlags {
    let has_empty = family.contains(Subset::EMPTY);
    let union_closed = family
        .iter()
        .all(|a| family.iter().all(|b| family.contains(a.union(b))));
    let inter_closed = family
        .iter()
        .all(|a| family.iter().all(|b| family.contains(a.intersection(b))));
    let is_gen = has_empty && union_closed;
    let is_strong = is_gen && family.contains(ground.full());
    let is_topology = is_strong && inter_closed;
    ClassifyFlags {
        is_generalized_topology: is_gen,
        is_strong,
        is_topology,
        is_alexandroff: is_topology,
    }
}

/// B is a base for `topo`: a subfamily such that every point of every open
/// has a B-member between the point and the open.
pub fn is_base_for(base: &SetFamily, topo: &SetFamily) -> bool {
    base.is_subfamily_of(topo)
        && topo.iter().all(|u| {
            u.elements()
                .all(|x| base.iter().any(|b| b.contains(x) && b.is_subset_of(u)))
        })
}
