//! Shared derived data for statement checks.
//!
//! Building the generalized topologies, quasiorders and specialization
//! topologies once per instance and letting every statement read them keeps
//! a nine-statement sweep over 65534 families cheap.

use crate::error::Result;
use crate::ground::{GroundSet, SetFamily, Subset};
use crate::order::Quasiorder;
use crate::props;
use crate::topo::{
    cap_i, classify, mu_of_family, mu_tilde_of_family_with_cap, ClassifyFlags, GenTopology,
};
use crate::Caps;

/// Everything the family-driven statements look at.
pub(crate) struct FamilyContext {
    pub ground: GroundSet,
    pub family: SetFamily,
    /// The standing admissibility hypothesis ∅ ≠ A ≠ {∅}.
    pub admissible: bool,
    pub mu: GenTopology,
    pub mu_tilde: GenTopology,
    pub q_family: Quasiorder,
    pub q_mu: Quasiorder,
    pub q_mu_tilde: Quasiorder,
    pub tau_family: SetFamily,
    pub tau_mu_tilde: SetFamily,
    /// I(A); `None` when the family has no nonempty member.
    pub i: Option<Subset>,
}

impl FamilyContext {
    pub fn new(ground: &GroundSet, family: &SetFamily, caps: &Caps) -> Result<Self> {
        let cap = caps.enumeration;
        let mu = mu_of_family(family, ground);
        let mu_tilde = mu_tilde_of_family_with_cap(family, ground, cap)?;
        let q_family = Quasiorder::from_family(family, ground);
        let q_mu = Quasiorder::from_family(mu.opens(), ground);
        let q_mu_tilde = Quasiorder::from_family(mu_tilde.opens(), ground);
        let tau_family = q_family.specialization_topology_with_cap(cap)?;
        let tau_mu_tilde = q_mu_tilde.specialization_topology_with_cap(cap)?;
        let i = cap_i(family, ground).ok();
        let admissible = !family.is_empty() && *family != SetFamily::new([Subset::EMPTY]);
        Ok(FamilyContext {
            ground: ground.clone(),
            family: family.clone(),
            admissible,
            mu,
            mu_tilde,
            q_family,
            q_mu,
            q_mu_tilde,
            tau_family,
            tau_mu_tilde,
            i,
        })
    }

    pub fn n(&self) -> usize {
        self.ground.size()
    }

    pub fn discrete_family(&self) -> SetFamily {
        SetFamily::new((0..1u64 << self.n()).map(Subset::from_bits))
    }
}

/// Everything the space-driven statements look at.
pub(crate) struct SpaceContext {
    pub t: GenTopology,
    pub dense: SetFamily,
    pub dense_open: SetFamily,
    pub iso: Subset,
    /// `{x : {x} is not nowhere dense}`.
    pub nnd: Subset,
    /// mu[D(X)].
    pub mu_dense: GenTopology,
    /// mu_tilde[DO(X)].
    pub mt_do: GenTopology,
    pub tau_dense: SetFamily,
    pub tau_mtdo: SetFamily,
    pub i_dense: Option<Subset>,
    pub i_do: Option<Subset>,
    pub flags: ClassifyFlags,
    pub indiscrete: bool,
    pub t0: bool,
    pub t1: bool,
    pub iso_dense: bool,
    pub dense_in_itself: bool,
    pub resolvable: bool,
    pub f_d: bool,
    pub f_d_t: bool,
    pub f_d_witness: Option<(Subset, Subset)>,
    pub f_d_t_witness: Option<(Subset, Subset)>,
    pub resolvable_witness: Option<(Subset, Subset)>,
}

impl SpaceContext {
    pub fn new(t: &GenTopology, caps: &Caps) -> Result<Self> {
        let cap = caps.enumeration;
        let ground = t.ground();
        let dense = t.dense_family_with_cap(cap)?;
        let dense_open = t.dense_open_family();
        let iso = t.isolated_points();
        let nnd = t.not_nowhere_dense_singletons();
        let mu_dense = mu_of_family(&dense, ground);
        let mt_do = mu_tilde_of_family_with_cap(&dense_open, ground, cap)?;
        let q_dense = Quasiorder::from_family(&dense, ground);
        let tau_dense = q_dense.specialization_topology_with_cap(cap)?;
        let q_mtdo = Quasiorder::from_family(mt_do.opens(), ground);
        let tau_mtdo = q_mtdo.specialization_topology_with_cap(cap)?;
        let i_dense = cap_i(&dense, ground).ok();
        let i_do = cap_i(&dense_open, ground).ok();
        let flags = classify(t.opens(), ground);
        let resolvable_witness = props::resolvability_witness(t, caps.resolvability)?;
        let fd = props::f_d(t, cap)?;
        let fdt = props::f_d_t(t, cap)?;
        Ok(SpaceContext {
            dense,
            dense_open,
            iso,
            nnd,
            mu_dense,
            mt_do,
            tau_dense,
            tau_mtdo,
            i_dense,
            i_do,
            flags,
            indiscrete: props::is_indiscrete(t),
            t0: props::is_t0(t),
            t1: props::is_t1(t),
            iso_dense: props::is_iso_dense(t),
            dense_in_itself: props::is_dense_in_itself(t),
            resolvable: resolvable_witness.is_some(),
            resolvable_witness,
            f_d: fd.holds,
            f_d_witness: fd.witness,
            f_d_t: fdt.holds,
            f_d_t_witness: fdt.witness,
            t: t.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.t.size()
    }

    pub fn ground(&self) -> &GroundSet {
        self.t.ground()
    }

    pub fn discrete_family(&self) -> SetFamily {
        SetFamily::new((0..1u64 << self.n()).map(Subset::from_bits))
    }

    /// `super(s)` as a family, without the cap indirection.
    pub fn superset_family(&self, s: Subset) -> SetFamily {
        SetFamily::new(
            (0..1u64 << self.n())
                .map(Subset::from_bits)
                .filter(|u| s.is_subset_of(*u))
                .chain([Subset::EMPTY]),
        )
    }
}
