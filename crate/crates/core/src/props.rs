//! Whole-space predicates: separation axioms, iso-density, resolvability,
//! and the dense-intersection formulae `F_d` and `F_d^T`.
//!
//! Predicates come in witness-producing form; [`SpaceProfile`] bundles them
//! for reports. The resolvability and dense-pair searches honor the
//! enumeration caps, so those profile fields are optional.

use crate::error::{Error, Result};
use crate::ground::{SetFamily, Subset};
use crate::topo::GenTopology;
use crate::Caps;

/// Witness for a failed T0 check: a pair no open separates.
pub fn t0_violation(t: &GenTopology) -> Option<(usize, usize)> {
    let n = t.size();
    for x in 0..n {
        for y in x + 1..n {
            let separated = t.opens().iter().any(|u| {
                let hits = u.contains(x) as u8 + u.contains(y) as u8;
                hits == 1
            });
            if !separated {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_t0(t: &GenTopology) -> bool {
    t0_violation(t).is_none()
}

/// Witness for a failed T1 check: an element whose singleton is not closed.
pub fn t1_violation(t: &GenTopology) -> Option<usize> {
    (0..t.size()).find(|&x| !t.is_closed(Subset::singleton(x)))
}

pub fn is_t1(t: &GenTopology) -> bool {
    t1_violation(t).is_none()
}

/// `opens ⊆ {∅, X}`; both {∅} and {∅, X} count.
pub fn is_indiscrete(t: &GenTopology) -> bool {
    indiscrete_violation(t).is_none()
}

/// An open set other than ∅ and X, if any.
pub fn indiscrete_violation(t: &GenTopology) -> Option<Subset> {
    let full = t.ground().full();
    t.opens().iter().find(|&u| !u.is_empty() && u != full)
}

pub fn is_discrete(t: &GenTopology) -> bool {
    discrete_violation(t).is_none()
}

/// An element whose singleton is not open, if any. A union-closed family
/// containing ∅ and every singleton is the whole powerset.
pub fn discrete_violation(t: &GenTopology) -> Option<usize> {
    (0..t.size()).find(|&x| !t.is_open(Subset::singleton(x)))
}

pub fn is_iso_dense(t: &GenTopology) -> bool {
    t.is_dense(t.isolated_points())
}

/// When not iso-dense: a nonempty open missing every isolated point.
pub fn iso_dense_violation(t: &GenTopology) -> Option<Subset> {
    let iso = t.isolated_points();
    t.opens()
        .nonempty_members()
        .find(|u| !u.intersects(iso))
}

pub fn is_dense_in_itself(t: &GenTopology) -> bool {
    t.isolated_points().is_empty()
}

/// `Some((d, complement))` when the space is resolvable, `None` when not.
///
/// An isolated point sits in every dense set, so any isolated point settles
/// the question before the search. The search walks candidates `d` that
/// avoid element 0 in canonical order (one of `d`, `X∖d` always does, so
/// half the powerset suffices) and reports the first witness found.
pub fn resolvability_witness(t: &GenTopology, cap: usize) -> Result<Option<(Subset, Subset)>> {
    let n = t.size();
    if n > cap {
        return Err(Error::CapExceeded { what: "resolvability search", n, cap });
    }
    if !t.isolated_points().is_empty() {
        return Ok(None);
    }
    if n == 0 {
        // The only candidate is ∅, dense exactly when there is no nonempty
        // open; its complement is ∅ again.
        return Ok(if t.is_dense(Subset::EMPTY) {
            Some((Subset::EMPTY, Subset::EMPTY))
        } else {
            None
        });
    }
    let rest = n - 1;
    for k in 0..=rest {
        for small in crate::ground::subsets_of_cardinality(rest, k) {
            let d = Subset::from_bits(small.bits() << 1);
            let co = d.complement(n);
            if t.is_dense(d) && t.is_dense(co) {
                return Ok(Some((d, co)));
            }
        }
    }
    Ok(None)
}

pub fn is_resolvable(t: &GenTopology, cap: usize) -> Result<bool> {
    Ok(resolvability_witness(t, cap)?.is_some())
}

/// Outcome of a dense-pair quantification: the flag plus the first
/// counterexample pair in canonical order when it fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairCheck {
    pub holds: bool,
    pub witness: Option<(Subset, Subset)>,
}

/// `F_d`: every pairwise intersection of dense sets is dense.
pub fn f_d(t: &GenTopology, cap: usize) -> Result<PairCheck> {
    let dense = t.dense_family_with_cap(cap)?;
    Ok(quantify_dense_pairs(t, &dense, false))
}

/// `F_d^T`: every pairwise intersection of dense sets is empty or dense;
/// equivalently `mu[D(X)]` is a topology.
pub fn f_d_t(t: &GenTopology, cap: usize) -> Result<PairCheck> {
    let dense = t.dense_family_with_cap(cap)?;
    Ok(quantify_dense_pairs(t, &dense, true))
}

fn quantify_dense_pairs(t: &GenTopology, dense: &SetFamily, allow_empty: bool) -> PairCheck {
    for a in dense.iter() {
        for b in dense.iter() {
            let i = a.intersection(b);
            if allow_empty && i.is_empty() {
                continue;
            }
            if !t.is_dense(i) {
                return PairCheck { holds: false, witness: Some((a, b)) };
            }
        }
    }
    PairCheck { holds: true, witness: None }
}

/// The full predicate bundle for one space. Flags that need a powerset or
/// pair sweep are `None` when the carrier exceeds the caps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceProfile {
    pub is_t0: bool,
    pub t0_witness: Option<(usize, usize)>,
    pub is_t1: bool,
    pub t1_witness: Option<usize>,
    pub is_indiscrete: bool,
    pub indiscrete_witness: Option<Subset>,
    pub is_discrete: bool,
    pub discrete_witness: Option<usize>,
    pub is_iso_dense: bool,
    pub iso_dense_witness: Option<Subset>,
    pub is_dense_in_itself: bool,
    pub isolated_witness: Option<usize>,
    pub is_resolvable: Option<bool>,
    pub resolvable_witness: Option<(Subset, Subset)>,
    pub f_d: Option<bool>,
    pub f_d_witness: Option<(Subset, Subset)>,
    pub f_d_t: Option<bool>,
    pub f_d_t_witness: Option<(Subset, Subset)>,
}

impl SpaceProfile {
    pub fn of(t: &GenTopology, caps: &Caps) -> SpaceProfile {
        let t0_witness = t0_violation(t);
        let t1_witness = t1_violation(t);
        let indiscrete_witness = indiscrete_violation(t);
        let discrete_witness = discrete_violation(t);
        let iso = t.isolated_points();
        let iso_dense = t.is_dense(iso);
        let iso_dense_witness = if iso_dense { None } else { iso_dense_violation(t) };
        let isolated_witness = iso.elements().next();

        let resolvable = resolvability_witness(t, caps.resolvability).ok();
        let (is_resolvable, resolvable_witness) = match resolvable {
            Some(w) => (Some(w.is_some()), w),
            None => (None, None),
        };

        let fd = f_d(t, caps.enumeration).ok();
        let (f_d_flag, f_d_witness) = match fd {
            Some(c) => (Some(c.holds), c.witness),
            None => (None, None),
        };
        let fdt = f_d_t(t, caps.enumeration).ok();
        let (f_d_t_flag, f_d_t_witness) = match fdt {
            Some(c) => (Some(c.holds), c.witness),
            None => (None, None),
        };

        SpaceProfile {
            is_t0: t0_witness.is_none(),
            t0_witness,
            is_t1: t1_witness.is_none(),
            t1_witness,
            is_indiscrete: indiscrete_witness.is_none(),
            indiscrete_witness,
            is_discrete: discrete_witness.is_none(),
            discrete_witness,
            is_iso_dense: iso_dense,
            iso_dense_witness,
            is_dense_in_itself: isolated_witness.is_none(),
            isolated_witness,
            is_resolvable,
            resolvable_witness,
            f_d: f_d_flag,
            f_d_witness,
            f_d_t: f_d_t_flag,
            f_d_t_witness,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::topo::{classify, mu_of_family, superset_topology};

    fn space(n: usize, sets: &[&[&str]]) -> GenTopology {
        let ground = GroundSet::with_size(n).unwrap();
        let opens = SetFamily::new(sets.iter().map(|s| ground.subset_from_labels(s).unwrap()));
        GenTopology::new(ground, opens).unwrap()
    }

    fn all_gentopos(n: usize) -> Vec<GenTopology> {
        let ground = GroundSet::with_size(n).unwrap();
        (0u64..1 << (1 << n))
            .filter_map(|idx| {
                let f = SetFamily::new(
                    (0..1u64 << n).filter(|s| idx >> s & 1 == 1).map(Subset::from_bits),
                );
                GenTopology::new(ground.clone(), f).ok()
            })
            .collect()
    }

    const CAP: usize = 16;

    #[test]
    fn separation_on_the_point_superset_space() {
        let ground = GroundSet::with_size(2).unwrap();
        let t = superset_topology(ground.subset_from_labels(&["1"]).unwrap(), &ground).unwrap();
        assert!(is_t0(&t));
        assert!(!is_t1(&t));
        assert_eq!(t1_violation(&t), Some(0));

        let discrete = superset_topology(Subset::EMPTY, &ground).unwrap();
        assert!(is_t0(&discrete) && is_t1(&discrete));

        let indiscrete = space(2, &[&[], &["1", "2"]]);
        assert!(!is_t0(&indiscrete) && !is_t1(&indiscrete));
        assert_eq!(t0_violation(&indiscrete), Some((0, 1)));
    }

    #[test]
    fn t1_implies_t0_on_all_small_spaces() {
        for n in 0..=3 {
            for t in all_gentopos(n) {
                if is_t1(&t) {
                    assert!(is_t0(&t));
                }
            }
        }
    }

    #[test]
    fn indiscrete_and_discrete_flags() {
        assert!(is_indiscrete(&space(2, &[&[]])));
        assert!(is_indiscrete(&space(2, &[&[], &["1", "2"]])));
        let t = space(3, &[&[], &["1", "2", "3"], &["1", "2"]]);
        assert!(!is_indiscrete(&t) && !is_discrete(&t));
        assert_eq!(
            indiscrete_violation(&t),
            Some(t.ground().subset_from_labels(&["1", "2"]).unwrap())
        );
        assert_eq!(discrete_violation(&t), Some(0));

        // Discreteness agrees with counting the opens.
        for n in 0..=3 {
            for t in all_gentopos(n) {
                assert_eq!(is_discrete(&t), t.opens().len() == 1 << n);
            }
        }
    }

    #[test]
    fn iso_density_of_the_empty_topology_space() {
        // opens {∅}: no isolated points, yet ∅ is dense, so the space is
        // both dense-in-itself and iso-dense.
        let t = space(2, &[&[]]);
        assert!(is_iso_dense(&t));
        assert!(is_dense_in_itself(&t));
    }

    #[test]
    fn iso_density_of_superset_spaces() {
        let ground = GroundSet::with_size(3).unwrap();
        let t = superset_topology(ground.subset_from_labels(&["1"]).unwrap(), &ground).unwrap();
        assert!(is_iso_dense(&t));
        assert!(!is_dense_in_itself(&t));
    }

    #[test]
    fn the_two_proper_open_space_is_crowded_but_not_iso_dense() {
        let t = space(3, &[&[], &["1", "2", "3"], &["1", "2"], &["2", "3"]]);
        assert!(!is_iso_dense(&t));
        assert!(is_dense_in_itself(&t));
        assert!(iso_dense_violation(&t).is_some());
    }

    #[test]
    fn discrete_implies_iso_dense() {
        for n in 0..=3 {
            for t in all_gentopos(n) {
                if is_discrete(&t) {
                    assert!(is_iso_dense(&t));
                }
            }
        }
    }

    #[test]
    fn resolvable_witness_of_the_running_resolvable_space() {
        let t = space(3, &[&[], &["1", "2", "3"], &["1", "2"], &["2", "3"]]);
        let (d, co) = resolvability_witness(&t, CAP).unwrap().unwrap();
        assert_eq!(d, t.ground().subset_from_labels(&["2"]).unwrap());
        assert_eq!(co, t.ground().subset_from_labels(&["1", "3"]).unwrap());
        assert!(t.is_dense(d) && t.is_dense(co));
    }

    #[test]
    fn one_proper_open_space_is_resolvable() {
        let t = space(3, &[&[], &["1", "2", "3"], &["1", "2"]]);
        assert!(is_resolvable(&t, CAP).unwrap());
    }

    #[test]
    fn resolvability_of_the_four_running_example_structures() {
        // For A = {{1,2},{2,3,4}}: the two specialization topologies contain
        // the open singleton {2} and are irresolvable; mu[A] and mu_tilde[A]
        // are resolvable, with {1,3} / {2,4} as the canonical witness.
        use crate::order::Quasiorder;
        use crate::topo::mu_tilde_of_family;
        let x = GroundSet::with_size(4).unwrap();
        let a = SetFamily::new([
            x.subset_from_labels(&["1", "2"]).unwrap(),
            x.subset_from_labels(&["2", "3", "4"]).unwrap(),
        ]);
        let mu = mu_of_family(&a, &x);
        let mt = mu_tilde_of_family(&a, &x).unwrap();
        let tau = GenTopology::new(
            x.clone(),
            Quasiorder::from_family(&a, &x).specialization_topology().unwrap(),
        )
        .unwrap();
        let tau_mt = GenTopology::new(
            x.clone(),
            Quasiorder::from_family(mt.opens(), &x).specialization_topology().unwrap(),
        )
        .unwrap();

        // First witness in canonical order: {2} avoids element 1 and is
        // dense, and so is its complement. The pair {1,3} / {2,4} works too.
        let witness = (
            x.subset_from_labels(&["2"]).unwrap(),
            x.subset_from_labels(&["1", "3", "4"]).unwrap(),
        );
        assert_eq!(resolvability_witness(&mu, CAP).unwrap(), Some(witness));
        assert_eq!(resolvability_witness(&mt, CAP).unwrap(), Some(witness));
        for d in [
            x.subset_from_labels(&["1", "3"]).unwrap(),
            x.subset_from_labels(&["2", "4"]).unwrap(),
        ] {
            assert!(mu.is_dense(d));
            assert!(mt.is_dense(d));
        }
        assert!(!is_resolvable(&tau, CAP).unwrap());
        assert!(!is_resolvable(&tau_mt, CAP).unwrap());
    }

    #[test]
    fn any_isolated_point_forces_irresolvable() {
        for n in 1..=3 {
            for t in all_gentopos(n) {
                if !t.isolated_points().is_empty() {
                    assert!(!is_resolvable(&t, CAP).unwrap());
                }
            }
        }
    }

    #[test]
    fn resolvability_search_matches_unrestricted_brute_force() {
        for n in 0..=3 {
            for t in all_gentopos(n) {
                let brute = (0..1u64 << n).map(Subset::from_bits).any(|d| {
                    t.is_dense(d) && t.is_dense(d.complement(n))
                });
                assert_eq!(is_resolvable(&t, CAP).unwrap(), brute);
            }
        }
    }

    #[test]
    fn resolvability_cap_errors() {
        let ground = GroundSet::new((0..30).map(|i| i.to_string())).unwrap();
        let t = GenTopology::new(ground, SetFamily::new([Subset::EMPTY])).unwrap();
        assert!(matches!(
            is_resolvable(&t, 24),
            Err(Error::CapExceeded { n: 30, cap: 24, .. })
        ));
    }

    #[test]
    fn dense_pair_formulae_on_the_named_spaces() {
        // Indiscrete with two points: F_d^T holds, F_d does not.
        let t = space(2, &[&[], &["1", "2"]]);
        assert!(!f_d(&t, CAP).unwrap().holds);
        assert!(f_d_t(&t, CAP).unwrap().holds);

        // Point superset space: both hold.
        let ground = GroundSet::with_size(3).unwrap();
        let sup = superset_topology(ground.subset_from_labels(&["1"]).unwrap(), &ground).unwrap();
        assert!(f_d(&sup, CAP).unwrap().holds);
        assert!(f_d_t(&sup, CAP).unwrap().holds);

        // The two-proper-open space: both fail, with canonical witnesses.
        let t = space(3, &[&[], &["1", "2", "3"], &["1", "2"], &["2", "3"]]);
        let fd = f_d(&t, CAP).unwrap();
        assert!(!fd.holds);
        assert_eq!(
            fd.witness,
            Some((
                t.ground().subset_from_labels(&["2"]).unwrap(),
                t.ground().subset_from_labels(&["1", "3"]).unwrap()
            ))
        );
        let fdt = f_d_t(&t, CAP).unwrap();
        assert!(!fdt.holds);
        assert_eq!(
            fdt.witness,
            Some((
                t.ground().subset_from_labels(&["1", "2"]).unwrap(),
                t.ground().subset_from_labels(&["1", "3"]).unwrap()
            ))
        );
    }

    #[test]
    fn empty_topology_spaces_satisfy_both_formulae() {
        // opens {∅}: every subset is dense, and every intersection is again
        // dense, so F_d holds literally.
        for n in 0..=3 {
            let ground = GroundSet::with_size(n).unwrap();
            let t = GenTopology::new(ground, SetFamily::new([Subset::EMPTY])).unwrap();
            assert!(f_d(&t, CAP).unwrap().holds);
            assert!(f_d_t(&t, CAP).unwrap().holds);
        }
    }

    #[test]
    fn f_d_t_is_the_topology_flag_of_mu_of_dense() {
        for n in 0..=3 {
            for t in all_gentopos(n) {
                let dense = t.dense_family_with_cap(CAP).unwrap();
                let mu_d = mu_of_family(&dense, t.ground());
                let flag = classify(mu_d.opens(), t.ground()).is_topology;
                assert_eq!(f_d_t(&t, CAP).unwrap().holds, flag);
            }
        }
    }

    #[test]
    fn f_d_implies_f_d_t_and_iso_dense_implies_f_d() {
        for n in 0..=3 {
            for t in all_gentopos(n) {
                let fd = f_d(&t, CAP).unwrap().holds;
                let fdt = f_d_t(&t, CAP).unwrap().holds;
                if is_iso_dense(&t) {
                    assert!(fd);
                }
                if fd {
                    assert!(fdt);
                }
            }
        }
    }

    #[test]
    fn profile_collects_witnesses() {
        let t = space(3, &[&[], &["1", "2", "3"], &["1", "2"], &["2", "3"]]);
        let p = SpaceProfile::of(&t, &Caps::default());
        // Every pair is separated by one of the two proper opens, so T0
        // holds; {2} is the first singleton without an open complement.
        assert!(p.is_t0 && p.t0_witness.is_none());
        assert!(!p.is_t1 && p.t1_witness == Some(1));
        assert!(!p.is_indiscrete && p.indiscrete_witness.is_some());
        assert!(!p.is_discrete && p.discrete_witness == Some(0));
        assert!(!p.is_iso_dense && p.iso_dense_witness.is_some());
        assert!(p.is_dense_in_itself && p.isolated_witness.is_none());
        assert_eq!(p.is_resolvable, Some(true));
        assert!(p.resolvable_witness.is_some());
        assert_eq!(p.f_d, Some(false));
        assert_eq!(p.f_d_t, Some(false));
    }

    #[test]
    fn profile_of_the_empty_carrier() {
        let ground = GroundSet::new(Vec::<String>::new()).unwrap();
        let t = GenTopology::new(ground, SetFamily::new([Subset::EMPTY])).unwrap();
        let p = SpaceProfile::of(&t, &Caps::default());
        assert!(p.is_t0 && p.is_t1 && p.is_indiscrete && p.is_discrete);
        assert!(p.is_iso_dense && p.is_dense_in_itself);
        assert_eq!(p.is_resolvable, Some(true));
        assert_eq!(p.f_d, Some(true));
        assert_eq!(p.f_d_t, Some(true));
    }
}
