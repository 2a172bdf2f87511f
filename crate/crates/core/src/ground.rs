//! Carriers, subsets as one-word bitmasks, and canonically ordered set families.
//!
//! Everything downstream (quasiorders, generalized topologies, the statement
//! checker) works over these three types. A carrier holds at most 64 elements
//! so a subset is always a single `u64`; all published examples use n <= 4 and
//! exhaustive sweeps are only feasible for n <= 5 anyway.

use crate::error::{Error, Result};

/// The carrier set X: a size plus stable, pairwise-distinct element labels.
///
/// Element index `i` and `labels()[i]` are a fixed bijection for the lifetime
/// of the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > 64 {
            return Err(Error::TooManyElements { size: labels.len() });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel { label: l.clone() });
            }
        }
        Ok(GroundSet { labels })
    }

    /// Carrier {"1", "2", ..., "n"} with the labels the worked examples use.
    pub fn with_size(n: usize) -> Result<Self> {
        GroundSet::new((1..=n).map(|i| i.to_string()))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The subset X itself.
    pub fn full(&self) -> Subset {
        Subset::universe(self.size())
    }

    pub fn subset_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = Subset::EMPTY;
        for l in labels {
            let i = self
                .index_of(l.as_ref())
                .ok_or_else(|| Error::UnknownLabel {
                    label: l.as_ref().to_string(),
                })?;
            s = s.with(i);
        }
        Ok(s)
    }

    /// Labels of the elements of `s`, in index order.
    pub fn labels_of(&self, s: Subset) -> Vec<String> {
        s.elements().map(|i| self.labels[i].clone()).collect()
    }

    /// Renders `s` as `{a,b,c}` for diagnostics.
    pub fn render(&self, s: Subset) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    /// All 2^n subsets in canonical order (ascending cardinality, then
    /// ascending bitmask value). Only usable for n <= 24 or so; callers
    /// enforce their own caps.
    pub fn subsets_canonical(&self) -> impl Iterator<Item = Subset> + '_ {
        let n = self.size();
        (0..=n).flat_map(move |k| subsets_of_cardinality(n, k))
    }
}

/// All k-element subsets of {0,..,n-1} in ascending bitmask order, via
/// Gosper's hack.
pub fn subsets_of_cardinality(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    debug_assert!(n <= 63 || k == 0, "Gosper iteration needs headroom");
    let limit: u64 = 1u64 << n;
    let first: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut cur = Some(first);
    std::iter::from_fn(move || {
        let v = cur?;
        if v >= limit && !(k == 0 && v == 0) {
            cur = None;
            return None;
        }
        if k == 0 {
            cur = None;
            return Some(Subset::from_bits(0));
        }
        let c = v & v.wrapping_neg();
        let r = v + c;
        cur = if c == 0 {
            None
        } else {
            Some((((r ^ v) >> 2) / c) | r)
        };
        if let Some(nx) = cur {
            if nx >= limit {
                cur = None;
            }
        }
        Some(Subset::from_bits(v))
    })
}

/// A subset of the carrier, one bit per element index.
///
/// Equality is bitmask equality. Bits at positions >= the owning carrier's
/// size must stay zero; constructors and parsers maintain this.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    /// The full subset of an n-element carrier.
    pub fn universe(n: usize) -> Self {
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        Subset(!self.0 & Subset::universe(n).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    /// Element indices in ascending order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Sort key realizing the canonical order: cardinality first, then value.
    pub fn canonical_key(self) -> (u32, u64) {
        (self.cardinality(), self.0)
    }
}

/// A deduplicated family of subsets in canonical order (ascending
/// cardinality, then ascending bitmask value), so identical inputs always
/// serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SetFamily {
    members: Vec<Subset>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(members: I) -> Self {
        let mut members: Vec<Subset> = members.into_iter().collect();
        members.sort_unstable_by_key(|s| s.canonical_key());
        members.dedup();
        SetFamily { members }
    }

    pub fn empty() -> Self {
        SetFamily::default()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members
            .binary_search_by_key(&s.canonical_key(), |m| m.canonical_key())
            .is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().copied()
    }

    /// Members without the empty set, i.e. F \ {∅}.
    pub fn nonempty_members(&self) -> impl Iterator<Item = Subset> + '_ {
        self.iter().filter(|s| !s.is_empty())
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// ⋃F.
    pub fn union_of_all(&self) -> Subset {
        self.iter().fold(Subset::EMPTY, Subset::union)
    }

    pub fn with_member(&self, s: Subset) -> SetFamily {
        SetFamily::new(self.iter().chain(std::iter::once(s)))
    }

    /// Smallest family containing ∅, every member, and closed under pairwise
    /// union.
    ///
    /// On a finite carrier, closure under pairwise unions equals closure
    /// under arbitrary unions: any union of a subfamily is a finite union,
    /// which pairwise closure reaches by induction on the subfamily size,
    /// and the union of the empty subfamily is the seeded ∅.
    pub fn union_closure(&self) -> SetFamily {
        close_under(self.iter().chain(std::iter::once(Subset::EMPTY)), true, false)
    }

    /// Smallest superfamily closed under pairwise intersection.
    pub fn intersection_closure(&self) -> SetFamily {
        close_under(self.iter(), false, true)
    }

    /// The coarsest topology containing the family: smallest superfamily
    /// holding ∅ and X and closed under pairwise union and intersection.
    pub fn generated_topology(&self, ground: &GroundSet) -> SetFamily {
        close_under(
            self.iter()
                .chain([Subset::EMPTY, ground.full()]),
            true,
            true,
        )
    }
}

impl FromIterator<Subset> for SetFamily {
    fn from_iter<I: IntoIterator<Item = Subset>>(iter: I) -> Self {
        SetFamily::new(iter)
    }
}

/// Worklist fixpoint: every pair of members is combined with the requested
/// operations until nothing new appears. Terminates because the powerset of
/// the carrier is finite.
fn close_under<I: IntoIterator<Item = Subset>>(seed: I, unions: bool, intersections: bool) -> SetFamily {
    let mut all: Vec<u64> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for s in seed {
        if seen.insert(s.bits()) {
            all.push(s.bits());
        }
    }
    let mut i = 0;
    while i < all.len() {
        let a = all[i];
        for j in 0..=i {
            let b = all[j];
            if unions {
                let u = a | b;
                if seen.insert(u) {
                    all.push(u);
                }
            }
            if intersections {
                let v = a & b;
                if seen.insert(v) {
                    all.push(v);
                }
            }
        }
        i += 1;
    }
    SetFamily::new(all.into_iter().map(Subset::from_bits))
}
