//! Instance streams: exhaustive enumerations in canonical index order and
//! seed-reproducible random samples.
//!
//! A family over an n-element carrier is encoded by a `u64` whose bit `s` is
//! set when the subset with bitmask `s` belongs to the family, so canonical
//! enumeration order is plain numeric order on the index. Quasiorders are
//! encoded by their off-diagonal bit pattern.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::document::family_to_json;
use crate::error::{Error, Result};
use crate::ground::{GroundSet, SetFamily, Subset};
use crate::order::{enumerate_quasiorders, Quasiorder};
use crate::topo::{classify, GenTopology};

/// One checkable object.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Family {
        ground: GroundSet,
        family: SetFamily,
    },
    Space(GenTopology),
    Quasiorder {
        ground: GroundSet,
        order: Quasiorder,
    },
    QuasiorderPair {
        ground: GroundSet,
        left: Quasiorder,
        right: Quasiorder,
    },
}

impl Instance {
    pub fn kind(&self) -> StreamKind {
        match self {
            Instance::Family { .. } => StreamKind::Families,
            Instance::Space(_) => StreamKind::GenTopologies,
            Instance::Quasiorder { .. } => StreamKind::Quasiorders,
            Instance::QuasiorderPair { .. } => StreamKind::QuasiorderPairs,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Instance::Family { ground, .. } => ground.size(),
            Instance::Space(t) => t.size(),
            Instance::Quasiorder { ground, .. } => ground.size(),
            Instance::QuasiorderPair { ground, .. } => ground.size(),
        }
    }

    /// Canonical JSON rendering, document-shaped where a document form
    /// exists.
    pub fn to_json(&self) -> Value {
        match self {
            Instance::Family { ground, family } => json!({
                "ground": ground.labels(),
                "family": family_to_json(ground, family),
            }),
            Instance::Space(t) => json!({
                "ground": t.ground().labels(),
                "open_sets": family_to_json(t.ground(), t.opens()),
            }),
            Instance::Quasiorder { ground, order } => json!({
                "ground": ground.labels(),
                "quasiorder": {"n": ground.size(), "rows": order.rows()},
            }),
            Instance::QuasiorderPair { ground, left, right } => json!({
                "ground": ground.labels(),
                "left": {"n": ground.size(), "rows": left.rows()},
                "right": {"n": ground.size(), "rows": right.rows()},
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamKind {
    Families,
    GenTopologies,
    Quasiorders,
    QuasiorderPairs,
}

impl StreamKind {
    pub fn name(self) -> &'static str {
        match self {
            StreamKind::Families => "family",
            StreamKind::GenTopologies => "generalized topology",
            StreamKind::Quasiorders => "quasiorder",
            StreamKind::QuasiorderPairs => "quasiorder pair",
        }
    }

    /// Largest carrier the exhaustive enumeration accepts.
    pub fn exhaustive_cap(self) -> usize {
        match self {
            StreamKind::Families | StreamKind::GenTopologies => 4,
            StreamKind::Quasiorders => 4,
            StreamKind::QuasiorderPairs => 3,
        }
    }
}

/// A pure, indexable source of instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceStream {
    Exhaustive { kind: StreamKind, n: usize },
    Random { kind: StreamKind, n: usize, seed: u64, count: usize },
}

/// Internal item descriptor; materialization happens per worker.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Item {
    Index(u64),
    Pair(u64, u64),
}

impl InstanceStream {
    pub fn exhaustive_families(n: usize) -> Self {
        InstanceStream::Exhaustive { kind: StreamKind::Families, n }
    }

    pub fn exhaustive_gentopos(n: usize) -> Self {
        InstanceStream::Exhaustive { kind: StreamKind::GenTopologies, n }
    }

    pub fn exhaustive_quasiorders(n: usize) -> Self {
        InstanceStream::Exhaustive { kind: StreamKind::Quasiorders, n }
    }

    pub fn exhaustive_quasiorder_pairs(n: usize) -> Self {
        InstanceStream::Exhaustive { kind: StreamKind::QuasiorderPairs, n }
    }

    pub fn random(kind: StreamKind, n: usize, seed: u64, count: usize) -> Self {
        InstanceStream::Random { kind, n, seed, count }
    }

    pub fn kind(&self) -> StreamKind {
        match *self {
            InstanceStream::Exhaustive { kind, .. } | InstanceStream::Random { kind, .. } => kind,
        }
    }

    pub fn n(&self) -> usize {
        match *self {
            InstanceStream::Exhaustive { n, .. } | InstanceStream::Random { n, .. } => n,
        }
    }

    pub(crate) fn items(&self) -> Result<Vec<Item>> {
        match *self {
            InstanceStream::Exhaustive { kind, n } => {
                if n > kind.exhaustive_cap() {
                    return Err(Error::CapExceeded {
                        what: "exhaustive stream",
                        n,
                        cap: kind.exhaustive_cap(),
                    });
                }
                Ok(match kind {
                    StreamKind::Families => {
                        let total = 1u64 << (1 << n);
                        (2..total).map(Item::Index).collect()
                    }
                    StreamKind::GenTopologies => {
                        let ground = GroundSet::with_size(n)?;
                        let total = 1u64 << (1 << n);
                        (0..total)
                            .filter(|&idx| {
                                classify(&family_from_index(idx, n), &ground)
                                    .is_generalized_topology
                            })
                            .map(Item::Index)
                            .collect()
                    }
                    StreamKind::Quasiorders => enumerate_quasiorder_patterns(n)
                        .into_iter()
                        .map(Item::Index)
                        .collect(),
                    StreamKind::QuasiorderPairs => {
                        let patterns = enumerate_quasiorder_patterns(n);
                        patterns
                            .iter()
                            .flat_map(|&a| patterns.iter().map(move |&b| Item::Pair(a, b)))
                            .collect()
                    }
                })
            }
            InstanceStream::Random { kind, n, seed, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut items = Vec::with_capacity(count);
                match kind {
                    StreamKind::Families => {
                        let total = 1u64 << (1 << n).min(63);
                        while items.len() < count {
                            let idx = rng.gen_range(2..total);
                            items.push(Item::Index(idx));
                        }
                    }
                    StreamKind::GenTopologies => {
                        // Any family index; the union closure applied at
                        // materialization turns it into a generalized
                        // topology.
                        let total = 1u64 << (1 << n).min(63);
                        for _ in 0..count {
                            items.push(Item::Index(rng.gen_range(0..total)));
                        }
                    }
                    StreamKind::Quasiorders => {
                        let bits = n * n - n;
                        for _ in 0..count {
                            // Thinned patterns keep the closures varied.
                            let pattern = rng.gen::<u64>() & rng.gen::<u64>() & mask_of(bits);
                            items.push(Item::Index(pattern));
                        }
                    }
                    StreamKind::QuasiorderPairs => {
                        let bits = n * n - n;
                        for _ in 0..count {
                            let a: u64 = rng.gen::<u64>() & rng.gen::<u64>() & mask_of(bits);
                            let b: u64 = rng.gen::<u64>() & rng.gen::<u64>() & mask_of(bits);
                            items.push(Item::Pair(a, b));
                        }
                    }
                }
                Ok(items)
            }
        }
    }

    pub(crate) fn materialize(&self, item: Item) -> Instance {
        let n = self.n();
        let ground = GroundSet::with_size(n).expect("stream sizes fit the carrier cap");
        match (self.kind(), self, item) {
            (StreamKind::Families, _, Item::Index(idx)) => Instance::Family {
                family: family_from_index(idx, n),
                ground,
            },
            (StreamKind::GenTopologies, InstanceStream::Exhaustive { .. }, Item::Index(idx)) => {
                let opens = family_from_index(idx, n);
                Instance::Space(
                    GenTopology::new(ground, opens).expect("filtered to generalized topologies"),
                )
            }
            (StreamKind::GenTopologies, InstanceStream::Random { .. }, Item::Index(idx)) => {
                let opens = family_from_index(idx, n).union_closure();
                Instance::Space(GenTopology::new(ground, opens).expect("closure output is valid"))
            }
            (StreamKind::Quasiorders, _, Item::Index(pattern)) => Instance::Quasiorder {
                order: quasiorder_from_pattern(pattern, n),
                ground,
            },
            (StreamKind::QuasiorderPairs, _, Item::Pair(a, b)) => Instance::QuasiorderPair {
                left: quasiorder_from_pattern(a, n),
                right: quasiorder_from_pattern(b, n),
                ground,
            },
            _ => unreachable!("item shape matches the stream kind"),
        }
    }

    /// Materializes the whole stream; meant for listings at small n.
    pub fn instances(&self) -> Result<Vec<Instance>> {
        Ok(self.items()?.into_iter().map(|i| self.materialize(i)).collect())
    }
}

fn mask_of(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

pub(crate) fn family_from_index(idx: u64, n: usize) -> SetFamily {
    SetFamily::new(
        (0..1u64 << n)
            .filter(|s| idx >> s & 1 == 1)
            .map(Subset::from_bits),
    )
}

/// Off-diagonal patterns of the valid quasiorders, ascending.
fn enumerate_quasiorder_patterns(n: usize) -> Vec<u64> {
    // Mirrors `enumerate_quasiorders`, keeping the pattern for the
    // descriptor representation.
    let mut out = Vec::new();
    let offdiag = n * n - n;
    for pattern in 0..1u64 << offdiag {
        if quasiorder_from_pattern_checked(pattern, n).is_some() {
            out.push(pattern);
        }
    }
    debug_assert_eq!(out.len(), enumerate_quasiorders(n).len());
    out
}

fn quasiorder_from_pattern_checked(pattern: u64, n: usize) -> Option<Quasiorder> {
    let mut rows: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    let mut bit = 0;
    for x in 0..n {
        for y in 0..n {
            if x != y {
                if pattern >> bit & 1 == 1 {
                    rows[x] |= 1 << y;
                }
                bit += 1;
            }
        }
    }
    Quasiorder::from_rows(n, rows).ok()
}

/// For exhaustive streams the pattern is known valid; for random streams it
/// is an arbitrary relation and the reflexive-transitive closure is applied.
fn quasiorder_from_pattern(pattern: u64, n: usize) -> Quasiorder {
    if let Some(q) = quasiorder_from_pattern_checked(pattern, n) {
        return q;
    }
    let mut pairs = Vec::new();
    let mut bit = 0;
    for x in 0..n {
        for y in 0..n {
            if x != y {
                if pattern >> bit & 1 == 1 {
                    pairs.push((x, y));
                }
                bit += 1;
            }
        }
    }
    Quasiorder::from_pairs(n, &pairs).expect("indices in range by construction")
}
