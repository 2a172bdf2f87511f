//! Quasiorders on a finite carrier and their specialization topologies.
//!
//! A quasiorder is stored as one up-set bitmask per element: `row(x)` is
//! `{y : x <= y}`. That makes `up_set` a lookup, makes `is_increasing` a
//! handful of bit operations, and keeps the reflexivity and transitivity
//! checks cheap.

use crate::error::{Error, Result};
use crate::ground::{GroundSet, SetFamily, Subset};
use crate::DEFAULT_ENUMERATION_CAP;

/// A reflexive, transitive relation on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quasiorder {
    n: usize,
    rows: Vec<u64>,
}

impl Quasiorder {
    /// The discrete order: `x <= y` iff `x == y`.
    pub fn identity(n: usize) -> Self {
        Quasiorder {
            n,
            rows: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    /// The complete relation `X × X`.
    pub fn full(n: usize) -> Self {
        let all = Subset::universe(n).bits();
        Quasiorder {
            n,
            rows: vec![all; n],
        }
    }

    /// Builds from explicit up-set rows, validating the quasiorder axioms.
    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::StrayBits { row: rows.len(), size: n });
        }
        let q = Quasiorder { n, rows };
        q.validate()?;
        Ok(q)
    }

    /// Reflexive-transitive closure of an arbitrary pair list.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rows: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(x, y) in pairs {
            for (i, m) in [(x, ()), (y, ())] {
                let _ = m;
                if i >= n {
                    return Err(Error::IndexOutOfRange { index: i, size: n });
                }
            }
            rows[x] |= 1u64 << y;
        }
        // Warshall closure over the row masks.
        for k in 0..n {
            for x in 0..n {
                if rows[x] >> k & 1 == 1 {
                    rows[x] |= rows[k];
                }
            }
        }
        let q = Quasiorder { n, rows };
        debug_assert!(q.validate().is_ok());
        Ok(q)
    }

    /// The quasiorder determined by a family: `x <= y` iff every member
    /// containing `x` also contains `y`.
    ///
    /// The up-set of `x` is therefore the intersection of the members
    /// containing `x` (the whole carrier when there are none), which is the
    /// pointed intersection `I_A(x)` whenever it is defined.
    pub fn from_family(family: &SetFamily, ground: &GroundSet) -> Self {
        let n = ground.size();
        let all = Subset::universe(n).bits();
        let rows = (0..n)
            .map(|x| {
                family
                    .iter()
                    .filter(|a| a.contains(x))
                    .fold(all, |acc, a| acc & a.bits())
            })
            .collect();
        let q = Quasiorder { n, rows };
        // The construction is provably reflexive and transitive; the check
        // guards against future constructors feeding this type.
        debug_assert!(q.validate().is_ok());
        q
    }

    pub fn validate(&self) -> Result<()> {
        let universe = Subset::universe(self.n).bits();
        for (x, &row) in self.rows.iter().enumerate() {
            if row & !universe != 0 {
                return Err(Error::StrayBits { row: x, size: self.n });
            }
            if row >> x & 1 == 0 {
                return Err(Error::NotReflexive { element: x });
            }
        }
        for x in 0..self.n {
            for y in Subset::from_bits(self.rows[x]).elements() {
                if self.rows[y] & !self.rows[x] != 0 {
                    let z = Subset::from_bits(self.rows[y] & !self.rows[x])
                        .elements()
                        .next()
                        .unwrap();
                    return Err(Error::NotTransitive { x, y, z });
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `x <= y`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    /// `x ≈ y`: comparable both ways.
    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.le(x, y) && self.le(y, x)
    }

    pub(crate) fn row(&self, x: usize) -> u64 {
        self.rows[x]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// `↑x = {y : x <= y}`.
    pub fn up_set(&self, x: usize) -> Result<Subset> {
        if x >= self.n {
            return Err(Error::IndexOutOfRange { index: x, size: self.n });
        }
        Ok(Subset::from_bits(self.rows[x]))
    }

    /// `↓x = {y : y <= x}`.
    pub fn down_set(&self, x: usize) -> Result<Subset> {
        if x >= self.n {
            return Err(Error::IndexOutOfRange { index: x, size: self.n });
        }
        let mut bits = 0u64;
        for y in 0..self.n {
            if self.le(y, x) {
                bits |= 1 << y;
            }
        }
        Ok(Subset::from_bits(bits))
    }

    /// True iff membership is inherited upward: `x ∈ s` and `x <= y` force
    /// `y ∈ s`.
    pub fn is_increasing(&self, s: Subset) -> bool {
        s.elements().all(|x| self.rows[x] & !s.bits() == 0)
    }

    pub fn is_decreasing(&self, s: Subset) -> bool {
        self.dual().is_increasing(s)
    }

    /// Matrix transpose: `x <=ᵈ y` iff `y <= x`.
    pub fn dual(&self) -> Quasiorder {
        let mut rows = vec![0u64; self.n];
        for x in 0..self.n {
            for y in Subset::from_bits(self.rows[x]).elements() {
                rows[y] |= 1 << x;
            }
        }
        Quasiorder { n: self.n, rows }
    }

    /// `other ⊆ self` as relations.
    pub fn contains_relation(&self, other: &Quasiorder) -> bool {
        self.n == other.n
            && other
                .rows
                .iter()
                .zip(&self.rows)
                .all(|(o, s)| o & !s == 0)
    }

    /// The specialization topology `tau[<=]`: every increasing set, in
    /// canonical order. Computed as the closure of the principal up-sets
    /// under arbitrary unions; with only `n` generators, walking all `2^n`
    /// subfamilies is exact and cheap.
    pub fn specialization_topology(&self) -> Result<SetFamily> {
        self.specialization_topology_with_cap(DEFAULT_ENUMERATION_CAP)
    }

    pub fn specialization_topology_with_cap(&self, cap: usize) -> Result<SetFamily> {
        if self.n > cap {
            return Err(Error::CapExceeded {
                what: "specialization topology",
                n: self.n,
                cap,
            });
        }
        let mut seen = std::collections::HashSet::new();
        for pick in 0..1u64 << self.n {
            let mut u = 0u64;
            let mut bits = pick;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                u |= self.rows[x];
            }
            seen.insert(u);
        }
        Ok(SetFamily::new(seen.into_iter().map(Subset::from_bits)))
    }

    /// `{a : ↑a = {a}}`.
    pub fn maximal_elements(&self) -> Subset {
        let mut bits = 0u64;
        for x in 0..self.n {
            if self.rows[x] == 1 << x {
                bits |= 1 << x;
            }
        }
        Subset::from_bits(bits)
    }

    pub fn minimal_elements(&self) -> Subset {
        self.dual().maximal_elements()
    }

    /// `{a : a <= x implies x ≈ a}`, i.e. `↑a ⊆ ↓a`.
    pub fn weakly_maximal_elements(&self) -> Subset {
        let mut bits = 0u64;
        for x in 0..self.n {
            let up = self.rows[x];
            let down = self.down_set(x).expect("x < n").bits();
            if up & !down == 0 {
                bits |= 1 << x;
            }
        }
        Subset::from_bits(bits)
    }

    pub fn weakly_minimal_elements(&self) -> Subset {
        self.dual().weakly_maximal_elements()
    }

    /// Collapses `≈`-classes to a partial order.
    pub fn quotient(&self) -> QuotientOrder {
        let mut class_of = vec![usize::MAX; self.n];
        let mut classes: Vec<Subset> = Vec::new();
        for x in 0..self.n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let mut members = 0u64;
            for y in x..self.n {
                if self.equivalent(x, y) {
                    members |= 1 << y;
                    class_of[y] = classes.len();
                }
            }
            classes.push(Subset::from_bits(members));
        }
        let k = classes.len();
        let mut order = vec![0u64; k];
        for (a, ca) in classes.iter().enumerate() {
            let xa = ca.elements().next().unwrap();
            for (b, cb) in classes.iter().enumerate() {
                let xb = cb.elements().next().unwrap();
                if self.le(xa, xb) {
                    order[a] |= 1 << b;
                }
            }
        }
        let q = QuotientOrder { classes, order };
        debug_assert!(q.validate_partial_order());
        q
    }
}

/// The partial order on `≈`-classes. Class representatives are the lowest
/// member indices, and classes are listed by representative, so output is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientOrder {
    classes: Vec<Subset>,
    order: Vec<u64>,
}

impl QuotientOrder {
    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// `[a] ⪯ [b]` by class index.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.order[a] >> b & 1 == 1
    }

    /// Classes with no strictly larger class.
    pub fn maximal_classes(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&a| (0..self.classes.len()).all(|b| !self.le(a, b) || a == b))
            .collect()
    }

    fn validate_partial_order(&self) -> bool {
        let k = self.classes.len();
        for a in 0..k {
            if !self.le(a, a) {
                return false;
            }
            for b in 0..k {
                if a != b && self.le(a, b) && self.le(b, a) {
                    return false;
                }
                for c in 0..k {
                    if self.le(a, b) && self.le(b, c) && !self.le(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Every quasiorder on `n` elements, ascending in the order induced by the
/// off-diagonal bit pattern. Feasible for `n <= 4` (4096 candidate matrices).
pub fn enumerate_quasiorders(n: usize) -> Vec<Quasiorder> {
    let mut out = Vec::new();
    let offdiag = n * n - n;
    for pattern in 0..1u64 << offdiag {
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
        let q = Quasiorder { n, rows };
        if q.validate().is_ok() {
            out.push(q);
        }
    }
    out
}
