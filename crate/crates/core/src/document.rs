//! JSON documents: the input format the CLI reads and the canonical
//! serializations reports embed.
//!
//! A document holds a ground set (label order defines element indices) and
//! exactly one of `family`, `open_sets`, or `quasiorder`. Subsets are label
//! arrays. Quasiorders are accepted either as explicit up-set row bitmasks
//! (`{"n": 4, "rows": [3, 2, 14, 14]}`) or as a pair list, to which the
//! reflexive-transitive closure is applied on load; the loader reports how
//! many pairs the closure added so hand-written fixtures stay honest.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ground::{GroundSet, SetFamily, Subset};
use crate::order::Quasiorder;
use crate::topo::GenTopology;

#[derive(Debug, Deserialize)]
struct RawDocument {
    #[serde(default)]
    name: Option<String>,
    ground: Vec<String>,
    #[serde(default)]
    family: Option<Vec<Vec<String>>>,
    #[serde(default)]
    open_sets: Option<Vec<Vec<String>>>,
    #[serde(default)]
    quasiorder: Option<RawQuasiorder>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawQuasiorder {
    Rows { n: usize, rows: Vec<u64> },
    Pairs { pairs: Vec<(String, String)> },
    BarePairs(Vec<(String, String)>),
}

/// A validated input document.
#[derive(Debug, Clone, PartialEq)]
pub enum SpaceDocument {
    Family {
        name: Option<String>,
        ground: GroundSet,
        family: SetFamily,
    },
    Space {
        name: Option<String>,
        space: GenTopology,
    },
    Quasiorder {
        name: Option<String>,
        ground: GroundSet,
        order: Quasiorder,
        /// Pairs the reflexive-transitive closure added beyond the input.
        closure_added: usize,
    },
}

impl SpaceDocument {
    pub fn parse(text: &str) -> Result<SpaceDocument> {
        let raw: RawDocument = serde_json::from_str(text)
            .map_err(|e| Error::Document(e.to_string()))?;
        let ground = GroundSet::new(raw.ground)?;

        let given = raw.family.is_some() as u8
            + raw.open_sets.is_some() as u8
            + raw.quasiorder.is_some() as u8;
        if given != 1 {
            return Err(Error::Document(format!(
                "expected exactly one of \"family\", \"open_sets\", \"quasiorder\"; found {given}"
            )));
        }

        if let Some(sets) = raw.family {
            let family = parse_family(&ground, &sets)?;
            return Ok(SpaceDocument::Family { name: raw.name, ground, family });
        }
        if let Some(sets) = raw.open_sets {
            let opens = parse_family(&ground, &sets)?;
            let space = GenTopology::new(ground, opens)?;
            return Ok(SpaceDocument::Space { name: raw.name, space });
        }
        let n = ground.size();
        let (order, closure_added) = match raw.quasiorder.unwrap() {
            RawQuasiorder::Rows { n: given_n, rows } => {
                if given_n != n {
                    return Err(Error::Document(format!(
                        "quasiorder size {given_n} does not match ground size {n}"
                    )));
                }
                (Quasiorder::from_rows(n, rows)?, 0)
            }
            RawQuasiorder::Pairs { pairs } | RawQuasiorder::BarePairs(pairs) => {
                let mut index_pairs = Vec::with_capacity(pairs.len());
                for (a, b) in &pairs {
                    let x = ground
                        .index_of(a)
                        .ok_or_else(|| Error::UnknownLabel { label: a.clone() })?;
                    let y = ground
                        .index_of(b)
                        .ok_or_else(|| Error::UnknownLabel { label: b.clone() })?;
                    index_pairs.push((x, y));
                }
                let order = Quasiorder::from_pairs(n, &index_pairs)?;
                let given: std::collections::HashSet<(usize, usize)> = index_pairs
                    .into_iter()
                    .chain((0..n).map(|i| (i, i)))
                    .collect();
                let mut added = 0;
                for x in 0..n {
                    for y in 0..n {
                        if order.le(x, y) && !given.contains(&(x, y)) {
                            added += 1;
                        }
                    }
                }
                (order, added)
            }
        };
        Ok(SpaceDocument::Quasiorder { name: raw.name, ground, order, closure_added })
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            SpaceDocument::Family { name, .. }
            | SpaceDocument::Space { name, .. }
            | SpaceDocument::Quasiorder { name, .. } => name.as_deref(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        match self {
            SpaceDocument::Family { ground, .. } => ground,
            SpaceDocument::Space { space, .. } => space.ground(),
            SpaceDocument::Quasiorder { ground, .. } => ground,
        }
    }

    /// Canonical JSON form; parsing this back yields an equal document
    /// (modulo pair-list sugar, which normalizes to rows).
    pub fn to_json(&self) -> Value {
        match self {
            SpaceDocument::Family { name, ground, family } => {
                with_name(json!({
                    "ground": ground.labels(),
                    "family": family_to_json(ground, family),
                }), name)
            }
            SpaceDocument::Space { name, space } => with_name(
                json!({
                    "ground": space.ground().labels(),
                    "open_sets": family_to_json(space.ground(), space.opens()),
                }),
                name,
            ),
            SpaceDocument::Quasiorder { name, ground, order, .. } => with_name(
                json!({
                    "ground": ground.labels(),
                    "quasiorder": {"n": ground.size(), "rows": order.rows()},
                }),
                name,
            ),
        }
    }
}

fn with_name(mut v: Value, name: &Option<String>) -> Value {
    if let Some(name) = name {
        v.as_object_mut()
            .unwrap()
            .insert("name".into(), json!(name));
    }
    v
}

fn parse_family(ground: &GroundSet, sets: &[Vec<String>]) -> Result<SetFamily> {
    let mut members = Vec::with_capacity(sets.len());
    for s in sets {
        members.push(ground.subset_from_labels(s)?);
    }
    Ok(SetFamily::new(members))
}

/// A subset as a label array, elements in index order.
pub fn subset_to_json(ground: &GroundSet, s: Subset) -> Value {
    json!(ground.labels_of(s))
}

/// A family as an array of label arrays, members in canonical order.
pub fn family_to_json(ground: &GroundSet, f: &SetFamily) -> Value {
    Value::Array(f.iter().map(|s| subset_to_json(ground, s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_documents_round_trip() {
        let text = r#"{"ground": ["1","2","3","4"], "family": [["2","3","4"], ["1","2"]]}"#;
        let doc = SpaceDocument::parse(text).unwrap();
        let SpaceDocument::Family { ground, family, .. } = &doc else {
            panic!("expected family document");
        };
        assert_eq!(ground.size(), 4);
        assert_eq!(family.len(), 2);
        // Canonical order puts {1,2} first.
        assert_eq!(family.members()[0], ground.subset_from_labels(&["1", "2"]).unwrap());

        let reparsed = SpaceDocument::parse(&doc.to_json().to_string()).unwrap();
        assert_eq!(reparsed, doc);
    }

    #[test]
    fn open_set_documents_validate_on_load() {
        let bad = r#"{"ground": ["1","2","3"], "open_sets": [[], ["1"], ["2"]]}"#;
        match SpaceDocument::parse(bad) {
            Err(Error::NotUnionClosed { a, b }) => {
                assert_eq!((a.as_str(), b.as_str()), ("{1}", "{2}"));
            }
            other => panic!("expected closure witness, got {other:?}"),
        }
        let good = r#"{"ground": ["1","2"], "open_sets": [[], ["1"], ["1","2"]]}"#;
        assert!(SpaceDocument::parse(good).is_ok());
    }

    #[test]
    fn document_must_pick_exactly_one_payload() {
        let none = r#"{"ground": ["1"]}"#;
        assert!(matches!(SpaceDocument::parse(none), Err(Error::Document(_))));
        let both = r#"{"ground": ["1"], "family": [], "open_sets": [[]]}"#;
        assert!(matches!(SpaceDocument::parse(both), Err(Error::Document(_))));
    }

    #[test]
    fn unknown_labels_are_rejected() {
        let text = r#"{"ground": ["1","2"], "family": [["3"]]}"#;
        assert_eq!(
            SpaceDocument::parse(text).unwrap_err(),
            Error::UnknownLabel { label: "3".into() }
        );
    }

    #[test]
    fn quasiorder_pairs_get_closed_and_the_additions_counted() {
        let text = r#"{"ground": ["a","b","c"], "quasiorder": {"pairs": [["a","b"], ["b","c"]]}}"#;
        let doc = SpaceDocument::parse(text).unwrap();
        let SpaceDocument::Quasiorder { order, closure_added, .. } = &doc else {
            panic!("expected quasiorder document");
        };
        assert!(order.le(0, 2));
        assert_eq!(*closure_added, 1);

        // Bare pair list works too.
        let text = r#"{"ground": ["a","b"], "quasiorder": [["a","b"]]}"#;
        let doc = SpaceDocument::parse(text).unwrap();
        let SpaceDocument::Quasiorder { closure_added, .. } = &doc else {
            panic!();
        };
        assert_eq!(*closure_added, 0);
    }

    #[test]
    fn quasiorder_rows_round_trip() {
        let text = r#"{"ground": ["1","2"], "quasiorder": {"n": 2, "rows": [3, 2]}}"#;
        let doc = SpaceDocument::parse(text).unwrap();
        let reparsed = SpaceDocument::parse(&doc.to_json().to_string()).unwrap();
        assert_eq!(doc, reparsed);
        let bad = r#"{"ground": ["1","2"], "quasiorder": {"n": 2, "rows": [3, 1]}}"#;
        assert!(matches!(
            SpaceDocument::parse(bad),
            Err(Error::NotReflexive { element: 1 })
        ));
    }

    #[test]
    fn parse_errors_carry_position_information() {
        let err = SpaceDocument::parse("{\"ground\": [\"1\"],\n  oops}").unwrap_err();
        let Error::Document(msg) = err else { panic!() };
        assert!(msg.contains("line 2"), "{msg}");
    }

    mod document_laws {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn serialization_round_trips(masks in proptest::collection::vec(0u64..32, 0..6)) {
                let ground = GroundSet::with_size(5).unwrap();
                let family = SetFamily::new(masks.into_iter().map(Subset::from_bits));
                let doc = SpaceDocument::Family { name: None, ground, family };
                let reparsed = SpaceDocument::parse(&doc.to_json().to_string()).unwrap();
                prop_assert_eq!(reparsed, doc);
            }
        }
    }
}
