//! JSON instance documents.
//!
//! Subsets are written as comma-separated 1-based elements (`"1,3"`, with
//! `""` for the empty set) and rationals as strings (`"1/16"`, `"3"`), so
//! nothing passes through floating point. Unknown keys are rejected.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::{lattice_close, DistributiveLattice, Graph, Poset, SubsetMask};
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::Rational;

/// Version tag carried by every structured output.
pub const SCHEMA_VERSION: u32 = 1;

/// Parses `"num/den"` or an integer.
pub fn parse_rational(s: &str, field: &str) -> Result<Rational> {
    let err = |message: String| Error::Parse {
        field: field.to_string(),
        message,
    };
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n = num_bigint::BigInt::from_str(n.trim()).map_err(|e| err(format!("{t:?}: {e}")))?;
        let d = num_bigint::BigInt::from_str(d.trim()).map_err(|e| err(format!("{t:?}: {e}")))?;
        if d == 0.into() {
            return Err(err(format!("{t:?}: zero denominator")));
        }
        Ok(Rational::new(n, d))
    } else {
        let n = num_bigint::BigInt::from_str(t).map_err(|e| err(format!("{t:?}: {e}")))?;
        Ok(Rational::from_integer(n))
    }
}

pub fn ser_rational<S: Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn de_rational<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s, "rational").map_err(serde::de::Error::custom)
}

pub fn ser_rational_map<S: Serializer>(
    map: &BTreeMap<SubsetMask, Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    // (cardinality, bits) order rather than string order
    let mut out = s.serialize_map(Some(map.len()))?;
    for (k, v) in map {
        out.serialize_entry(&k.to_list_string(), &v.to_string())?;
    }
    out.end()
}

pub fn de_rational_map<'de, D: Deserializer<'de>>(
    d: D,
) -> std::result::Result<BTreeMap<SubsetMask, Rational>, D::Error> {
    let raw = BTreeMap::<String, String>::deserialize(d)?;
    raw.into_iter()
        .map(|(k, v)| {
            let key =
                SubsetMask::parse_list(&k, crate::MAX_GROUND).map_err(serde::de::Error::custom)?;
            let val = parse_rational(&v, &k).map_err(serde::de::Error::custom)?;
            Ok((key, val))
        })
        .collect()
}

/// Parses a JSON document, reporting failures against `what`.
pub fn from_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        field: what.to_string(),
        message: e.to_string(),
    })
}

/// Pretty JSON; documents in this crate always serialize.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable document")
}

fn parse_set(s: &str, m: usize, field: &str) -> Result<SubsetMask> {
    SubsetMask::parse_list(s, m).map_err(|e| Error::Parse {
        field: field.to_string(),
        message: e.to_string(),
    })
}

fn check_version(v: Option<u32>) -> Result<()> {
    match v {
        Some(v) if v != SCHEMA_VERSION => Err(Error::Parse {
            field: "schema_version".into(),
            message: format!("unsupported version {v}, expected {SCHEMA_VERSION}"),
        }),
        _ => Ok(()),
    }
}

/// `{"m": 4, "covers": [[2, 1], [2, 3], [4, 3]]}`; `[i, j]` means `i` covers `j`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    pub m: usize,
    pub covers: Vec<(usize, usize)>,
}

impl PosetDoc {
    pub fn to_poset(&self) -> Result<Poset> {
        check_version(self.schema_version)?;
        Poset::from_covers(self.m, &self.covers)
    }

    pub fn from_poset(p: &Poset) -> Self {
        PosetDoc {
            schema_version: None,
            m: p.m(),
            covers: p.covers().to_vec(),
        }
    }
}

/// `{"m": 4, "edges": [[1, 2], [2, 3]]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<Graph> {
        check_version(self.schema_version)?;
        Graph::from_edges(self.m, &self.edges)
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            schema_version: None,
            m: g.m(),
            edges: g.edges(),
        }
    }
}

/// `{"m": 4, "sets": ["", "1", "1,3"]}`: a lattice or any column set.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    pub m: usize,
    pub sets: Vec<String>,
}

impl SetsDoc {
    pub fn to_sets(&self) -> Result<Vec<SubsetMask>> {
        check_version(self.schema_version)?;
        crate::combinat::check_ground(self.m)?;
        self.sets
            .iter()
            .enumerate()
            .map(|(k, s)| parse_set(s, self.m, &format!("sets[{k}]")))
            .collect()
    }

    /// The sets as a lattice; fails unless they are already closed.
    pub fn to_lattice(&self) -> Result<DistributiveLattice> {
        DistributiveLattice::new(self.m, self.to_sets()?)
    }

    /// The lattice generated by the sets.
    pub fn to_closed_lattice(&self) -> Result<DistributiveLattice> {
        lattice_close(self.m, self.to_sets()?)
    }

    pub fn from_sets(m: usize, sets: &[SubsetMask]) -> Self {
        SetsDoc {
            schema_version: None,
            m,
            sets: sets.iter().map(|s| s.to_list_string()).collect(),
        }
    }
}

/// `{"m": 2, "probs": {"": "1/4", "1": "1/4"}}`; absent sets are zero.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema_version: Option<u32>,
    pub m: usize,
    pub probs: BTreeMap<String, String>,
}

impl DistributionDoc {
    pub fn to_distribution(&self) -> Result<Distribution> {
        check_version(self.schema_version)?;
        crate::combinat::check_ground(self.m)?;
        let mut entries = Vec::with_capacity(self.probs.len());
        let mut seen = BTreeMap::new();
        for (k, v) in &self.probs {
            let field = format!("probs[{k:?}]");
            let s = parse_set(k, self.m, &field)?;
            if let Some(prev) = seen.insert(s, k.clone()) {
                return Err(Error::Parse {
                    field,
                    message: format!("same set as key {prev:?}"),
                });
            }
            entries.push((s, parse_rational(v, &field)?));
        }
        Distribution::new(self.m, entries)
    }

    pub fn from_distribution(p: &Distribution) -> Self {
        DistributionDoc {
            schema_version: None,
            m: p.m(),
            probs: p
                .iter()
                .map(|(s, v)| (s.to_list_string(), v.to_string()))
                .collect(),
        }
    }
}

/// Any of the instance documents, told apart by their keys.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Instance {
    Poset(PosetDoc),
    Graph(GraphDoc),
    Sets(SetsDoc),
    Distribution(DistributionDoc),
}

impl Instance {
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value = from_json(text, "document")?;
        let obj = value.as_object().ok_or_else(|| Error::Parse {
            field: "document".into(),
            message: "expected a JSON object".into(),
        })?;
        let doc = if obj.contains_key("covers") {
            Instance::Poset(from_json(text, "poset")?)
        } else if obj.contains_key("edges") {
            Instance::Graph(from_json(text, "graph")?)
        } else if obj.contains_key("sets") {
            Instance::Sets(from_json(text, "sets")?)
        } else if obj.contains_key("probs") {
            Instance::Distribution(from_json(text, "distribution")?)
        } else {
            return Err(Error::Parse {
                field: "document".into(),
                message: "expected one of the keys covers, edges, sets, probs".into(),
            });
        };
        Ok(doc)
    }
}
