//! Content-addressed artifact records.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Alcove,
    FusionRing,
    ModularData,
    EmbeddingScan,
    Invariant,
    ToricFamily,
    OcGraph,
    GraphAlgebra,
    OcAlgebra,
}

impl Kind {
    pub const ALL: [Kind; 9] = [
        Kind::Alcove,
        Kind::FusionRing,
        Kind::ModularData,
        Kind::EmbeddingScan,
        Kind::Invariant,
        Kind::ToricFamily,
        Kind::OcGraph,
        Kind::GraphAlgebra,
        Kind::OcAlgebra,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Alcove => "alcove",
            Kind::FusionRing => "fusion-ring",
            Kind::ModularData => "modular-data",
            Kind::EmbeddingScan => "embedding-scan",
            Kind::Invariant => "invariant",
            Kind::ToricFamily => "toric-family",
            Kind::OcGraph => "oc-graph",
            Kind::GraphAlgebra => "graph-algebra",
            Kind::OcAlgebra => "oc-algebra",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Kind::ALL.into_iter().find(|k| k.as_str() == s).ok_or_else(|| format!("unknown artifact kind `{s}`"))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    /// Producing tool and version.
    pub tool: String,
    /// Hashes of upstream artifacts.
    pub inputs: Vec<String>,
    pub parameters: BTreeMap<String, Value>,
}

impl Provenance {
    pub fn new() -> Self {
        Provenance { tool: concat!("qgraph ", env!("CARGO_PKG_VERSION")).into(), ..Default::default() }
    }

    pub fn input(mut self, hash: &str) -> Self {
        self.inputs.push(hash.into());
        self
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.into(), value.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArtifactRecord {
    pub kind: Kind,
    pub provenance: Provenance,
    pub payload: Value,
    /// Lowercase hex SHA-256 of the canonical form of the other three fields.
    pub hash: String,
}

#[derive(Debug)]
pub enum ArtifactError {
    Json(serde_json::Error),
    HashMismatch { stored: String, computed: String },
    WrongKind { expected: Kind, found: Kind },
}

impl fmt::Display for ArtifactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArtifactError::Json(e) => write!(f, "malformed artifact: {e}"),
            ArtifactError::HashMismatch { stored, computed } => {
                write!(f, "hash mismatch: stored {stored}, content hashes to {computed}")
            }
            ArtifactError::WrongKind { expected, found } => write!(f, "expected a {expected} artifact, found {found}"),
        }
    }
}

impl std::error::Error for ArtifactError {}

impl From<serde_json::Error> for ArtifactError {
    fn from(e: serde_json::Error) -> Self {
        ArtifactError::Json(e)
    }
}

/// Compact JSON with object keys sorted.
///
/// `serde_json::Value` keeps objects in a `BTreeMap`, so going through it
/// sorts every level.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String, serde_json::Error> {
    let v = serde_json::to_value(value)?;
    serde_json::to_string(&v)
}

fn content_hash(kind: Kind, provenance: &Provenance, payload: &Value) -> String {
    #[derive(Serialize)]
    struct Content<'a> {
        kind: Kind,
        provenance: &'a Provenance,
        payload: &'a Value,
    }
    let text = canonical_json(&Content { kind, provenance, payload }).expect("JSON values serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl ArtifactRecord {
    pub fn new<T: Serialize>(kind: Kind, provenance: Provenance, payload: &T) -> Result<Self, ArtifactError> {
        let payload = serde_json::to_value(payload)?;
        let hash = content_hash(kind, &provenance, &payload);
        Ok(ArtifactRecord { kind, provenance, payload, hash })
    }

    /// Canonical text, newline-terminated. Identical records give identical bytes.
    pub fn to_canonical(&self) -> String {
        let mut s = canonical_json(self).expect("JSON values serialize");
        s.push('\n');
        s
    }

    /// Parses a record and checks its hash against its content.
    pub fn parse(text: &str) -> Result<Self, ArtifactError> {
        let r: ArtifactRecord = serde_json::from_str(text)?;
        let computed = content_hash(r.kind, &r.provenance, &r.payload);
        if computed != r.hash {
            return Err(ArtifactError::HashMismatch { stored: r.hash, computed });
        }
        Ok(r)
    }

    /// Typed view of the payload.
    pub fn decode<T: DeserializeOwned>(&self, expected: Kind) -> Result<T, ArtifactError> {
        if self.kind != expected {
            return Err(ArtifactError::WrongKind { expected, found: self.kind });
        }
        Ok(T::deserialize(&self.payload)?)
    }

    pub fn short_hash(&self) -> &str {
        &self.hash[..12]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_json_sorts_keys() {
        let v: Value = serde_json::from_str(r#"{"b":1,"a":{"d":2,"c":3}}"#).unwrap();
        assert_eq!(canonical_json(&v).unwrap(), r#"{"a":{"c":3,"d":2},"b":1}"#);
    }

    #[test]
    fn tampering_is_detected() {
        let r = ArtifactRecord::new(Kind::Alcove, Provenance::new(), &vec![1, 2, 3]).unwrap();
        assert_eq!(ArtifactRecord::parse(&r.to_canonical()).unwrap(), r);
        let bad = r.to_canonical().replace("[1,2,3]", "[1,2,4]");
        assert!(matches!(ArtifactRecord::parse(&bad), Err(ArtifactError::HashMismatch { .. })));
    }

    #[test]
    fn kinds_round_trip_through_strings() {
        for k in Kind::ALL {
            assert_eq!(k.as_str().parse::<Kind>().unwrap(), k);
            assert_eq!(serde_json::to_value(k).unwrap(), Value::String(k.as_str().into()));
        }
    }
}
