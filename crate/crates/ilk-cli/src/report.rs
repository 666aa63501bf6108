//! The JSON run report: one self-contained object per invocation, with
//! the input echoed, a verdict, and a replayable certificate or an
//! explicit "none" marker. Reports print as single JSON lines so batch
//! output is a JSON Lines stream.

use ilk::formats::to_graph6;
use ilk::{iso, Graph};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const TOOL: &str = "ilk";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Echo of the input graph plus content digests. `canonical` is the
/// label-independent certificate of the graph; `sha256` hashes it.
#[derive(Debug, Clone, Serialize)]
pub struct InputBlock {
    pub source: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<Graph>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub canonical: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
}

impl InputBlock {
    pub fn for_graph(source: Value, g: &Graph) -> Self {
        let canonical = iso::certificate(g);
        let sha256 = format!("{:x}", Sha256::digest(canonical.as_bytes()));
        InputBlock {
            source,
            graph: Some(g.clone()),
            graph6: to_graph6(g).ok(),
            canonical: Some(canonical),
            sha256: Some(sha256),
        }
    }

    /// Input that never resolved to a graph (failed batch lines, catalog
    /// listings).
    pub fn bare(source: Value) -> Self {
        InputBlock { source, graph: None, graph6: None, canonical: None, sha256: None }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BudgetBlock {
    pub exceeded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub input: InputBlock,
    pub parameters: Value,
    pub verdict: Value,
    pub certificate: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub budget: BudgetBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

/// The explicit no-certificate marker.
pub fn no_certificate() -> Value {
    json!({ "kind": "none" })
}
