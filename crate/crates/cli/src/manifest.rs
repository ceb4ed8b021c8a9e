//! Run manifests and the output envelope.
//!
//! Wall time is left out unless `--timing` is given, so two runs with the
//! same parameters and inputs produce identical bytes.

use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub params: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
    pub inputs: Vec<InputDigest>,
    /// Digest of the canonical JSON of `result`.
    pub output_sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Reads an input file and remembers its digest for the manifest.
#[derive(Default)]
pub struct Inputs {
    pub digests: Vec<InputDigest>,
}

impl Inputs {
    pub fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.digests.push(InputDigest { path: path.display().to_string(), sha256: sha256_hex(&bytes) });
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    /// Reads a JSON input, unwrapping the `result` of a `--json` envelope.
    pub fn read_json(&mut self, path: &Path) -> Result<Value> {
        let text = self.read(path)?;
        let mut v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if v.get("schema_version").is_some() {
            if let Some(inner) = v.get_mut("result") {
                return Ok(inner.take());
            }
        }
        Ok(v)
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    manifest: &'a RunManifest,
    result: &'a Value,
}

pub fn envelope(manifest: &RunManifest, result: &Value) -> String {
    let env = Envelope { schema_version: SCHEMA_VERSION, manifest, result };
    serde_json::to_string(&env).expect("envelopes always serialize") + "\n"
}
