//! Stable JSON certificates.
//!
//! Report bodies serialize with a fixed key order and contain no timing
//! data, so identical inputs give byte-identical bodies. Elapsed time is
//! appended only when a full certificate is written.

use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};

const FORMAT_TAG: &str = "eisenstein-descent/report/v1";

#[derive(Serialize)]
struct Timed<'a, T: Serialize> {
    #[serde(flatten)]
    body: &'a T,
    elapsed_ms: f64,
}

/// Pretty-printed report body without timing.
pub fn stable_json<T: Serialize>(body: &T) -> String {
    serde_json::to_string_pretty(body).expect("reports serialize")
}

/// Report body followed by `elapsed_ms`.
pub fn certificate_json<T: Serialize>(body: &T, elapsed: Duration) -> String {
    let timed = Timed {
        body,
        elapsed_ms: elapsed.as_secs_f64() * 1e3,
    };
    serde_json::to_string_pretty(&timed).expect("reports serialize")
}

/// SHA-256 over the report kind and its `key=value` parameters.
pub fn fingerprint(kind: &str, params: &[(&str, String)]) -> String {
    let mut h = Sha256::new();
    h.update(FORMAT_TAG.as_bytes());
    h.update(b"\n");
    h.update(kind.as_bytes());
    for (k, v) in params {
        h.update(b"\n");
        h.update(k.as_bytes());
        h.update(b"=");
        h.update(v.as_bytes());
    }
    hex::encode(h.finalize())
}
