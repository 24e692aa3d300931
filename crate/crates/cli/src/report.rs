//! Report envelope and atomic file output.
//!
//! Every command emits the same envelope: `{artifact_version, command, p,
//! mode, seed, generated_unix_ms, elapsed_ms, totals, failures, details}`.
//! Keys are serialized in sorted order, so reports are byte-stable and
//! diff-friendly; the two clock fields are the only run-to-run variation of
//! a deterministic command.

use std::fs;
use std::io;
use std::path::Path;

use serde_json::{json, Value};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default)]
pub struct Totals {
    pub total: u64,
    pub verified: u64,
    pub failed: u64,
}

/// What a command handler produces; the runner wraps it into the envelope.
#[derive(Debug)]
pub struct CommandResult {
    pub mode: String,
    pub seed: u64,
    pub totals: Totals,
    pub failures: Vec<Value>,
    pub details: Value,
}

pub fn envelope(
    command: &str,
    p: u32,
    result: &CommandResult,
    generated_unix_ms: u64,
    elapsed_ms: u64,
) -> Value {
    json!({
        "artifact_version": ARTIFACT_VERSION,
        "command": command,
        "p": p,
        "mode": result.mode,
        "seed": result.seed,
        "generated_unix_ms": generated_unix_ms,
        "elapsed_ms": elapsed_ms,
        "totals": {
            "total": result.totals.total,
            "verified": result.totals.verified,
            "failed": result.totals.failed,
        },
        "failures": result.failures,
        "details": result.details,
    })
}

pub fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

/// Write-to-temp-then-rename; a killed process never leaves a torn file.
pub fn write_atomic(path: &Path, content: &str) -> io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = Path::new(&tmp);
    fs::write(tmp, content)?;
    fs::rename(tmp, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_keys_are_sorted_and_complete() {
        let result = CommandResult {
            mode: "exhaustive".into(),
            seed: 0,
            totals: Totals { total: 2, verified: 2, failed: 0 },
            failures: vec![],
            details: json!({"x": 1}),
        };
        let v = envelope("sigma", 5, &result, 0, 0);
        let text = to_pretty(&v);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
        for key in [
            "artifact_version",
            "command",
            "p",
            "mode",
            "seed",
            "totals",
            "failures",
            "details",
            "generated_unix_ms",
            "elapsed_ms",
        ] {
            assert!(text.contains(&format!("\"{key}\"")), "missing {key}");
        }
    }

    #[test]
    fn atomic_write_round_trip() {
        let dir = std::env::temp_dir().join(format!("zerosum-report-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("r.json");
        write_atomic(&path, "{}\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "{}\n");
        write_atomic(&path, "{\"a\":1}\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "{\"a\":1}\n");
        fs::remove_dir_all(&dir).unwrap();
    }
}
