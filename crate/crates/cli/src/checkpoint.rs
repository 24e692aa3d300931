//! Line-oriented checkpoint files for resumable surveys.
//!
//! Format (one item per line):
//!
//! ```text
//! zerosum-checkpoint 1
//! fingerprint verify-theorem1 p=7 mode=exhaustive seed=0
//! cursor 1234567
//! counter verified 1234567
//! counter min_witness 3
//! counter max_witness 8
//! failure 55 1,2,3,4,5,6,7,8 no zero-sum witness
//! ```
//!
//! Resume refuses a fingerprint mismatch, and the writer enforces that the
//! cursor strictly increases across saves. Files are written atomically.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use zerosum_core::verify::{SurveyAccum, SurveyFailure};

use crate::report::write_atomic;

pub const FORMAT_VERSION: u32 = 1;
/// Save cadence: whichever of these trips first.
pub const SAVE_EVERY_CASES: u64 = 100_000;
pub const SAVE_EVERY: Duration = Duration::from_secs(5);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub fingerprint: String,
    pub cursor: u64,
    pub counters: BTreeMap<String, u64>,
    pub failures: Vec<SurveyFailure>,
}

impl Checkpoint {
    pub fn from_accum(fingerprint: &str, cursor: u64, accum: &SurveyAccum) -> Checkpoint {
        let mut counters = BTreeMap::new();
        counters.insert("verified".to_string(), accum.verified);
        if let Some(m) = accum.min_witness {
            counters.insert("min_witness".to_string(), m as u64);
        }
        if let Some(m) = accum.max_witness {
            counters.insert("max_witness".to_string(), m as u64);
        }
        Checkpoint {
            fingerprint: fingerprint.to_string(),
            cursor,
            counters,
            failures: accum.failures.clone(),
        }
    }

    pub fn to_accum(&self) -> SurveyAccum {
        SurveyAccum {
            verified: self.counters.get("verified").copied().unwrap_or(0),
            failures: self.failures.clone(),
            min_witness: self.counters.get("min_witness").map(|&v| v as u32),
            max_witness: self.counters.get("max_witness").map(|&v| v as u32),
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("zerosum-checkpoint {FORMAT_VERSION}\n");
        out.push_str(&format!("fingerprint {}\n", self.fingerprint));
        out.push_str(&format!("cursor {}\n", self.cursor));
        for (name, value) in &self.counters {
            out.push_str(&format!("counter {name} {value}\n"));
        }
        for f in &self.failures {
            let tuple = f
                .tuple
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!("failure {} {} {}\n", f.cursor, tuple, f.message));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Checkpoint> {
        let mut lines = text.lines();
        let header = lines.next().context("empty checkpoint file")?;
        let version: u32 = header
            .strip_prefix("zerosum-checkpoint ")
            .with_context(|| format!("unrecognized checkpoint header: {header:?}"))?
            .trim()
            .parse()
            .context("unparsable checkpoint version")?;
        if version != FORMAT_VERSION {
            bail!("unsupported checkpoint version {version} (expected {FORMAT_VERSION})");
        }
        let mut fingerprint = None;
        let mut cursor = None;
        let mut counters = BTreeMap::new();
        let mut failures = Vec::new();
        for (lineno, line) in lines.enumerate() {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            let (kind, rest) = line
                .split_once(' ')
                .with_context(|| format!("malformed checkpoint line {}", lineno + 2))?;
            match kind {
                "fingerprint" => fingerprint = Some(rest.to_string()),
                "cursor" => cursor = Some(rest.trim().parse().context("bad cursor")?),
                "counter" => {
                    let (name, value) = rest
                        .split_once(' ')
                        .with_context(|| format!("malformed counter line {}", lineno + 2))?;
                    counters.insert(name.to_string(), value.trim().parse().context("bad counter")?);
                }
                "failure" => {
                    let mut parts = rest.splitn(3, ' ');
                    let cursor = parts
                        .next()
                        .context("failure line missing cursor")?
                        .parse()
                        .context("bad failure cursor")?;
                    let tuple = parts
                        .next()
                        .context("failure line missing tuple")?
                        .split(',')
                        .map(|v| v.parse().context("bad failure tuple"))
                        .collect::<Result<Vec<u32>>>()?;
                    let message = parts.next().unwrap_or("").to_string();
                    failures.push(SurveyFailure { cursor, tuple, message });
                }
                other => bail!("unknown checkpoint line kind {other:?} at line {}", lineno + 2),
            }
        }
        Ok(Checkpoint {
            fingerprint: fingerprint.context("checkpoint missing fingerprint line")?,
            cursor: cursor.context("checkpoint missing cursor line")?,
            counters,
            failures,
        })
    }

    pub fn load(path: &Path) -> Result<Checkpoint> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read checkpoint {}", path.display()))?;
        Checkpoint::parse(&text)
    }
}

/// Cadence-driven checkpoint writer with a strictly increasing cursor.
pub struct CheckpointWriter {
    path: PathBuf,
    fingerprint: String,
    last_cursor: Option<u64>,
    last_save: Instant,
    cases_since_save: u64,
}

impl CheckpointWriter {
    pub fn new(path: PathBuf, fingerprint: String) -> CheckpointWriter {
        CheckpointWriter {
            path,
            fingerprint,
            last_cursor: None,
            last_save: Instant::now(),
            cases_since_save: 0,
        }
    }

    pub fn save(&mut self, cursor: u64, accum: &SurveyAccum) -> Result<()> {
        if let Some(last) = self.last_cursor {
            if cursor == last {
                return Ok(()); // nothing new; keep the cursor strictly increasing
            }
            if cursor < last {
                bail!("checkpoint cursor went backwards: {last} -> {cursor}");
            }
        }
        let checkpoint = Checkpoint::from_accum(&self.fingerprint, cursor, accum);
        write_atomic(&self.path, &checkpoint.render())
            .with_context(|| format!("cannot write checkpoint {}", self.path.display()))?;
        self.last_cursor = Some(cursor);
        self.last_save = Instant::now();
        self.cases_since_save = 0;
        Ok(())
    }

    /// Saves when the case or time cadence has tripped.
    pub fn maybe_save(&mut self, cursor: u64, cases_done: u64, accum: &SurveyAccum) -> Result<()> {
        self.cases_since_save += cases_done;
        if self.cases_since_save >= SAVE_EVERY_CASES || self.last_save.elapsed() >= SAVE_EVERY {
            self.save(cursor, accum)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_accum() -> SurveyAccum {
        SurveyAccum {
            verified: 41,
            failures: vec![SurveyFailure {
                cursor: 7,
                tuple: vec![1, 2, 3, 4],
                message: "no zero-sum witness".to_string(),
            }],
            min_witness: Some(3),
            max_witness: Some(4),
        }
    }

    #[test]
    fn render_parse_round_trip() {
        let cp = Checkpoint::from_accum("verify-theorem1 p=3 mode=exhaustive seed=0", 42, &sample_accum());
        let text = cp.render();
        let back = Checkpoint::parse(&text).unwrap();
        assert_eq!(back, cp);
        let accum = back.to_accum();
        assert_eq!(accum.verified, 41);
        assert_eq!(accum.min_witness, Some(3));
        assert_eq!(accum.failures.len(), 1);
        assert_eq!(accum.failures[0].tuple, vec![1, 2, 3, 4]);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Checkpoint::parse("").is_err());
        assert!(Checkpoint::parse("zerosum-checkpoint 99\nfingerprint x\ncursor 0\n").is_err());
        assert!(Checkpoint::parse("zerosum-checkpoint 1\ncursor 0\n").is_err());
        assert!(Checkpoint::parse("zerosum-checkpoint 1\nfingerprint x\n").is_err());
        assert!(Checkpoint::parse("zerosum-checkpoint 1\nfingerprint x\ncursor 0\nwat 1\n").is_err());
    }

    #[test]
    fn writer_requires_increasing_cursor() {
        let dir = std::env::temp_dir().join(format!("zerosum-ckpt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c.txt");
        let mut w = CheckpointWriter::new(path.clone(), "f".to_string());
        let accum = SurveyAccum::default();
        w.save(5, &accum).unwrap();
        w.save(5, &accum).unwrap(); // no-op
        assert!(w.save(4, &accum).is_err());
        w.save(6, &accum).unwrap();
        assert_eq!(Checkpoint::load(&path).unwrap().cursor, 6);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
