//! Input-file parsing: one element per line, `#` comments and blank lines
//! ignored, values reduced mod p. Plane vectors are two integers separated by
//! whitespace or a comma; line elements are a single integer.

use std::collections::HashSet;
use std::path::Path;

use anyhow::{bail, Context, Result};
use zerosum_core::fp::{FpContext, FpElement, FpVector2};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DupPolicy {
    /// Set semantics: a repeated element is an input error.
    Reject,
    /// Sequence semantics: repetition is meaningful.
    Allow,
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn tokens(line: &str) -> Vec<&str> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect()
}

pub fn parse_vector_file(
    path: &Path,
    ctx: &FpContext,
    dups: DupPolicy,
    allow_zero: bool,
) -> Result<Vec<FpVector2>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (lineno, line) in data_lines(&text) {
        let toks = tokens(line);
        if toks.len() != 2 {
            bail!(
                "{}:{lineno}: expected two integers, found {line:?}",
                path.display()
            );
        }
        let x: i64 = toks[0]
            .parse()
            .with_context(|| format!("{}:{lineno}: {:?} is not an integer", path.display(), toks[0]))?;
        let y: i64 = toks[1]
            .parse()
            .with_context(|| format!("{}:{lineno}: {:?} is not an integer", path.display(), toks[1]))?;
        let v = ctx.vector(x, y);
        if !allow_zero && v.is_zero() {
            bail!(
                "{}:{lineno}: the zero vector is not allowed for this command",
                path.display()
            );
        }
        if dups == DupPolicy::Reject && !seen.insert((v.x.value(), v.y.value())) {
            bail!("{}:{lineno}: duplicate vector {v}", path.display());
        }
        out.push(v);
    }
    Ok(out)
}

pub fn parse_scalar_file(
    path: &Path,
    ctx: &FpContext,
    dups: DupPolicy,
    allow_zero: bool,
) -> Result<Vec<FpElement>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (lineno, line) in data_lines(&text) {
        let toks = tokens(line);
        if toks.len() != 1 {
            bail!(
                "{}:{lineno}: expected one integer, found {line:?}",
                path.display()
            );
        }
        let v: i64 = toks[0]
            .parse()
            .with_context(|| format!("{}:{lineno}: {:?} is not an integer", path.display(), toks[0]))?;
        let e = ctx.element(v);
        if !allow_zero && e.is_zero() {
            bail!("{}:{lineno}: zero is not allowed for this command", path.display());
        }
        if dups == DupPolicy::Reject && !seen.insert(e.value()) {
            bail!("{}:{lineno}: duplicate element {e}", path.display());
        }
        out.push(e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
        let dir = std::env::temp_dir().join(format!("zerosum-vecfile-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(name);
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(content.as_bytes()).unwrap();
        path
    }

    #[test]
    fn vectors_with_mixed_separators_and_comments() {
        let ctx = FpContext::new(3).unwrap();
        let path = write_temp("ok.txt", "# comment\n1,1\n2 2\n\n4,9 # reduced\n");
        let v = parse_vector_file(&path, &ctx, DupPolicy::Allow, true).unwrap();
        assert_eq!(v, vec![ctx.vector(1, 1), ctx.vector(2, 2), ctx.vector(1, 0)]);
    }

    #[test]
    fn reduction_can_create_duplicates() {
        let ctx = FpContext::new(3).unwrap();
        let path = write_temp("dup.txt", "1,1\n4,4\n");
        assert!(parse_vector_file(&path, &ctx, DupPolicy::Reject, true).is_err());
        assert_eq!(
            parse_vector_file(&path, &ctx, DupPolicy::Allow, true).unwrap().len(),
            2
        );
    }

    #[test]
    fn bad_tokens_name_the_line() {
        let ctx = FpContext::new(3).unwrap();
        let path = write_temp("bad.txt", "a,1\n");
        let err = parse_vector_file(&path, &ctx, DupPolicy::Allow, true)
            .unwrap_err()
            .to_string();
        assert!(err.contains(":1:"), "{err}");

        let path = write_temp("bad2.txt", "1,2\n3\n");
        let err = parse_vector_file(&path, &ctx, DupPolicy::Allow, true)
            .unwrap_err()
            .to_string();
        assert!(err.contains(":2:"), "{err}");
    }

    #[test]
    fn zero_rejection() {
        let ctx = FpContext::new(3).unwrap();
        let path = write_temp("zero.txt", "0,0\n");
        assert!(parse_vector_file(&path, &ctx, DupPolicy::Allow, false).is_err());
        assert!(parse_vector_file(&path, &ctx, DupPolicy::Allow, true).is_ok());
    }

    #[test]
    fn scalars() {
        let ctx = FpContext::new(7).unwrap();
        let path = write_temp("s.txt", "1\n-1\n9\n");
        let v = parse_scalar_file(&path, &ctx, DupPolicy::Allow, true).unwrap();
        assert_eq!(
            v,
            vec![ctx.element(1), ctx.element(6), ctx.element(2)]
        );
    }
}
