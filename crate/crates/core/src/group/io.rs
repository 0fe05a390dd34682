//! Plain-text group files.
//!
//! ```text
//! # comments start with '#'
//! degree 6
//! (1 2 3 4 5)
//! (1 2 3)
//! ```

use super::perm::Perm;
use super::perm_group::PermGroup;
use crate::error::{Error, Result};

/// Generators and degree read from a group file, before closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<PermGroup> {
        PermGroup::generate(self.degree, self.generators.clone())
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim();
        if trimmed.is_empty() {
            None
        } else {
            let column = line.len() - line.trim_start().len() + 1;
            Some((i + 1, column, trimmed))
        }
    })
}

/// Parses a group file; `line_offset` shifts reported line numbers when
/// the text is embedded in a larger file.
pub fn parse_group_spec(text: &str, line_offset: usize) -> Result<GroupSpec> {
    let mut lines = content_lines(text);
    let (line, column, header) = lines
        .next()
        .ok_or_else(|| Error::parse(line_offset + 1, 1, "missing \"degree n\" header"))?;
    let line = line + line_offset;
    let rest = header
        .strip_prefix("degree")
        .ok_or_else(|| Error::parse(line, column, "expected \"degree n\""))?;
    let degree: usize = rest
        .trim()
        .parse()
        .map_err(|_| Error::parse(line, column + 6, format!("invalid degree {:?}", rest.trim())))?;
    if degree == 0 {
        return Err(Error::parse(line, column + 6, "degree must be positive"));
    }
    let mut generators = Vec::new();
    for (line, column, text) in lines {
        let p = Perm::parse(text, degree)
            .map_err(|e| Error::parse(line + line_offset, column, e.to_string()))?;
        generators.push(p);
    }
    Ok(GroupSpec { degree, generators })
}

pub fn parse_group(text: &str) -> Result<PermGroup> {
    parse_group_spec(text, 0)?.build()
}

pub fn dump_group(g: &PermGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for p in g.generators() {
        if !p.is_identity() {
            out.push_str(&p.to_string());
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::perm_group::named;
    use super::*;

    #[test]
    fn round_trip_keeps_elements() {
        let g = named::alternating(5);
        let h = parse_group(&dump_group(&g)).unwrap();
        assert_eq!(g.elements(), h.elements());
    }

    #[test]
    fn diagnostics_carry_positions() {
        let err = parse_group("degree 3\n  (1 2 4)\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 3, .. }), "{err:?}");
        let err = parse_group("# nothing\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = parse_group("degre 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 1, .. }));
    }
}
