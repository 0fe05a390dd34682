//! Matched pairs of finite groups.
//!
//! For a group `E = GΓ` with `G ∩ Γ = {e}`, every product `s·x` with
//! `s ∈ Γ`, `x ∈ G` factors uniquely as `(s ▷ x)(s ◁ x)`. The two maps
//! are stored as dense index tables `[s * |G| + x]`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{dump_group, parse_group_spec, GroupRef, GroupTable, PermGroup};

#[derive(Clone, Debug)]
pub struct MatchedPair {
    g: GroupRef,
    gamma: GroupRef,
    /// `s ◁ x`, an index into Γ.
    right_action: Vec<u32>,
    /// `s ▷ x`, an index into G.
    left_action: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// `x ↦ s ▷ x` is not a bijection of G.
    LeftNotBijective { s: usize },
    /// `s ↦ s ◁ x` is not a bijection of Γ.
    RightNotBijective { x: usize },
    /// `st ▷ x ≠ s ▷ (t ▷ x)`.
    LeftAction { s: usize, t: usize, x: usize },
    /// `s ◁ xy ≠ (s ◁ x) ◁ y`.
    RightAction { s: usize, x: usize, y: usize },
    /// `s ▷ xy ≠ (s ▷ x)((s ◁ x) ▷ y)`.
    LeftCompatibility { s: usize, x: usize, y: usize },
    /// `st ◁ x ≠ (s ◁ (t ▷ x))(t ◁ x)`.
    RightCompatibility { s: usize, t: usize, x: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LeftNotBijective { s } => write!(f, "left action of s={s} is not a bijection"),
            Violation::RightNotBijective { x } => write!(f, "right action of x={x} is not a bijection"),
            Violation::LeftAction { s, t, x } => write!(f, "left action axiom at (s,t,x)=({s},{t},{x})"),
            Violation::RightAction { s, x, y } => write!(f, "right action axiom at (s,x,y)=({s},{x},{y})"),
            Violation::LeftCompatibility { s, x, y } => {
                write!(f, "left compatibility at (s,x,y)=({s},{x},{y})")
            }
            Violation::RightCompatibility { s, t, x } => {
                write!(f, "right compatibility at (s,t,x)=({s},{t},{x})")
            }
        }
    }
}

fn is_permutation(values: impl Iterator<Item = u32>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if v as usize >= n || std::mem::replace(&mut seen[v as usize], true) {
            return false;
        }
    }
    true
}

impl MatchedPair {
    /// Builds a matched pair from raw tables without checking them.
    pub fn from_tables(g: GroupRef, gamma: GroupRef, right_action: Vec<u32>, left_action: Vec<u32>) -> Result<Self> {
        let size = g.order() * gamma.order();
        if right_action.len() != size || left_action.len() != size {
            return Err(Error::InvalidArgument(format!(
                "action tables must have {size} entries"
            )));
        }
        Ok(MatchedPair {
            g,
            gamma,
            right_action,
            left_action,
        })
    }

    /// Reads the actions off the factorization `E = GΓ`.
    pub fn from_factorization(e: &PermGroup, g: &PermGroup, gamma: &PermGroup) -> Result<Self> {
        let gi = e.index_set(g)?;
        let si = e.index_set(gamma)?;
        let t = e.table()?;
        crate::group::check_bijection(t, &[&gi, &si])?;
        let (ng, ns) = (g.order(), gamma.order());
        // position of x·s in E -> (x, s)
        let mut split = vec![(u32::MAX, u32::MAX); e.order()];
        let g_idx: Vec<usize> = g.elements().iter().map(|p| e.index_of(p).unwrap()).collect();
        let s_idx: Vec<usize> = gamma.elements().iter().map(|p| e.index_of(p).unwrap()).collect();
        for (x, &ex) in g_idx.iter().enumerate() {
            for (s, &es) in s_idx.iter().enumerate() {
                split[t.mul(ex as u32, es as u32) as usize] = (x as u32, s as u32);
            }
        }
        let mut right_action = vec![0u32; ng * ns];
        let mut left_action = vec![0u32; ng * ns];
        for (s, &es) in s_idx.iter().enumerate() {
            for (x, &ex) in g_idx.iter().enumerate() {
                let (gx, gs) = split[t.mul(es as u32, ex as u32) as usize];
                if gx == u32::MAX {
                    return Err(Error::Internal("element without factorization".into()));
                }
                left_action[s * ng + x] = gx;
                right_action[s * ng + x] = gs;
            }
        }
        Ok(MatchedPair {
            g: Arc::new(g.clone()),
            gamma: Arc::new(gamma.clone()),
            right_action,
            left_action,
        })
    }

    /// The pair `(G, G)` with `s ◁ x = x⁻¹ s x` and trivial `▷`.
    pub fn drinfeld(g: GroupRef) -> Result<Self> {
        let t = g.table()?;
        let n = g.order();
        let mut right_action = vec![0u32; n * n];
        let mut left_action = vec![0u32; n * n];
        for s in 0..n {
            for x in 0..n {
                right_action[s * n + x] = t.conj(s as u32, x as u32);
                left_action[s * n + x] = x as u32;
            }
        }
        Ok(MatchedPair {
            gamma: Arc::clone(&g),
            g,
            right_action,
            left_action,
        })
    }

    /// Trivial actions on both sides (direct product).
    pub fn trivial(g: GroupRef, gamma: GroupRef) -> Self {
        let (ng, ns) = (g.order(), gamma.order());
        let mut right_action = Vec::with_capacity(ng * ns);
        let mut left_action = Vec::with_capacity(ng * ns);
        for s in 0..ns {
            for x in 0..ng {
                right_action.push(s as u32);
                left_action.push(x as u32);
            }
        }
        MatchedPair {
            g,
            gamma,
            right_action,
            left_action,
        }
    }

    pub fn g(&self) -> &GroupRef {
        &self.g
    }

    pub fn gamma(&self) -> &GroupRef {
        &self.gamma
    }

    /// `s ◁ x`.
    #[inline]
    pub fn right(&self, s: usize, x: usize) -> usize {
        self.right_action[s * self.g.order() + x] as usize
    }

    /// `s ▷ x`.
    #[inline]
    pub fn left(&self, s: usize, x: usize) -> usize {
        self.left_action[s * self.g.order() + x] as usize
    }

    pub fn right_table(&self) -> &[u32] {
        &self.right_action
    }

    pub fn left_table(&self) -> &[u32] {
        &self.left_action
    }

    /// Overwrites one entry of `◁`; used to build negative controls.
    pub fn set_right(&mut self, s: usize, x: usize, value: usize) {
        let ng = self.g.order();
        self.right_action[s * ng + x] = value as u32;
    }

    pub fn set_left(&mut self, s: usize, x: usize, value: usize) {
        let ng = self.g.order();
        self.left_action[s * ng + x] = value as u32;
    }

    pub fn is_left_trivial(&self) -> bool {
        let ng = self.g.order();
        self.left_action.iter().enumerate().all(|(i, &v)| v as usize == i % ng)
    }

    pub fn is_right_trivial(&self) -> bool {
        let ng = self.g.order();
        self.right_action.iter().enumerate().all(|(i, &v)| v as usize == i / ng)
    }

    /// Every violated axiom instance, sorted. Empty means valid.
    pub fn verify_compatibility(&self) -> Result<Vec<Violation>> {
        let tg = self.g.table()?;
        let ts = self.gamma.table()?;
        let (ng, ns) = (self.g.order(), self.gamma.order());
        let mut out = Vec::new();
        for s in 0..ns {
            if !is_permutation((0..ng).map(|x| self.left(s, x) as u32), ng) {
                out.push(Violation::LeftNotBijective { s });
            }
        }
        for x in 0..ng {
            if !is_permutation((0..ns).map(|s| self.right(s, x) as u32), ns) {
                out.push(Violation::RightNotBijective { x });
            }
        }
        if !out.is_empty() {
            return Ok(out);
        }
        let gm = |a: usize, b: usize| tg.mul(a as u32, b as u32) as usize;
        let sm = |a: usize, b: usize| ts.mul(a as u32, b as u32) as usize;
        for s in 0..ns {
            for x in 0..ng {
                for y in 0..ng {
                    let xy = gm(x, y);
                    if self.right(s, xy) != self.right(self.right(s, x), y) {
                        out.push(Violation::RightAction { s, x, y });
                    }
                    if self.left(s, xy) != gm(self.left(s, x), self.left(self.right(s, x), y)) {
                        out.push(Violation::LeftCompatibility { s, x, y });
                    }
                }
            }
        }
        for s in 0..ns {
            for t in 0..ns {
                let st = sm(s, t);
                for x in 0..ng {
                    if self.left(st, x) != self.left(s, self.left(t, x)) {
                        out.push(Violation::LeftAction { s, t, x });
                    }
                    if self.right(st, x) != sm(self.right(s, self.left(t, x)), self.right(t, x)) {
                        out.push(Violation::RightCompatibility { s, t, x });
                    }
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Multiplication table of the group on pairs `(x, s)` (index
    /// `x * |Γ| + s`) with `(x, s)(y, t) = (x(s ▷ y), (s ◁ y)t)`.
    pub fn reconstruct(&self) -> Result<GroupTable> {
        let tg = self.g.table()?;
        let ts = self.gamma.table()?;
        let (ng, ns) = (self.g.order(), self.gamma.order());
        let n = ng * ns;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..ng {
            for s in 0..ns {
                for y in 0..ng {
                    for t in 0..ns {
                        let a = tg.mul(x as u32, self.left(s, y) as u32) as usize;
                        let b = ts.mul(self.right(s, y) as u32, t as u32) as usize;
                        mul.push((a * ns + b) as u32);
                    }
                }
            }
        }
        GroupTable::new(n, mul)
    }

    pub fn dump(&self) -> String {
        let ng = self.g.order();
        let mut out = String::new();
        out.push_str("[G]\n");
        out.push_str(&dump_group(&self.g));
        out.push_str("[GAMMA]\n");
        out.push_str(&dump_group(&self.gamma));
        for (name, table) in [("TRIANGLE_LEFT", &self.left_action), ("TRIANGLE_RIGHT", &self.right_action)] {
            out.push_str(&format!("[{name}]\n"));
            for row in table.chunks(ng) {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
        }
        out
    }

    pub fn load(text: &str) -> Result<Self> {
        let sections = split_sections(text, &["G", "GAMMA", "TRIANGLE_LEFT", "TRIANGLE_RIGHT"])?;
        let g = parse_group_spec(&sections[0].1, sections[0].0)?.build()?.into_ref();
        let gamma = parse_group_spec(&sections[1].1, sections[1].0)?.build()?.into_ref();
        let (ng, ns) = (g.order(), gamma.order());
        let left = parse_table(&sections[2].1, sections[2].0, ns, ng, ng)?;
        let right = parse_table(&sections[3].1, sections[3].0, ns, ng, ns)?;
        let mp = MatchedPair::from_tables(g, gamma, right, left)?;
        Ok(mp)
    }
}

impl PartialEq for MatchedPair {
    fn eq(&self, other: &Self) -> bool {
        *self.g == *other.g
            && *self.gamma == *other.gamma
            && self.right_action == other.right_action
            && self.left_action == other.left_action
    }
}

/// Splits `[NAME]` sections in the given order; returns the line number of
/// each header and the body text.
fn split_sections(text: &str, names: &[&str]) -> Result<Vec<(usize, String)>> {
    let mut out: Vec<(usize, String)> = Vec::new();
    let mut current: Option<usize> = None;
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if let Some(name) = trimmed.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let expected = names.get(out.len()).copied();
            if Some(name) != expected {
                return Err(Error::parse(
                    i + 1,
                    1,
                    format!("unexpected section [{name}], expected [{}]", expected.unwrap_or("end")),
                ));
            }
            out.push((i + 1, String::new()));
            current = Some(out.len() - 1);
            continue;
        }
        match current {
            Some(c) => {
                out[c].1.push_str(line);
                out[c].1.push('\n');
            }
            None if trimmed.is_empty() || trimmed.starts_with('#') => {}
            None => return Err(Error::parse(i + 1, 1, "content before first section")),
        }
    }
    if out.len() < names.len() {
        return Err(Error::parse(
            text.lines().count() + 1,
            1,
            format!("missing section [{}]", names[out.len()]),
        ));
    }
    Ok(out)
}

fn parse_table(body: &str, header_line: usize, rows: usize, cols: usize, bound: usize) -> Result<Vec<u32>> {
    let mut out = Vec::with_capacity(rows * cols);
    let mut seen_rows = 0;
    for (i, line) in body.lines().enumerate() {
        let line_no = header_line + i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let mut count = 0;
        for (col, tok) in line.split_whitespace().enumerate() {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::parse(line_no, col + 1, format!("bad table entry {tok:?}")))?;
            if v as usize >= bound {
                return Err(Error::parse(line_no, col + 1, format!("entry {v} out of range")));
            }
            out.push(v);
            count += 1;
        }
        if count != cols {
            return Err(Error::parse(line_no, 1, format!("expected {cols} entries, found {count}")));
        }
        seen_rows += 1;
    }
    if seen_rows != rows {
        return Err(Error::parse(header_line, 1, format!("expected {rows} rows, found {seen_rows}")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named;

    #[test]
    fn drinfeld_pair_is_valid() {
        let mp = MatchedPair::drinfeld(named::symmetric(3).into_ref()).unwrap();
        assert!(mp.verify_compatibility().unwrap().is_empty());
        assert!(mp.is_left_trivial());
        assert!(!mp.is_right_trivial());
    }

    #[test]
    fn corrupted_entry_is_reported() {
        let mut mp = MatchedPair::drinfeld(named::symmetric(3).into_ref()).unwrap();
        let v = mp.right(1, 2);
        let w = mp.right(2, 2);
        // Swap two values of the same column so the bijectivity check passes.
        mp.set_right(1, 2, w);
        mp.set_right(2, 2, v);
        let report = mp.verify_compatibility().unwrap();
        assert!(!report.is_empty());
    }

    #[test]
    fn truncated_dump_names_missing_section() {
        let mp = MatchedPair::trivial(named::cyclic(2).into_ref(), named::cyclic(3).into_ref());
        let text = mp.dump();
        assert_eq!(MatchedPair::load(&text).unwrap(), mp);
        let cut: String = text.split("[TRIANGLE_RIGHT]").next().unwrap().to_string();
        let err = MatchedPair::load(&cut).unwrap_err();
        assert!(err.to_string().contains("TRIANGLE_RIGHT"), "{err}");
    }
}
