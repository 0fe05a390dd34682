//! Text dump of Hopf algebra structure constants.
//!
//! ```text
//! HOPF
//! dim 2
//! conductor 1
//! LABELS
//! ()
//! (1 2)
//! MULT
//! 0 0 0 : 1
//! ...
//! COMULT
//! 0 : 0 0 : 1
//! UNIT
//! 0 : 1
//! COUNIT
//! 0 : 1
//! ANTIPODE
//! 0 0 : 1
//! END
//! ```
//!
//! `ANTIPODE i j : c` means `S(b_i)` has coefficient `c` at `b_j`.

use std::fmt::Write;

use super::algebra::{HopfAlgebra, HopfData, Provenance};
use super::linalg::SparseVec;
use super::scalar::CycScalar;
use crate::error::{Error, Result};

const SECTIONS: [&str; 6] = ["MULT", "COMULT", "UNIT", "COUNIT", "ANTIPODE", "END"];

pub fn dump_hopf(h: &HopfAlgebra) -> String {
    let d = h.dim();
    let mut out = String::new();
    let _ = writeln!(out, "HOPF\ndim {d}\nconductor {}\nLABELS", h.conductor());
    for l in h.labels() {
        let _ = writeln!(out, "{l}");
    }
    out.push_str("MULT\n");
    for i in 0..d {
        for j in 0..d {
            for (k, c) in h.mul_basis(i, j) {
                let _ = writeln!(out, "{i} {j} {k} : {}", c.coords_string());
            }
        }
    }
    out.push_str("COMULT\n");
    for i in 0..d {
        for (j, k, c) in h.comult_basis(i) {
            let _ = writeln!(out, "{i} : {j} {k} : {}", c.coords_string());
        }
    }
    out.push_str("UNIT\n");
    for (i, c) in h.unit() {
        let _ = writeln!(out, "{i} : {}", c.coords_string());
    }
    out.push_str("COUNIT\n");
    for i in 0..d {
        let c = h.counit_basis(i);
        if !c.is_zero() {
            let _ = writeln!(out, "{i} : {}", c.coords_string());
        }
    }
    out.push_str("ANTIPODE\n");
    for i in 0..d {
        for (j, c) in h.antipode_basis(i) {
            let _ = writeln!(out, "{i} {j} : {}", c.coords_string());
        }
    }
    out.push_str("END\n");
    out
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Option<(usize, &'a str)> {
        self.inner.next().map(|(i, l)| (i + 1, l))
    }

    fn peek(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|(_, l)| *l)
    }
}

fn expect_header<'a>(lines: &mut Lines<'a>, key: &str) -> Result<(usize, &'a str)> {
    let (n, line) = lines
        .next()
        .ok_or_else(|| Error::parse(0, 1, format!("missing header line {key:?}")))?;
    let rest = line
        .strip_prefix(key)
        .ok_or_else(|| Error::parse(n, 1, format!("expected {key:?}")))?;
    Ok((n, rest.trim()))
}

fn parse_index(tok: &str, line: usize, col: usize, bound: usize) -> Result<u32> {
    let v: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, col, format!("bad index {tok:?}")))?;
    if v >= bound {
        return Err(Error::parse(line, col, format!("index {v} out of range")));
    }
    Ok(v as u32)
}

/// Splits `a b : c` style records into index tokens and the coefficient.
fn split_record(line: &str, n: usize, groups: usize) -> Result<(Vec<&str>, &str)> {
    let parts: Vec<&str> = line.split(':').collect();
    if parts.len() != groups + 1 {
        return Err(Error::parse(n, 1, format!("expected {} ':'-separated fields", groups + 1)));
    }
    let idx: Vec<&str> = parts[..groups].iter().flat_map(|p| p.split_whitespace()).collect();
    Ok((idx, parts[groups].trim()))
}

fn coeff(text: &str, conductor: u32, line: usize, raw: &str) -> Result<CycScalar> {
    let col = raw.rfind(':').map(|p| p + 2).unwrap_or(1);
    CycScalar::parse_coords(conductor, text).map_err(|m| Error::parse(line, col, m))
}

pub fn load_hopf(text: &str) -> Result<HopfAlgebra> {
    let mut lines = Lines {
        inner: text.lines().enumerate().peekable(),
    };
    let (n, rest) = expect_header(&mut lines, "HOPF")?;
    if !rest.is_empty() {
        return Err(Error::parse(n, 5, "unexpected text after HOPF"));
    }
    let (n, rest) = expect_header(&mut lines, "dim")?;
    let dim: usize = rest.parse().map_err(|_| Error::parse(n, 5, "invalid dimension"))?;
    if dim == 0 {
        return Err(Error::parse(n, 5, "dimension must be positive"));
    }
    let (n, rest) = expect_header(&mut lines, "conductor")?;
    let conductor: u32 = rest
        .parse()
        .ok()
        .filter(|&c| c > 0)
        .ok_or_else(|| Error::parse(n, 11, "invalid conductor"))?;
    expect_header(&mut lines, "LABELS")?;
    let mut labels = Vec::with_capacity(dim);
    for _ in 0..dim {
        let (_, l) = lines
            .next()
            .ok_or_else(|| Error::parse(text.lines().count() + 1, 1, "missing section LABELS entries"))?;
        labels.push(l.to_string());
    }

    let mut mult: Vec<SparseVec> = vec![Vec::new(); dim * dim];
    let mut comult = vec![Vec::new(); dim];
    let mut unit = Vec::new();
    let mut counit = vec![CycScalar::zero(conductor); dim];
    let mut antipode: Vec<SparseVec> = vec![Vec::new(); dim];

    for (s, section) in SECTIONS.iter().enumerate() {
        let missing = || Error::parse(text.lines().count() + 1, 1, format!("missing section {section}"));
        let (n, header) = lines.next().ok_or_else(missing)?;
        if header.trim() != *section {
            return Err(Error::parse(n, 1, format!("expected section {section}, found {header:?}")));
        }
        if *section == "END" {
            break;
        }
        while let Some(peek) = lines.peek() {
            if SECTIONS.contains(&peek.trim()) {
                break;
            }
            let (n, line) = lines.next().unwrap();
            if line.trim().is_empty() {
                continue;
            }
            match s {
                0 => {
                    let (idx, c) = split_record(line, n, 1)?;
                    if idx.len() != 3 {
                        return Err(Error::parse(n, 1, "MULT records need three indices"));
                    }
                    let i = parse_index(idx[0], n, 1, dim)?;
                    let j = parse_index(idx[1], n, 1, dim)?;
                    let k = parse_index(idx[2], n, 1, dim)?;
                    mult[i as usize * dim + j as usize].push((k, coeff(c, conductor, n, line)?));
                }
                1 => {
                    let (idx, c) = split_record(line, n, 2)?;
                    if idx.len() != 3 {
                        return Err(Error::parse(n, 1, "COMULT records need three indices"));
                    }
                    let i = parse_index(idx[0], n, 1, dim)?;
                    let j = parse_index(idx[1], n, 1, dim)?;
                    let k = parse_index(idx[2], n, 1, dim)?;
                    comult[i as usize].push((j, k, coeff(c, conductor, n, line)?));
                }
                2 | 3 => {
                    let (idx, c) = split_record(line, n, 1)?;
                    if idx.len() != 1 {
                        return Err(Error::parse(n, 1, "expected one index"));
                    }
                    let i = parse_index(idx[0], n, 1, dim)?;
                    let c = coeff(c, conductor, n, line)?;
                    if s == 2 {
                        unit.push((i, c));
                    } else {
                        counit[i as usize] = c;
                    }
                }
                _ => {
                    let (idx, c) = split_record(line, n, 1)?;
                    if idx.len() != 2 {
                        return Err(Error::parse(n, 1, "ANTIPODE records need two indices"));
                    }
                    let i = parse_index(idx[0], n, 1, dim)?;
                    let j = parse_index(idx[1], n, 1, dim)?;
                    antipode[i as usize].push((j, coeff(c, conductor, n, line)?));
                }
            }
        }
    }
    Ok(HopfAlgebra::from_data(
        HopfData {
            dim,
            conductor,
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
        },
        Provenance::Other,
    ))
}
