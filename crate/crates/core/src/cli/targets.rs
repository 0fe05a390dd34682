//! Parsing of command-line targets: groups, Hopf algebras and fusion
//! category expressions.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fusion::CatExpr;
use crate::group::{find_factorization, named, parse_group, GroupRef, IsoLabel};
use crate::hopf::{drinfeld_double, dual_group_algebra, group_algebra, load_hopf, split_extension, HopfAlgebra};
use crate::matched_pair::MatchedPair;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

/// A group by name (`a6`, `s3`, `z2xz2`, …) or from a group file.
pub fn group(spec: &str) -> Result<GroupRef> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| bad(format!("cannot read {spec}: {e}")))?;
        return Ok(parse_group(&text)?.into_ref());
    }
    Ok(named::by_name(spec)?.into_ref())
}

fn label(spec: &str) -> Result<IsoLabel> {
    if let Some(l) = IsoLabel::parse(spec) {
        return Ok(l);
    }
    let g = named::by_name(spec)?;
    Ok(crate::group::identify(g.table()?))
}

/// The matched pair of an exact factorization `E = Γ·G` chosen by labels:
/// `mp:<E>:<Γ>:<G>`.
pub fn matched_pair(spec: &str) -> Result<MatchedPair> {
    let rest = spec
        .strip_prefix("mp:")
        .ok_or_else(|| bad(format!("matched pair target must look like mp:<E>:<Γ>:<G>, got {spec:?}")))?;
    let parts: Vec<&str> = rest.split(':').collect();
    let [e, gamma, g] = parts.as_slice() else {
        return Err(bad("matched pair target must look like mp:<E>:<Γ>:<G>"));
    };
    let e = group(e)?;
    let f = find_factorization(&e, &label(gamma)?, &label(g)?)?
        .ok_or_else(|| Error::NotExactFactorization(format!("{rest} has no such exact factorization")))?;
    MatchedPair::from_factorization(&e, &f.right_group(), &f.left_group())
}

/// A Hopf algebra: `kG:<g>`, `k^G:<g>`, `D:<g>`, `split:<E>:<Γ>:<G>` for
/// `k^Γ # kG`, or a file written by `build`.
pub fn hopf(spec: &str) -> Result<Arc<HopfAlgebra>> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| bad(format!("cannot read {spec}: {e}")))?;
        return Ok(Arc::new(load_hopf(&text)?));
    }
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| bad(format!("unknown Hopf algebra target {spec:?}")))?;
    let h = match kind {
        "kG" | "k" | "group" => group_algebra(&group(rest)?)?,
        "k^G" | "dual" => dual_group_algebra(&group(rest)?)?,
        "D" | "double" => drinfeld_double(&group(rest)?)?,
        "split" => {
            let parts: Vec<&str> = rest.split(':').collect();
            let [e, gamma, g] = parts.as_slice() else {
                return Err(bad("split target must look like split:<E>:<Γ>:<G>"));
            };
            let e = group(e)?;
            let f = find_factorization(&e, &label(gamma)?, &label(g)?)?
                .ok_or_else(|| Error::NotExactFactorization(format!("{rest} has no such exact factorization")))?;
            split_extension(&e, &f.right_group(), &f.left_group())?
        }
        _ => return Err(bad(format!("unknown Hopf algebra target {spec:?}"))),
    };
    Ok(Arc::new(h))
}

/// Whether `spec` names a fusion-category expression rather than a Hopf
/// algebra.
pub fn is_category(spec: &str) -> bool {
    let s = spec.trim();
    ["vec", "rep", "ty:", "cpq:", "center(", "deligne(", "zvec"]
        .iter()
        .any(|p| s.starts_with(p))
}

/// Fusion-category expressions: `vec:G` or `vecG`, `rep:G` or `repG`,
/// `ty:p`, `cpq:p:q`, `center(E)` or `zvecG`, `deligne(E,F)`.
pub fn category(spec: &str) -> Result<CatExpr> {
    let s = spec.trim();
    if let Some(inner) = s.strip_prefix("center(").and_then(|r| r.strip_suffix(')')) {
        return Ok(CatExpr::center(category(inner)?));
    }
    if let Some(inner) = s.strip_prefix("deligne(").and_then(|r| r.strip_suffix(')')) {
        let (a, b) = split_top_comma(inner).ok_or_else(|| bad("deligne needs two arguments"))?;
        return Ok(CatExpr::deligne(category(a)?, category(b)?));
    }
    if let Some(g) = s.strip_prefix("zvec") {
        return Ok(CatExpr::center(CatExpr::vec(group(g.trim_start_matches(':'))?)?));
    }
    if let Some(g) = s.strip_prefix("vec") {
        return CatExpr::vec(group(g.trim_start_matches(':'))?);
    }
    if let Some(g) = s.strip_prefix("rep") {
        return CatExpr::rep(group(g.trim_start_matches(':'))?);
    }
    if let Some(p) = s.strip_prefix("ty:") {
        return CatExpr::tambara_yamagami(p.parse().map_err(|_| bad(format!("bad prime {p:?}")))?);
    }
    if let Some(pq) = s.strip_prefix("cpq:") {
        let (p, q) = pq.split_once(':').ok_or_else(|| bad("cpq target must look like cpq:p:q"))?;
        let parse = |x: &str| x.parse::<u64>().map_err(|_| bad(format!("bad prime {x:?}")));
        return CatExpr::cpq(parse(p)?, parse(q)?);
    }
    Err(bad(format!("unknown category expression {spec:?}")))
}

fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}
