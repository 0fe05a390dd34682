//! Size caps for enumeration and construction.
//!
//! Defaults can be overridden by the `HOPFSEQ_CAP` environment variable,
//! either a bare integer (the group order cap) or a comma-separated list
//! such as `order=20000,subgroup=2000,dim=8192`. Programmatic overrides
//! (used by the CLI flags) take precedence over the environment.

use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_ORDER_CAP: usize = 10_000;
pub const DEFAULT_SUBGROUP_CAP: usize = 1_000;
pub const DEFAULT_DIMENSION_CAP: usize = 4_096;

static ORDER_OVERRIDE: AtomicUsize = AtomicUsize::new(0);
static SUBGROUP_OVERRIDE: AtomicUsize = AtomicUsize::new(0);
static DIMENSION_OVERRIDE: AtomicUsize = AtomicUsize::new(0);

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CapOverrides {
    pub order: Option<usize>,
    pub subgroup: Option<usize>,
    pub dimension: Option<usize>,
}

/// Parses a `HOPFSEQ_CAP` value. Unknown keys and malformed numbers are
/// rejected so that typos do not silently fall back to defaults.
pub fn parse_cap_spec(text: &str) -> Result<CapOverrides, String> {
    let text = text.trim();
    let mut out = CapOverrides::default();
    if text.is_empty() {
        return Ok(out);
    }
    if let Ok(n) = text.parse::<usize>() {
        out.order = Some(n);
        return Ok(out);
    }
    for part in text.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, found {part:?}"))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| format!("invalid cap value {value:?}"))?;
        match key.trim() {
            "order" => out.order = Some(value),
            "subgroup" => out.subgroup = Some(value),
            "dim" | "dimension" => out.dimension = Some(value),
            other => return Err(format!("unknown cap key {other:?}")),
        }
    }
    Ok(out)
}

fn env_caps() -> CapOverrides {
    std::env::var("HOPFSEQ_CAP")
        .ok()
        .and_then(|v| parse_cap_spec(&v).ok())
        .unwrap_or_default()
}

fn resolve(over: &AtomicUsize, env: Option<usize>, default: usize) -> usize {
    match over.load(Ordering::Relaxed) {
        0 => env.unwrap_or(default),
        n => n,
    }
}

pub fn order_cap() -> usize {
    resolve(&ORDER_OVERRIDE, env_caps().order, DEFAULT_ORDER_CAP)
}

pub fn subgroup_cap() -> usize {
    resolve(&SUBGROUP_OVERRIDE, env_caps().subgroup, DEFAULT_SUBGROUP_CAP)
}

pub fn dimension_cap() -> usize {
    resolve(&DIMENSION_OVERRIDE, env_caps().dimension, DEFAULT_DIMENSION_CAP)
}

/// Installs process-wide overrides.
pub fn set_overrides(caps: CapOverrides) {
    ORDER_OVERRIDE.store(caps.order.unwrap_or(0), Ordering::Relaxed);
    SUBGROUP_OVERRIDE.store(caps.subgroup.unwrap_or(0), Ordering::Relaxed);
    DIMENSION_OVERRIDE.store(caps.dimension.unwrap_or(0), Ordering::Relaxed);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cap_specs() {
        assert_eq!(parse_cap_spec("500").unwrap().order, Some(500));
        let c = parse_cap_spec("order=5, dim=9").unwrap();
        assert_eq!((c.order, c.subgroup, c.dimension), (Some(5), None, Some(9)));
        assert!(parse_cap_spec("orders=5").is_err());
        assert!(parse_cap_spec("order=x").is_err());
    }
}
