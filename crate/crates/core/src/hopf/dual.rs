//! The dual Hopf algebra `H*` on the dual basis.

use std::sync::Arc;

use super::algebra::{HopfAlgebra, HopfData, Provenance};
use super::scalar::CycScalar;

pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let d = h.dim();
    let mut mult = vec![Vec::new(); d * d];
    for i in 0..d {
        for (a, b, c) in h.comult_basis(i) {
            mult[*a as usize * d + *b as usize].push((i as u32, c.clone()));
        }
    }
    let mut comult = vec![Vec::new(); d];
    for a in 0..d {
        for b in 0..d {
            for (i, c) in h.mul_basis(a, b) {
                comult[*i as usize].push((a as u32, b as u32, c.clone()));
            }
        }
    }
    let mut counit = vec![CycScalar::zero(h.conductor()); d];
    for (i, c) in h.unit() {
        counit[*i as usize] = c.clone();
    }
    let unit = (0..d as u32)
        .map(|i| (i, h.counit_basis(i as usize).clone()))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut antipode = vec![Vec::new(); d];
    for j in 0..d {
        for (i, c) in h.antipode_basis(j) {
            antipode[*i as usize].push((j as u32, c.clone()));
        }
    }
    let provenance = match h.provenance() {
        Provenance::GroupAlgebra(g) => Provenance::DualGroupAlgebra(Arc::clone(g)),
        Provenance::DualGroupAlgebra(g) => Provenance::GroupAlgebra(Arc::clone(g)),
        _ => Provenance::Other,
    };
    let labels = h.labels().iter().map(|l| dual_label(l)).collect();
    HopfAlgebra::from_data(
        HopfData {
            dim: d,
            conductor: h.conductor(),
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
        },
        provenance,
    )
}

/// `x` ↔ `e_x` between group and dual group algebra labels; `f(..)`
/// otherwise.
fn dual_label(l: &str) -> String {
    if let Some(rest) = l.strip_prefix("f(").and_then(|r| r.strip_suffix(')')) {
        return rest.to_string();
    }
    if l.starts_with('(') {
        return format!("e_{l}");
    }
    if let Some(rest) = l.strip_prefix("e_") {
        if rest.starts_with('(') && !rest.contains('#') {
            return rest.to_string();
        }
    }
    format!("f({l})")
}
