//! Antipode by exact linear solve.

use super::algebra::HopfAlgebra;
use super::linalg::{Acc, SparseVec};
use super::scalar::CycScalar;
use crate::error::{Error, Result};

/// Solves `m ∘ (S ⊗ id) ∘ Δ = u ∘ ε` for `S`, ignoring any antipode
/// already stored. Returns `Ok(None)` when the system is inconsistent, and
/// an error if a solution exists but the right antipode identity fails.
pub fn solve_antipode(h: &HopfAlgebra) -> Result<Option<Vec<SparseVec>>> {
    let d = h.dim();
    let var = |j: usize, k: usize| (j * d + k) as u32;
    let mut equations = Vec::new();
    for i in 0..d {
        // rows[m] collects Σ c [b_k b_l]_m s_{kj}
        let mut rows: std::collections::BTreeMap<u32, Acc> = std::collections::BTreeMap::new();
        for (j, l, c) in h.comult_basis(i) {
            for k in 0..d {
                for (m, a) in h.mul_basis(k, *l as usize) {
                    rows.entry(*m).or_default().add(var(*j as usize, k), &(c * a));
                }
            }
        }
        let eps = h.counit_basis(i);
        let mut rhs: std::collections::BTreeMap<u32, CycScalar> = std::collections::BTreeMap::new();
        for (m, u) in h.unit() {
            rhs.insert(*m, eps * u);
        }
        let keys: std::collections::BTreeSet<u32> = rows.keys().chain(rhs.keys()).copied().collect();
        for m in keys {
            let lhs = rows.remove(&m).map(Acc::finish).unwrap_or_default();
            let b = rhs.remove(&m).unwrap_or_else(|| h.zero_scalar());
            equations.push((lhs, b));
        }
    }
    let Some(x) = super::linalg::solve_sparse(d * d, equations, h.conductor()) else {
        return Ok(None);
    };
    let columns: Vec<SparseVec> = (0..d)
        .map(|j| {
            (0..d)
                .filter(|&k| !x[j * d + k].is_zero())
                .map(|k| (k as u32, x[j * d + k].clone()))
                .collect()
        })
        .collect();
    let candidate = h.clone().with_antipode(columns.clone());
    for i in 0..d {
        let mut acc = Acc::new();
        for (j, k, c) in candidate.comult_basis(i) {
            let sk = candidate.antipode_basis(*k as usize);
            acc.add_scaled(&candidate.mul(&candidate.basis_vec(*j as usize), sk), c);
        }
        let mut expected = Acc::new();
        expected.add_scaled(candidate.unit(), candidate.counit_basis(i));
        if acc.finish() != expected.finish() {
            return Err(Error::Verification(format!(
                "left antipode solution fails the right identity at ({i})"
            )));
        }
    }
    Ok(Some(columns))
}
