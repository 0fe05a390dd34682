//! Coinvariants, Hopf kernels and Hopf cokernels.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::subalgebra::{vector_label, HopfSubalgebra};
use crate::error::{Error, Result};
use crate::hopf::linalg::{nullspace, Acc, Echelon, SparseVec};
use crate::hopf::{CycScalar, HopfAlgebra, HopfData, HopfMorphism, Provenance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `(π ⊗ id)Δ(h) = 1 ⊗ h`
    Left,
    /// `(id ⊗ π)Δ(h) = h ⊗ 1`
    Right,
}

/// Coinvariants of `π: H → B` as an echelon subspace of `H`.
pub fn coinvariants(pi: &HopfMorphism, side: Side) -> Echelon {
    let h = &pi.source;
    let b = &pi.target;
    let (dh, db) = (h.dim() as u32, b.dim() as u32);
    let images: Vec<SparseVec> = (0..h.dim())
        .map(|i| {
            let mut acc = Acc::new();
            for (j, k, c) in h.comult_basis(i) {
                match side {
                    Side::Left => {
                        for (p, x) in &pi.columns[*j as usize] {
                            acc.add(p * dh + k, &(c * x));
                        }
                    }
                    Side::Right => {
                        for (p, x) in &pi.columns[*k as usize] {
                            acc.add(j * db + p, &(c * x));
                        }
                    }
                }
            }
            let minus = -h.one_scalar();
            for (u, x) in b.unit() {
                let idx = match side {
                    Side::Left => u * dh + i as u32,
                    Side::Right => i as u32 * db + u,
                };
                acc.add(idx, &(x * &minus));
            }
            acc.finish()
        })
        .collect();
    nullspace(&images, h.conductor())
}

/// `Hker(f) = {h : h₁ ⊗ f(h₂) ⊗ h₃ = h₁ ⊗ 1 ⊗ h₂}`.
pub fn hopf_kernel(f: &HopfMorphism) -> Result<HopfSubalgebra> {
    let h = &f.source;
    let t = &f.target;
    let (d1, d2) = (h.dim() as u32, t.dim() as u32);
    let idx = |a: u32, m: u32, c: u32| (a * d2 + m) * d1 + c;
    let images: Vec<SparseVec> = (0..h.dim())
        .map(|i| {
            let mut acc = Acc::new();
            for (j, k, c) in h.comult_basis(i) {
                // (Δ ⊗ id)Δ: split the first leg again.
                for (a, m, d) in h.comult_basis(*j as usize) {
                    let cd = c * d;
                    for (p, x) in &f.columns[*m as usize] {
                        acc.add(idx(*a, *p, *k), &(&cd * x));
                    }
                }
                for (u, x) in t.unit() {
                    acc.add(idx(*j, *u, *k), &-(c * x));
                }
            }
            acc.finish()
        })
        .collect();
    let space = nullspace(&images, h.conductor());
    let k = HopfSubalgebra {
        ambient: Arc::clone(h),
        space,
    };
    if let Some(p) = k.closure_problem() {
        return Err(Error::Internal(format!("Hopf kernel is not a Hopf subalgebra: {p}")));
    }
    Ok(k)
}

/// The left ideal `H · Y` spanned by `b_a · y`.
pub fn left_ideal(h: &HopfAlgebra, ys: &[SparseVec]) -> Echelon {
    let mut e = Echelon::new();
    for y in ys {
        for a in 0..h.dim() {
            e.insert(&h.mul(&h.basis_vec(a), y));
        }
    }
    e
}

/// `H · Y · H`.
pub fn two_sided_ideal(h: &HopfAlgebra, ys: &[SparseVec]) -> Echelon {
    let left = left_ideal(h, ys);
    let mut e = Echelon::new();
    for v in left.basis() {
        for c in 0..h.dim() {
            e.insert(&h.mul(&v, &h.basis_vec(c)));
        }
    }
    e
}

/// Images `f(b) - ε(b)1` spanning `f(H₁⁺)`.
pub fn augmentation_images(f: &HopfMorphism) -> Vec<SparseVec> {
    let t = &f.target;
    (0..f.source.dim())
        .map(|i| {
            let mut acc = Acc::new();
            acc.add_vec(&f.columns[i]);
            acc.add_scaled(t.unit(), &-f.source.counit_basis(i).clone());
            acc.finish()
        })
        .filter(|v| !v.is_empty())
        .collect()
}

/// Quotient of `H` by a Hopf ideal `I`, on the non-pivot basis vectors,
/// with the projection. Checks that `I` is a coideal stable under `S`.
pub fn quotient_by_ideal(h: &Arc<HopfAlgebra>, ideal: &Echelon) -> Result<(Arc<HopfAlgebra>, HopfMorphism)> {
    let keep: Vec<u32> = (0..h.dim() as u32).filter(|i| !ideal.is_pivot(*i)).collect();
    let mut new_index: BTreeMap<u32, u32> = BTreeMap::new();
    for (n, &i) in keep.iter().enumerate() {
        new_index.insert(i, n as u32);
    }
    let q = |v: &[(u32, CycScalar)]| -> SparseVec {
        ideal
            .reduce(v)
            .into_iter()
            .map(|(i, c)| (new_index[&i], c))
            .collect()
    };
    let qq = |t: &[((u32, u32), CycScalar)]| -> Vec<(u32, u32, CycScalar)> {
        let mut acc: BTreeMap<(u32, u32), CycScalar> = BTreeMap::new();
        // reduce both legs: group by first leg, reduce second, then swap
        let mut by_first: BTreeMap<u32, SparseVec> = BTreeMap::new();
        for ((a, b), c) in t {
            by_first.entry(*a).or_default().push((*b, c.clone()));
        }
        let mut by_second: BTreeMap<u32, Acc> = BTreeMap::new();
        for (a, w) in by_first {
            for (b, c) in q(&w) {
                by_second.entry(b).or_default().add(a, &c);
            }
        }
        for (b, u) in by_second {
            for (a, c) in q(&u.finish()) {
                acc.insert((a, b), c);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, b), c)| (a, b, c)).collect()
    };
    for v in ideal.basis() {
        if !h.counit(&v).is_zero() {
            return Err(Error::Verification("ideal is not in the kernel of the counit".into()));
        }
        if !qq(&h.comult(&v)).is_empty() {
            return Err(Error::Verification("ideal is not a coideal".into()));
        }
        if !q(&h.antipode(&v)).is_empty() {
            return Err(Error::Verification("ideal is not stable under the antipode".into()));
        }
    }
    let d = keep.len();
    let mut mult = Vec::with_capacity(d * d);
    for &a in &keep {
        for &b in &keep {
            mult.push(q(h.mul_basis(a as usize, b as usize)));
        }
    }
    let comult = keep
        .iter()
        .map(|&a| {
            let t: Vec<((u32, u32), CycScalar)> =
                h.comult_basis(a as usize).iter().map(|(j, k, c)| ((*j, *k), c.clone())).collect();
            qq(&t)
        })
        .collect();
    let quotient = Arc::new(HopfAlgebra::from_data(
        HopfData {
            dim: d,
            conductor: h.conductor(),
            labels: keep.iter().map(|&a| format!("[{}]", vector_label(h, &h.basis_vec(a as usize)))).collect(),
            mult,
            unit: q(h.unit()),
            comult,
            counit: keep.iter().map(|&a| h.counit_basis(a as usize).clone()).collect(),
            antipode: keep.iter().map(|&a| q(h.antipode_basis(a as usize))).collect(),
        },
        Provenance::Other,
    ));
    let columns = (0..h.dim()).map(|i| q(&h.basis_vec(i))).collect();
    let projection = HopfMorphism::new(Arc::clone(h), Arc::clone(&quotient), columns)?;
    Ok((quotient, projection))
}

/// `Hcoker(f) = H₂ / H₂ f(H₁⁺) H₂` with its projection.
pub fn hopf_cokernel(f: &HopfMorphism) -> Result<(Arc<HopfAlgebra>, HopfMorphism)> {
    let ideal = two_sided_ideal(&f.target, &augmentation_images(f));
    quotient_by_ideal(&f.target, &ideal)
}
