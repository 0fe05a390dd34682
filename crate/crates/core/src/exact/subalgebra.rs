//! Hopf subalgebras given by a spanning set in an ambient algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Bits, GroupTable};
use crate::hopf::linalg::{Acc, Echelon, SparseVec};
use crate::hopf::{CycScalar, HopfAlgebra, HopfData, HopfMorphism, Provenance, SparseTensor};

#[derive(Clone)]
pub struct HopfSubalgebra {
    pub ambient: Arc<HopfAlgebra>,
    pub space: Echelon,
}

impl fmt::Debug for HopfSubalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfSubalgebra")
            .field("ambient_dim", &self.ambient.dim())
            .field("dim", &self.space.dim())
            .finish()
    }
}

/// Whether a tensor lies in `K ⊗ K`: every row and every column slice lies in `K`.
pub fn tensor_in(space: &Echelon, t: &SparseTensor) -> bool {
    let mut rows: BTreeMap<u32, SparseVec> = BTreeMap::new();
    let mut cols: BTreeMap<u32, SparseVec> = BTreeMap::new();
    for ((a, b), c) in t {
        rows.entry(*a).or_default().push((*b, c.clone()));
        cols.entry(*b).or_default().push((*a, c.clone()));
    }
    for v in cols.values_mut() {
        v.sort_by_key(|(i, _)| *i);
    }
    rows.values().all(|v| space.contains(v)) && cols.values().all(|v| space.contains(v))
}

impl HopfSubalgebra {
    /// Span of `vectors`, checked to contain the unit and to be closed
    /// under multiplication, comultiplication and antipode.
    pub fn new(ambient: Arc<HopfAlgebra>, vectors: &[SparseVec]) -> Result<Self> {
        let space = Echelon::from_vectors(vectors.iter());
        let k = HopfSubalgebra { ambient, space };
        if let Some(problem) = k.closure_problem() {
            return Err(Error::Verification(format!("not a Hopf subalgebra: {problem}")));
        }
        Ok(k)
    }

    /// First failing closure condition, if any.
    pub fn closure_problem(&self) -> Option<String> {
        let h = &self.ambient;
        if !self.space.contains(h.unit()) {
            return Some("unit not contained".into());
        }
        let basis = self.space.basis();
        for (p, a) in basis.iter().enumerate() {
            for (q, b) in basis.iter().enumerate() {
                if !self.space.contains(&h.mul(a, b)) {
                    return Some(format!("product of basis vectors {p} and {q} leaves the span"));
                }
            }
            if !tensor_in(&self.space, &h.comult(a)) {
                return Some(format!("comultiplication of basis vector {p} leaves K ⊗ K"));
            }
            if !self.space.contains(&h.antipode(a)) {
                return Some(format!("antipode of basis vector {p} leaves the span"));
            }
        }
        None
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> Vec<SparseVec> {
        self.space.basis()
    }

    /// `kN` inside `kG` for a subgroup given by element indices.
    pub fn group_subalgebra(ambient: Arc<HopfAlgebra>, n: &Bits) -> Result<Self> {
        let one = ambient.one_scalar();
        let vs: Vec<SparseVec> = n.ones().map(|i| vec![(i as u32, one.clone())]).collect();
        Self::new(ambient, &vs)
    }

    /// `k^{G/N}` inside `k^G`: spans of indicator functions of the left
    /// cosets `gN`. Closed under Δ only when `N` is normal; otherwise the
    /// closure check fails.
    pub fn coset_indicator_subalgebra(ambient: Arc<HopfAlgebra>, t: &GroupTable, n: &Bits) -> Result<Self> {
        let mut coset_of = vec![u32::MAX; t.order()];
        let mut next = 0u32;
        for g in 0..t.order() as u32 {
            if coset_of[g as usize] == u32::MAX {
                for x in n.ones() {
                    coset_of[t.mul(g, x as u32) as usize] = next;
                }
                next += 1;
            }
        }
        let mut by_coset: BTreeMap<u32, SparseVec> = BTreeMap::new();
        let one = ambient.one_scalar();
        for (g, c) in coset_of.iter().enumerate() {
            by_coset.entry(*c).or_default().push((g as u32, one.clone()));
        }
        let vs: Vec<SparseVec> = by_coset.into_values().collect();
        Self::new(ambient, &vs)
    }

    /// The canonical `k^Γ = span{e_g # e}` inside `k^Γ # kG`.
    pub fn canonical_dual(ambient: Arc<HopfAlgebra>, gamma_order: usize, g_order: usize, g_identity: usize) -> Result<Self> {
        let one = ambient.one_scalar();
        let vs: Vec<SparseVec> = (0..gamma_order)
            .map(|s| vec![((s * g_order + g_identity) as u32, one.clone())])
            .collect();
        Self::new(ambient, &vs)
    }

    /// The subalgebra as a Hopf algebra on its echelon basis, with the
    /// inclusion map.
    pub fn as_hopf(&self) -> Result<(Arc<HopfAlgebra>, HopfMorphism)> {
        let h = &self.ambient;
        let basis = self.basis();
        let d = basis.len();
        let conductor = h.conductor();
        let coords = |v: &SparseVec| -> Result<SparseVec> {
            let c = self
                .space
                .coordinates(v)
                .ok_or_else(|| Error::Internal("vector outside subalgebra".into()))?;
            Ok(c.into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i as u32, x))
                .collect())
        };
        let mut mult = Vec::with_capacity(d * d);
        for a in &basis {
            for b in &basis {
                mult.push(coords(&h.mul(a, b))?);
            }
        }
        let mut comult = Vec::with_capacity(d);
        for a in &basis {
            comult.push(tensor_coords(&self.space, &h.comult(a))?);
        }
        let counit: Vec<CycScalar> = basis.iter().map(|a| h.counit(a)).collect();
        let antipode = basis.iter().map(|a| coords(&h.antipode(a))).collect::<Result<Vec<_>>>()?;
        let labels = basis.iter().map(|v| vector_label(h, v)).collect();
        let sub = Arc::new(HopfAlgebra::from_data(
            HopfData {
                dim: d,
                conductor,
                labels,
                mult,
                unit: coords(h.unit())?,
                comult,
                counit,
                antipode,
            },
            Provenance::Other,
        ));
        let inclusion = HopfMorphism::new(Arc::clone(&sub), Arc::clone(h), basis)?;
        Ok((sub, inclusion))
    }
}

/// Label for a vector: the ambient label for a basis vector, a sum of
/// labels for 0/1 vectors, otherwise the pivot index.
pub fn vector_label(h: &HopfAlgebra, v: &SparseVec) -> String {
    if v.iter().all(|(_, c)| c.is_one()) {
        let parts: Vec<&str> = v.iter().map(|(i, _)| h.labels()[*i as usize].as_str()).collect();
        return parts.join(" + ");
    }
    format!("v{}", v.first().map(|(i, _)| *i).unwrap_or(0))
}

/// Coordinates of a tensor in `K ⊗ K` on the echelon basis of `K`.
pub fn tensor_coords(space: &Echelon, t: &SparseTensor) -> Result<Vec<(u32, u32, CycScalar)>> {
    // Group by first index: t = Σ_a b_a ⊗ w_a.
    let mut rows: BTreeMap<u32, SparseVec> = BTreeMap::new();
    for ((a, b), c) in t {
        rows.entry(*a).or_default().push((*b, c.clone()));
    }
    let d = space.dim();
    // u_r = Σ_a coords(w_a)[r] b_a
    let mut us: Vec<Acc> = vec![Acc::new(); d];
    for (a, w) in rows {
        let c = space
            .coordinates(&w)
            .ok_or_else(|| Error::Internal("tensor outside K ⊗ K".into()))?;
        for (r, x) in c.iter().enumerate() {
            us[r].add(a, x);
        }
    }
    let mut out = Vec::new();
    for (r, u) in us.into_iter().enumerate() {
        let u = u.finish();
        if u.is_empty() {
            continue;
        }
        let c = space
            .coordinates(&u)
            .ok_or_else(|| Error::Internal("tensor outside K ⊗ K".into()))?;
        for (s, x) in c.into_iter().enumerate() {
            if !x.is_zero() {
                out.push((s as u32, r as u32, x));
            }
        }
    }
    Ok(out)
}
