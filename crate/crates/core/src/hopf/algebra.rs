//! Finite-dimensional Hopf algebras as structure constants.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::linalg::{Acc, SparseVec};
use super::scalar::CycScalar;
use crate::group::GroupRef;
use crate::matched_pair::MatchedPair;

/// Sparse element of `H ⊗ H`, sorted by index pair.
pub type SparseTensor = Vec<((u32, u32), CycScalar)>;

/// One term `c · b_j ⊗ b_k` of a comultiplication.
pub type CoTerm = (u32, u32, CycScalar);

/// Where an algebra came from; used to pick specialised decompositions.
#[derive(Clone, Debug)]
pub enum Provenance {
    GroupAlgebra(GroupRef),
    DualGroupAlgebra(GroupRef),
    Bicrossed(Arc<MatchedPair>),
    Other,
}

impl Provenance {
    pub fn describe(&self) -> String {
        match self {
            Provenance::GroupAlgebra(g) => format!("group algebra of an order-{} group", g.order()),
            Provenance::DualGroupAlgebra(g) => format!("dual group algebra of an order-{} group", g.order()),
            Provenance::Bicrossed(mp) => format!(
                "bicrossed product k^Γ # kG with |Γ| = {}, |G| = {}",
                mp.gamma().order(),
                mp.g().order()
            ),
            Provenance::Other => "explicit structure constants".into(),
        }
    }
}

/// Plain structure-constant data, before packing.
#[derive(Clone, Debug)]
pub struct HopfData {
    pub dim: usize,
    pub conductor: u32,
    pub labels: Vec<String>,
    /// `mult[i * dim + j] = b_i · b_j`.
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    pub comult: Vec<Vec<CoTerm>>,
    pub counit: Vec<CycScalar>,
    /// Columns: `antipode[i] = S(b_i)`.
    pub antipode: Vec<SparseVec>,
}

#[derive(Clone)]
pub struct HopfAlgebra {
    dim: usize,
    conductor: u32,
    labels: Vec<String>,
    mult_off: Vec<u32>,
    mult: Vec<(u32, CycScalar)>,
    unit: SparseVec,
    comult_off: Vec<u32>,
    comult: Vec<CoTerm>,
    counit: Vec<CycScalar>,
    antipode: Vec<SparseVec>,
    provenance: Provenance,
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfAlgebra")
            .field("dim", &self.dim)
            .field("conductor", &self.conductor)
            .field("provenance", &self.provenance.describe())
            .finish()
    }
}

fn sorted_terms(mut terms: Vec<CoTerm>) -> Vec<CoTerm> {
    let mut merged: BTreeMap<(u32, u32), CycScalar> = BTreeMap::new();
    for (j, k, c) in terms.drain(..) {
        match merged.get_mut(&(j, k)) {
            Some(v) => *v += &c,
            None => {
                merged.insert((j, k), c);
            }
        }
    }
    merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((j, k), c)| (j, k, c))
        .collect()
}

fn clean(v: SparseVec) -> SparseVec {
    let mut acc = Acc::new();
    acc.add_vec(&v);
    acc.finish()
}

impl HopfAlgebra {
    /// Packs structure constants. Entries are normalised (sorted, merged,
    /// zero-free) but no axiom is checked here.
    pub fn from_data(data: HopfData, provenance: Provenance) -> HopfAlgebra {
        let dim = data.dim;
        assert_eq!(data.mult.len(), dim * dim);
        assert_eq!(data.comult.len(), dim);
        assert_eq!(data.counit.len(), dim);
        assert_eq!(data.antipode.len(), dim);
        assert_eq!(data.labels.len(), dim);
        let mut mult_off = Vec::with_capacity(dim * dim + 1);
        let mut mult = Vec::new();
        mult_off.push(0);
        for v in data.mult {
            mult.extend(clean(v));
            mult_off.push(mult.len() as u32);
        }
        let mut comult_off = Vec::with_capacity(dim + 1);
        let mut comult = Vec::new();
        comult_off.push(0);
        for terms in data.comult {
            comult.extend(sorted_terms(terms));
            comult_off.push(comult.len() as u32);
        }
        HopfAlgebra {
            dim,
            conductor: data.conductor,
            labels: data.labels,
            mult_off,
            mult,
            unit: clean(data.unit),
            comult_off,
            comult,
            counit: data.counit,
            antipode: data.antipode.into_iter().map(clean).collect(),
            provenance,
        }
    }

    pub fn to_data(&self) -> HopfData {
        let d = self.dim;
        HopfData {
            dim: d,
            conductor: self.conductor,
            labels: self.labels.clone(),
            mult: (0..d * d).map(|ij| self.mul_basis(ij / d, ij % d).to_vec()).collect(),
            unit: self.unit.clone(),
            comult: (0..d).map(|i| self.comult_basis(i).to_vec()).collect(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }

    pub fn with_antipode(mut self, antipode: Vec<SparseVec>) -> HopfAlgebra {
        self.antipode = antipode.into_iter().map(clean).collect();
        self
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> HopfAlgebra {
        self.provenance = provenance;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// `b_i · b_j`.
    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(u32, CycScalar)] {
        let ij = i * self.dim + j;
        &self.mult[self.mult_off[ij] as usize..self.mult_off[ij + 1] as usize]
    }

    /// `Δ(b_i)`.
    #[inline]
    pub fn comult_basis(&self, i: usize) -> &[CoTerm] {
        &self.comult[self.comult_off[i] as usize..self.comult_off[i + 1] as usize]
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn counit_basis(&self, i: usize) -> &CycScalar {
        &self.counit[i]
    }

    pub fn counit_values(&self) -> &[CycScalar] {
        &self.counit
    }

    pub fn antipode_basis(&self, i: usize) -> &SparseVec {
        &self.antipode[i]
    }

    pub fn antipode_columns(&self) -> &[SparseVec] {
        &self.antipode
    }

    pub fn zero_scalar(&self) -> CycScalar {
        CycScalar::zero(self.conductor)
    }

    pub fn one_scalar(&self) -> CycScalar {
        CycScalar::one(self.conductor)
    }

    pub fn basis_vec(&self, i: usize) -> SparseVec {
        vec![(i as u32, self.one_scalar())]
    }

    pub fn mul(&self, a: &[(u32, CycScalar)], b: &[(u32, CycScalar)]) -> SparseVec {
        let mut acc = Acc::new();
        for (i, x) in a {
            for (j, y) in b {
                let f = x * y;
                acc.add_scaled(self.mul_basis(*i as usize, *j as usize), &f);
            }
        }
        acc.finish()
    }

    pub fn comult(&self, a: &[(u32, CycScalar)]) -> SparseTensor {
        let mut acc: BTreeMap<(u32, u32), CycScalar> = BTreeMap::new();
        for (i, x) in a {
            for (j, k, c) in self.comult_basis(*i as usize) {
                let v = x * c;
                match acc.get_mut(&(*j, *k)) {
                    Some(e) => *e += &v,
                    None => {
                        acc.insert((*j, *k), v);
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn counit(&self, a: &[(u32, CycScalar)]) -> CycScalar {
        let mut s = self.zero_scalar();
        for (i, x) in a {
            s += &(x * &self.counit[*i as usize]);
        }
        s
    }

    pub fn antipode(&self, a: &[(u32, CycScalar)]) -> SparseVec {
        let mut acc = Acc::new();
        for (i, x) in a {
            acc.add_scaled(&self.antipode[*i as usize], x);
        }
        acc.finish()
    }

    /// True when `b_i b_j = b_j b_i` for all basis pairs.
    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            let mut flipped: Vec<CoTerm> =
                self.comult_basis(i).iter().map(|(j, k, c)| (*k, *j, c.clone())).collect();
            flipped.sort_by_key(|(j, k, _)| (*j, *k));
            flipped == self.comult_basis(i)
        })
    }

    /// Structure-constant equality (labels and provenance ignored).
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self.dim == other.dim
            && self.mult_off == other.mult_off
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult_off == other.comult_off
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// Structure constants after renaming basis vector `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> HopfAlgebra {
        let d = self.dim;
        let mv = |v: &[(u32, CycScalar)]| -> SparseVec {
            clean(v.iter().map(|(i, c)| (perm[*i as usize] as u32, c.clone())).collect())
        };
        let mut mult = vec![Vec::new(); d * d];
        let mut comult = vec![Vec::new(); d];
        let mut counit = vec![self.zero_scalar(); d];
        let mut antipode = vec![Vec::new(); d];
        let mut labels = vec![String::new(); d];
        for i in 0..d {
            for j in 0..d {
                mult[perm[i] * d + perm[j]] = mv(self.mul_basis(i, j));
            }
            comult[perm[i]] = self
                .comult_basis(i)
                .iter()
                .map(|(j, k, c)| (perm[*j as usize] as u32, perm[*k as usize] as u32, c.clone()))
                .collect();
            counit[perm[i]] = self.counit[i].clone();
            antipode[perm[i]] = mv(&self.antipode[i]);
            labels[perm[i]] = self.labels[i].clone();
        }
        HopfAlgebra::from_data(
            HopfData {
                dim: d,
                conductor: self.conductor,
                labels,
                mult,
                unit: mv(&self.unit),
                comult,
                counit,
                antipode,
            },
            Provenance::Other,
        )
    }
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor && self.labels == other.labels && self.same_structure(other)
    }
}
