//! Linear maps between Hopf algebras, checked to be bialgebra maps.

use std::fmt;
use std::sync::Arc;

use super::algebra::HopfAlgebra;
use super::linalg::{nullspace, Acc, Echelon, SparseVec};
use super::scalar::CycScalar;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct HopfMorphism {
    pub source: Arc<HopfAlgebra>,
    pub target: Arc<HopfAlgebra>,
    /// `columns[i]` is the image of source basis vector `i`.
    pub columns: Vec<SparseVec>,
}

impl fmt::Debug for HopfMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfMorphism")
            .field("source_dim", &self.source.dim())
            .field("target_dim", &self.target.dim())
            .finish()
    }
}

impl HopfMorphism {
    pub fn new(source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>, columns: Vec<SparseVec>) -> Result<Self> {
        if columns.len() != source.dim() {
            return Err(Error::InvalidArgument(format!(
                "morphism needs {} columns, found {}",
                source.dim(),
                columns.len()
            )));
        }
        if columns.iter().flatten().any(|(i, _)| *i as usize >= target.dim()) {
            return Err(Error::InvalidArgument("column entry outside target".into()));
        }
        Ok(HopfMorphism { source, target, columns })
    }

    pub fn identity(h: Arc<HopfAlgebra>) -> Self {
        let columns = (0..h.dim()).map(|i| h.basis_vec(i)).collect();
        HopfMorphism {
            source: Arc::clone(&h),
            target: h,
            columns,
        }
    }

    /// The counit `H → k`, with `k` the one-dimensional Hopf algebra.
    pub fn counit_map(h: Arc<HopfAlgebra>) -> Self {
        let k = Arc::new(super::construct::trivial_hopf(h.conductor()));
        let columns = (0..h.dim())
            .map(|i| {
                let c = h.counit_basis(i);
                if c.is_zero() {
                    Vec::new()
                } else {
                    vec![(0, c.clone())]
                }
            })
            .collect();
        HopfMorphism { source: h, target: k, columns }
    }

    /// The unit `k → H`.
    pub fn unit_map(h: Arc<HopfAlgebra>) -> Self {
        let k = Arc::new(super::construct::trivial_hopf(h.conductor()));
        let columns = vec![h.unit().clone()];
        HopfMorphism { source: k, target: h, columns }
    }

    pub fn apply(&self, v: &[(u32, CycScalar)]) -> SparseVec {
        let mut acc = Acc::new();
        for (i, c) in v {
            acc.add_scaled(&self.columns[*i as usize], c);
        }
        acc.finish()
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    pub fn image(&self) -> Echelon {
        Echelon::from_vectors(self.columns.iter())
    }

    pub fn kernel(&self) -> Echelon {
        nullspace(&self.columns, self.source.conductor())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    /// The transpose `target* → source*` on dual bases.
    pub fn transpose(&self, new_source: Arc<HopfAlgebra>, new_target: Arc<HopfAlgebra>) -> Result<Self> {
        let mut columns = vec![Vec::new(); self.target.dim()];
        for (i, col) in self.columns.iter().enumerate() {
            for (k, c) in col {
                columns[*k as usize].push((i as u32, c.clone()));
            }
        }
        HopfMorphism::new(new_source, new_target, columns)
    }

    /// Every failing bialgebra-map condition; empty means `f` is a Hopf map.
    pub fn verify(&self) -> Vec<String> {
        let (s, t) = (&self.source, &self.target);
        let d = s.dim();
        let mut out = Vec::new();
        if self.apply(s.unit()) != *t.unit() {
            out.push("unit not preserved".to_string());
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = self.apply(s.mul_basis(i, j));
                let rhs = t.mul(&self.columns[i], &self.columns[j]);
                if lhs != rhs {
                    out.push(format!("multiplication at ({i},{j})"));
                }
            }
        }
        for i in 0..d {
            let mut lhs = std::collections::BTreeMap::new();
            for ((a, b), c) in t.comult(&self.columns[i]) {
                lhs.insert((a, b), c);
            }
            let mut rhs: std::collections::BTreeMap<(u32, u32), CycScalar> = std::collections::BTreeMap::new();
            for (j, k, c) in s.comult_basis(i) {
                for (p, x) in &self.columns[*j as usize] {
                    for (q, y) in &self.columns[*k as usize] {
                        let v = &(c * x) * y;
                        match rhs.get_mut(&(*p, *q)) {
                            Some(e) => *e += &v,
                            None => {
                                rhs.insert((*p, *q), v);
                            }
                        }
                    }
                }
            }
            rhs.retain(|_, c| !c.is_zero());
            if lhs != rhs {
                out.push(format!("comultiplication at ({i})"));
            }
            if t.counit(&self.columns[i]) != *s.counit_basis(i) {
                out.push(format!("counit at ({i})"));
            }
        }
        out
    }
}
