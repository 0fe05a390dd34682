//! Normality of Hopf subalgebras under the adjoint actions.

use super::subalgebra::HopfSubalgebra;
use crate::hopf::linalg::{Acc, SparseVec};
use crate::hopf::HopfAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjointSide {
    /// `h . a = h₁ a S(h₂)`
    Left,
    /// `a . h = S(h₁) a h₂`
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityWitness {
    pub side: AdjointSide,
    /// Index of the ambient basis vector `h`.
    pub h: usize,
    /// Index of the subalgebra basis vector `a` (echelon order).
    pub a: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityResult {
    pub normal: bool,
    pub witness: Option<NormalityWitness>,
}

pub fn left_adjoint(h: &HopfAlgebra, i: usize, a: &SparseVec) -> SparseVec {
    let mut acc = Acc::new();
    for (j, k, c) in h.comult_basis(i) {
        let ha = h.mul(&h.basis_vec(*j as usize), a);
        acc.add_scaled(&h.mul(&ha, h.antipode_basis(*k as usize)), c);
    }
    acc.finish()
}

pub fn right_adjoint(h: &HopfAlgebra, i: usize, a: &SparseVec) -> SparseVec {
    let mut acc = Acc::new();
    for (j, k, c) in h.comult_basis(i) {
        let sa = h.mul(h.antipode_basis(*j as usize), a);
        acc.add_scaled(&h.mul(&sa, &h.basis_vec(*k as usize)), c);
    }
    acc.finish()
}

/// Checks stability of `K` under both adjoint actions over all basis pairs.
pub fn is_normal_subalgebra(k: &HopfSubalgebra) -> NormalityResult {
    let h = &k.ambient;
    let basis = k.basis();
    for side in [AdjointSide::Left, AdjointSide::Right] {
        for i in 0..h.dim() {
            for (p, a) in basis.iter().enumerate() {
                let v = match side {
                    AdjointSide::Left => left_adjoint(h, i, a),
                    AdjointSide::Right => right_adjoint(h, i, a),
                };
                if !k.space.contains(&v) {
                    return NormalityResult {
                        normal: false,
                        witness: Some(NormalityWitness { side, h: i, a: p }),
                    };
                }
            }
        }
    }
    NormalityResult {
        normal: true,
        witness: None,
    }
}
