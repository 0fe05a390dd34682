//! Exhaustive (and sampled) verification of the Hopf algebra axioms.

use std::collections::BTreeMap;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::algebra::{HopfAlgebra, SparseTensor};
use super::linalg::{Acc, SparseVec};
use super::scalar::CycScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultMultiplicative,
    CounitMultiplicative,
    AntipodeLeft,
    AntipodeRight,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::ComultMultiplicative => "comultiplication multiplicativity",
            Axiom::CounitMultiplicative => "counit multiplicativity",
            Axiom::AntipodeLeft => "left antipode",
            Axiom::AntipodeRight => "right antipode",
        }
    }

    pub fn is_antipode(self) -> bool {
        matches!(self, Axiom::AntipodeLeft | Axiom::AntipodeRight)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    /// Basis indices of the failing instance; empty for the unit-element
    /// conditions `Δ(1) = 1 ⊗ 1` and `ε(1) = 1`.
    pub at: Vec<usize>,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.at.is_empty() {
            return write!(f, "{} at unit", self.axiom.name());
        }
        let idx: Vec<String> = self.at.iter().map(|i| i.to_string()).collect();
        write!(f, "{} at ({})", self.axiom.name(), idx.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HopfReport {
    pub violations: Vec<AxiomViolation>,
    /// Number of individual instances checked.
    pub checked: usize,
}

impl HopfReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

fn tensor_of_products(h: &HopfAlgebra, a: &SparseTensor, b: &SparseTensor) -> SparseTensor {
    let mut acc: BTreeMap<(u32, u32), CycScalar> = BTreeMap::new();
    for ((a1, a2), x) in a {
        for ((b1, b2), y) in b {
            let f = x * y;
            let left = h.mul_basis(*a1 as usize, *b1 as usize);
            let right = h.mul_basis(*a2 as usize, *b2 as usize);
            for (p, u) in left {
                for (q, v) in right {
                    let c = &(&f * u) * v;
                    match acc.get_mut(&(*p, *q)) {
                        Some(e) => *e += &c,
                        None => {
                            acc.insert((*p, *q), c);
                        }
                    }
                }
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn basis_tensor(h: &HopfAlgebra, i: usize) -> SparseTensor {
    h.comult_basis(i).iter().map(|(j, k, c)| ((*j, *k), c.clone())).collect()
}

fn check_associativity(h: &HopfAlgebra, i: usize, j: usize, k: usize) -> bool {
    let mut left = Acc::new();
    for (m, c) in h.mul_basis(i, j) {
        left.add_scaled(h.mul_basis(*m as usize, k), c);
    }
    let mut right = Acc::new();
    for (m, c) in h.mul_basis(j, k) {
        right.add_scaled(h.mul_basis(i, *m as usize), c);
    }
    left.finish() == right.finish()
}

fn check_unit(h: &HopfAlgebra, i: usize) -> bool {
    let b = h.basis_vec(i);
    h.mul(h.unit(), &b) == b && h.mul(&b, h.unit()) == b
}

fn check_coassociativity(h: &HopfAlgebra, i: usize) -> bool {
    let mut left: BTreeMap<(u32, u32, u32), CycScalar> = BTreeMap::new();
    let mut right: BTreeMap<(u32, u32, u32), CycScalar> = BTreeMap::new();
    let add = |map: &mut BTreeMap<(u32, u32, u32), CycScalar>, key, c: CycScalar| match map.get_mut(&key) {
        Some(e) => *e += &c,
        None => {
            map.insert(key, c);
        }
    };
    for (j, k, c) in h.comult_basis(i) {
        for (p, q, d) in h.comult_basis(*j as usize) {
            add(&mut left, (*p, *q, *k), c * d);
        }
        for (p, q, d) in h.comult_basis(*k as usize) {
            add(&mut right, (*j, *p, *q), c * d);
        }
    }
    left.retain(|_, c| !c.is_zero());
    right.retain(|_, c| !c.is_zero());
    left == right
}

fn check_counit(h: &HopfAlgebra, i: usize) -> bool {
    let mut left = Acc::new();
    let mut right = Acc::new();
    for (j, k, c) in h.comult_basis(i) {
        left.add(*k, &(c * h.counit_basis(*j as usize)));
        right.add(*j, &(c * h.counit_basis(*k as usize)));
    }
    let b = h.basis_vec(i);
    left.finish() == b && right.finish() == b
}

fn check_comult_mult(h: &HopfAlgebra, i: usize, j: usize) -> bool {
    let lhs = h.comult(h.mul_basis(i, j));
    let rhs = tensor_of_products(h, &basis_tensor(h, i), &basis_tensor(h, j));
    lhs == rhs
}

fn check_counit_mult(h: &HopfAlgebra, i: usize, j: usize) -> bool {
    h.counit(h.mul_basis(i, j)) == h.counit_basis(i) * h.counit_basis(j)
}

fn antipode_side(h: &HopfAlgebra, i: usize, left: bool) -> bool {
    let mut acc = Acc::new();
    for (j, k, c) in h.comult_basis(i) {
        let prod: SparseVec = if left {
            h.mul(h.antipode_basis(*j as usize), &h.basis_vec(*k as usize))
        } else {
            h.mul(&h.basis_vec(*j as usize), h.antipode_basis(*k as usize))
        };
        acc.add_scaled(&prod, c);
    }
    let mut expected = Acc::new();
    expected.add_scaled(h.unit(), h.counit_basis(i));
    acc.finish() == expected.finish()
}

fn unit_conditions(h: &HopfAlgebra, out: &mut Vec<AxiomViolation>) {
    let unit_tensor: SparseTensor = {
        let u = h.unit();
        let mut acc: BTreeMap<(u32, u32), CycScalar> = BTreeMap::new();
        for (a, x) in u {
            for (b, y) in u {
                acc.insert((*a, *b), x * y);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    };
    if h.comult(h.unit()) != unit_tensor {
        out.push(AxiomViolation {
            axiom: Axiom::ComultMultiplicative,
            at: vec![],
        });
    }
    if !h.counit(h.unit()).is_one() {
        out.push(AxiomViolation {
            axiom: Axiom::CounitMultiplicative,
            at: vec![],
        });
    }
}

fn per_element(h: &HopfAlgebra, i: usize) -> Vec<AxiomViolation> {
    let mut out = Vec::new();
    let v = |axiom, at: Vec<usize>| AxiomViolation { axiom, at };
    if !check_unit(h, i) {
        out.push(v(Axiom::Unit, vec![i]));
    }
    if !check_coassociativity(h, i) {
        out.push(v(Axiom::Coassociativity, vec![i]));
    }
    if !check_counit(h, i) {
        out.push(v(Axiom::Counit, vec![i]));
    }
    if !antipode_side(h, i, true) {
        out.push(v(Axiom::AntipodeLeft, vec![i]));
    }
    if !antipode_side(h, i, false) {
        out.push(v(Axiom::AntipodeRight, vec![i]));
    }
    out
}

fn per_pair(h: &HopfAlgebra, i: usize, j: usize) -> Vec<AxiomViolation> {
    let mut out = Vec::new();
    if !check_comult_mult(h, i, j) {
        out.push(AxiomViolation {
            axiom: Axiom::ComultMultiplicative,
            at: vec![i, j],
        });
    }
    if !check_counit_mult(h, i, j) {
        out.push(AxiomViolation {
            axiom: Axiom::CounitMultiplicative,
            at: vec![i, j],
        });
    }
    out
}

/// Checks every axiom on every basis tuple. Exact; zero tolerance.
pub fn verify_hopf_axioms(h: &HopfAlgebra) -> HopfReport {
    let d = h.dim();
    let mut violations: Vec<AxiomViolation> = (0..d)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut out = Vec::new();
            for j in 0..d {
                for k in 0..d {
                    if !check_associativity(h, i, j, k) {
                        out.push(AxiomViolation {
                            axiom: Axiom::Associativity,
                            at: vec![i, j, k],
                        });
                    }
                }
                out.extend(per_pair(h, i, j));
            }
            out.extend(per_element(h, i));
            out
        })
        .collect();
    unit_conditions(h, &mut violations);
    violations.sort();
    HopfReport {
        violations,
        checked: d * d * d + 2 * d * d + 5 * d + 2,
    }
}

/// Checks per-element axioms exhaustively and pair/triple axioms on
/// `samples` pseudo-random tuples drawn from a fixed seed.
pub fn verify_hopf_axioms_sampled(h: &HopfAlgebra, samples: usize, seed: u64) -> HopfReport {
    let d = h.dim();
    let mut rng = StdRng::seed_from_u64(seed);
    let tuples: Vec<(usize, usize, usize)> = (0..samples)
        .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
        .collect();
    let mut violations: Vec<AxiomViolation> = tuples
        .par_iter()
        .flat_map_iter(|&(i, j, k)| {
            let mut out = Vec::new();
            if !check_associativity(h, i, j, k) {
                out.push(AxiomViolation {
                    axiom: Axiom::Associativity,
                    at: vec![i, j, k],
                });
            }
            out.extend(per_pair(h, i, j));
            out
        })
        .collect();
    violations.extend((0..d).into_par_iter().flat_map_iter(|i| per_element(h, i)).collect::<Vec<_>>());
    unit_conditions(h, &mut violations);
    violations.sort();
    violations.dedup();
    HopfReport {
        violations,
        checked: 3 * samples + 5 * d + 2,
    }
}
