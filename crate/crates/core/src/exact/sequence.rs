//! Exact sequences `k → H' → H → H'' → k` and their verification.

use std::fmt;
use std::sync::Arc;

use super::kernel::{augmentation_images, coinvariants, hopf_cokernel, left_ideal, Side};
use crate::error::{Error, Result};
use crate::group::{Bits, GroupRef, Perm};
use crate::hopf::linalg::Echelon;
use crate::hopf::{dual_group_algebra, dual_hopf, group_algebra, HopfAlgebra, HopfMorphism, Provenance};

/// Per-condition flags with witnesses for failures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SequenceStatus {
    pub maps_are_hopf: bool,
    pub injective: bool,
    pub surjective: bool,
    /// `ker π = H·i(H')⁺`
    pub kernel_condition: bool,
    /// `i(H')` equals the left coinvariants of `π`.
    pub coinvariant_condition: bool,
    pub dims_multiply: bool,
    pub witnesses: Vec<String>,
}

impl SequenceStatus {
    pub fn is_exact(&self) -> bool {
        self.maps_are_hopf
            && self.injective
            && self.surjective
            && self.kernel_condition
            && self.coinvariant_condition
            && self.dims_multiply
    }

    /// Text report: one PASS/FAIL line per condition, then witnesses.
    pub fn report(&self) -> String {
        let flag = |b: bool| if b { "PASS" } else { "FAIL" };
        let mut s = String::new();
        s.push_str(&format!("maps are Hopf morphisms: {}\n", flag(self.maps_are_hopf)));
        s.push_str(&format!("(a) i injective: {}\n", flag(self.injective)));
        s.push_str(&format!("(a) pi surjective: {}\n", flag(self.surjective)));
        s.push_str(&format!("(b) ker pi = H i(H')^+: {}\n", flag(self.kernel_condition)));
        s.push_str(&format!("(c) i(H') = left coinvariants of pi: {}\n", flag(self.coinvariant_condition)));
        s.push_str(&format!("dim H = dim H' dim H'': {}\n", flag(self.dims_multiply)));
        for w in &self.witnesses {
            s.push_str(&format!("witness: {w}\n"));
        }
        s.push_str(&format!("verdict: {}\n", if self.is_exact() { "EXACT" } else { "NOT EXACT" }));
        s
    }
}

#[derive(Clone)]
pub struct ExactSequenceH {
    pub h_prime: Arc<HopfAlgebra>,
    pub i: HopfMorphism,
    pub h: Arc<HopfAlgebra>,
    pub pi: HopfMorphism,
    pub h_doubleprime: Arc<HopfAlgebra>,
    pub status: SequenceStatus,
}

impl fmt::Debug for ExactSequenceH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExactSequenceH")
            .field("dims", &(self.h_prime.dim(), self.h.dim(), self.h_doubleprime.dim()))
            .field("status", &self.status)
            .finish()
    }
}

impl ExactSequenceH {
    /// Assembles a sequence from `i: H' → H` and `π: H → H''` and verifies it.
    pub fn new(i: HopfMorphism, pi: HopfMorphism) -> Result<Self> {
        if !Arc::ptr_eq(&i.target, &pi.source) && !i.target.same_structure(&pi.source) {
            return Err(Error::InvalidArgument("target of i differs from source of pi".into()));
        }
        let mut seq = ExactSequenceH {
            h_prime: Arc::clone(&i.source),
            h: Arc::clone(&i.target),
            h_doubleprime: Arc::clone(&pi.target),
            i,
            pi,
            status: SequenceStatus::default(),
        };
        seq.status = verify_exact_sequence(&seq);
        Ok(seq)
    }

    pub fn is_exact(&self) -> bool {
        self.status.is_exact()
    }
}

fn first_outside(space: &Echelon, of: &Echelon) -> Option<u32> {
    of.basis().into_iter().find(|v| !space.contains(v)).map(|v| v[0].0)
}

/// Checks each condition of exactness independently.
pub fn verify_exact_sequence(seq: &ExactSequenceH) -> SequenceStatus {
    let mut st = SequenceStatus::default();
    let vi = seq.i.verify();
    let vp = seq.pi.verify();
    st.maps_are_hopf = vi.is_empty() && vp.is_empty();
    st.witnesses.extend(vi.into_iter().map(|w| format!("i: {w}")));
    st.witnesses.extend(vp.into_iter().map(|w| format!("pi: {w}")));

    st.injective = seq.i.is_injective();
    if !st.injective {
        st.witnesses.push(format!("rank of i is {} < {}", seq.i.rank(), seq.h_prime.dim()));
    }
    st.surjective = seq.pi.is_surjective();
    if !st.surjective {
        st.witnesses.push(format!("rank of pi is {} < {}", seq.pi.rank(), seq.h_doubleprime.dim()));
    }

    let ker = seq.pi.kernel();
    let ideal = left_ideal(&seq.h, &augmentation_images(&seq.i));
    st.kernel_condition = ker.same_span(&ideal);
    if !st.kernel_condition {
        st.witnesses.push(format!(
            "dim ker pi = {}, dim H i(H')^+ = {}",
            ker.dim(),
            ideal.dim()
        ));
        if let Some(p) = first_outside(&ideal, &ker) {
            st.witnesses.push(format!("kernel vector with pivot {p} outside H i(H')^+"));
        } else if let Some(p) = first_outside(&ker, &ideal) {
            st.witnesses.push(format!("ideal vector with pivot {p} outside ker pi"));
        }
    }

    let co = coinvariants(&seq.pi, Side::Left);
    let image = seq.i.image();
    st.coinvariant_condition = co.same_span(&image);
    if !st.coinvariant_condition {
        st.witnesses.push(format!(
            "dim i(H') = {}, dim left coinvariants = {}",
            image.dim(),
            co.dim()
        ));
    }

    st.dims_multiply = seq.h.dim() == seq.h_prime.dim() * seq.h_doubleprime.dim();
    if !st.dims_multiply {
        st.witnesses.push(format!(
            "{} != {} * {}",
            seq.h.dim(),
            seq.h_prime.dim(),
            seq.h_doubleprime.dim()
        ));
    }
    st
}

/// The dual sequence `k → H''* → H* → H'* → k` with transposed maps.
pub fn dualize_sequence(seq: &ExactSequenceH) -> Result<ExactSequenceH> {
    let d2 = Arc::new(dual_hopf(&seq.h_doubleprime));
    let d = Arc::new(dual_hopf(&seq.h));
    let d1 = Arc::new(dual_hopf(&seq.h_prime));
    let i = seq.pi.transpose(Arc::clone(&d2), Arc::clone(&d))?;
    let pi = seq.i.transpose(d, d1)?;
    ExactSequenceH::new(i, pi)
}

/// `k → k^Γ → k^Γ # kG → kG → k` for an algebra with bicrossed provenance.
pub fn bicrossed_sequence(h: &Arc<HopfAlgebra>) -> Result<ExactSequenceH> {
    let Provenance::Bicrossed(mp) = h.provenance() else {
        return Err(Error::Unsupported("sequence needs a bicrossed product".into()));
    };
    let (g, gamma) = (mp.g(), mp.gamma());
    let ng = g.order();
    let eg = identity_index(g)?;
    let eg_gamma = identity_index(gamma)?;
    let dual = Arc::new(dual_group_algebra(gamma)?);
    let kg = Arc::new(group_algebra(g)?);
    let one = h.one_scalar();
    let i_cols = (0..gamma.order())
        .map(|s| vec![((s * ng + eg) as u32, one.clone())])
        .collect();
    let pi_cols = (0..h.dim())
        .map(|b| {
            let (s, x) = (b / ng, b % ng);
            if s == eg_gamma {
                vec![(x as u32, one.clone())]
            } else {
                Vec::new()
            }
        })
        .collect();
    let i = HopfMorphism::new(dual, Arc::clone(h), i_cols)?;
    let pi = HopfMorphism::new(Arc::clone(h), kg, pi_cols)?;
    ExactSequenceH::new(i, pi)
}

/// `k → kN → kG → k(G/N) → k`; `n` need not be normal, in which case the
/// projection does not exist and an error is returned.
pub fn group_quotient_sequence(g: &GroupRef, n: &Bits) -> Result<ExactSequenceH> {
    let kg = Arc::new(group_algebra(g)?);
    let sub = g.subgroup(n)?.into_ref();
    let kn = Arc::new(group_algebra(&sub)?);
    let (q, map) = g.quotient_group(n)?;
    let kq = Arc::new(group_algebra(&q.into_ref())?);
    let one = kg.one_scalar();
    let i_cols = sub
        .elements()
        .iter()
        .map(|p| g.index_of(p).map(|k| vec![(k as u32, one.clone())]))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Internal("subgroup element missing from ambient".into()))?;
    let pi_cols = map.iter().map(|&c| vec![(c, one.clone())]).collect();
    let i = HopfMorphism::new(kn, Arc::clone(&kg), i_cols)?;
    let pi = HopfMorphism::new(kg, kq, pi_cols)?;
    ExactSequenceH::new(i, pi)
}

/// `k → kK → kG → Hcoker → k` for any subgroup `K`; with `K` not normal
/// the kernel condition fails.
pub fn cokernel_sequence(g: &GroupRef, k: &Bits) -> Result<ExactSequenceH> {
    let kg = Arc::new(group_algebra(g)?);
    let sub = g.subgroup(k)?.into_ref();
    let kk = Arc::new(group_algebra(&sub)?);
    let one = kg.one_scalar();
    let i_cols = sub
        .elements()
        .iter()
        .map(|p| g.index_of(p).map(|x| vec![(x as u32, one.clone())]))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Internal("subgroup element missing from ambient".into()))?;
    let i = HopfMorphism::new(kk, kg, i_cols)?;
    let (_, pi) = hopf_cokernel(&i)?;
    ExactSequenceH::new(i, pi)
}

pub(crate) fn identity_index(g: &GroupRef) -> Result<usize> {
    g.index_of(&Perm::identity(g.degree()))
        .ok_or_else(|| Error::Internal("group without identity".into()))
}
