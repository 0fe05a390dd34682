//! Group algebras, dual group algebras, bicrossed products and doubles.

use std::sync::Arc;

use super::algebra::{HopfAlgebra, HopfData, Provenance};
use super::antipode::solve_antipode;
use super::scalar::CycScalar;
use super::verify::verify_hopf_axioms;
use crate::error::{Error, Result};
use crate::group::{GroupRef, PermGroup};
use crate::matched_pair::MatchedPair;

fn check_dim(dim: usize) -> Result<()> {
    let cap = crate::caps::dimension_cap();
    if dim > cap {
        return Err(Error::CapExceeded {
            what: "Hopf algebra dimension",
            size: dim,
            cap,
        });
    }
    Ok(())
}

/// `kG` on the basis of group elements.
pub fn group_algebra(g: &GroupRef) -> Result<HopfAlgebra> {
    let n = g.order();
    check_dim(n)?;
    let t = g.table()?;
    let one = CycScalar::one(1);
    let mut mult = Vec::with_capacity(n * n);
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            mult.push(vec![(t.mul(a, b), one.clone())]);
        }
    }
    let data = HopfData {
        dim: n,
        conductor: 1,
        labels: g.elements().iter().map(|p| p.to_string()).collect(),
        mult,
        unit: vec![(t.identity(), one.clone())],
        comult: (0..n as u32).map(|a| vec![(a, a, one.clone())]).collect(),
        counit: vec![one.clone(); n],
        antipode: (0..n as u32).map(|a| vec![(t.inv(a), one.clone())]).collect(),
    };
    Ok(HopfAlgebra::from_data(data, Provenance::GroupAlgebra(Arc::clone(g))))
}

/// `k^G` on the basis of point-mass idempotents `e_g`.
pub fn dual_group_algebra(g: &GroupRef) -> Result<HopfAlgebra> {
    let n = g.order();
    check_dim(n)?;
    let t = g.table()?;
    let one = CycScalar::one(1);
    let mut mult = vec![Vec::new(); n * n];
    for a in 0..n {
        mult[a * n + a] = vec![(a as u32, one.clone())];
    }
    let mut comult = vec![Vec::new(); n];
    for s in 0..n as u32 {
        for u in 0..n as u32 {
            comult[t.mul(s, u) as usize].push((s, u, one.clone()));
        }
    }
    let data = HopfData {
        dim: n,
        conductor: 1,
        labels: g.elements().iter().map(|p| format!("e_{p}")).collect(),
        mult,
        unit: (0..n as u32).map(|a| (a, one.clone())).collect(),
        comult,
        counit: (0..n as u32)
            .map(|a| if a == t.identity() { one.clone() } else { CycScalar::zero(1) })
            .collect(),
        antipode: (0..n as u32).map(|a| vec![(t.inv(a), one.clone())]).collect(),
    };
    Ok(HopfAlgebra::from_data(data, Provenance::DualGroupAlgebra(Arc::clone(g))))
}

/// A 2-cochain on a group with values in `μ_N`, stored as exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    pub carrier: GroupRef,
    pub conductor: u32,
    /// `values[a * |T| + b]` is the exponent of `ψ(a, b)`.
    pub values: Vec<u32>,
}

impl TwoCocycle {
    pub fn trivial(carrier: GroupRef, conductor: u32) -> Self {
        let n = carrier.order();
        TwoCocycle {
            carrier,
            conductor,
            values: vec![0; n * n],
        }
    }

    pub fn new(carrier: GroupRef, conductor: u32, values: Vec<u32>) -> Result<Self> {
        let n = carrier.order();
        if values.len() != n * n {
            return Err(Error::InvalidArgument(format!("cocycle needs {} values", n * n)));
        }
        if conductor == 0 {
            return Err(Error::InvalidArgument("conductor must be positive".into()));
        }
        let values = values.into_iter().map(|v| v % conductor).collect();
        Ok(TwoCocycle {
            carrier,
            conductor,
            values,
        })
    }

    pub fn value(&self, a: usize, b: usize) -> u32 {
        self.values[a * self.carrier.order() + b]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_normalized(&self) -> Result<bool> {
        let e = self.carrier.table()?.identity() as usize;
        let n = self.carrier.order();
        Ok((0..n).all(|a| self.value(e, a) == 0 && self.value(a, e) == 0))
    }

    /// Every `(a, b, c)` where `ψ(a,b)ψ(ab,c) = ψ(b,c)ψ(a,bc)` fails.
    pub fn cocycle_violations(&self) -> Result<Vec<(usize, usize, usize)>> {
        let t = self.carrier.table()?;
        let n = self.carrier.order();
        let m = self.conductor;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let ab = t.mul(a as u32, b as u32) as usize;
                for c in 0..n {
                    let bc = t.mul(b as u32, c as u32) as usize;
                    let lhs = (self.value(a, b) + self.value(ab, c)) % m;
                    let rhs = (self.value(b, c) + self.value(a, bc)) % m;
                    if lhs != rhs {
                        out.push((a, b, c));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Cocycle data `σ: G × G → (μ_N)^Γ` and `τ: Γ × Γ → (μ_N)^G` for a
/// bicrossed product, stored as exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedCocycles {
    pub conductor: u32,
    /// `sigma[(x * |G| + y) * |Γ| + s]`, the exponent of `σ_s(x, y)`.
    pub sigma: Vec<u32>,
    /// `tau[(s * |Γ| + t) * |G| + x]`, the exponent of `τ_x(s, t)`.
    pub tau: Vec<u32>,
}

impl PairedCocycles {
    pub fn trivial(mp: &MatchedPair) -> Self {
        let (ng, ns) = (mp.g().order(), mp.gamma().order());
        PairedCocycles {
            conductor: 1,
            sigma: vec![0; ng * ng * ns],
            tau: vec![0; ns * ns * ng],
        }
    }

    fn check_shape(&self, mp: &MatchedPair) -> Result<()> {
        let (ng, ns) = (mp.g().order(), mp.gamma().order());
        if self.sigma.len() != ng * ng * ns || self.tau.len() != ns * ns * ng {
            return Err(Error::InvalidArgument("cocycle tables have the wrong size".into()));
        }
        let eg = mp.g().table()?.identity() as usize;
        let es = mp.gamma().table()?.identity() as usize;
        for s in 0..ns {
            for x in 0..ng {
                let normal_sigma = self.sigma[(eg * ng + x) * ns + s].is_multiple_of(self.conductor)
                    && self.sigma[(x * ng + eg) * ns + s].is_multiple_of(self.conductor);
                let normal_tau = self.tau[(es * ns + s) * ng + x].is_multiple_of(self.conductor)
                    && self.tau[(s * ns + es) * ng + x].is_multiple_of(self.conductor);
                if !normal_sigma || !normal_tau {
                    return Err(Error::InvalidArgument("cocycles are not normalized".into()));
                }
            }
        }
        Ok(())
    }
}

/// Structure constants of `k^Γ #^τ_σ kG` without checking any axiom and
/// without an antipode.
pub fn bicrossed_bialgebra(mp: &MatchedPair, cocycles: &PairedCocycles, conductor: u32) -> Result<HopfAlgebra> {
    cocycles.check_shape(mp)?;
    if !conductor.is_multiple_of(cocycles.conductor) {
        return Err(Error::InvalidArgument(format!(
            "conductor {conductor} is not a multiple of the cocycle conductor {}",
            cocycles.conductor
        )));
    }
    let (ng, ns) = (mp.g().order(), mp.gamma().order());
    let dim = ng * ns;
    check_dim(dim)?;
    let tg = mp.g().table()?;
    let ts = mp.gamma().table()?;
    let root = |e: u32| CycScalar::zeta_power(cocycles.conductor, e as i64).lift(conductor);
    let idx = |s: usize, x: usize| (s * ng + x) as u32;

    let mut mult = vec![Vec::new(); dim * dim];
    for g in 0..ns {
        for x in 0..ng {
            let h = mp.right(g, x);
            for y in 0..ng {
                let xy = tg.mul(x as u32, y as u32) as usize;
                let c = root(cocycles.sigma[(x * ng + y) * ns + g]);
                mult[idx(g, x) as usize * dim + idx(h, y) as usize] = vec![(idx(g, xy), c)];
            }
        }
    }
    let mut comult = vec![Vec::new(); dim];
    for s in 0..ns {
        for t in 0..ns {
            let g = ts.mul(s as u32, t as u32) as usize;
            for x in 0..ng {
                let c = root(cocycles.tau[(s * ns + t) * ng + x]);
                comult[idx(g, x) as usize].push((idx(s, mp.left(t, x)), idx(t, x), c));
            }
        }
    }
    let one = CycScalar::one(conductor);
    let eg = tg.identity() as usize;
    let es = ts.identity() as usize;
    let labels = (0..ns)
        .flat_map(|s| (0..ng).map(move |x| (s, x)))
        .map(|(s, x)| format!("e_{}#{}", mp.gamma().element(s), mp.g().element(x)))
        .collect();
    let data = HopfData {
        dim,
        conductor,
        labels,
        mult,
        unit: (0..ns).map(|g| (idx(g, eg), one.clone())).collect(),
        comult,
        counit: (0..dim)
            .map(|i| if i / ng == es { one.clone() } else { CycScalar::zero(conductor) })
            .collect(),
        antipode: vec![Vec::new(); dim],
    };
    Ok(HopfAlgebra::from_data(data, Provenance::Bicrossed(Arc::new(mp.clone()))))
}

/// `k^Γ #^τ_σ kG`. Accepted only when every Hopf axiom holds.
pub fn bicrossed_product(mp: &MatchedPair, cocycles: &PairedCocycles, conductor: u32) -> Result<HopfAlgebra> {
    let violations = mp.verify_compatibility()?;
    if let Some(v) = violations.first() {
        return Err(Error::Verification(format!("matched pair: {v}")));
    }
    let bi = bicrossed_bialgebra(mp, cocycles, conductor)?;
    let partial = verify_hopf_axioms(&bi);
    if let Some(v) = partial.violations.iter().find(|v| !v.axiom.is_antipode()) {
        return Err(Error::Verification(v.to_string()));
    }
    let s = solve_antipode(&bi)?
        .ok_or_else(|| Error::Verification("antipode equation has no solution".into()))?;
    let h = bi.with_antipode(s);
    let report = verify_hopf_axioms(&h);
    match report.violations.first() {
        Some(v) => Err(Error::Verification(v.to_string())),
        None => Ok(h),
    }
}

/// `D(G)`: the bicrossed product of the pair `(G, G)` with `◁` conjugation
/// and `▷` trivial, trivial cocycles.
pub fn drinfeld_double(g: &GroupRef) -> Result<HopfAlgebra> {
    check_dim(g.order() * g.order())?;
    let mp = MatchedPair::drinfeld(Arc::clone(g))?;
    let cocycles = PairedCocycles::trivial(&mp);
    bicrossed_product(&mp, &cocycles, 1)
}

/// The split bicrossed product for an exact factorization `E = GΓ`.
pub fn split_extension(e: &PermGroup, g: &PermGroup, gamma: &PermGroup) -> Result<HopfAlgebra> {
    let mp = MatchedPair::from_factorization(e, g, gamma)?;
    let cocycles = PairedCocycles::trivial(&mp);
    bicrossed_product(&mp, &cocycles, 1)
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial_hopf(conductor: u32) -> HopfAlgebra {
    let one = CycScalar::one(conductor);
    HopfAlgebra::from_data(
        HopfData {
            dim: 1,
            conductor,
            labels: vec!["1".into()],
            mult: vec![vec![(0, one.clone())]],
            unit: vec![(0, one.clone())],
            comult: vec![vec![(0, 0, one.clone())]],
            counit: vec![one.clone()],
            antipode: vec![vec![(0, one)]],
        },
        Provenance::Other,
    )
}
