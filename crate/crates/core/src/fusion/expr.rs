//! Symbolic fusion-category expressions with exact dimension facts.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{identify, Bits, GroupRef, IsoLabel};

/// A group with its recognised isomorphism type.
#[derive(Clone, Debug)]
pub struct CatGroup {
    pub group: GroupRef,
    pub label: IsoLabel,
}

impl CatGroup {
    pub fn new(group: GroupRef) -> Result<Self> {
        let label = identify(group.table()?);
        Ok(CatGroup { group, label })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// Label for the trivial 3-cocycle.
pub const TRIVIAL_OMEGA: &str = "1";

#[derive(Clone, Debug)]
pub enum CatNode {
    RepG(CatGroup),
    VecG {
        group: CatGroup,
        omega: String,
    },
    /// Group-theoretical `C(G, ω, T, ψ)`.
    GT {
        group: CatGroup,
        omega: String,
        t: Bits,
        psi: String,
    },
    /// Tambara–Yamagami category on `Z_p`.
    TY {
        p: u64,
        chi: String,
        tau: String,
    },
    /// The non-group-theoretical `C(p, q, {ζ1, ζ2}, ξ)`.
    Cpq {
        p: u64,
        q: u64,
        zetas: (String, String),
        xi: String,
    },
    Deligne(Box<CatExpr>, Box<CatExpr>),
    Center(Box<CatExpr>),
}

/// Simple-object data as `(squared dimension, multiplicity)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeData(pub Vec<(BigRational, u64)>);

impl TypeData {
    /// From `(dimension, multiplicity)` pairs with integral dimensions,
    /// written `(1, 12; 4, 3)` in the usual notation.
    pub fn from_dims(pairs: &[(u64, u64)]) -> Self {
        TypeData(
            pairs
                .iter()
                .map(|&(d, m)| (BigRational::from_integer(BigInt::from(d * d)), m))
                .collect(),
        )
    }

    pub fn from_squared(pairs: &[(u64, u64)]) -> Self {
        TypeData(
            pairs
                .iter()
                .map(|&(d2, m)| (BigRational::from_integer(BigInt::from(d2)), m))
                .collect(),
        )
    }

    pub fn total(&self) -> BigRational {
        self.0
            .iter()
            .fold(BigRational::zero(), |acc, (d2, m)| acc + d2 * BigRational::from_integer(BigInt::from(*m)))
    }

    fn product(&self, other: &TypeData) -> TypeData {
        let mut out = Vec::new();
        for (a, m) in &self.0 {
            for (b, n) in &other.0 {
                out.push((a * b, m * n));
            }
        }
        TypeData(out)
    }
}

/// `Σ multiplicity · dimension² = total`.
pub fn validate_type(data: &TypeData, total: &BigRational) -> bool {
    data.total() == *total
}

/// An expression with its derived facts.
#[derive(Clone, Debug)]
pub struct CatExpr {
    pub node: CatNode,
    pub fpdim: BigRational,
    pub integral: bool,
    /// `None` when not determined by the node data.
    pub pointed: Option<bool>,
    pub type_data: Option<TypeData>,
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn is_prime(n: u64) -> bool {
    crate::group::is_prime(n as usize)
}

impl CatExpr {
    fn build(node: CatNode) -> CatExpr {
        let (fpdim, integral, pointed, type_data) = match &node {
            CatNode::RepG(g) => {
                let n = g.order() as u64;
                let ab = g.group.is_abelian();
                (int(n), true, Some(ab), ab.then(|| TypeData::from_dims(&[(1, n)])))
            }
            CatNode::VecG { group, .. } => {
                let n = group.order() as u64;
                (int(n), true, Some(true), Some(TypeData::from_dims(&[(1, n)])))
            }
            CatNode::GT { group, .. } => (int(group.order() as u64), true, None, None),
            CatNode::TY { p, .. } => (
                int(2 * p),
                false,
                Some(false),
                Some(TypeData::from_squared(&[(1, *p), (*p, 1)])),
            ),
            CatNode::Cpq { p, q, .. } => (int(p * q * q), true, Some(false), None),
            CatNode::Deligne(a, b) => (
                &a.fpdim * &b.fpdim,
                a.integral && b.integral,
                match (a.pointed, b.pointed) {
                    (Some(x), Some(y)) => Some(x && y),
                    (Some(false), _) | (_, Some(false)) => Some(false),
                    _ => None,
                },
                match (&a.type_data, &b.type_data) {
                    (Some(x), Some(y)) => Some(x.product(y)),
                    _ => None,
                },
            ),
            CatNode::Center(a) => (&a.fpdim * &a.fpdim, a.integral, None, None),
        };
        CatExpr {
            node,
            fpdim,
            integral,
            pointed,
            type_data,
        }
    }

    pub fn rep(group: GroupRef) -> Result<CatExpr> {
        Ok(Self::build(CatNode::RepG(CatGroup::new(group)?)))
    }

    pub fn vec(group: GroupRef) -> Result<CatExpr> {
        Self::vec_twisted(group, TRIVIAL_OMEGA)
    }

    pub fn vec_twisted(group: GroupRef, omega: &str) -> Result<CatExpr> {
        Ok(Self::build(CatNode::VecG {
            group: CatGroup::new(group)?,
            omega: omega.to_string(),
        }))
    }

    pub fn group_theoretical(group: GroupRef, omega: &str, t: Bits, psi: &str) -> Result<CatExpr> {
        if !group.table()?.is_subgroup(&t) {
            return Err(Error::NotSubgroup("T is not a subgroup of G".into()));
        }
        Ok(Self::build(CatNode::GT {
            group: CatGroup::new(group)?,
            omega: omega.to_string(),
            t,
            psi: psi.to_string(),
        }))
    }

    pub fn tambara_yamagami(p: u64) -> Result<CatExpr> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("TY(Z_p) needs p prime, got {p}")));
        }
        Ok(Self::build(CatNode::TY {
            p,
            chi: "χ".into(),
            tau: "τ".into(),
        }))
    }

    /// Requires `p < q` primes with `p` odd and dividing `q + 1`.
    pub fn cpq(p: u64, q: u64) -> Result<CatExpr> {
        if !(is_prime(p) && is_prime(q) && p % 2 == 1 && p < q && (q + 1).is_multiple_of(p)) {
            return Err(Error::InvalidArgument(format!(
                "C(p, q) needs primes p < q with p odd and p | q + 1, got ({p}, {q})"
            )));
        }
        Ok(Self::build(CatNode::Cpq {
            p,
            q,
            zetas: ("ζ1".into(), "ζ2".into()),
            xi: "ξ".into(),
        }))
    }

    pub fn deligne(a: CatExpr, b: CatExpr) -> CatExpr {
        Self::build(CatNode::Deligne(Box::new(a), Box::new(b)))
    }

    pub fn center(a: CatExpr) -> CatExpr {
        Self::build(CatNode::Center(Box::new(a)))
    }

    /// `fpdim` as an integer when integral.
    pub fn fpdim_u64(&self) -> Option<u64> {
        if self.fpdim.is_integer() {
            u64::try_from(self.fpdim.to_integer()).ok()
        } else {
            None
        }
    }

    pub fn has_trivial_associator(&self) -> bool {
        match &self.node {
            CatNode::VecG { omega, .. } | CatNode::GT { omega, .. } => omega == TRIVIAL_OMEGA,
            _ => true,
        }
    }
}

/// Frobenius–Perron dimension.
pub fn fpdim(c: &CatExpr) -> BigRational {
    c.fpdim.clone()
}

impl fmt::Display for CatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            CatNode::RepG(g) => write!(f, "Rep {}", g.label),
            CatNode::VecG { group, omega } if omega == TRIVIAL_OMEGA => write!(f, "vect_{}", group.label),
            CatNode::VecG { group, omega } => write!(f, "vect_{}^{omega}", group.label),
            CatNode::GT { group, omega, t, psi } => {
                write!(f, "C({}, {omega}, T(order {}), {psi})", group.label, t.count_ones(..))
            }
            CatNode::TY { p, chi, tau } => write!(f, "TY(Z{p}, {chi}, {tau})"),
            CatNode::Cpq { p, q, zetas, xi } => write!(f, "C({p}, {q}, {{{}, {}}}, {xi})", zetas.0, zetas.1),
            CatNode::Deligne(a, b) => write!(f, "({a} ⊠ {b})"),
            CatNode::Center(a) => write!(f, "Z({a})"),
        }
    }
}

impl PartialEq for CatExpr {
    /// Structural equality up to isomorphism type of the groups involved.
    fn eq(&self, other: &Self) -> bool {
        self.to_string() == other.to_string() && self.fpdim == other.fpdim
    }
}

