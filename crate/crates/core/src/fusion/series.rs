//! Categorical composition series under caller-chosen decomposition rules.

use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::One;

use super::certificate::{a6_simplicity_check, Verdict};
use super::expr::{CatExpr, CatNode, TRIVIAL_OMEGA};
use crate::error::{Error, Result};
use crate::group::{exact_factorizations, find_factorization, ExactFactorizationG, GroupRef, IsoLabel};

/// `vect_E = vect_Γ • vect_G` from a verified exact factorization `E = Γ·G`.
#[derive(Clone, Debug)]
pub struct CatFactorization {
    pub left: CatExpr,
    pub right: CatExpr,
}

pub fn cat_factorization_from_group(f: &ExactFactorizationG) -> Result<CatFactorization> {
    f.verify()?;
    let left = CatExpr::vec(f.left_group().into_ref())?;
    let right = CatExpr::vec(f.right_group().into_ref())?;
    let total = BigRational::from_integer(f.ambient.order().into());
    if &left.fpdim * &right.fpdim != total {
        return Err(Error::Internal("fpdim is not multiplicative over the factorization".into()));
    }
    Ok(CatFactorization { left, right })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatRule {
    /// `vect_E` split along an exact factorization `E = Γ·G`.
    R1 { left: IsoLabel, right: IsoLabel },
    /// `Rep G` with `N ⊴ G`: `Rep(G/N)` then `Rep N`.
    R2 { normal: IsoLabel },
    /// `Z(vect_G)`: `Rep G` then `vect_G`.
    R3,
    /// `vect_G` with `N ⊴ G`: `vect_N` then `vect_{G/N}`.
    R4 { normal: IsoLabel },
    /// `A ⊠ B`: `A` then `B`.
    Deligne,
}

impl fmt::Display for CatRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatRule::R1 { left, right } => write!(f, "R1 exact factorization {left}·{right}"),
            CatRule::R2 { normal } => write!(f, "R2 normal subgroup {normal}"),
            CatRule::R3 => write!(f, "R3 center"),
            CatRule::R4 { normal } => write!(f, "R4 normal subgroup {normal}"),
            CatRule::Deligne => write!(f, "Deligne product"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatStep {
    pub rule: CatRule,
    pub from: String,
    pub into: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TerminalStatus {
    CertifiedSimple(String),
    NoRuleApplies,
}

#[derive(Clone, Debug)]
pub struct CatCompSeries {
    pub root: String,
    pub root_fpdim: BigRational,
    pub factors: Vec<CatExpr>,
    pub rule_trace: Vec<CatStep>,
    pub terminal_status: Vec<TerminalStatus>,
}

impl CatCompSeries {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factor_names(&self) -> Vec<String> {
        self.factors.iter().map(|f| f.to_string()).collect()
    }

    pub fn sorted_factor_names(&self) -> Vec<String> {
        let mut v = self.factor_names();
        v.sort();
        v
    }

    pub fn fpdim_product(&self) -> BigRational {
        self.factors.iter().fold(BigRational::one(), |acc, f| acc * &f.fpdim)
    }

    pub fn all_certified(&self) -> bool {
        self.terminal_status
            .iter()
            .all(|s| matches!(s, TerminalStatus::CertifiedSimple(_)))
    }

    pub fn render(&self) -> String {
        let mut s = format!("root: {} (FPdim {})\n", self.root, self.root_fpdim);
        s.push_str(&format!("length: {}\n", self.len()));
        for step in &self.rule_trace {
            s.push_str(&format!("step: {} -> {} [{}]\n", step.from, step.into.join(", "), step.rule));
        }
        for (f, st) in self.factors.iter().zip(&self.terminal_status) {
            let status = match st {
                TerminalStatus::CertifiedSimple(why) => format!("certified simple ({why})"),
                TerminalStatus::NoRuleApplies => "no rule applies".into(),
            };
            s.push_str(&format!("factor: {f} (FPdim {}) {status}\n", f.fpdim));
        }
        s
    }
}

/// Ordered exact factorizations `(left, right)` to try on `vect_G` nodes.
/// When none applies the R4 normal split is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatStrategy {
    pub name: String,
    pub factorizations: Vec<(IsoLabel, IsoLabel)>,
}

impl CatStrategy {
    /// `S6 = A6·Z2`.
    pub fn a6() -> Self {
        CatStrategy {
            name: "a6".into(),
            factorizations: vec![(IsoLabel::Alternating(6), IsoLabel::Cyclic(2))],
        }
    }

    /// `S6 = S5·Z6 = S4·Z5·Z3·Z2 = …`.
    pub fn iterated() -> Self {
        CatStrategy {
            name: "iterated".into(),
            factorizations: vec![
                (IsoLabel::Symmetric(5), IsoLabel::Cyclic(6)),
                (IsoLabel::Symmetric(4), IsoLabel::Cyclic(5)),
                (IsoLabel::Symmetric(3), IsoLabel::Cyclic(4)),
                (IsoLabel::Cyclic(3), IsoLabel::Cyclic(2)),
            ],
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "a6" => Ok(Self::a6()),
            "iterated" => Ok(Self::iterated()),
            other => {
                // comma-separated pairs "L*R"
                let mut factorizations = Vec::new();
                for part in other.split(',') {
                    let (l, r) = part
                        .split_once('*')
                        .ok_or_else(|| Error::InvalidArgument(format!("unknown chain '{other}'")))?;
                    let parse = |s: &str| {
                        IsoLabel::parse(s.trim()).ok_or_else(|| Error::InvalidArgument(format!("unknown group label '{s}'")))
                    };
                    factorizations.push((parse(l)?, parse(r)?));
                }
                Ok(CatStrategy {
                    name: other.into(),
                    factorizations,
                })
            }
        }
    }
}

fn a6_is_simple() -> bool {
    static CERT: OnceLock<bool> = OnceLock::new();
    *CERT.get_or_init(|| matches!(a6_simplicity_check(), Ok(c) if c.verdict == Verdict::Simple))
}

/// Composition series of `c` following `strategy`.
pub fn comp_series_cat(c: &CatExpr, strategy: &CatStrategy) -> Result<CatCompSeries> {
    let mut out = CatCompSeries {
        root: c.to_string(),
        root_fpdim: c.fpdim.clone(),
        factors: Vec::new(),
        rule_trace: Vec::new(),
        terminal_status: Vec::new(),
    };
    decompose(c, strategy, &mut out)?;
    if out.fpdim_product() != c.fpdim {
        return Err(Error::Internal(format!(
            "factor dimensions multiply to {} instead of {}",
            out.fpdim_product(),
            c.fpdim
        )));
    }
    Ok(out)
}

fn push_step(out: &mut CatCompSeries, rule: CatRule, from: &CatExpr, into: &[&CatExpr]) {
    out.rule_trace.push(CatStep {
        rule,
        from: from.to_string(),
        into: into.iter().map(|e| e.to_string()).collect(),
    });
}

fn terminal(out: &mut CatCompSeries, c: &CatExpr, status: TerminalStatus) {
    out.factors.push(c.clone());
    out.terminal_status.push(status);
}

fn first_normal(g: &GroupRef) -> Result<Option<(GroupRef, GroupRef, IsoLabel)>> {
    let t = g.table()?;
    if t.order() == 1 || t.is_simple() {
        return Ok(None);
    }
    let n = t.maximal_normal_subgroups().swap_remove(0);
    let label = crate::group::identify(&t.restrict(&n).0);
    let sub = g.subgroup(&n)?.into_ref();
    let (q, _) = g.quotient_group(&n)?;
    Ok(Some((sub, q.into_ref(), label)))
}

fn decompose(c: &CatExpr, strategy: &CatStrategy, out: &mut CatCompSeries) -> Result<()> {
    match &c.node {
        CatNode::VecG { group, omega } => {
            let n = group.order();
            if n == 1 {
                return Ok(());
            }
            if omega != TRIVIAL_OMEGA {
                terminal(out, c, TerminalStatus::NoRuleApplies);
                return Ok(());
            }
            if crate::group::is_prime(n) {
                terminal(out, c, TerminalStatus::CertifiedSimple("prime order".into()));
                return Ok(());
            }
            if group.label == IsoLabel::Alternating(6) && a6_is_simple() {
                terminal(out, c, TerminalStatus::CertifiedSimple("vect_A6 certificate".into()));
                return Ok(());
            }
            for (l, r) in &strategy.factorizations {
                if l.order() * r.order() != n {
                    continue;
                }
                if let Some(f) = find_factorization(&group.group, l, r)? {
                    let fac = cat_factorization_from_group(&f)?;
                    push_step(out, CatRule::R1 { left: l.clone(), right: r.clone() }, c, &[&fac.left, &fac.right]);
                    decompose(&fac.left, strategy, out)?;
                    return decompose(&fac.right, strategy, out);
                }
            }
            if let Some((sub, q, label)) = first_normal(&group.group)? {
                let (a, b) = (CatExpr::vec(sub)?, CatExpr::vec(q)?);
                push_step(out, CatRule::R4 { normal: label }, c, &[&a, &b]);
                decompose(&a, strategy, out)?;
                return decompose(&b, strategy, out);
            }
            if let Some(f) = exact_factorizations(&group.group, true)?.into_iter().next() {
                let fac = cat_factorization_from_group(&f)?;
                let rule = CatRule::R1 {
                    left: f.left_label(),
                    right: f.right_label(),
                };
                push_step(out, rule, c, &[&fac.left, &fac.right]);
                decompose(&fac.left, strategy, out)?;
                return decompose(&fac.right, strategy, out);
            }
            terminal(out, c, TerminalStatus::NoRuleApplies);
            Ok(())
        }
        CatNode::RepG(g) => {
            if g.order() == 1 {
                return Ok(());
            }
            match first_normal(&g.group)? {
                None => {
                    terminal(out, c, TerminalStatus::CertifiedSimple("simple group".into()));
                    Ok(())
                }
                Some((sub, q, label)) => {
                    let (a, b) = (CatExpr::rep(q)?, CatExpr::rep(sub)?);
                    push_step(out, CatRule::R2 { normal: label }, c, &[&a, &b]);
                    decompose(&a, strategy, out)?;
                    decompose(&b, strategy, out)
                }
            }
        }
        CatNode::Center(inner) => match &inner.node {
            CatNode::VecG { group, omega } if omega == TRIVIAL_OMEGA => {
                let rep = CatExpr::rep(group.group.clone())?;
                push_step(out, CatRule::R3, c, &[&rep, inner]);
                decompose(&rep, strategy, out)?;
                decompose(inner, strategy, out)
            }
            _ => {
                terminal(out, c, TerminalStatus::NoRuleApplies);
                Ok(())
            }
        },
        CatNode::Deligne(a, b) => {
            push_step(out, CatRule::Deligne, c, &[a, b]);
            decompose(a, strategy, out)?;
            decompose(b, strategy, out)
        }
        CatNode::TY { .. } | CatNode::Cpq { .. } => {
            let cert = super::certificate::family_simplicity_check(c)?;
            let status = if cert.verdict == Verdict::Simple {
                TerminalStatus::CertifiedSimple("family certificate".into())
            } else {
                TerminalStatus::NoRuleApplies
            };
            terminal(out, c, status);
            Ok(())
        }
        CatNode::GT { .. } => {
            terminal(out, c, TerminalStatus::NoRuleApplies);
            Ok(())
        }
    }
}
