//! Composition series of Hopf algebras over a catalog of normal Hopf
//! subalgebras, and the Jordan–Hölder comparison.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::identify::{group_structure, GroupKind};
use super::kernel::hopf_cokernel;
use super::normality::is_normal_subalgebra;
use super::sequence::{dualize_sequence, group_quotient_sequence};
use super::subalgebra::HopfSubalgebra;
use crate::error::{Error, Result};
use crate::group::{identify, Bits, GroupTable, IsoLabel, PermGroup};
use crate::hopf::linalg::SparseVec;
use crate::hopf::{HopfAlgebra, Provenance};

/// A composition factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorDescriptor {
    /// `kQ` for a simple group `Q`.
    Group(IsoLabel),
    /// `k^Q` for a simple group `Q`.
    DualGroup(IsoLabel),
    /// A factor that matches neither shape; kept with its dimension.
    Raw { dim: usize, description: String },
}

impl FactorDescriptor {
    pub fn dim(&self) -> usize {
        match self {
            FactorDescriptor::Group(l) | FactorDescriptor::DualGroup(l) => l.order(),
            FactorDescriptor::Raw { dim, .. } => *dim,
        }
    }

    pub fn is_certified_simple(&self) -> bool {
        match self {
            FactorDescriptor::Group(l) | FactorDescriptor::DualGroup(l) => l.is_simple(),
            FactorDescriptor::Raw { .. } => false,
        }
    }
}

impl fmt::Display for FactorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorDescriptor::Group(l) => write!(f, "k{l}"),
            FactorDescriptor::DualGroup(l) => write!(f, "k^{l}"),
            FactorDescriptor::Raw { dim, description } => write!(f, "raw[dim {dim}: {description}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfCompSeries {
    pub factors: Vec<FactorDescriptor>,
    /// One line per decomposition step.
    pub chain: Vec<String>,
}

impl HopfCompSeries {
    pub fn dim_product(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).product()
    }

    pub fn sorted_factors(&self) -> Vec<FactorDescriptor> {
        let mut v = self.factors.clone();
        v.sort();
        v
    }

    pub fn factor_string(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|f| f.to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Which normal subgroup a group-type step descends into.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ChainChoice {
    /// First maximal normal subgroup in the table's canonical order.
    #[default]
    FirstMaximal,
    /// Last maximal normal subgroup.
    LastMaximal,
    /// Smallest nontrivial proper normal subgroup.
    SmallestNormal,
}

#[derive(Clone, Debug)]
pub struct SeriesStrategy {
    pub choice: ChainChoice,
    /// Extra spanning sets (in the basis of the top algebra) to try as
    /// normal Hopf subalgebras before the built-in catalog.
    pub extras: Vec<Vec<SparseVec>>,
    /// Group-type steps on algebras up to this dimension are also checked
    /// by building the exact sequence.
    pub verify_up_to_dim: usize,
}

impl Default for SeriesStrategy {
    fn default() -> Self {
        SeriesStrategy {
            choice: ChainChoice::FirstMaximal,
            extras: Vec::new(),
            verify_up_to_dim: 0,
        }
    }
}

#[derive(Clone)]
enum Node {
    Group(GroupTable),
    Dual(GroupTable),
    Algebra(Arc<HopfAlgebra>),
}

fn node_of(h: &Arc<HopfAlgebra>) -> Result<Node> {
    Ok(match h.provenance() {
        Provenance::GroupAlgebra(g) => Node::Group(g.table()?.clone()),
        Provenance::DualGroupAlgebra(g) => Node::Dual(g.table()?.clone()),
        Provenance::Bicrossed(mp) if mp.gamma().order() == 1 => Node::Group(mp.g().table()?.clone()),
        Provenance::Bicrossed(mp) if mp.g().order() == 1 => Node::Dual(mp.gamma().table()?.clone()),
        Provenance::Bicrossed(_) => Node::Algebra(Arc::clone(h)),
        Provenance::Other => match group_structure(h) {
            Some((GroupKind::Algebra, t)) => Node::Group(t),
            Some((GroupKind::Dual, t)) => Node::Dual(t),
            None => Node::Algebra(Arc::clone(h)),
        },
    })
}

fn pick(t: &GroupTable, choice: ChainChoice) -> Bits {
    match choice {
        ChainChoice::FirstMaximal => t.maximal_normal_subgroups().swap_remove(0),
        ChainChoice::LastMaximal => t.maximal_normal_subgroups().pop().expect("nontrivial group"),
        ChainChoice::SmallestNormal => t.normal_subgroups().swap_remove(1),
    }
}

fn proper_normals(t: &GroupTable) -> Vec<Bits> {
    let n = t.order();
    t.normal_subgroups()
        .into_iter()
        .filter(|m| {
            let c = m.count_ones(..);
            c > 1 && c < n
        })
        .collect()
}

/// Builds the sequence `kN → kG → k(G/N)` (or its dual) and checks it.
fn verify_group_step(t: &GroupTable, n: &Bits, dual: bool) -> Result<()> {
    let (g, pos) = PermGroup::from_table_with_map(t);
    let mut bits = Bits::with_capacity(t.order());
    for i in n.ones() {
        bits.insert(pos[i] as usize);
    }
    let g = g.into_ref();
    let mut seq = group_quotient_sequence(&g, &bits)?;
    if dual {
        seq = dualize_sequence(&seq)?;
    }
    if seq.is_exact() {
        Ok(())
    } else {
        Err(Error::Verification(format!("decomposition step is not exact:\n{}", seq.status.report())))
    }
}

fn group_label(t: &GroupTable) -> IsoLabel {
    identify(t)
}

fn series_node(node: Node, strategy: &SeriesStrategy, top: bool, out: &mut HopfCompSeries) -> Result<()> {
    match node {
        Node::Group(t) | Node::Dual(t) if t.order() == 1 => Ok(()),
        Node::Group(t) => {
            if t.is_simple() {
                out.factors.push(FactorDescriptor::Group(group_label(&t)));
                return Ok(());
            }
            let n = pick(&t, strategy.choice);
            if t.order() <= strategy.verify_up_to_dim {
                verify_group_step(&t, &n, false)?;
            }
            let (sub, _) = t.restrict(&n);
            let (q, _) = t.quotient(&n);
            out.chain.push(format!(
                "k{} ⊃ k{} normal, quotient k{}",
                group_label(&t),
                group_label(&sub),
                group_label(&q)
            ));
            series_node(Node::Group(sub), strategy, false, out)?;
            series_node(Node::Group(q), strategy, false, out)
        }
        Node::Dual(t) => {
            if t.is_simple() {
                out.factors.push(FactorDescriptor::DualGroup(group_label(&t)));
                return Ok(());
            }
            let n = pick(&t, strategy.choice);
            if t.order() <= strategy.verify_up_to_dim {
                verify_group_step(&t, &n, true)?;
            }
            let (sub, _) = t.restrict(&n);
            let (q, _) = t.quotient(&n);
            out.chain.push(format!(
                "k^{} ⊃ k^{} normal, quotient k^{}",
                group_label(&t),
                group_label(&q),
                group_label(&sub)
            ));
            series_node(Node::Dual(q), strategy, false, out)?;
            series_node(Node::Dual(sub), strategy, false, out)
        }
        Node::Algebra(h) => {
            if top {
                for (idx, extra) in strategy.extras.iter().enumerate() {
                    if let Some((sub, quot)) = generic_step(&h, extra)? {
                        out.chain.push(format!(
                            "user subalgebra {idx} of dimension {} is normal, quotient of dimension {}",
                            sub.dim(),
                            quot.dim()
                        ));
                        series_node(node_of(&sub)?, strategy, false, out)?;
                        series_node(node_of(&quot)?, strategy, false, out)?;
                        return Ok(());
                    }
                }
            }
            match h.provenance() {
                Provenance::Bicrossed(mp) => {
                    let gamma = mp.gamma().table()?.clone();
                    let g = mp.g().table()?.clone();
                    out.chain.push(format!(
                        "k^Γ # kG ⊃ k^{} canonical normal, quotient k{}",
                        group_label(&gamma),
                        group_label(&g)
                    ));
                    series_node(Node::Dual(gamma), strategy, false, out)?;
                    series_node(Node::Group(g), strategy, false, out)
                }
                _ if top => Err(Error::Unsupported(
                    "Hopf algebra is outside the supported catalog (group, dual group, bicrossed)".into(),
                )),
                _ => {
                    out.factors.push(FactorDescriptor::Raw {
                        dim: h.dim(),
                        description: "no catalog subalgebra applies".into(),
                    });
                    Ok(())
                }
            }
        }
    }
}

/// Verifies `span(extra)` as a proper normal Hopf subalgebra and returns
/// it with the Hopf cokernel of its inclusion; `None` if it is not normal
/// or not proper.
fn generic_step(h: &Arc<HopfAlgebra>, extra: &[SparseVec]) -> Result<Option<(Arc<HopfAlgebra>, Arc<HopfAlgebra>)>> {
    let k = HopfSubalgebra::new(Arc::clone(h), extra)?;
    if k.dim() <= 1 || k.dim() >= h.dim() || !is_normal_subalgebra(&k).normal {
        return Ok(None);
    }
    let (sub, incl) = k.as_hopf()?;
    let (quot, _) = hopf_cokernel(&incl)?;
    Ok(Some((sub, quot)))
}

/// A composition series following `strategy`. Algebras outside the catalog
/// give [`Error::Unsupported`].
pub fn composition_series_hopf(h: &Arc<HopfAlgebra>, strategy: &SeriesStrategy) -> Result<HopfCompSeries> {
    let mut out = HopfCompSeries {
        factors: Vec::new(),
        chain: Vec::new(),
    };
    series_node(node_of(h)?, strategy, true, &mut out)?;
    if out.dim_product() != h.dim() {
        return Err(Error::Internal(format!(
            "factor dimensions multiply to {} instead of {}",
            out.dim_product(),
            h.dim()
        )));
    }
    Ok(out)
}

/// Result of exhausting every choice of normal subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainExploration {
    pub chains: usize,
    /// Sorted factor multisets; Jordan–Hölder means exactly one.
    pub multisets: BTreeSet<Vec<FactorDescriptor>>,
}

impl ChainExploration {
    pub fn jordan_holder_holds(&self) -> bool {
        self.multisets.len() == 1
    }
}

/// Every series obtained by descending through any proper nontrivial
/// normal subalgebra of the catalog at each step.
pub fn explore_series(h: &Arc<HopfAlgebra>) -> Result<ChainExploration> {
    let all = explore_node(&node_of(h)?)?;
    let chains = all.len();
    let multisets = all
        .into_iter()
        .map(|mut v| {
            v.sort();
            v
        })
        .collect();
    Ok(ChainExploration { chains, multisets })
}

fn combine(a: Vec<Vec<FactorDescriptor>>, b: &[Vec<FactorDescriptor>]) -> Vec<Vec<FactorDescriptor>> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in &a {
        for y in b {
            let mut v = x.clone();
            v.extend(y.iter().cloned());
            out.push(v);
        }
    }
    out
}

fn explore_node(node: &Node) -> Result<Vec<Vec<FactorDescriptor>>> {
    match node {
        Node::Group(t) | Node::Dual(t) if t.order() == 1 => Ok(vec![Vec::new()]),
        Node::Group(t) | Node::Dual(t) if t.is_simple() => Ok(vec![vec![match node {
            Node::Group(_) => FactorDescriptor::Group(group_label(t)),
            _ => FactorDescriptor::DualGroup(group_label(t)),
        }]]),
        Node::Group(t) | Node::Dual(t) => {
            let dual = matches!(node, Node::Dual(_));
            let branches: Vec<Vec<Vec<FactorDescriptor>>> = proper_normals(t)
                .par_iter()
                .map(|n| {
                    let (sub, _) = t.restrict(n);
                    let (q, _) = t.quotient(n);
                    let (first, second) = if dual {
                        (Node::Dual(q), Node::Dual(sub))
                    } else {
                        (Node::Group(sub), Node::Group(q))
                    };
                    Ok(combine(explore_node(&first)?, &explore_node(&second)?))
                })
                .collect::<Result<_>>()?;
            Ok(branches.into_iter().flatten().collect())
        }
        Node::Algebra(h) => match h.provenance() {
            Provenance::Bicrossed(mp) => {
                let gamma = Node::Dual(mp.gamma().table()?.clone());
                let g = Node::Group(mp.g().table()?.clone());
                Ok(combine(explore_node(&gamma)?, &explore_node(&g)?))
            }
            _ => Err(Error::Unsupported("Hopf algebra is outside the supported catalog".into())),
        },
    }
}

/// Whether two series have the same factors up to isomorphism of
/// descriptors, counted with multiplicity.
pub fn jh_compare(s1: &HopfCompSeries, s2: &HopfCompSeries) -> bool {
    s1.sorted_factors() == s2.sorted_factors()
}
