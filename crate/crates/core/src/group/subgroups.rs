//! Subgroups up to conjugacy.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::label::{identify, IsoLabel};
use super::perm::Perm;
use super::perm_group::PermGroup;
use super::table::{Bits, GroupTable};
use crate::error::{Error, Result};

/// Per-class numbers reported in the subgroup tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassMetrics {
    pub normalizer_index: usize,
    pub char_group_order: usize,
    pub center_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClassRow {
    pub representative: Vec<Perm>,
    pub iso_label: IsoLabel,
    pub order: usize,
    pub char_group_order: usize,
    pub normalizer_index: usize,
    /// Number of subgroups in the conjugacy class.
    pub class_size: usize,
    /// Element indices of the representative in the ambient group.
    pub elements: Bits,
}

/// One conjugacy class of subgroups, with every member listed.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: Bits,
    pub generators: Vec<u32>,
    pub conjugates: Vec<Bits>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.count_ones(..)
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub classes: Vec<SubgroupClass>,
}

fn all_conjugates(t: &GroupTable, h: &Bits) -> Vec<Bits> {
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut out = Vec::new();
    for g in 0..t.order() as u32 {
        let c = t.conjugate(h, g);
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out.sort();
    out
}

impl SubgroupLattice {
    pub fn compute(g: &PermGroup) -> Result<SubgroupLattice> {
        Self::compute_with_cap(g, crate::caps::subgroup_cap())
    }

    pub fn compute_with_cap(g: &PermGroup, cap: usize) -> Result<SubgroupLattice> {
        if g.order() > cap {
            return Err(Error::CapExceeded {
                what: "subgroup enumeration",
                size: g.order(),
                cap,
            });
        }
        let t = g.table()?;
        Ok(Self::from_table(t))
    }

    pub fn from_table(t: &GroupTable) -> SubgroupLattice {
        let n = t.order();
        let mut cyclic_gens: Vec<u32> = Vec::new();
        let mut cyclic_seen: HashSet<Bits> = HashSet::new();
        for a in 0..n as u32 {
            if a != t.identity() && cyclic_seen.insert(t.closure(&[a])) {
                cyclic_gens.push(a);
            }
        }

        let mut known: HashMap<Bits, usize> = HashMap::new();
        let mut classes: Vec<SubgroupClass> = Vec::new();
        let add = |h: Bits, classes: &mut Vec<SubgroupClass>, known: &mut HashMap<Bits, usize>| {
            if known.contains_key(&h) {
                return None;
            }
            let conjugates = all_conjugates(t, &h);
            let id = classes.len();
            for c in &conjugates {
                known.insert(c.clone(), id);
            }
            let representative = conjugates[0].clone();
            let generators = t.generators_of(&representative);
            classes.push(SubgroupClass {
                representative,
                generators,
                conjugates,
            });
            Some(id)
        };

        let mut frontier: Vec<usize> = add(t.trivial(), &mut classes, &mut known).into_iter().collect();
        while !frontier.is_empty() {
            let candidates: Vec<Bits> = frontier
                .par_iter()
                .flat_map_iter(|&id| {
                    let class = &classes[id];
                    let h = &class.representative;
                    let mut local: HashSet<Bits> = HashSet::new();
                    for &a in &cyclic_gens {
                        if !h.contains(a as usize) {
                            local.insert(t.join(h, &class.generators, &[a]));
                        }
                    }
                    let mut v: Vec<Bits> = local.into_iter().collect();
                    v.sort();
                    v
                })
                .collect();
            let mut next = Vec::new();
            for c in candidates {
                if let Some(id) = add(c, &mut classes, &mut known) {
                    next.push(id);
                }
            }
            frontier = next;
        }
        classes.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.representative.cmp(&b.representative))
        });
        SubgroupLattice { classes }
    }

    pub fn all_subgroups(&self) -> impl Iterator<Item = &Bits> {
        self.classes.iter().flat_map(|c| c.conjugates.iter())
    }
}

/// Normalizer index, abelianization order and centre order of `T ≤ G`.
pub fn class_metrics(g: &PermGroup, t: &PermGroup) -> Result<ClassMetrics> {
    let table = g.table()?;
    let bits = g.index_set(t)?;
    if !table.is_subgroup(&bits) {
        return Err(Error::NotSubgroup("given elements do not form a subgroup".into()));
    }
    Ok(metrics_of(table, &bits))
}

pub fn metrics_of(table: &GroupTable, h: &Bits) -> ClassMetrics {
    let order = h.count_ones(..);
    ClassMetrics {
        normalizer_index: table.normalizer(h).count_ones(..) / order,
        char_group_order: order / table.commutator_subgroup(h).count_ones(..),
        center_order: table.center_of(h).count_ones(..),
    }
}

/// One row per conjugacy class of subgroups, sorted by (order, label).
pub fn subgroup_classes(g: &PermGroup) -> Result<Vec<SubgroupClassRow>> {
    let lattice = SubgroupLattice::compute(g)?;
    rows_from_lattice(g, &lattice)
}

pub fn rows_from_lattice(g: &PermGroup, lattice: &SubgroupLattice) -> Result<Vec<SubgroupClassRow>> {
    let table = g.table()?;
    let mut rows: Vec<SubgroupClassRow> = lattice
        .classes
        .par_iter()
        .map(|class| {
            let h = &class.representative;
            let m = metrics_of(table, h);
            let (sub, _) = table.restrict(h);
            SubgroupClassRow {
                representative: class.generators.iter().map(|&i| g.element(i as usize).clone()).collect(),
                iso_label: identify(&sub),
                order: h.count_ones(..),
                char_group_order: m.char_group_order,
                normalizer_index: m.normalizer_index,
                class_size: class.conjugates.len(),
                elements: h.clone(),
            }
        })
        .collect();
    rows.sort_by(|a, b| {
        (a.order, &a.iso_label, a.normalizer_index, &a.elements)
            .cmp(&(b.order, &b.iso_label, b.normalizer_index, &b.elements))
    });
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::super::perm_group::named;
    use super::*;

    #[test]
    fn z2_has_two_rows() {
        let rows = subgroup_classes(&named::cyclic(2)).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].iso_label, IsoLabel::Trivial);
        assert_eq!(rows[1].iso_label, IsoLabel::Cyclic(2));
    }

    #[test]
    fn s4_class_count() {
        // S4 has 11 conjugacy classes of subgroups and 30 subgroups.
        let lattice = SubgroupLattice::compute(&named::symmetric(4)).unwrap();
        assert_eq!(lattice.classes.len(), 11);
        assert_eq!(lattice.all_subgroups().count(), 30);
    }

    #[test]
    fn cap_is_enforced() {
        let err = SubgroupLattice::compute_with_cap(&named::alternating(5), 59).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn abelian_whole_group_metrics() {
        let g = named::cyclic(6);
        let m = class_metrics(&g, &g).unwrap();
        assert_eq!(m.normalizer_index, 1);
        assert_eq!(m.char_group_order, 6);
        assert_eq!(m.center_order, 6);
    }
}
