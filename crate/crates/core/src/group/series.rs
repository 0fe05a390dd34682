//! Composition series of finite groups.

use std::collections::BTreeSet;

use super::label::{identify, IsoLabel};
use super::perm_group::PermGroup;
use super::table::GroupTable;
use crate::error::{Error, Result};

/// Composition factors along the chain that always descends into the first
/// maximal normal subgroup, listed from the top of the group down.
pub fn composition_series_group(g: &PermGroup) -> Result<Vec<IsoLabel>> {
    check_cap(g)?;
    Ok(factors_of_table(g.table()?))
}

fn check_cap(g: &PermGroup) -> Result<()> {
    let cap = crate::caps::subgroup_cap();
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "composition series",
            size: g.order(),
            cap,
        });
    }
    Ok(())
}

pub fn factors_of_table(t: &GroupTable) -> Vec<IsoLabel> {
    let mut out = Vec::new();
    let mut current = t.clone();
    while current.order() > 1 {
        let maximal = current.maximal_normal_subgroups();
        let m = &maximal[0];
        let (q, _) = current.quotient(m);
        out.push(identify(&q));
        current = current.restrict(m).0;
    }
    out
}

/// The set of sorted factor multisets over every maximal normal chain.
/// Jordan–Hölder says this set has exactly one element.
pub fn all_chain_factor_multisets(g: &PermGroup) -> Result<BTreeSet<Vec<IsoLabel>>> {
    check_cap(g)?;
    let mut out = BTreeSet::new();
    explore(g.table()?, &mut Vec::new(), &mut out);
    Ok(out)
}

fn explore(t: &GroupTable, prefix: &mut Vec<IsoLabel>, out: &mut BTreeSet<Vec<IsoLabel>>) {
    if t.order() == 1 {
        let mut sorted = prefix.clone();
        sorted.sort();
        out.insert(sorted);
        return;
    }
    for m in t.maximal_normal_subgroups() {
        let (q, _) = t.quotient(&m);
        prefix.push(identify(&q));
        explore(&t.restrict(&m).0, prefix, out);
        prefix.pop();
    }
}

/// Number of distinct maximal normal chains (for reporting).
pub fn count_chains(t: &GroupTable) -> usize {
    if t.order() == 1 {
        return 1;
    }
    t.maximal_normal_subgroups()
        .iter()
        .map(|m| count_chains(&t.restrict(m).0))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::super::perm_group::named;
    use super::*;

    #[test]
    fn small_series() {
        assert_eq!(
            composition_series_group(&named::cyclic(4)).unwrap(),
            vec![IsoLabel::Cyclic(2), IsoLabel::Cyclic(2)]
        );
        let mut s4 = composition_series_group(&named::symmetric(4)).unwrap();
        s4.sort();
        assert_eq!(
            s4,
            vec![IsoLabel::Cyclic(2), IsoLabel::Cyclic(2), IsoLabel::Cyclic(2), IsoLabel::Cyclic(3)]
        );
    }

    #[test]
    fn z6_has_two_chains_same_factors() {
        let g = named::cyclic(6);
        assert_eq!(count_chains(g.table().unwrap()), 2);
        assert_eq!(all_chain_factor_multisets(&g).unwrap().len(), 1);
    }
}
