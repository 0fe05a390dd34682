//! Exact factorizations `G = L·R` with `L ∩ R = {e}`.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;

use super::label::{identify, IsoLabel};
use super::perm_group::{GroupRef, PermGroup};
use super::subgroups::SubgroupLattice;
use super::table::{Bits, GroupTable};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ExactFactorizationG {
    pub ambient: GroupRef,
    pub left: Bits,
    pub right: Bits,
}

impl ExactFactorizationG {
    pub fn left_group(&self) -> PermGroup {
        self.ambient.subgroup(&self.left).expect("verified subgroup")
    }

    pub fn right_group(&self) -> PermGroup {
        self.ambient.subgroup(&self.right).expect("verified subgroup")
    }

    pub fn left_label(&self) -> IsoLabel {
        label_of(&self.ambient, &self.left)
    }

    pub fn right_label(&self) -> IsoLabel {
        label_of(&self.ambient, &self.right)
    }

    /// Re-checks the unique-factorization property.
    pub fn verify(&self) -> Result<()> {
        check_bijection(self.ambient.table()?, &[&self.left, &self.right])
    }
}

fn label_of(g: &PermGroup, h: &Bits) -> IsoLabel {
    identify(&g.table().expect("table available").restrict(h).0)
}

/// Checks that `(a1, ..., ak) ↦ a1·…·ak` is a bijection onto the group.
pub fn check_bijection(t: &GroupTable, factors: &[&Bits]) -> Result<()> {
    let product: usize = factors.iter().map(|f| f.count_ones(..)).product();
    if product != t.order() {
        return Err(Error::NotExactFactorization(format!(
            "orders multiply to {product}, group has order {}",
            t.order()
        )));
    }
    let mut reached = t.trivial();
    let mut list = vec![t.identity()];
    for f in factors {
        let elems = GroupTable::elements_of(f);
        let mut next = Vec::with_capacity(list.len() * elems.len());
        reached = t.empty_set();
        for &x in &list {
            for &a in &elems {
                let y = t.mul(x, a);
                if reached.put(y as usize) {
                    return Err(Error::NotExactFactorization(format!(
                        "element {y} has two factorizations"
                    )));
                }
                next.push(y);
            }
        }
        list = next;
    }
    debug_assert_eq!(reached.count_ones(..), t.order());
    Ok(())
}

/// Verifies `(left, right)` as an exact factorization of `g`.
pub fn verify_factorization(g: GroupRef, left: &PermGroup, right: &PermGroup) -> Result<ExactFactorizationG> {
    let left = g.index_set(left)?;
    let right = g.index_set(right)?;
    let t = g.table()?;
    for h in [&left, &right] {
        if !t.is_subgroup(h) {
            return Err(Error::NotSubgroup("factor is not closed".into()));
        }
    }
    check_bijection(t, &[&left, &right])?;
    Ok(ExactFactorizationG { ambient: g, left, right })
}

/// Verifies an iterated factorization `g = A1·A2·…·Ak` given as subgroups.
pub fn verify_iterated_factorization(g: &PermGroup, factors: &[PermGroup]) -> Result<()> {
    let sets: Vec<Bits> = factors.iter().map(|f| g.index_set(f)).collect::<Result<_>>()?;
    let refs: Vec<&Bits> = sets.iter().collect();
    check_bijection(g.table()?, &refs)
}

/// Canonical key of an unordered pair up to simultaneous conjugacy.
fn pair_key(t: &GroupTable, a: &Bits, b: &Bits) -> (Bits, Bits) {
    let mut best: Option<(Bits, Bits)> = None;
    for g in 0..t.order() as u32 {
        let (x, y) = (t.conjugate(a, g), t.conjugate(b, g));
        let cand = if x <= y { (x, y) } else { (y, x) };
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap()
}

/// All exact factorizations up to simultaneous conjugacy and swapping the
/// factors. The left factor is the one of larger order.
pub fn exact_factorizations(g: &GroupRef, proper_only: bool) -> Result<Vec<ExactFactorizationG>> {
    let lattice = SubgroupLattice::compute(g)?;
    exact_factorizations_in(g, &lattice, proper_only)
}

pub fn exact_factorizations_in(
    g: &GroupRef,
    lattice: &SubgroupLattice,
    proper_only: bool,
) -> Result<Vec<ExactFactorizationG>> {
    let t = g.table()?;
    let n = t.order();
    let classes = &lattice.classes;
    let mut pairs = Vec::new();
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            let (oa, ob) = (a.order(), b.order());
            if oa * ob != n || oa < ob || (oa == ob && i > j) {
                continue;
            }
            if proper_only && (oa == n || ob == n) {
                continue;
            }
            pairs.push((i, j));
        }
    }
    let found: BTreeSet<(Bits, Bits)> = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let a = &classes[i].representative;
            let mut local = BTreeSet::new();
            for b in &classes[j].conjugates {
                if a.intersection_count(b) == 1 {
                    local.insert(pair_key(t, a, b));
                }
            }
            local
        })
        .collect();
    let mut out = Vec::new();
    for (x, y) in found {
        let (left, right) = if x.count_ones(..) >= y.count_ones(..) { (x, y) } else { (y, x) };
        check_bijection(t, &[&left, &right]).map_err(|e| Error::Internal(e.to_string()))?;
        out.push(ExactFactorizationG {
            ambient: Arc::clone(g),
            left,
            right,
        });
    }
    out.sort_by(|a, b| {
        (b.left.count_ones(..), &a.left, &a.right).cmp(&(a.left.count_ones(..), &b.left, &b.right))
    });
    Ok(out)
}

/// First exact factorization whose factors carry the given labels. Since
/// `AB = G` iff `BA = G`, a stored pair may be returned swapped.
pub fn find_factorization(g: &GroupRef, left: &IsoLabel, right: &IsoLabel) -> Result<Option<ExactFactorizationG>> {
    for f in exact_factorizations(g, false)? {
        let (l, r) = (f.left_label(), f.right_label());
        if l == *left && r == *right {
            return Ok(Some(f));
        }
        if l == *right && r == *left {
            return Ok(Some(ExactFactorizationG {
                ambient: f.ambient,
                left: f.right,
                right: f.left,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::super::perm_group::named;
    use super::*;

    #[test]
    fn s3_factors_as_z3_z2() {
        let g = named::symmetric(3).into_ref();
        let fs = exact_factorizations(&g, true).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].left_label(), IsoLabel::Cyclic(3));
        assert_eq!(fs[0].right_label(), IsoLabel::Cyclic(2));
        fs[0].verify().unwrap();
    }

    #[test]
    fn improper_factorization_included_on_request() {
        let g = named::cyclic(5).into_ref();
        assert!(exact_factorizations(&g, true).unwrap().is_empty());
        assert_eq!(exact_factorizations(&g, false).unwrap().len(), 1);
    }

    #[test]
    fn rejects_overlapping_factors() {
        let g = named::cyclic(4).into_ref();
        let two = g.subgroup(&g.table().unwrap().closure(&[g.index_of(&g.generators()[0].compose(&g.generators()[0])).unwrap() as u32])).unwrap();
        let err = verify_factorization(g.clone(), &two, &two).unwrap_err();
        assert!(matches!(err, Error::NotExactFactorization(_)));
    }
}
