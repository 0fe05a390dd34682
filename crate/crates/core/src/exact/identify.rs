//! Recognising group algebras and dual group algebras from their basis.

use crate::group::GroupTable;
use crate::hopf::HopfAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupKind {
    /// `kQ`: the basis consists of group-likes closed under multiplication.
    Algebra,
    /// `k^Q`: the basis consists of orthogonal idempotents and the
    /// comultiplication reads off the group law.
    Dual,
}

/// The group `Q` with `H ≅ kQ` or `H ≅ k^Q` on the given basis, if the
/// structure constants have that shape.
pub fn group_structure(h: &HopfAlgebra) -> Option<(GroupKind, GroupTable)> {
    grouplike_table(h)
        .map(|t| (GroupKind::Algebra, t))
        .or_else(|| idempotent_table(h).map(|t| (GroupKind::Dual, t)))
}

fn grouplike_table(h: &HopfAlgebra) -> Option<GroupTable> {
    let n = h.dim();
    for i in 0..n {
        match h.comult_basis(i) {
            [(j, k, c)] if *j as usize == i && *k as usize == i && c.is_one() => {}
            _ => return None,
        }
        if !h.counit_basis(i).is_one() {
            return None;
        }
    }
    let mut mul = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            match h.mul_basis(i, j) {
                [(k, c)] if c.is_one() => mul[i * n + j] = *k,
                _ => return None,
            }
        }
    }
    GroupTable::new(n, mul).ok()
}

fn idempotent_table(h: &HopfAlgebra) -> Option<GroupTable> {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let p = h.mul_basis(i, j);
            let ok = if i == j {
                matches!(p, [(k, c)] if *k as usize == i && c.is_one())
            } else {
                p.is_empty()
            };
            if !ok {
                return None;
            }
        }
    }
    let mut mul = vec![u32::MAX; n * n];
    for i in 0..n {
        for (j, k, c) in h.comult_basis(i) {
            let slot = &mut mul[*j as usize * n + *k as usize];
            if !c.is_one() || *slot != u32::MAX {
                return None;
            }
            *slot = i as u32;
        }
    }
    if mul.contains(&u32::MAX) {
        return None;
    }
    let t = GroupTable::new(n, mul).ok()?;
    let e = t.identity() as usize;
    let counit_ok = (0..n).all(|i| {
        let c = h.counit_basis(i);
        if i == e {
            c.is_one()
        } else {
            c.is_zero()
        }
    });
    counit_ok.then_some(t)
}
