//! Index-based finite groups given by a full multiplication table.
//!
//! Every algorithm in the group engine works on element indices
//! `0..order`; subsets of a group are bitsets over those indices.

use std::collections::{BTreeMap, HashSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A subset of group elements, as a bitset over element indices.
pub type Bits = FixedBitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    identity: u32,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl GroupTable {
    /// Builds a table from `mul[a * n + b] = a·b`. Checks identity, inverses
    /// and that every row is a permutation; associativity is the caller's
    /// responsibility (see [`GroupTable::check_associative`]).
    pub fn new(n: usize, mul: Vec<u32>) -> Result<GroupTable> {
        if n == 0 || mul.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "multiplication table of size {} for order {n}",
                mul.len()
            )));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e * n + a] as usize == a && mul[a * n + e] as usize == a))
            .ok_or_else(|| Error::InvalidArgument("table has no two-sided identity".into()))?
            as u32;
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            let row = &mul[a * n..(a + 1) * n];
            let mut seen = vec![false; n];
            for &x in row {
                if x as usize >= n || seen[x as usize] {
                    return Err(Error::InvalidArgument("table row is not a permutation".into()));
                }
                seen[x as usize] = true;
            }
            let b = row.iter().position(|&x| x == identity).unwrap();
            if mul[b * n + a] != identity {
                return Err(Error::InvalidArgument("left and right inverses differ".into()));
            }
            inv[a] = b as u32;
        }
        Ok(GroupTable {
            n,
            identity,
            mul,
            inv,
        })
    }

    pub fn check_associative(&self) -> bool {
        let n = self.n as u32;
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `g⁻¹·h·g`.
    #[inline]
    pub fn conj(&self, h: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn empty_set(&self) -> Bits {
        FixedBitSet::with_capacity(self.n)
    }

    pub fn whole(&self) -> Bits {
        let mut b = self.empty_set();
        b.insert_range(..);
        b
    }

    pub fn trivial(&self) -> Bits {
        let mut b = self.empty_set();
        b.insert(self.identity as usize);
        b
    }

    pub fn set_of(&self, elems: impl IntoIterator<Item = u32>) -> Bits {
        let mut b = self.empty_set();
        for e in elems {
            b.insert(e as usize);
        }
        b
    }

    pub fn elements_of(set: &Bits) -> Vec<u32> {
        set.ones().map(|i| i as u32).collect()
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.n as u32;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> Bits {
        self.closure_from(&[self.identity], gens)
    }

    fn closure_from(&self, seed: &[u32], gens: &[u32]) -> Bits {
        let mut set = self.empty_set();
        let mut list: Vec<u32> = Vec::with_capacity(self.n);
        for &s in seed {
            if !set.put(s as usize) {
                list.push(s);
            }
        }
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !set.put(y as usize) {
                    list.push(y);
                }
            }
            i += 1;
        }
        set
    }

    /// `⟨H, extra⟩` where `h` is already a subgroup.
    pub fn join(&self, h: &Bits, h_gens: &[u32], extra: &[u32]) -> Bits {
        let seed = Self::elements_of(h);
        let gens: Vec<u32> = h_gens.iter().chain(extra).copied().collect();
        self.closure_from(&seed, &gens)
    }

    pub fn is_subgroup(&self, set: &Bits) -> bool {
        if !set.contains(self.identity as usize) {
            return false;
        }
        let elems = Self::elements_of(set);
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| set.contains(self.mul(a, self.inv(b)) as usize)))
    }

    /// Greedy generating set: scan elements in index order, keep those not
    /// yet generated.
    pub fn generators_of(&self, h: &Bits) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut current = self.trivial();
        for x in h.ones() {
            if !current.contains(x) {
                gens.push(x as u32);
                current = self.closure(&gens);
                if current == *h {
                    break;
                }
            }
        }
        gens
    }

    /// `g⁻¹ H g`.
    pub fn conjugate(&self, h: &Bits, g: u32) -> Bits {
        let mut out = self.empty_set();
        for x in h.ones() {
            out.insert(self.conj(x as u32, g) as usize);
        }
        out
    }

    pub fn normalizer(&self, h: &Bits) -> Bits {
        let elems = Self::elements_of(h);
        let mut out = self.empty_set();
        for g in 0..self.n as u32 {
            if elems.iter().all(|&x| h.contains(self.conj(x, g) as usize)) {
                out.insert(g as usize);
            }
        }
        out
    }

    pub fn is_normal(&self, h: &Bits) -> bool {
        let elems = Self::elements_of(h);
        (0..self.n as u32).all(|g| elems.iter().all(|&x| h.contains(self.conj(x, g) as usize)))
    }

    /// `[H, H]` for a subgroup `H`.
    pub fn commutator_subgroup(&self, h: &Bits) -> Bits {
        let elems = Self::elements_of(h);
        let mut comms = HashSet::new();
        for &a in &elems {
            for &b in &elems {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                comms.insert(c);
            }
        }
        let gens: Vec<u32> = comms.into_iter().collect();
        self.closure(&gens)
    }

    /// Centre of a subgroup `H`: elements of `H` commuting with all of `H`.
    pub fn center_of(&self, h: &Bits) -> Bits {
        let elems = Self::elements_of(h);
        self.set_of(
            elems
                .iter()
                .copied()
                .filter(|&a| elems.iter().all(|&b| self.mul(a, b) == self.mul(b, a))),
        )
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut seen = self.empty_set();
        let mut classes = Vec::new();
        for a in 0..self.n as u32 {
            if seen.contains(a as usize) {
                continue;
            }
            let mut class = Bits::with_capacity(self.n);
            for g in 0..self.n as u32 {
                class.insert(self.conj(a, g) as usize);
            }
            seen.union_with(&class);
            classes.push(Self::elements_of(&class));
        }
        classes
    }

    /// All normal subgroups, sorted by order and then by element indices.
    pub fn normal_subgroups(&self) -> Vec<Bits> {
        let classes = self.conjugacy_classes();
        let trivial = self.trivial();
        let mut found: HashSet<Bits> = HashSet::new();
        found.insert(trivial.clone());
        let mut work = vec![trivial];
        while let Some(m) = work.pop() {
            let m_gens = Self::elements_of(&m);
            for class in &classes {
                if m.contains(class[0] as usize) {
                    continue;
                }
                let j = self.join(&m, &m_gens, class);
                if found.insert(j.clone()) {
                    work.push(j);
                }
            }
        }
        let mut out: Vec<Bits> = found.into_iter().collect();
        out.sort_by(|a, b| {
            a.count_ones(..)
                .cmp(&b.count_ones(..))
                .then_with(|| Self::elements_of(a).cmp(&Self::elements_of(b)))
        });
        out
    }

    /// Maximal proper normal subgroups, in the order of [`Self::normal_subgroups`].
    pub fn maximal_normal_subgroups(&self) -> Vec<Bits> {
        let normals = self.normal_subgroups();
        let whole = self.n;
        normals
            .iter()
            .filter(|m| m.count_ones(..) < whole)
            .filter(|m| {
                !normals.iter().any(|k| {
                    let kc = k.count_ones(..);
                    kc < whole && kc > m.count_ones(..) && m.is_subset(k)
                })
            })
            .cloned()
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.n > 1 && self.normal_subgroups().len() == 2
    }

    /// The subgroup `H` as a standalone table, with the map from its
    /// indices back to indices of `self`.
    pub fn restrict(&self, h: &Bits) -> (GroupTable, Vec<u32>) {
        let elems = Self::elements_of(h);
        let mut back = vec![u32::MAX; self.n];
        for (i, &e) in elems.iter().enumerate() {
            back[e as usize] = i as u32;
        }
        let m = elems.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                mul.push(back[self.mul(a, b) as usize]);
            }
        }
        let table = GroupTable::new(m, mul).expect("restriction of a subgroup is a group");
        (table, elems)
    }

    /// `G/N` for a normal subgroup `N`, together with the coset index of
    /// each element of `G`. Cosets are numbered by their smallest element.
    pub fn quotient(&self, normal: &Bits) -> (GroupTable, Vec<u32>) {
        let mut coset_of = vec![u32::MAX; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n as u32 {
            if coset_of[g as usize] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(g);
            for x in normal.ones() {
                coset_of[self.mul(g, x as u32) as usize] = id;
            }
        }
        let m = reps.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                mul.push(coset_of[self.mul(a, b) as usize]);
            }
        }
        let table = GroupTable::new(m, mul).expect("quotient by a normal subgroup is a group");
        (table, coset_of)
    }

    /// Histogram of element orders.
    pub fn order_statistics(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for a in 0..self.n as u32 {
            *hist.entry(self.element_order(a)).or_insert(0) += 1;
        }
        hist
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> GroupTable {
        let mul = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
        GroupTable::new(n, mul).unwrap()
    }

    #[test]
    fn cyclic_basics() {
        let z6 = cyclic(6);
        assert!(z6.is_abelian());
        assert!(z6.check_associative());
        assert_eq!(z6.closure(&[2]).count_ones(..), 3);
        assert_eq!(z6.normal_subgroups().len(), 4);
        assert_eq!(z6.maximal_normal_subgroups().len(), 2);
        let (q, _) = z6.quotient(&z6.closure(&[2]));
        assert_eq!(q.order(), 2);
        assert!(cyclic(5).is_simple());
        assert!(!z6.is_simple());
    }

    #[test]
    fn rejects_non_group_table() {
        assert!(GroupTable::new(2, vec![0, 1, 1, 1]).is_err());
    }
}
