use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::perm::Perm;
use super::table::{Bits, GroupTable};
use crate::error::{Error, Result};

/// Largest order for which a full multiplication table is materialized.
pub const TABLE_CAP: usize = 4_096;

pub type GroupRef = Arc<PermGroup>;

/// A finite permutation group with its full, sorted element list.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    table: OnceLock<GroupTable>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let table = OnceLock::new();
        if let Some(t) = self.table.get() {
            let _ = table.set(t.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            index: self.index.clone(),
            table,
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Closure of `generators` on `degree` points, with the configured order cap.
    pub fn generate(degree: usize, generators: Vec<Perm>) -> Result<PermGroup> {
        Self::generate_with_cap(degree, generators, crate::caps::order_cap())
    }

    pub fn generate_with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<PermGroup> {
        if degree == 0 {
            return Err(Error::InvalidArgument("degree must be positive".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut list = vec![id];
        let mut i = 0;
        while i < list.len() {
            for s in &generators {
                let y = list[i].compose(s);
                if !seen.contains(&y) {
                    if list.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "group order",
                            size: list.len() + 1,
                            cap,
                        });
                    }
                    seen.insert(y.clone());
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort();
        Ok(Self::from_sorted(degree, generators, list))
    }

    fn from_sorted(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> PermGroup {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        PermGroup {
            degree,
            generators,
            elements,
            index,
            table: OnceLock::new(),
        }
    }

    /// The left regular representation of an abstract group table.
    pub fn from_table(table: &GroupTable) -> PermGroup {
        Self::from_table_with_map(table).0
    }

    /// Like [`PermGroup::from_table`], also returning `pos` with
    /// `pos[a]` the index in the new group of table element `a`.
    pub fn from_table_with_map(table: &GroupTable) -> (PermGroup, Vec<u32>) {
        let n = table.order();
        let rep = |a: u32| {
            Perm::from_images((0..n as u32).map(|b| table.mul(a, b)).collect())
                .expect("rows of a group table are permutations")
        };
        let gens = table.generators_of(&table.whole());
        let generators: Vec<Perm> = gens.iter().map(|&a| rep(a)).collect();
        let mut tagged: Vec<(Perm, u32)> = (0..n as u32).map(|a| (rep(a), a)).collect();
        tagged.sort();
        let mut pos = vec![0u32; n];
        for (i, (_, a)) in tagged.iter().enumerate() {
            pos[*a as usize] = i as u32;
        }
        let mut mul = vec![0u32; n * n];
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                mul[pos[a as usize] as usize * n + pos[b as usize] as usize] = pos[table.mul(a, b) as usize];
            }
        }
        let elements = tagged.into_iter().map(|(p, _)| p).collect();
        let group = Self::from_sorted(n, generators, elements);
        let _ = group
            .table
            .set(GroupTable::new(n, mul).expect("relabelled table is a group"));
        (group, pos)
    }

    /// The subgroup given by a set of element indices of `self`.
    pub fn subgroup(&self, set: &Bits) -> Result<PermGroup> {
        let t = self.table()?;
        if !t.is_subgroup(set) {
            return Err(Error::NotSubgroup("index set is not closed".into()));
        }
        let gens = t.generators_of(set);
        let elements: Vec<Perm> = set.ones().map(|i| self.elements[i].clone()).collect();
        let generators = gens.iter().map(|&i| self.elements[i as usize].clone()).collect();
        Ok(Self::from_sorted(self.degree, generators, elements))
    }

    /// `G/N` as a regular permutation group, with the quotient index of
    /// every element of `self`.
    pub fn quotient_group(&self, normal: &Bits) -> Result<(PermGroup, Vec<u32>)> {
        let t = self.table()?;
        if !t.is_subgroup(normal) || !t.is_normal(normal) {
            return Err(Error::NotSubgroup("quotient by a non-normal subset".into()));
        }
        let (q, coset_of) = t.quotient(normal);
        let (group, pos) = Self::from_table_with_map(&q);
        let map = coset_of.iter().map(|&c| pos[c as usize]).collect();
        Ok((group, map))
    }

    /// Indices (in `self`) of the elements of `sub`, or an error if `sub`
    /// is not contained in `self`.
    pub fn index_set(&self, sub: &PermGroup) -> Result<Bits> {
        if sub.degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: sub.degree,
            });
        }
        let mut bits = Bits::with_capacity(self.order());
        for p in &sub.elements {
            let i = self
                .index_of(p)
                .ok_or_else(|| Error::NotSubgroup(format!("{p} is not in the ambient group")))?;
            bits.insert(i);
        }
        Ok(bits)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        if let Some(t) = self.table.get() {
            return t.mul(a as u32, b as u32) as usize;
        }
        self.index[&self.elements[a].compose(&self.elements[b])] as usize
    }

    /// The multiplication table; errors above [`TABLE_CAP`].
    pub fn table(&self) -> Result<&GroupTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let n = self.order();
        if n > TABLE_CAP {
            return Err(Error::CapExceeded {
                what: "multiplication table",
                size: n,
                cap: TABLE_CAP,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for a in &self.elements {
            for b in &self.elements {
                mul.push(self.index[&a.compose(b)]);
            }
        }
        let t = GroupTable::new(n, mul).expect("permutation products form a group");
        Ok(self.table.get_or_init(|| t))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn into_ref(self) -> GroupRef {
        Arc::new(self)
    }
}

/// Standard named groups.
pub mod named {
    use super::*;

    fn cyc(degree: usize, points: impl IntoIterator<Item = usize>) -> Perm {
        Perm::from_cycles(degree, &[points.into_iter().collect()]).unwrap()
    }

    pub fn cyclic(n: usize) -> PermGroup {
        let gens = if n > 1 { vec![cyc(n, 0..n)] } else { vec![] };
        PermGroup::generate(n.max(1), gens).unwrap()
    }

    pub fn symmetric(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n > 1 {
            gens.push(cyc(n, [0, 1]));
        }
        if n > 2 {
            gens.push(cyc(n, 0..n));
        }
        PermGroup::generate(n.max(1), gens).unwrap()
    }

    pub fn alternating(n: usize) -> PermGroup {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(cyc(n, [0, 1, 2]));
        }
        if n >= 4 {
            if n % 2 == 1 {
                gens.push(cyc(n, 0..n));
            } else {
                gens.push(cyc(n, 1..n));
            }
        }
        PermGroup::generate(n.max(1), gens).unwrap()
    }

    /// Dihedral group of order `2n` acting on an `n`-gon.
    pub fn dihedral(n: usize) -> PermGroup {
        assert!(n >= 3, "dihedral groups need n >= 3");
        let rotation = cyc(n, 0..n);
        let reflection =
            Perm::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect()).unwrap();
        PermGroup::generate(n, vec![rotation, reflection]).unwrap()
    }

    pub fn klein_four() -> PermGroup {
        PermGroup::generate(
            4,
            vec![Perm::parse("(1 2)(3 4)", 4).unwrap(), Perm::parse("(1 3)(2 4)", 4).unwrap()],
        )
        .unwrap()
    }

    pub fn quaternion() -> PermGroup {
        PermGroup::generate(
            8,
            vec![
                Perm::parse("(1 2 3 4)(5 6 7 8)", 8).unwrap(),
                Perm::parse("(1 5 3 7)(2 8 4 6)", 8).unwrap(),
            ],
        )
        .unwrap()
    }

    /// Direct product acting on disjoint point sets.
    pub fn direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
        let (da, db) = (a.degree(), b.degree());
        let shift = |p: &Perm, left: bool| {
            let mut images: Vec<u32> = (0..(da + db) as u32).collect();
            if left {
                images[..da].copy_from_slice(p.images());
            } else {
                for (i, &j) in p.images().iter().enumerate() {
                    images[da + i] = da as u32 + j;
                }
            }
            Perm::from_images(images).unwrap()
        };
        let gens = a
            .generators()
            .iter()
            .map(|p| shift(p, true))
            .chain(b.generators().iter().map(|p| shift(p, false)))
            .collect();
        PermGroup::generate(da + db, gens).unwrap()
    }

    /// Parses names such as `a6`, `s3`, `z4`, `c5`, `d4`, `v4`, `q8`, `z2xz2`.
    pub fn by_name(name: &str) -> Result<PermGroup> {
        let lower = name.trim().to_ascii_lowercase();
        if let Some((l, r)) = lower.split_once('x') {
            let (a, b) = (by_name(l)?, by_name(r)?);
            let (size, cap) = (a.order().saturating_mul(b.order()), crate::caps::order_cap());
            if size > cap {
                return Err(Error::CapExceeded {
                    what: "group order",
                    size,
                    cap,
                });
            }
            return Ok(direct_product(&a, &b));
        }
        match lower.as_str() {
            "v4" | "klein" => return Ok(klein_four()),
            "q8" => return Ok(quaternion()),
            "trivial" | "1" => return Ok(cyclic(1)),
            _ => {}
        }
        let (kind, num) = lower.split_at(1);
        let n: usize = num
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("unknown group name {name:?}")))?;
        let check = |ok: bool| {
            if !ok {
                return Err(Error::InvalidArgument(format!("unknown group name {name:?}")));
            }
            let size = match kind {
                "a" => (1..=n).fold(1usize, |a, k| a.saturating_mul(k)) / if n > 1 { 2 } else { 1 },
                "s" => (1..=n).fold(1usize, |a, k| a.saturating_mul(k)),
                "d" => 2 * n,
                _ => n,
            };
            let cap = crate::caps::order_cap();
            if size > cap {
                return Err(Error::CapExceeded {
                    what: "group order",
                    size,
                    cap,
                });
            }
            Ok(())
        };
        match kind {
            "a" => check(n >= 1).map(|_| alternating(n)),
            "s" => check(n >= 1).map(|_| symmetric(n)),
            "z" | "c" => check(n >= 1).map(|_| cyclic(n)),
            "d" => check(n >= 3).map(|_| dihedral(n)),
            _ => Err(Error::InvalidArgument(format!("unknown group name {name:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn orders_of_named_groups() {
        assert_eq!(cyclic(1).order(), 1);
        assert_eq!(symmetric(3).order(), 6);
        assert_eq!(alternating(5).order(), 60);
        assert_eq!(alternating(6).order(), 360);
        assert_eq!(symmetric(6).order(), 720);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(by_name("z2xs3").unwrap().order(), 12);
    }

    #[test]
    fn closure_examples() {
        let z2 = PermGroup::generate(2, vec![Perm::parse("(1 2)", 2).unwrap()]).unwrap();
        assert_eq!(z2.order(), 2);
        let a5 = PermGroup::generate(
            5,
            vec![Perm::parse("(1 2 3)", 5).unwrap(), Perm::parse("(1 2 3 4 5)", 5).unwrap()],
        )
        .unwrap();
        assert_eq!(a5.order(), 60);
        let a6 = PermGroup::generate(
            6,
            vec![
                Perm::parse("(1 2 3 4 5)", 6).unwrap(),
                Perm::parse("(1 2 3)", 6).unwrap(),
                Perm::parse("(1 6)(2 5)", 6).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(a6.order(), 360);
        assert!(a6.elements()[0].is_identity());
    }

    #[test]
    fn closure_errors() {
        let bad = PermGroup::generate(3, vec![Perm::identity(4)]);
        assert!(matches!(bad, Err(Error::DegreeMismatch { .. })));
        let capped = PermGroup::generate_with_cap(6, symmetric(6).generators().to_vec(), 100);
        assert!(matches!(capped, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn regular_representation_preserves_table() {
        let s3 = symmetric(3);
        let reg = PermGroup::from_table(s3.table().unwrap());
        assert_eq!(reg.order(), 6);
        assert_eq!(reg.degree(), 6);
        let t = reg.table().unwrap();
        assert!(t.check_associative());
        assert!(!t.is_abelian());
        for a in 0..6 {
            for b in 0..6 {
                let direct = reg.element(a).compose(reg.element(b));
                assert_eq!(reg.index_of(&direct), Some(reg.mul_index(a, b)));
            }
        }
    }
}
