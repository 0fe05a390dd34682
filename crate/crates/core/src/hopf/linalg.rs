//! Sparse exact linear algebra over cyclotomic scalars.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use super::scalar::CycScalar;

/// Sparse vector: sorted `(index, coefficient)` pairs, no zero entries.
pub type SparseVec = Vec<(u32, CycScalar)>;

/// Accumulator for building sparse vectors.
#[derive(Clone, Debug, Default)]
pub struct Acc(BTreeMap<u32, CycScalar>);

impl Acc {
    pub fn new() -> Self {
        Acc(BTreeMap::new())
    }

    pub fn add(&mut self, i: u32, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&i) {
            Some(v) => *v += c,
            None => {
                self.0.insert(i, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, v: &[(u32, CycScalar)], f: &CycScalar) {
        for (i, c) in v {
            self.add(*i, &(c * f));
        }
    }

    pub fn add_vec(&mut self, v: &[(u32, CycScalar)]) {
        for (i, c) in v {
            self.add(*i, c);
        }
    }

    pub fn finish(self) -> SparseVec {
        self.0.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

pub fn scale(v: &[(u32, CycScalar)], f: &CycScalar) -> SparseVec {
    if f.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, c)| (*i, c * f)).collect()
}

pub fn sub(a: &[(u32, CycScalar)], b: &[(u32, CycScalar)]) -> SparseVec {
    let mut acc = Acc::new();
    acc.add_vec(a);
    acc.add_scaled(b, &-CycScalar::one(1));
    acc.finish()
}

/// Coefficient of index `i` in `v`, if present.
pub fn coeff(v: &[(u32, CycScalar)], i: u32) -> Option<&CycScalar> {
    v.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &v[k].1)
}

pub fn unit_vec(i: u32, conductor: u32) -> SparseVec {
    vec![(i, CycScalar::one(conductor))]
}

/// `v - f·w`, keeping the result sorted and zero-free.
fn axpy(v: &[(u32, CycScalar)], f: &CycScalar, w: &[(u32, CycScalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut a, mut b) = (0, 0);
    while a < v.len() || b < w.len() {
        let ia = v.get(a).map(|e| e.0).unwrap_or(u32::MAX);
        let ib = w.get(b).map(|e| e.0).unwrap_or(u32::MAX);
        if ia < ib {
            out.push(v[a].clone());
            a += 1;
        } else if ib < ia {
            out.push((ib, -(f * &w[b].1)));
            b += 1;
        } else {
            let c = &v[a].1 - &(f * &w[b].1);
            if !c.is_zero() {
                out.push((ia, c));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

/// A subspace in echelon form. Each row has leading coefficient 1 at its
/// pivot, the smallest index in its support, and no other row has a
/// nonzero entry at that pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<u32, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Echelon::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, i: u32) -> bool {
        self.rows.contains_key(&i)
    }

    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows.values().cloned().collect()
    }

    /// Reduces `v` modulo the subspace; the result has no pivot entries.
    pub fn reduce(&self, v: &[(u32, CycScalar)]) -> SparseVec {
        let mut cur: SparseVec = v.to_vec();
        let mut k = 0;
        while k < cur.len() {
            let i = cur[k].0;
            if let Some(row) = self.rows.get(&i) {
                let f = cur[k].1.clone();
                cur = axpy(&cur, &f, row);
                // entries before k are unchanged; row only touches indices >= i
            } else {
                k += 1;
            }
        }
        cur
    }

    pub fn contains(&self, v: &[(u32, CycScalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: &[(u32, CycScalar)]) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inverse().expect("leading coefficient is nonzero");
        let r = scale(&r, &inv);
        let p = r[0].0;
        for row in self.rows.values_mut() {
            if let Some(c) = coeff(row, p).cloned() {
                *row = axpy(row, &c, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn contains_all(&self, other: &Echelon) -> bool {
        other.rows.values().all(|v| self.contains(v))
    }

    pub fn same_span(&self, other: &Echelon) -> bool {
        self.dim() == other.dim() && self.contains_all(other)
    }

    /// Coordinates of `v` (assumed in the span) in the echelon basis,
    /// ordered by pivot.
    pub fn coordinates(&self, v: &[(u32, CycScalar)]) -> Option<Vec<CycScalar>> {
        let mut out = Vec::with_capacity(self.rows.len());
        let mut rest = v.to_vec();
        for (&p, row) in &self.rows {
            let c = coeff(&rest, p).cloned().unwrap_or_else(|| CycScalar::zero(1));
            if !c.is_zero() {
                rest = axpy(&rest, &c, row);
            }
            out.push(c);
        }
        rest.is_empty().then_some(out)
    }
}

/// Kernel of the linear map sending basis vector `i` to `images[i]`.
pub fn nullspace(images: &[SparseVec], conductor: u32) -> Echelon {
    // Rows carry (image, combination); image pivots are tracked separately.
    let mut rows: BTreeMap<u32, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut kernel = Echelon::new();
    for (i, img) in images.iter().enumerate() {
        let mut image = img.clone();
        let mut combo = unit_vec(i as u32, conductor);
        let mut k = 0;
        while k < image.len() {
            let p = image[k].0;
            if let Some((rimg, rcombo)) = rows.get(&p) {
                let f = image[k].1.clone();
                image = axpy(&image, &f, rimg);
                combo = axpy(&combo, &f, rcombo);
            } else {
                k += 1;
            }
        }
        if image.is_empty() {
            kernel.insert(&combo);
        } else {
            let inv = image[0].1.inverse().unwrap();
            let p = image[0].0;
            rows.insert(p, (scale(&image, &inv), scale(&combo, &inv)));
        }
    }
    kernel
}

/// Rank of a list of vectors.
pub fn rank(vs: &[SparseVec]) -> usize {
    Echelon::from_vectors(vs.iter()).dim()
}

/// Solves a sparse linear system `Σ a_ij x_j = b_i`. Returns `None` when the
/// system is inconsistent; free variables are set to zero.
pub fn solve_sparse(nvars: usize, equations: Vec<(SparseVec, CycScalar)>, conductor: u32) -> Option<Vec<CycScalar>> {
    let mut rows: Vec<Option<(SparseVec, CycScalar)>> = equations.into_iter().map(Some).collect();
    let mut occurs: Vec<HashSet<usize>> = vec![HashSet::new(); nvars];
    let mut heap = BinaryHeap::new();
    for (r, row) in rows.iter().enumerate() {
        let (v, _) = row.as_ref().unwrap();
        for (j, _) in v {
            occurs[*j as usize].insert(r);
        }
        heap.push(Reverse((v.len(), r)));
    }
    let mut pivots: Vec<(u32, SparseVec, CycScalar)> = Vec::new();
    while let Some(Reverse((len, r))) = heap.pop() {
        let Some((v, _)) = rows[r].as_ref() else { continue };
        if v.len() != len {
            continue;
        }
        let (v, b) = rows[r].take().unwrap();
        if v.is_empty() {
            if !b.is_zero() {
                return None;
            }
            continue;
        }
        // Pivot on the variable of this row that occurs least elsewhere.
        let (pv, pc) = v
            .iter()
            .min_by_key(|(j, _)| (occurs[*j as usize].len(), *j))
            .map(|(j, c)| (*j, c.clone()))
            .unwrap();
        let inv = pc.inverse().unwrap();
        let v = scale(&v, &inv);
        let b = &b * &inv;
        for (j, _) in &v {
            occurs[*j as usize].remove(&r);
        }
        let others: Vec<usize> = occurs[pv as usize].iter().copied().collect();
        for o in others {
            let (ov, ob) = rows[o].take().unwrap();
            let f = coeff(&ov, pv).cloned().unwrap();
            let nv = axpy(&ov, &f, &v);
            let nb = &ob - &(&f * &b);
            for (j, _) in &ov {
                occurs[*j as usize].remove(&o);
            }
            for (j, _) in &nv {
                occurs[*j as usize].insert(o);
            }
            heap.push(Reverse((nv.len(), o)));
            rows[o] = Some((nv, nb));
        }
        pivots.push((pv, v, b));
    }
    let mut x = vec![CycScalar::zero(conductor); nvars];
    for (pv, v, b) in pivots.into_iter().rev() {
        let mut val = b;
        for (j, c) in &v {
            if *j != pv {
                val -= &(c * &x[*j as usize]);
            }
        }
        x[pv as usize] = val;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> CycScalar {
        CycScalar::from_int(1, v)
    }

    #[test]
    fn echelon_reduce_and_span() {
        let mut e = Echelon::new();
        assert!(e.insert(&[(0, q(1)), (1, q(1))]));
        assert!(e.insert(&[(1, q(1)), (2, q(1))]));
        assert!(!e.insert(&[(0, q(1)), (2, q(-1))]));
        assert_eq!(e.dim(), 2);
        assert_eq!(e.reduce(&[(0, q(3))]), vec![(2, q(3))]);
        // Reduced basis is (1, 0, -1), (0, 1, 1).
        let coords = e.coordinates(&[(0, q(2)), (1, q(5)), (2, q(3))]).unwrap();
        assert_eq!(coords, vec![q(2), q(5)]);
    }

    #[test]
    fn nullspace_of_rank_one_map() {
        let images = vec![vec![(0, q(1))], vec![(0, q(2))], vec![]];
        let k = nullspace(&images, 1);
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&[(0, q(2)), (1, q(-1))]));
    }

    #[test]
    fn sparse_solve() {
        // x0 + x1 = 3, x1 - x2 = 1, x2 = 4
        let eqs = vec![
            (vec![(0, q(1)), (1, q(1))], q(3)),
            (vec![(1, q(1)), (2, q(-1))], q(1)),
            (vec![(2, q(1))], q(4)),
        ];
        assert_eq!(solve_sparse(3, eqs, 1).unwrap(), vec![q(-2), q(5), q(4)]);
        let bad = vec![(vec![(0, q(1))], q(1)), (vec![(0, q(2))], q(3))];
        assert!(solve_sparse(1, bad, 1).is_none());
    }
}
