//! Published subgroup tables for A6 and A5, one entry per conjugacy class
//! as `(isomorphism type, |T|, |T̂|, [N(T):T])`.

use std::collections::BTreeMap;

use super::subgroups::SubgroupClassRow;

pub type ClassTuple = (&'static str, usize, usize, usize);

pub const A6_CLASSES: [ClassTuple; 22] = [
    ("Trivial", 1, 1, 360),
    ("Z2", 2, 2, 4),
    ("Z3", 3, 3, 6),
    ("Z3", 3, 3, 6),
    ("Z4", 4, 4, 2),
    ("Z2×Z2", 4, 4, 6),
    ("Z2×Z2", 4, 4, 6),
    ("Z5", 5, 5, 2),
    ("S3", 6, 2, 1),
    ("S3", 6, 2, 1),
    ("D4", 8, 4, 1),
    ("Z3×Z3", 9, 9, 4),
    ("D5", 10, 2, 1),
    ("A4", 12, 3, 2),
    ("A4", 12, 3, 2),
    ("(Z3×Z3)⋊Z2", 18, 2, 2),
    ("S4", 24, 2, 1),
    ("S4", 24, 2, 1),
    ("(Z3×Z3)⋊Z4", 36, 4, 1),
    ("A5", 60, 1, 1),
    ("A5", 60, 1, 1),
    ("A6", 360, 1, 1),
];

pub const A5_CLASSES: [ClassTuple; 9] = [
    ("Trivial", 1, 1, 60),
    ("Z2", 2, 2, 2),
    ("Z3", 3, 3, 2),
    ("Z2×Z2", 4, 4, 3),
    ("Z5", 5, 5, 2),
    ("S3", 6, 2, 1),
    ("D5", 10, 2, 1),
    ("A4", 12, 3, 1),
    ("A5", 60, 1, 1),
];

fn multiset<'a>(it: impl Iterator<Item = (String, usize, usize, usize)> + 'a) -> BTreeMap<(String, usize, usize, usize), usize> {
    let mut m = BTreeMap::new();
    for t in it {
        *m.entry(t).or_insert(0) += 1;
    }
    m
}

/// Differences between computed rows and a reference table, one line per
/// tuple whose multiplicity differs; empty when they agree.
pub fn compare_rows(rows: &[SubgroupClassRow], reference: &[ClassTuple]) -> Vec<String> {
    let got = multiset(
        rows.iter()
            .map(|r| (r.iso_label.to_string(), r.order, r.char_group_order, r.normalizer_index)),
    );
    let want = multiset(reference.iter().map(|&(l, a, b, c)| (l.to_string(), a, b, c)));
    let mut out = Vec::new();
    let keys: std::collections::BTreeSet<_> = got.keys().chain(want.keys()).cloned().collect();
    for k in keys {
        let (g, w) = (got.get(&k).copied().unwrap_or(0), want.get(&k).copied().unwrap_or(0));
        if g != w {
            out.push(format!(
                "({}, |T| = {}, |T̂| = {}, [N:T] = {}): computed {g}, expected {w}",
                k.0, k.1, k.2, k.3
            ));
        }
    }
    out
}
