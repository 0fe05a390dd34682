#![allow(dead_code)]

use hopfseq::group::{named, GroupRef};

/// Fixed set of groups of order at most 24 covering every order 1..=24
/// with both abelian and nonabelian representatives where they exist.
pub const SMALL_GROUPS: &[&str] = &[
    "z1", "z2", "z3", "z4", "v4", "z5", "z6", "s3", "z7", "z8", "z2xz4", "z2xv4", "d4", "q8", "z9", "z3xz3",
    "z10", "d5", "z11", "z12", "z2xz6", "a4", "d6", "z13", "z14", "d7", "z15", "z16", "z2xd4", "z2xq8", "z17",
    "z18", "d9", "z3xs3", "z19", "z20", "d10", "z21", "z22", "d11", "z23", "z24", "s4", "z2xa4", "d12",
    "z3xq8", "z4xs3",
];

pub fn group(name: &str) -> GroupRef {
    named::by_name(name).unwrap().into_ref()
}

pub fn small_groups() -> impl Iterator<Item = (&'static str, GroupRef)> {
    SMALL_GROUPS.iter().map(|&n| (n, group(n)))
}

/// Element-wise normality oracle: `g n g⁻¹ ∈ N` for all `g`, `n`.
pub fn brute_force_normal(g: &GroupRef, n: &[usize]) -> bool {
    let inside: std::collections::HashSet<usize> = n.iter().copied().collect();
    (0..g.order()).all(|gi| {
        let p = g.element(gi);
        let pinv = p.inverse();
        n.iter().all(|&ni| {
            let c = p.compose(g.element(ni)).compose(&pinv);
            inside.contains(&g.index_of(&c).unwrap())
        })
    })
}
