//! Isomorphism-type labels for small permutation groups.
//!
//! Recognition is by invariants (order, abelian invariants, element-order
//! histogram, centre and derived subgroup orders) compared against a fixed
//! catalog. A group that matches nothing is reported as unidentified.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use super::perm::Perm;
use super::perm_group::{named, PermGroup};
use super::table::GroupTable;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IsoLabel {
    Trivial,
    Cyclic(usize),
    /// Non-cyclic abelian group, by invariant factors `d1 | d2 | ...`.
    Abelian(Vec<usize>),
    /// Dihedral group of order `2n`.
    Dihedral(usize),
    Quaternion,
    Symmetric(usize),
    Alternating(usize),
    Semidirect(Box<IsoLabel>, Box<IsoLabel>),
    Psl(usize, usize),
    Unidentified(usize),
}

impl IsoLabel {
    pub fn is_simple(&self) -> bool {
        match self {
            IsoLabel::Cyclic(n) => is_prime(*n),
            IsoLabel::Alternating(n) => *n >= 5,
            IsoLabel::Psl(..) => true,
            _ => false,
        }
    }

    /// Group order implied by the label.
    pub fn order(&self) -> usize {
        match self {
            IsoLabel::Trivial => 1,
            IsoLabel::Cyclic(n) => *n,
            IsoLabel::Abelian(f) => f.iter().product(),
            IsoLabel::Dihedral(n) => 2 * n,
            IsoLabel::Quaternion => 8,
            IsoLabel::Symmetric(n) => (1..=*n).product(),
            IsoLabel::Alternating(n) => (1..=*n).product::<usize>() / 2,
            IsoLabel::Semidirect(a, b) => a.order() * b.order(),
            IsoLabel::Psl(2, q) => q * (q * q - 1) / (2usize).gcd(&(q - 1)),
            IsoLabel::Psl(..) => 0,
            IsoLabel::Unidentified(n) => *n,
        }
    }

    /// Parses the strings produced by `Display`.
    pub fn parse(text: &str) -> Option<IsoLabel> {
        let t = text.trim();
        if t == "Trivial" {
            return Some(IsoLabel::Trivial);
        }
        if t == "Q8" {
            return Some(IsoLabel::Quaternion);
        }
        if let Some(n) = t.strip_prefix("order-").and_then(|r| r.strip_suffix(", unidentified")) {
            return n.parse().ok().map(IsoLabel::Unidentified);
        }
        if let Some(rest) = t.strip_prefix("PSL(2,").and_then(|r| r.strip_suffix(')')) {
            return rest.parse().ok().map(|q| IsoLabel::Psl(2, q));
        }
        if let Some(rest) = t.strip_prefix('(') {
            let (inner, outer) = rest.split_once(")⋊")?;
            return Some(IsoLabel::Semidirect(
                Box::new(IsoLabel::parse(inner)?),
                Box::new(IsoLabel::parse(outer)?),
            ));
        }
        if t.contains('×') {
            let factors: Option<Vec<usize>> = t
                .split('×')
                .map(|p| p.strip_prefix('Z').and_then(|n| n.parse().ok()))
                .collect();
            return factors.map(IsoLabel::Abelian);
        }
        let (head, num) = t.split_at(1);
        let n: usize = num.parse().ok()?;
        match head {
            "Z" => Some(IsoLabel::Cyclic(n)),
            "D" => Some(IsoLabel::Dihedral(n)),
            "S" => Some(IsoLabel::Symmetric(n)),
            "A" => Some(IsoLabel::Alternating(n)),
            _ => None,
        }
    }
}

impl fmt::Display for IsoLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoLabel::Trivial => write!(f, "Trivial"),
            IsoLabel::Cyclic(n) => write!(f, "Z{n}"),
            IsoLabel::Abelian(factors) => {
                let parts: Vec<String> = factors.iter().map(|d| format!("Z{d}")).collect();
                write!(f, "{}", parts.join("×"))
            }
            IsoLabel::Dihedral(n) => write!(f, "D{n}"),
            IsoLabel::Quaternion => write!(f, "Q8"),
            IsoLabel::Symmetric(n) => write!(f, "S{n}"),
            IsoLabel::Alternating(n) => write!(f, "A{n}"),
            IsoLabel::Semidirect(a, b) => write!(f, "({a})⋊{b}"),
            IsoLabel::Psl(n, q) => write!(f, "PSL({n},{q})"),
            IsoLabel::Unidentified(n) => write!(f, "order-{n}, unidentified"),
        }
    }
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Invariant factors of an abelian group given by its table.
pub fn abelian_invariants(t: &GroupTable) -> Vec<usize> {
    let n = t.order();
    let orders: Vec<usize> = (0..n as u32).map(|a| t.element_order(a)).collect();
    // For each prime p, the p-part is determined by counts of elements of
    // order dividing p^k.
    let mut per_prime: Vec<Vec<usize>> = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            let mut exps = Vec::new();
            let mut prev = 1usize;
            let mut pk = p;
            let mut levels = Vec::new();
            while m.is_multiple_of(p) {
                m /= p;
            }
            loop {
                let count = orders.iter().filter(|&&o| pk % o == 0).count();
                if count == prev {
                    break;
                }
                levels.push(count);
                prev = count;
                pk *= p;
            }
            // levels[k] = |G[p^{k+1}]|; number of cyclic factors of order
            // >= p^{k+1} is log_p(levels[k] / levels[k-1]).
            let mut ranks = Vec::new();
            let mut below = 1;
            for &c in &levels {
                let mut r = 0;
                let mut q = c / below;
                while q > 1 {
                    q /= p;
                    r += 1;
                }
                ranks.push(r);
                below = c;
            }
            for (k, &r) in ranks.iter().enumerate() {
                let next = ranks.get(k + 1).copied().unwrap_or(0);
                for _ in 0..(r - next) {
                    exps.push(p.pow(k as u32 + 1));
                }
            }
            per_prime.push(exps);
        }
        p += 1;
    }
    // Combine prime powers into invariant factors, largest first.
    let width = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; width];
    for mut exps in per_prime {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, e) in exps.into_iter().enumerate() {
            factors[i] *= e;
        }
    }
    factors.reverse();
    factors
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Signature {
    order: usize,
    histogram: BTreeMap<usize, usize>,
    center: usize,
    derived: usize,
    classes: usize,
}

fn signature(t: &GroupTable) -> Signature {
    Signature {
        order: t.order(),
        histogram: t.order_statistics(),
        center: t.center_of(&t.whole()).count_ones(..),
        derived: t.commutator_subgroup(&t.whole()).count_ones(..),
        classes: t.conjugacy_classes().len(),
    }
}

struct CatalogEntry {
    label: IsoLabel,
    order: usize,
    build: fn() -> PermGroup,
    sig: OnceLock<Signature>,
}

fn perm_group(degree: usize, gens: &[&str]) -> PermGroup {
    let gens = gens.iter().map(|g| Perm::parse(g, degree).unwrap()).collect();
    PermGroup::generate(degree, gens).unwrap()
}

fn z3z3() -> Box<IsoLabel> {
    Box::new(IsoLabel::Abelian(vec![3, 3]))
}

fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let entry = |label: IsoLabel, order: usize, build: fn() -> PermGroup| CatalogEntry {
            label,
            order,
            build,
            sig: OnceLock::new(),
        };
        vec![
            entry(IsoLabel::Quaternion, 8, named::quaternion),
            entry(IsoLabel::Alternating(4), 12, || named::alternating(4)),
            entry(
                IsoLabel::Semidirect(z3z3(), Box::new(IsoLabel::Cyclic(2))),
                18,
                || perm_group(6, &["(1 2 3)", "(4 5 6)", "(1 2)(4 5)"]),
            ),
            entry(IsoLabel::Symmetric(4), 24, || named::symmetric(4)),
            entry(
                IsoLabel::Semidirect(z3z3(), Box::new(IsoLabel::Cyclic(4))),
                36,
                || perm_group(6, &["(1 2 3)", "(4 5 6)", "(2 3)(5 6)", "(1 4)(2 5 3 6)"]),
            ),
            entry(IsoLabel::Symmetric(5), 120, || named::symmetric(5)),
            entry(IsoLabel::Symmetric(6), 720, || named::symmetric(6)),
        ]
    })
}

fn dihedral_half(t: &GroupTable) -> Option<usize> {
    let n = t.order();
    if !n.is_multiple_of(2) || n < 6 {
        return None;
    }
    let m = n / 2;
    let r = (0..n as u32).find(|&a| t.element_order(a) == m)?;
    let rot = t.closure(&[r]);
    let all_involutions = (0..n as u32)
        .filter(|&a| !rot.contains(a as usize))
        .all(|a| t.element_order(a) == 2);
    all_involutions.then_some(m)
}

/// Recognizes the isomorphism type of a group given by its table.
pub fn identify(t: &GroupTable) -> IsoLabel {
    let n = t.order();
    if n == 1 {
        return IsoLabel::Trivial;
    }
    if t.is_abelian() {
        let inv = abelian_invariants(t);
        return if inv.len() == 1 {
            IsoLabel::Cyclic(n)
        } else {
            IsoLabel::Abelian(inv)
        };
    }
    if let Some(m) = dihedral_half(t) {
        return if m == 3 {
            IsoLabel::Symmetric(3)
        } else {
            IsoLabel::Dihedral(m)
        };
    }
    let candidates: Vec<&CatalogEntry> = catalog().iter().filter(|e| e.order == n).collect();
    if !candidates.is_empty() {
        let sig = signature(t);
        for e in candidates {
            let reference = e.sig.get_or_init(|| signature((e.build)().table().unwrap()));
            if *reference == sig {
                return e.label.clone();
            }
        }
    }
    if t.is_simple() {
        match n {
            60 => return IsoLabel::Alternating(5),
            168 => return IsoLabel::Psl(2, 7),
            360 => return IsoLabel::Alternating(6),
            504 => return IsoLabel::Psl(2, 8),
            660 => return IsoLabel::Psl(2, 11),
            _ => {}
        }
    }
    IsoLabel::Unidentified(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label_of(g: &PermGroup) -> IsoLabel {
        identify(g.table().unwrap())
    }

    #[test]
    fn named_groups_are_recognized() {
        assert_eq!(label_of(&named::cyclic(1)), IsoLabel::Trivial);
        assert_eq!(label_of(&named::cyclic(6)), IsoLabel::Cyclic(6));
        assert_eq!(label_of(&named::klein_four()), IsoLabel::Abelian(vec![2, 2]));
        assert_eq!(label_of(&named::symmetric(3)), IsoLabel::Symmetric(3));
        assert_eq!(label_of(&named::dihedral(4)), IsoLabel::Dihedral(4));
        assert_eq!(label_of(&named::dihedral(5)), IsoLabel::Dihedral(5));
        assert_eq!(label_of(&named::quaternion()), IsoLabel::Quaternion);
        assert_eq!(label_of(&named::alternating(4)), IsoLabel::Alternating(4));
        assert_eq!(label_of(&named::symmetric(4)), IsoLabel::Symmetric(4));
        assert_eq!(label_of(&named::alternating(5)), IsoLabel::Alternating(5));
        assert_eq!(label_of(&named::symmetric(5)), IsoLabel::Symmetric(5));
    }

    #[test]
    fn abelian_invariants_by_counting() {
        let g = named::direct_product(&named::cyclic(2), &named::cyclic(6));
        assert_eq!(label_of(&g), IsoLabel::Abelian(vec![2, 6]));
        let g = named::direct_product(&named::cyclic(4), &named::cyclic(2));
        assert_eq!(label_of(&g), IsoLabel::Abelian(vec![2, 4]));
        let g = named::direct_product(&named::cyclic(3), &named::cyclic(4));
        assert_eq!(label_of(&g), IsoLabel::Cyclic(12));
    }

    #[test]
    fn unknown_groups_are_not_guessed() {
        // Z3 × S3 has order 18 but is not the generalized dihedral group.
        let g = named::direct_product(&named::cyclic(3), &named::symmetric(3));
        assert_eq!(label_of(&g), IsoLabel::Unidentified(18));
    }

    #[test]
    fn display_round_trips() {
        for l in [
            IsoLabel::Trivial,
            IsoLabel::Cyclic(5),
            IsoLabel::Abelian(vec![2, 2]),
            IsoLabel::Dihedral(4),
            IsoLabel::Semidirect(z3z3(), Box::new(IsoLabel::Cyclic(4))),
            IsoLabel::Psl(2, 7),
            IsoLabel::Unidentified(18),
            IsoLabel::Alternating(6),
        ] {
            assert_eq!(IsoLabel::parse(&l.to_string()), Some(l.clone()), "{l}");
        }
    }
}
