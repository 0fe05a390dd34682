mod common;

use common::group;
use hopfseq::group::{exact_factorizations, GroupRef};
use hopfseq::matched_pair::{MatchedPair, Violation};
use proptest::prelude::*;

/// `s·x = (s ▷ x)(s ◁ x)` checked against permutation products.
fn check_factorization_identity(e: &GroupRef, mp: &MatchedPair) {
    for s in 0..mp.gamma().order() {
        for x in 0..mp.g().order() {
            let lhs = mp.gamma().element(s).compose(mp.g().element(x));
            let rhs = mp.g().element(mp.left(s, x)).compose(mp.gamma().element(mp.right(s, x)));
            assert_eq!(lhs, rhs);
            assert!(e.contains(&lhs));
        }
    }
}

fn pairs_of(name: &str) -> Vec<(GroupRef, MatchedPair)> {
    let e = group(name);
    exact_factorizations(&e, true)
        .unwrap()
        .into_iter()
        .map(|f| {
            let mp = MatchedPair::from_factorization(&e, &f.left_group(), &f.right_group()).unwrap();
            (e.clone(), mp)
        })
        .collect()
}

#[test]
fn factorization_pairs_satisfy_axioms() {
    for name in ["s3", "s4", "a4", "a5", "d6", "z2xs3"] {
        let pairs = pairs_of(name);
        assert!(!pairs.is_empty(), "{name}");
        for (e, mp) in &pairs {
            assert!(mp.verify_compatibility().unwrap().is_empty(), "{name}");
            check_factorization_identity(e, mp);
            let t = mp.reconstruct().unwrap();
            assert_eq!(t.order(), e.order());
            assert!(t.check_associative());
            assert_eq!(t.order_statistics(), e.table().unwrap().order_statistics());
        }
    }
}

#[test]
fn drinfeld_pair_reconstructs_product_order() {
    for name in ["s3", "q8", "d4"] {
        let g = group(name);
        let mp = MatchedPair::drinfeld(g.clone()).unwrap();
        assert!(mp.verify_compatibility().unwrap().is_empty());
        assert!(mp.is_left_trivial());
        assert_eq!(mp.reconstruct().unwrap().order(), g.order() * g.order());
    }
}

#[test]
fn trivial_pair_is_direct_product() {
    let mp = MatchedPair::trivial(group("z2"), group("z3"));
    assert!(mp.verify_compatibility().unwrap().is_empty());
    assert!(mp.reconstruct().unwrap().is_abelian());
}

#[test]
fn corrupted_action_is_detected() {
    let (_, mut mp) = pairs_of("s3").remove(0);
    let ng = mp.g().order();
    let s = 1;
    let bad = (mp.left(s, 0) + 1) % ng;
    mp.set_left(s, 0, bad);
    let v = mp.verify_compatibility().unwrap();
    assert!(!v.is_empty());
    assert!(v.iter().any(|x| matches!(
        x,
        Violation::LeftNotBijective { .. } | Violation::LeftAction { .. } | Violation::LeftCompatibility { .. }
    )));
}

#[test]
fn text_round_trip() {
    for (_, mp) in pairs_of("a4") {
        let back = MatchedPair::load(&mp.dump()).unwrap();
        assert_eq!(back, mp);
    }
}

#[test]
fn load_rejects_truncated_tables() {
    let (_, mp) = pairs_of("s3").remove(0);
    let text = mp.dump();
    let cut = &text[..text.len() - 4];
    assert!(MatchedPair::load(cut).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn random_table_entries_break_axioms(s in 1usize..3, x in 0usize..3, delta in 1usize..3) {
        let e = group("s3");
        let z3 = e.subgroup(&e.table().unwrap().closure(&[e.index_of(&hopfseq::group::Perm::parse("(1 2 3)", 3).unwrap()).unwrap() as u32])).unwrap();
        let z2 = e.subgroup(&e.table().unwrap().closure(&[e.index_of(&hopfseq::group::Perm::parse("(1 2)", 3).unwrap()).unwrap() as u32])).unwrap();
        let mut mp = MatchedPair::from_factorization(&e, &z3, &z2).unwrap();
        prop_assert!(mp.verify_compatibility().unwrap().is_empty());
        let s = s % mp.gamma().order();
        prop_assume!(s != 0);
        let v = (mp.left(s, x) + delta) % 3;
        mp.set_left(s, x, v);
        prop_assert!(!mp.verify_compatibility().unwrap().is_empty());
    }
}
