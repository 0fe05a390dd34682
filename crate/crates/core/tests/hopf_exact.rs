mod common;

use std::sync::Arc;

use common::{brute_force_normal, group};
use hopfseq::exact::{
    bicrossed_sequence, coinvariants, composition_series_hopf, dualize_sequence, explore_series, group_quotient_sequence,
    group_structure, hopf_cokernel, hopf_kernel, is_normal_subalgebra, jh_compare, cokernel_sequence, FactorDescriptor,
    GroupKind, HopfSubalgebra, SeriesStrategy, Side,
};
use hopfseq::group::{find_factorization, identify, IsoLabel, SubgroupLattice};
use hopfseq::hopf::{drinfeld_double, dual_group_algebra, group_algebra, split_extension, HopfAlgebra, HopfMorphism};
use hopfseq::Error;

fn k_a4_c5() -> Arc<HopfAlgebra> {
    let a5 = group("a5");
    let f = find_factorization(&a5, &IsoLabel::Alternating(4), &IsoLabel::Cyclic(5)).unwrap().unwrap();
    Arc::new(split_extension(&a5, &f.right_group(), &f.left_group()).unwrap())
}

#[test]
fn bicrossed_sequences_are_exact() {
    let cases = [
        Arc::new(drinfeld_double(&group("z3")).unwrap()),
        Arc::new(drinfeld_double(&group("s3")).unwrap()),
        k_a4_c5(),
    ];
    for h in cases {
        let seq = bicrossed_sequence(&h).unwrap();
        assert!(seq.is_exact(), "{}", seq.status.report());
        assert_eq!(seq.h_prime.dim() * seq.h_doubleprime.dim(), h.dim());
        // Left coinvariants and the Hopf kernel coincide with the image of i.
        let co = coinvariants(&seq.pi, Side::Left);
        let hker = hopf_kernel(&seq.pi).unwrap();
        assert_eq!(co.dim(), seq.h_prime.dim());
        assert_eq!(hker.dim(), seq.h_prime.dim());
        assert_eq!(seq.i.image().dim(), seq.h_prime.dim());
        let dual = dualize_sequence(&seq).unwrap();
        assert!(dual.is_exact(), "{}", dual.status.report());
    }
}

#[test]
fn group_quotients_by_normal_subgroups_are_exact() {
    for name in ["s3", "d4", "q8", "a4", "s4", "z2xs3"] {
        let g = group(name);
        let t = g.table().unwrap();
        for n in t.normal_subgroups() {
            let seq = group_quotient_sequence(&g, &n).unwrap();
            assert!(seq.is_exact(), "{name}: {}", seq.status.report());
            assert!(dualize_sequence(&seq).unwrap().is_exact(), "{name} dual");
        }
    }
}

#[test]
fn non_normal_subgroup_fails_exactness() {
    let g = group("s3");
    let lattice = SubgroupLattice::compute(&g).unwrap();
    let mut non_normal = 0;
    for k in lattice.all_subgroups() {
        let elems: Vec<usize> = k.ones().collect();
        let normal = brute_force_normal(&g, &elems);
        let seq = cokernel_sequence(&g, k).unwrap();
        assert_eq!(seq.is_exact(), normal, "{elems:?}\n{}", seq.status.report());
        if !normal {
            non_normal += 1;
            assert!(!seq.status.kernel_condition);
            assert!(!seq.status.dims_multiply);
            assert!(matches!(group_quotient_sequence(&g, k), Err(Error::NotSubgroup(_)) | Err(Error::InvalidArgument(_)) | Err(Error::Verification(_))));
        }
    }
    assert_eq!(non_normal, 3);
}

#[test]
fn normality_witness_for_a_transposition() {
    let g = group("s3");
    let kg = Arc::new(group_algebra(&g).unwrap());
    let t = g.table().unwrap();
    let swap = g.index_of(&hopfseq::group::Perm::parse("(1 2)", 3).unwrap()).unwrap() as u32;
    let k = HopfSubalgebra::group_subalgebra(kg.clone(), &t.closure(&[swap])).unwrap();
    let r = is_normal_subalgebra(&k);
    assert!(!r.normal);
    assert!(r.witness.is_some());
    let rot = g.index_of(&hopfseq::group::Perm::parse("(1 2 3)", 3).unwrap()).unwrap() as u32;
    let a3 = HopfSubalgebra::group_subalgebra(kg, &t.closure(&[rot])).unwrap();
    assert!(is_normal_subalgebra(&a3).normal);
}

/// Coset indicators of T span a Hopf subalgebra of k^G exactly when T is
/// normal, and then it is normal (k^G is commutative).
#[test]
fn coset_indicator_subalgebras() {
    let g = group("s4");
    let dg = Arc::new(dual_group_algebra(&g).unwrap());
    let t = g.table().unwrap();
    for sub in SubgroupLattice::compute(&g).unwrap().all_subgroups() {
        let elems: Vec<usize> = sub.ones().collect();
        match HopfSubalgebra::coset_indicator_subalgebra(dg.clone(), t, sub) {
            Ok(k) => {
                assert!(brute_force_normal(&g, &elems), "{elems:?}");
                assert_eq!(k.dim() * sub.count_ones(..), 24);
                assert!(is_normal_subalgebra(&k).normal);
            }
            Err(_) => assert!(!brute_force_normal(&g, &elems), "{elems:?}"),
        }
    }
}

#[test]
fn cokernel_of_normal_inclusion_is_quotient_group_algebra() {
    let g = group("s4");
    let t = g.table().unwrap();
    let kg = Arc::new(group_algebra(&g).unwrap());
    for n in t.normal_subgroups() {
        let k = HopfSubalgebra::group_subalgebra(kg.clone(), &n).unwrap();
        let (_, incl) = k.as_hopf().unwrap();
        let (q, _) = hopf_cokernel(&incl).unwrap();
        let (kind, qt) = group_structure(&q).expect("quotient is a group algebra");
        assert_eq!(kind, GroupKind::Algebra);
        assert_eq!(identify(&qt), identify(&t.quotient(&n).0));
    }
}

#[test]
fn closure_check_rejects_non_subalgebras() {
    let kg = Arc::new(group_algebra(&group("s3")).unwrap());
    let one = kg.one_scalar();
    let v = vec![vec![(1u32, one.clone()), (2u32, one)]];
    assert!(HopfSubalgebra::new(kg, &v).is_err());
}

#[test]
fn double_of_s3_series() {
    use FactorDescriptor::*;
    let d = Arc::new(drinfeld_double(&group("s3")).unwrap());
    let s = composition_series_hopf(&d, &SeriesStrategy::default()).unwrap();
    assert_eq!(s.factor_string(), "{k^Z2, k^Z3, kZ3, kZ2}");
    assert_eq!(s.dim_product(), 36);
    assert!(s.factors.iter().all(|f| f.is_certified_simple()));

    // Same answer when the normal subalgebra is supplied by hand.
    let one = d.one_scalar();
    let extra: Vec<_> = (0..6u32).map(|g| vec![(g * 6, one.clone())]).collect();
    let st = SeriesStrategy {
        extras: vec![extra],
        ..SeriesStrategy::default()
    };
    let s2 = composition_series_hopf(&d, &st).unwrap();
    assert!(jh_compare(&s, &s2));
    assert!(s.sorted_factors().contains(&DualGroup(IsoLabel::Cyclic(3))));
}

#[test]
fn split_extension_series() {
    use FactorDescriptor::*;
    use IsoLabel::Cyclic;
    let h = k_a4_c5();
    let s = composition_series_hopf(&h, &SeriesStrategy::default()).unwrap();
    let mut want = vec![DualGroup(Cyclic(3)), DualGroup(Cyclic(2)), DualGroup(Cyclic(2)), Group(Cyclic(5))];
    want.sort();
    assert_eq!(s.sorted_factors(), want);
}

/// Number of ways to descend to simple factors through any proper
/// nontrivial normal subgroup at each step.
fn descents(t: &hopfseq::group::GroupTable) -> usize {
    if t.order() == 1 || t.is_simple() {
        return 1;
    }
    t.normal_subgroups()
        .into_iter()
        .filter(|n| n.count_ones(..) != 1 && n.count_ones(..) != t.order())
        .map(|n| descents(&t.restrict(&n).0) * descents(&t.quotient(&n).0))
        .sum()
}

#[test]
fn exploration_counts_chains() {
    let group_oracle = |name: &str| descents(group(name).table().unwrap());
    for name in ["z6", "d4", "z2xs3", "s4"] {
        let kg = Arc::new(group_algebra(&group(name)).unwrap());
        let ex = explore_series(&kg).unwrap();
        assert!(ex.jordan_holder_holds(), "{name}");
        assert_eq!(ex.chains, group_oracle(name), "{name}");
        let dg = Arc::new(dual_group_algebra(&group(name)).unwrap());
        assert_eq!(explore_series(&dg).unwrap().chains, ex.chains, "{name} dual");
    }
    assert_eq!(explore_series(&Arc::new(group_algebra(&group("z6")).unwrap())).unwrap().chains, 2);
}

/// kQ and k^Q are never identified, even for abelian Q.
#[test]
fn jh_compare_distinguishes_group_and_dual() {
    let a = composition_series_hopf(&Arc::new(group_algebra(&group("z6")).unwrap()), &SeriesStrategy::default()).unwrap();
    let b = composition_series_hopf(&Arc::new(dual_group_algebra(&group("z6")).unwrap()), &SeriesStrategy::default()).unwrap();
    assert!(!jh_compare(&a, &b));
}

#[test]
fn unidentifiable_algebra_is_unsupported() {
    let d = drinfeld_double(&group("s3")).unwrap();
    let other = Arc::new(d.with_provenance(hopfseq::hopf::Provenance::Other));
    let err = composition_series_hopf(&other, &SeriesStrategy::default()).unwrap_err();
    assert!(matches!(err, Error::Unsupported(_)), "{err:?}");
}

#[test]
fn identity_morphism_has_trivial_kernel() {
    let h = Arc::new(group_algebra(&group("s3")).unwrap());
    let id = HopfMorphism::identity(h);
    assert_eq!(hopf_kernel(&id).unwrap().dim(), 1);
    assert_eq!(coinvariants(&id, Side::Left).dim(), 1);
}
