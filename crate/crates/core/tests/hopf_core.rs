mod common;

use std::sync::Arc;

use common::group;
use hopfseq::fusion::abelian_group;
use hopfseq::hopf::{
    bicrossed_product, drinfeld_double, dual_group_algebra, dual_hopf, dump_hopf, group_algebra, load_hopf,
    solve_antipode, split_extension, verify_hopf_axioms, verify_hopf_axioms_sampled, Axiom, CycScalar, HopfAlgebra,
    HopfMorphism, PairedCocycles, Provenance,
};
use hopfseq::matched_pair::MatchedPair;
use hopfseq::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const CONDUCTORS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn scalar() -> impl Strategy<Value = CycScalar> {
    (0..CONDUCTORS.len()).prop_flat_map(|i| {
        let n = CONDUCTORS[i];
        let phi = hopfseq::hopf::scalar::euler_phi(n);
        prop::collection::vec((-6i64..6, 1i64..4), phi).prop_map(move |v| {
            let coords = v.into_iter().map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b))).collect();
            CycScalar::from_coords(n, coords).unwrap()
        })
    })
}

fn lifted(a: &CycScalar, b: &CycScalar) -> (CycScalar, CycScalar) {
    let (m, n) = (a.conductor(), b.conductor());
    let l = num_integer::lcm(m, n);
    (a.lift(l), b.lift(l))
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        let (a, b) = lifted(&a, &b);
        let (a, c) = lifted(&a, &c);
        let b = b.lift(a.conductor());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn roots_of_unity(k in -30i64..30, i in 0..CONDUCTORS.len()) {
        let n = CONDUCTORS[i];
        let z = CycScalar::zeta_power(n, k);
        let mut p = CycScalar::one(n);
        for _ in 0..n {
            p = &p * &z;
        }
        prop_assert!(p.is_one());
        prop_assert_eq!(CycScalar::zeta_power(n, k + n as i64), z.clone());
        prop_assert_eq!(&z * &CycScalar::zeta_power(n, -k), CycScalar::one(n));
    }

    #[test]
    fn coordinate_text_round_trip(a in scalar()) {
        let text = a.coords_string();
        prop_assert_eq!(CycScalar::parse_coords(a.conductor(), &text).unwrap(), a);
    }

    #[test]
    fn sampled_verification_finds_nothing_on_valid_algebras(seed in 0u64..1000) {
        let h = drinfeld_double(&group("s3")).unwrap();
        prop_assert!(verify_hopf_axioms_sampled(&h, 50, seed).is_empty());
    }
}

/// Sum of all roots of unity of order n is μ(n) (Möbius).
#[test]
fn sum_of_primitive_roots_is_mobius() {
    for (n, mu) in [(1u32, 1i64), (2, -1), (3, -1), (4, 0), (5, -1), (6, 1), (8, 0), (12, 0)] {
        let mut s = CycScalar::zero(n);
        for k in 1..=n as i64 {
            if num_integer::gcd(k, n as i64) == 1 {
                s += &CycScalar::zeta_power(n, k);
            }
        }
        assert_eq!(s, CycScalar::from_int(n, mu), "n = {n}");
    }
}

#[test]
fn dimensions_and_commutativity() {
    let s3 = group("s3");
    let kg = group_algebra(&s3).unwrap();
    let dg = dual_group_algebra(&s3).unwrap();
    let d = drinfeld_double(&s3).unwrap();
    assert_eq!((kg.dim(), dg.dim(), d.dim()), (6, 6, 36));
    assert!(kg.is_cocommutative() && !kg.is_commutative());
    assert!(dg.is_commutative() && !dg.is_cocommutative());
    assert!(!d.is_commutative() && !d.is_cocommutative());
    assert!(matches!(kg.provenance(), Provenance::GroupAlgebra(_)));
    assert!(matches!(d.provenance(), Provenance::Bicrossed(_)));
}

#[test]
fn duality_is_involutive() {
    for h in [group_algebra(&group("q8")).unwrap(), drinfeld_double(&group("s3")).unwrap()] {
        let dd = dual_hopf(&dual_hopf(&h));
        assert!(dd.same_structure(&h));
        let d = dual_hopf(&h);
        assert!(verify_hopf_axioms(&d).is_empty());
        assert_eq!(d.is_commutative(), h.is_cocommutative());
    }
    assert!(dual_hopf(&group_algebra(&group("s3")).unwrap()).same_structure(&dual_group_algebra(&group("s3")).unwrap()));
}

/// Semisimple Hopf algebras in characteristic zero have S² = id.
#[test]
fn antipode_is_involutive() {
    let a5 = group("a5");
    let f = hopfseq::group::find_factorization(&a5, &hopfseq::group::IsoLabel::Alternating(4), &hopfseq::group::IsoLabel::Cyclic(5))
        .unwrap()
        .unwrap();
    for h in [drinfeld_double(&group("d4")).unwrap(), split_extension(&a5, &f.right_group(), &f.left_group()).unwrap()] {
        for i in 0..h.dim() {
            let s2 = h.antipode(&h.antipode(&h.basis_vec(i)));
            assert_eq!(s2, h.basis_vec(i));
        }
    }
}

#[test]
fn solved_antipode_matches_construction() {
    let d = drinfeld_double(&group("s3")).unwrap();
    let s = solve_antipode(&d).unwrap().unwrap();
    assert_eq!(&s[..], d.antipode_columns());
}

#[test]
fn text_round_trip() {
    for h in [drinfeld_double(&group("s3")).unwrap(), dual_group_algebra(&group("a4")).unwrap()] {
        let back = load_hopf(&dump_hopf(&h)).unwrap();
        assert!(back.same_structure(&h));
        assert!(verify_hopf_axioms(&back).is_empty());
    }
}

#[test]
fn malformed_text_is_a_parse_error() {
    let text = dump_hopf(&group_algebra(&group("z2")).unwrap());
    let broken = text.replacen("1", "x", 3);
    assert!(matches!(load_hopf(&broken), Err(Error::Parse { .. }) | Err(Error::InvalidArgument(_))));
}

#[test]
fn corrupted_structure_constants_are_reported() {
    let h = group_algebra(&group("s3")).unwrap();
    let mut data = h.to_data();
    data.mult.swap(7, 8);
    let bad = HopfAlgebra::from_data(data, Provenance::Other);
    let r = verify_hopf_axioms(&bad);
    assert!(!r.is_empty());
    assert!(r.violations.iter().any(|v| v.axiom == Axiom::Associativity || v.axiom == Axiom::ComultMultiplicative));

    let mut data = h.to_data();
    data.antipode.swap(1, 2);
    let bad = HopfAlgebra::from_data(data, Provenance::Other);
    let r = verify_hopf_axioms(&bad);
    assert!(r.violations.iter().all(|v| matches!(v.axiom, Axiom::AntipodeLeft | Axiom::AntipodeRight)));
    assert!(!r.is_empty());
}

/// A cocycle-twisted abelian extension k^Z2 #_σ k[Z2×Z2], σ_s the
/// nondegenerate bicharacter for s ≠ e.
#[test]
fn twisted_bicrossed_product() {
    let (v4, coords) = abelian_group(&[2, 2]).unwrap();
    let z2 = group("z2");
    let mp = MatchedPair::trivial(v4.clone(), z2.clone());
    let e_s = z2.table().unwrap().identity() as usize;
    let (ng, ns) = (4, 2);
    let mut sigma = vec![0u32; ng * ng * ns];
    for x in 0..ng {
        for y in 0..ng {
            for s in 0..ns {
                if s != e_s {
                    sigma[(x * ng + y) * ns + s] = (coords[x][0] * coords[y][1]) as u32 % 2;
                }
            }
        }
    }
    let cocycles = PairedCocycles {
        conductor: 2,
        sigma,
        tau: vec![0; ns * ns * ng],
    };
    let h = bicrossed_product(&mp, &cocycles, 2).unwrap();
    assert_eq!(h.dim(), 8);
    assert!(verify_hopf_axioms(&h).is_empty());
    assert!(!h.is_commutative());
    assert!(h.is_cocommutative());
    let untwisted = bicrossed_product(&mp, &PairedCocycles::trivial(&mp), 2).unwrap();
    assert!(untwisted.is_commutative());
}

#[test]
fn morphisms() {
    let h = Arc::new(drinfeld_double(&group("s3")).unwrap());
    let id = HopfMorphism::identity(h.clone());
    assert!(id.verify().is_empty());
    assert!(id.is_injective() && id.is_surjective());
    let eps = HopfMorphism::counit_map(h.clone());
    assert!(eps.verify().is_empty());
    assert_eq!(eps.rank(), 1);
    assert_eq!(eps.kernel().dim(), 35);
}

#[test]
fn dimension_cap_is_enforced() {
    let s7 = group("s7");
    let err = group_algebra(&s7).unwrap_err();
    assert!(matches!(err, Error::CapExceeded { .. }), "{err:?}");
}
