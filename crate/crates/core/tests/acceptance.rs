//! Acceptance criteria, one test each. Every test prints a PASS/FAIL line
//! before asserting so `--nocapture` gives a readable summary.

mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use common::{brute_force_normal, group, small_groups};
use hopfseq::exact::{
    bicrossed_sequence, composition_series_hopf, dualize_sequence, explore_series, is_normal_subalgebra, jh_compare,
    FactorDescriptor, HopfSubalgebra, SeriesStrategy,
};
use hopfseq::fusion::{
    a6_simplicity_check, abelian_group, bilinear_cocycle, bilinear_coefficients, cocycle_class_trivial,
    coboundary_search, comp_series_cat, family_simplicity_check, invertible_group_order, validate_type, CatExpr,
    CatStrategy, InvertibleOrder, TraceEntry, TypeData, Verdict,
};
use hopfseq::group::{
    exact_factorizations, find_factorization, subgroup_classes, GroupRef, IsoLabel, SubgroupLattice,
    A5_CLASSES, A6_CLASSES,
};
use hopfseq::hopf::{
    drinfeld_double, dual_group_algebra, group_algebra, split_extension, verify_hopf_axioms, HopfAlgebra, TwoCocycle,
};
use num_rational::BigRational;

fn report(n: usize, name: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("criterion {n:>2} PASS  {name}");
    } else {
        println!("criterion {n:>2} FAIL  {name}");
        for f in failures.iter().take(20) {
            println!("    {f}");
        }
    }
    assert!(failures.is_empty(), "criterion {n} failed: {failures:?}");
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn tuple_multiset(rows: impl Iterator<Item = (String, usize, usize, usize)>) -> BTreeMap<(String, usize, usize, usize), usize> {
    let mut m = BTreeMap::new();
    for r in rows {
        *m.entry(r).or_default() += 1;
    }
    m
}

#[test]
fn criterion_01_table_reproduction() {
    let mut f = Vec::new();
    for (name, reference, expected) in [("a6", &A6_CLASSES[..], 22), ("a5", &A5_CLASSES[..], 9)] {
        let rows = subgroup_classes(&group(name)).unwrap();
        check(&mut f, rows.len() == expected, format!("{name}: {} classes, expected {expected}", rows.len()));
        let got = tuple_multiset(
            rows.iter()
                .map(|r| (r.iso_label.to_string(), r.order, r.char_group_order, r.normalizer_index)),
        );
        let want = tuple_multiset(reference.iter().map(|&(l, o, c, n)| (l.to_string(), o, c, n)));
        if name == "a6" {
            check(&mut f, got == want, format!("{name}: multiset differs\n got {got:?}\n want {want:?}"));
        } else {
            // Numeric columns only for A5.
            let strip = |m: &BTreeMap<(String, usize, usize, usize), usize>| {
                let mut v: Vec<_> = m.iter().flat_map(|((_, o, c, n), k)| std::iter::repeat_n((*o, *c, *n), *k)).collect();
                v.sort();
                v
            };
            check(&mut f, strip(&got) == strip(&want), format!("{name}: numeric columns differ"));
        }
    }
    report(1, "subgroup class tables of A6 (22 rows) and A5 (9 rows)", &f);
}

fn has_pair(g: &GroupRef, a: &IsoLabel, b: &IsoLabel, f: &mut Vec<String>) {
    let facts = exact_factorizations(g, true).unwrap();
    let hit = facts.iter().find(|x| {
        let (l, r) = (x.left_label(), x.right_label());
        (&l == a && &r == b) || (&l == b && &r == a)
    });
    match hit {
        Some(x) => check(f, x.verify().is_ok(), format!("{a}·{b} fails the bijection check")),
        None => f.push(format!("no factorization {a}·{b} of a group of order {}", g.order())),
    }
}

#[test]
fn criterion_02_exact_factorizations() {
    use IsoLabel::*;
    let mut f = Vec::new();
    let a6 = group("a6");
    let n = exact_factorizations(&a6, true).unwrap().len();
    check(&mut f, n == 0, format!("A6 has {n} proper exact factorizations"));

    let s6 = group("s6");
    let all = exact_factorizations(&s6, true).unwrap();
    for x in &all {
        check(&mut f, x.verify().is_ok(), format!("S6 factorization {}·{} not exact", x.left_label(), x.right_label()));
    }
    has_pair(&s6, &Alternating(6), &Cyclic(2), &mut f);
    has_pair(&s6, &Symmetric(5), &Cyclic(6), &mut f);
    // The iterated chain S6 = S5·Z6, S5 = S4·Z5, S4 = S3·Z4, S3 = Z3·Z2.
    has_pair(&group("s5"), &Symmetric(4), &Cyclic(5), &mut f);
    has_pair(&group("s4"), &Symmetric(3), &Cyclic(4), &mut f);
    has_pair(&group("s3"), &Cyclic(3), &Cyclic(2), &mut f);
    report(2, "no proper exact factorization of A6; S6 chains realized", &f);
}

fn hopf_suite() -> Vec<(String, HopfAlgebra)> {
    let mut out = Vec::new();
    for (name, g) in small_groups() {
        out.push((format!("k{name}"), group_algebra(&g).unwrap()));
        out.push((format!("k^{name}"), dual_group_algebra(&g).unwrap()));
    }
    for name in ["z1", "z2", "z3", "z4", "v4", "z5", "z6", "s3", "z7", "z8", "z2xz4", "z2xv4", "d4", "q8"] {
        out.push((format!("D({name})"), drinfeld_double(&group(name)).unwrap()));
    }
    let a5 = group("a5");
    let fac = find_factorization(&a5, &IsoLabel::Alternating(4), &IsoLabel::Cyclic(5)).unwrap().unwrap();
    out.push(("k^A4#kC5".into(), split_extension(&a5, &fac.right_group(), &fac.left_group()).unwrap()));
    out
}

#[test]
fn criterion_03_hopf_axiom_suite() {
    let mut f = Vec::new();
    let suite = hopf_suite();
    for (name, h) in &suite {
        let r = verify_hopf_axioms(h);
        check(&mut f, r.is_empty(), format!("{name}: {} violations", r.violations.len()));
    }
    let dims: BTreeMap<&str, usize> = suite.iter().map(|(n, h)| (n.as_str(), h.dim())).collect();
    check(&mut f, dims["D(s3)"] == 36, "dim D(S3) != 36");
    check(&mut f, dims["k^A4#kC5"] == 60, "dim k^A4#kC5 != 60");
    report(3, &format!("Hopf axioms on {} algebras", suite.len()), &f);
}

#[test]
fn criterion_04_exactness_and_duality() {
    let mut f = Vec::new();
    let d = Arc::new(drinfeld_double(&group("s3")).unwrap());
    let seq = bicrossed_sequence(&d).unwrap();
    let st = &seq.status;
    check(&mut f, st.maps_are_hopf && st.injective && st.surjective, "maps are not Hopf, injective and surjective");
    check(&mut f, st.kernel_condition, "ker π ≠ H i(H')⁺");
    check(&mut f, st.coinvariant_condition, "i(H') ≠ coinvariants of π");
    check(&mut f, seq.is_exact(), "sequence not exact");
    let (a, b, c) = (seq.h_prime.dim(), seq.h.dim(), seq.h_doubleprime.dim());
    check(&mut f, (a, b, c) == (6, 36, 6) && b == a * c, format!("dims {a}, {b}, {c}"));
    let dual = dualize_sequence(&seq).unwrap();
    check(&mut f, dual.is_exact(), format!("dual not exact:\n{}", dual.status.report()));
    report(4, "k → k^S3 → D(S3) → kS3 → k and its dual are exact, 36 = 6·6", &f);
}

#[test]
fn criterion_05_normality_oracle() {
    let mut f = Vec::new();
    let mut checked = 0;
    for (name, g) in small_groups() {
        let kg = Arc::new(group_algebra(&g).unwrap());
        let lattice = SubgroupLattice::compute(&g).unwrap();
        for n in lattice.all_subgroups() {
            let k = HopfSubalgebra::group_subalgebra(kg.clone(), n).unwrap();
            let hopf = is_normal_subalgebra(&k).normal;
            let elems: Vec<usize> = n.ones().collect();
            let oracle = brute_force_normal(&g, &elems);
            checked += 1;
            check(&mut f, hopf == oracle, format!("{name}: subgroup {elems:?} hopf {hopf} group {oracle}"));
        }
    }
    report(5, &format!("kN ⊆ kG normal iff N ⊴ G on {checked} subgroups"), &f);
}

fn catalog_up_to_60() -> Vec<(String, Arc<HopfAlgebra>)> {
    let mut out: Vec<(String, Arc<HopfAlgebra>)> = hopf_suite()
        .into_iter()
        .filter(|(_, h)| h.dim() <= 60)
        .map(|(n, h)| (n, Arc::new(h)))
        .collect();
    for name in ["a5", "z3xa4", "s3xs3"] {
        let g = group(name);
        if g.order() <= 60 {
            out.push((format!("k{name}"), Arc::new(group_algebra(&g).unwrap())));
            out.push((format!("k^{name}"), Arc::new(dual_group_algebra(&g).unwrap())));
        }
    }
    out
}

#[test]
fn criterion_06_hopf_jordan_holder() {
    use FactorDescriptor::*;
    use IsoLabel::Cyclic;
    let mut f = Vec::new();
    let d = Arc::new(drinfeld_double(&group("s3")).unwrap());
    let s = composition_series_hopf(&d, &SeriesStrategy::default()).unwrap();
    let mut want = vec![DualGroup(Cyclic(3)), DualGroup(Cyclic(2)), Group(Cyclic(3)), Group(Cyclic(2))];
    want.sort();
    check(&mut f, s.sorted_factors() == want, format!("D(S3) factors {}", s.factor_string()));

    let mut algebras = 0;
    let mut chains = 0;
    for (name, h) in catalog_up_to_60() {
        let ex = explore_series(&h).unwrap();
        algebras += 1;
        chains += ex.chains;
        check(&mut f, ex.jordan_holder_holds(), format!("{name}: factor multisets differ: {:?}", ex.multisets));
        let a = composition_series_hopf(&h, &SeriesStrategy::default()).unwrap();
        for choice in [hopfseq::exact::ChainChoice::LastMaximal, hopfseq::exact::ChainChoice::SmallestNormal] {
            let b = composition_series_hopf(&h, &SeriesStrategy { choice, ..SeriesStrategy::default() }).unwrap();
            check(&mut f, jh_compare(&a, &b), format!("{name}: jh_compare false for {choice:?}"));
        }
        check(&mut f, a.dim_product() == h.dim(), format!("{name}: factor dims do not multiply"));
    }
    report(6, &format!("D(S3) series; {chains} chains over {algebras} catalog algebras agree"), &f);
}

fn value<'a>(e: &'a TraceEntry, key: &str) -> &'a str {
    e.value(key).unwrap_or("")
}

#[test]
fn criterion_07_a6_certificate() {
    let mut f = Vec::new();
    let c = a6_simplicity_check().unwrap();
    check(&mut f, c.verdict == Verdict::Simple, format!("verdict {}", c.verdict));
    let s2: Vec<_> = c.entries("S2").collect();
    check(&mut f, s2.len() == 22, format!("{} S2 entries", s2.len()));
    let mut survivors: Vec<String> = s2.iter().filter(|e| !e.eliminated).map(|e| value(e, "t_label").to_string()).collect();
    survivors.sort();
    survivors.dedup();
    check(&mut f, survivors == ["A4", "Z2×Z2", "Z3"], format!("S2 survivors {survivors:?}"));
    for e in s2.iter().filter(|e| !e.eliminated) {
        check(&mut f, value(e, "h_label") == "A5", format!("survivor paired with {}", value(e, "h_label")));
    }
    let s3: Vec<_> = c.entries("S3").collect();
    let find = |t: &'static str| s3.iter().filter(move |e| value(e, "t_label") == t);
    for e in find("Z2×Z2") {
        check(&mut f, value(e, "bound") == "24" && value(e, "required") == "72", format!("V4: {:?}", e.values));
        check(&mut f, e.eliminated, "V4 not eliminated");
    }
    for e in find("Z3") {
        check(&mut f, value(e, "bound") == "18" && value(e, "required") == "36", format!("Z3: {:?}", e.values));
        check(&mut f, e.eliminated, "Z3 not eliminated");
    }
    for e in find("A4") {
        check(&mut f, value(e, "forced_divisor") == "9" && value(e, "bound") == "6", format!("A4: {:?}", e.values));
        check(&mut f, e.eliminated, "A4 not eliminated");
    }
    check(&mut f, find("Z2×Z2").count() > 0 && find("Z3").count() > 0 && find("A4").count() > 0, "missing S3 entries");
    report(7, "A6 simplicity certificate: survivors V4, Z3, A4 eliminated by 24/72, 18/36, 9∤6", &f);
}

#[test]
fn criterion_08_jordan_holder_failure() {
    let mut f = Vec::new();
    let s6 = group("s6");
    let v = CatExpr::vec(s6).unwrap();
    let sorted = |mut v: Vec<&str>| {
        v.sort();
        v.into_iter().map(String::from).collect::<Vec<_>>()
    };
    let cases = [
        (v.clone(), CatStrategy::a6(), sorted(vec!["vect_A6", "vect_Z2"])),
        (
            v.clone(),
            CatStrategy::iterated(),
            sorted(vec!["vect_Z3", "vect_Z2", "vect_Z2", "vect_Z2", "vect_Z5", "vect_Z3", "vect_Z2"]),
        ),
        (CatExpr::center(v.clone()), CatStrategy::a6(), sorted(vec!["Rep Z2", "Rep A6", "vect_A6", "vect_Z2"])),
        (
            CatExpr::center(v.clone()),
            CatStrategy::iterated(),
            sorted(vec![
                "Rep Z2", "Rep A6", "vect_Z3", "vect_Z2", "vect_Z2", "vect_Z2", "vect_Z5", "vect_Z3", "vect_Z2",
            ]),
        ),
    ];
    let mut lengths = Vec::new();
    for (expr, strategy, want) in cases {
        let s = comp_series_cat(&expr, &strategy).unwrap();
        lengths.push(s.len());
        check(&mut f, s.sorted_factor_names() == want, format!("{expr} / {}: {:?}", strategy.name, s.factor_names()));
        check(&mut f, s.all_certified(), format!("{expr} / {}: uncertified factor", strategy.name));
        check(&mut f, s.fpdim_product() == expr.fpdim, format!("{expr}: FPdim product differs"));
    }
    check(&mut f, lengths == [2, 7, 4, 9], format!("lengths {lengths:?}"));
    report(8, "VecG(S6) series of lengths 2 and 7, its center 4 and 9", &f);
}

#[test]
fn criterion_09_family_certificates() {
    let mut f = Vec::new();
    for p in [3, 5, 7] {
        let c = family_simplicity_check(&CatExpr::tambara_yamagami(p).unwrap()).unwrap();
        check(&mut f, c.verdict == Verdict::Simple, format!("TY({p}): {}", c.verdict));
    }
    let c = family_simplicity_check(&CatExpr::cpq(3, 5).unwrap()).unwrap();
    check(&mut f, c.verdict == Verdict::Simple, format!("Cpq(3,5): {}", c.verdict));
    let types: [(&[(u64, u64)], u64); 6] = [
        (&[(1, 12), (4, 3)], 60),
        (&[(1, 72), (4, 18)], 360),
        (&[(1, 24), (2, 12), (4, 6), (8, 3)], 360),
        (&[(1, 1), (3, 2), (4, 1), (5, 1)], 60),
        (&[(1, 12), (4, 3)], 60),
        (&[(1, 4), (2, 6), (4, 2)], 60),
    ];
    for (dims, total) in types {
        let t = TypeData::from_dims(dims);
        let ok = validate_type(&t, &BigRational::from_integer(total.into()));
        check(&mut f, ok, format!("type {dims:?} does not sum to {total}"));
        let oracle: u64 = dims.iter().map(|(d, m)| d * d * m).sum();
        check(&mut f, oracle == total, format!("oracle sum {oracle} for {dims:?}"));
    }
    report(9, "TY(3), TY(5), TY(7), C(3,5) simple; type constants validated", &f);
}

#[test]
fn criterion_10_cross_module_oracle() {
    let mut f = Vec::new();
    let a6 = group("a6");
    let rows = subgroup_classes(&a6).unwrap();
    let mut agreements = 0;
    for r in &rows {
        let t = a6.subgroup(&r.elements).unwrap().into_ref();
        let psi = TwoCocycle::trivial(t, 1);
        match invertible_group_order(&a6, &r.elements, &psi).unwrap() {
            InvertibleOrder::Exact(n) if n == r.normalizer_index * r.char_group_order => agreements += 1,
            other => f.push(format!("{}: {other:?} vs {}", r.iso_label, r.normalizer_index * r.char_group_order)),
        }
    }
    check(&mut f, agreements == 22, format!("{agreements} agreements"));

    let moduli: &[&[usize]] =
        &[&[1], &[2], &[3], &[4], &[2, 2], &[5], &[6], &[2, 3], &[7], &[8], &[2, 4], &[2, 2, 2], &[9], &[3, 3]];
    let mut forms = 0;
    for m in moduli {
        let (t, coords) = abelian_group(m).unwrap();
        let n = t.order();
        let table = t.table().unwrap().clone();
        for conductor in 1..=4u32 {
            for c in bilinear_coefficients(m, conductor) {
                let beta = bilinear_cocycle(t.clone(), &coords, m, &c, conductor).unwrap();
                // Twist by a fixed non-trivial coboundary so the tested
                // cocycle is not bilinear.
                let fexp = |a: usize| ((a * a + 3 * a) as u32) % conductor;
                let values = (0..n * n)
                    .map(|i| {
                        let (a, b) = (i / n, i % n);
                        let ab = table.mul(a as u32, b as u32) as usize;
                        (beta.value(a, b) + fexp(a) + fexp(b) + conductor - fexp(ab)) % conductor
                    })
                    .collect();
                let psi = TwoCocycle::new(t.clone(), conductor, values).unwrap();
                check(&mut f, psi.cocycle_violations().unwrap().is_empty(), format!("{m:?}: not a cocycle"));
                let criterion = cocycle_class_trivial(&psi).unwrap();
                let brute = coboundary_search(&psi).unwrap().is_some();
                forms += 1;
                check(&mut f, criterion == brute, format!("{m:?} N={conductor} c={c:?}: {criterion} vs {brute}"));
            }
        }
    }
    report(10, &format!("22 invertible-group agreements; {forms} cocycles agree with brute force"), &f);
}
