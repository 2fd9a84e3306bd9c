use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use lexiknot::arith::{cf_eval, cf_expand_positive, fraction_equivalent, Fraction};
use lexiknot::curvelab::poly::{q, Q};
use lexiknot::curvelab::{isolate_real_roots, Poly};
use lexiknot::diagram::{lagrange_step, TrigonalDiagram};
use lexiknot::enumerate::{canonical, enumerate_diagrams, Filter};
use lexiknot::planereduce::{
    apply_r, bump, class_of, in_semigroup, inverse_r, largest_gap_at_most, neighbors, smallest_gap_above, Branch,
    PlaneWord,
};

fn nonzero(lo: i64, hi: i64) -> impl Strategy<Value = i64> {
    (lo..=hi).prop_filter("nonzero", |m| *m != 0)
}

fn coprime_pair() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=99).prop_flat_map(|a| (Just(a), 1..a)).prop_filter("coprime", |(a, b)| num_integer::gcd(*a, *b) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 2000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn cf_round_trip((a, b) in coprime_pair()) {
        let f = Fraction::new(a, b);
        let e = cf_expand_positive(&f).unwrap();
        prop_assert!(e.iter().all(|&m| m > 0));
        prop_assert_eq!(cf_eval(&e).unwrap(), f);
    }

    #[test]
    fn reversal_is_mirror_equivalent(v in prop::collection::vec(nonzero(-9, 9), 1..8)) {
        let d = TrigonalDiagram::new(v);
        let (f, r) = (d.fraction().unwrap(), d.reversed().fraction().unwrap());
        if *f.alpha() >= BigInt::from(2) {
            prop_assert!(fraction_equivalent(&f, &r, true));
        }
    }

    #[test]
    fn lagrange_preserves_fraction(
        (v, pos) in prop::collection::vec(-6i64..=6, 2..7).prop_flat_map(|v| { let n = v.len(); (Just(v), 1..n) }),
        neg in any::<bool>(),
    ) {
        let d = TrigonalDiagram::new(v);
        let eps = if neg { -1 } else { 1 };
        let out = lagrange_step(&d, pos, eps).unwrap();
        prop_assert_eq!(out.len(), d.len() + 1);
        prop_assert_eq!(out.fraction().unwrap(), d.fraction().unwrap());
    }

    #[test]
    fn equivalence_relation(a in 3i64..80, b1 in 1i64..80, b2 in 1i64..80, b3 in 1i64..80, mirror in any::<bool>()) {
        let unit = |b: i64| (b..).find(|x| num_integer::gcd(a, *x) == 1).unwrap();
        let (b1, b2, b3) = (unit(b1), unit(b2), unit(b3));
        let (f1, f2, f3) = (Fraction::new(a, b1), Fraction::new(a, b2), Fraction::new(a, b3));
        prop_assert!(fraction_equivalent(&f1, &f1, mirror));
        prop_assert_eq!(fraction_equivalent(&f1, &f2, mirror), fraction_equivalent(&f2, &f1, mirror));
        if fraction_equivalent(&f1, &f2, mirror) && fraction_equivalent(&f2, &f3, mirror) {
            prop_assert!(fraction_equivalent(&f1, &f3, mirror));
        }
    }

    #[test]
    fn cost_zero_moves_conserve_runs(runs in prop::collection::vec(0u32..5, 1..7)) {
        let w = PlaneWord::new(runs).normalized();
        for n in neighbors(&w) {
            prop_assert_eq!(n.crossings(), w.crossings());
            prop_assert!(class_of(&n).contains(&w));
        }
    }

    #[test]
    fn inverse_r_round_trip(runs in prop::collection::vec(1u32..5, 1..5), split in 1usize..5, a in any::<bool>()) {
        let w = PlaneWord::new(runs);
        let branch = if a { Branch::A } else { Branch::B };
        if let Ok(up) = inverse_r(&w, split, branch) {
            prop_assert_eq!(up.crossings(), w.crossings() + 3);
            if branch == Branch::A && split < w.runs.len() {
                prop_assert_eq!(apply_r(&up, split).unwrap().normalized(), w.normalized());
            }
        }
    }

    #[test]
    fn semigroup_against_brute_force(b in 4u32..20, c in 1u32..60) {
        prop_assume!(b % 3 != 0);
        let brute = (0..=c / 3).any(|i| (c - 3 * i) % b == 0);
        prop_assert_eq!(in_semigroup(b, c), brute);
        let gap = smallest_gap_above(b).unwrap();
        prop_assert!(gap > b && !in_semigroup(b, gap));
        prop_assert!((b + 1..gap).all(|x| in_semigroup(b, x)));
        if let Some(g) = largest_gap_at_most(b, c) {
            prop_assert!(!in_semigroup(b, g) && (g + 1..=c).all(|x| in_semigroup(b, x)));
        }
    }

    #[test]
    fn bump_is_least_coprime(b in 1u32..200) {
        let x = bump(b);
        prop_assert!(x >= b && x % 3 != 0 && (b..x).all(|y| y % 3 == 0));
    }

    #[test]
    fn root_count_of_products(roots in prop::collection::btree_set(-20i64..20, 1..7), extra in 0usize..3) {
        let mut p = Poly::from_ints(&[1]);
        for r in &roots {
            p = &p * &Poly::new(vec![Q::new((-r).into(), 3.into()), q(1)]);
        }
        for _ in 0..extra {
            p = &p * &Poly::from_ints(&[1, 0, 1]);
        }
        let iso = isolate_real_roots(&p);
        prop_assert_eq!(iso.len(), roots.len());
        for (r, got) in roots.iter().zip(&iso) {
            let x = Q::new((*r).into(), 3.into());
            prop_assert!(got.lo <= x && x <= got.hi);
        }
    }
}

#[test]
fn reversal_exhaustive_small() {
    let vals: Vec<i64> = (-4..=4).filter(|m| *m != 0).collect();
    let mut seqs: Vec<Vec<i64>> = vec![vec![]];
    let mut checked = 0;
    for _ in 0..5 {
        seqs = seqs.iter().flat_map(|s| vals.iter().map(move |&m| [s.clone(), vec![m]].concat())).collect();
        for s in &seqs {
            let d = TrigonalDiagram::new(s.clone());
            let (f, r) = (d.fraction().unwrap(), d.reversed().fraction().unwrap());
            if *f.alpha() >= BigInt::from(2) {
                assert!(fraction_equivalent(&f, &r, true), "{d}");
                checked += 1;
            }
        }
    }
    assert!(checked > 30_000);
}

fn all_sequences(budget: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<i64>, i64)> = vec![(vec![], 0)];
    while let Some((s, used)) = stack.pop() {
        if !s.is_empty() {
            out.push(s.clone());
        }
        for m in 1..=budget - used {
            for sign in [1, -1] {
                let mut t = s.clone();
                t.push(sign * m);
                stack.push((t, used + m));
            }
        }
    }
    out
}

/// Enumeration against a direct scan of every signed sequence.
#[test]
fn enumeration_matches_brute_force() {
    let budget = 7;
    let seqs = all_sequences(budget);
    for (a, b) in [(5, 2), (7, 2), (7, 3), (9, 2), (11, 3), (13, 5), (15, 4), (17, 5), (19, 7)] {
        let f = Fraction::new(a, b);
        for filter in [Filter::NoIslet, Filter::Strict, Filter::Reduced] {
            let brute: BTreeSet<TrigonalDiagram> = seqs
                .iter()
                .map(|s| TrigonalDiagram::new(s.clone()))
                .filter(|d| filter.accepts(d))
                .filter(|d| d.fraction().map(|g| fraction_equivalent(&g, &f, true)).unwrap_or(false))
                .map(|d| canonical(&d))
                .collect();
            let got: BTreeSet<TrigonalDiagram> = enumerate_diagrams(&f, budget as usize, filter).into_iter().collect();
            assert_eq!(got, brute, "{f} {filter:?}");
        }
    }
}
