//! Property tests: structural invariants under randomized inputs.

use proptest::prelude::*;

use minparab::cascade::{cascade_roots, decompose, layers};
use minparab::groups::{CliffordElement, Monomial};
use minparab::root::{CartanType, Rat, RootSystem, Series};
use minparab::satake::{enumerate_abelian_levi_forms, restrict, satake_of};

fn arb_cartan_type() -> impl Strategy<Value = CartanType> {
    prop_oneof![
        (1usize..=6).prop_map(|r| CartanType::new(Series::A, r).unwrap()),
        (2usize..=6).prop_map(|r| CartanType::new(Series::B, r).unwrap()),
        (2usize..=6).prop_map(|r| CartanType::new(Series::C, r).unwrap()),
        (3usize..=6).prop_map(|r| CartanType::new(Series::D, r).unwrap()),
        Just(CartanType::new(Series::G, 2).unwrap()),
        Just(CartanType::new(Series::F, 4).unwrap()),
        Just(CartanType::new(Series::E, 6).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn root_systems_satisfy_classical_counts(t in arb_cartan_type()) {
        let rs = RootSystem::new(t).unwrap();
        prop_assert_eq!(rs.len(), t.root_count());
        // Closed under negation, Cartan integers integral.
        for a in rs.all_roots() {
            prop_assert!(rs.is_root(a.negated().coeffs()));
            for b in rs.all_roots().iter().take(20) {
                let num = Rat::from_integer(2) * rs.inner(&a, b).unwrap();
                let den = rs.inner(b, b).unwrap();
                prop_assert!((num / den).is_integer());
            }
        }
        // The highest root dominates all positive roots coefficientwise.
        let hi = rs.highest_root();
        for p in rs.positive_roots() {
            prop_assert!(p.le_coefficientwise(&hi));
        }
    }

    #[test]
    fn cascade_partitions_positive_roots(idx in 0usize..60) {
        let forms = enumerate_abelian_levi_forms(6);
        let id = &forms[idx % forms.len()];
        let rrs = restrict(&satake_of(id).unwrap()).unwrap();
        let betas = cascade_roots(&rrs).unwrap();
        let layer_sets = layers(&rrs, &betas);
        let mut seen: Vec<Vec<i64>> = betas.iter().map(|b| b.coeffs.clone()).collect();
        seen.extend(layer_sets.iter().flatten().map(|a| a.coeffs.clone()));
        seen.sort();
        let mut expected: Vec<Vec<i64>> =
            rrs.positive_roots().iter().map(|r| r.coeffs.clone()).collect();
        expected.sort();
        prop_assert_eq!(seen, expected);
        // Pairing involution preserves each layer.
        let d = decompose(&rrs).unwrap();
        for (beta, layer) in d.betas.iter().zip(&d.layers) {
            for a in layer {
                let partner: Vec<i64> = beta
                    .coeffs
                    .iter()
                    .zip(&a.coeffs)
                    .map(|(b, x)| b - x)
                    .collect();
                prop_assert!(layer.iter().any(|x| x.coeffs == partner));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn clifford_multiplication_is_associative(
        s1 in 0u64..256, s2 in 0u64..256, s3 in 0u64..256,
        n1 in any::<bool>(), n2 in any::<bool>(), n3 in any::<bool>(),
    ) {
        let a = CliffordElement { negative: n1, support: s1 };
        let b = CliffordElement { negative: n2, support: s2 };
        let c = CliffordElement { negative: n3, support: s3 };
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        // Squares are ±1.
        let sq = a.mul(&a);
        prop_assert_eq!(sq.support, 0);
    }

    #[test]
    fn monomial_multiplication_is_associative(
        phases in proptest::collection::vec(0u8..4, 12),
    ) {
        let p1 = Monomial { perm: vec![1, 0, 3, 2], phase: phases[0..4].to_vec() };
        let p2 = Monomial { perm: vec![2, 3, 0, 1], phase: phases[4..8].to_vec() };
        let p3 = Monomial { perm: vec![0, 2, 1, 3], phase: phases[8..12].to_vec() };
        prop_assert_eq!(p1.mul(&p2).mul(&p3), p1.mul(&p2.mul(&p3)));
    }
}
