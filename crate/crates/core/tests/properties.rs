use binomlab::verify::{
    check_cor41, check_thm15_i, check_thm41, check_thm42, check_thm43, named_kernel, power_kernels,
    ProductVariant, Status, Strength,
};
use proptest::prelude::*;

fn nonzero(max: i64) -> impl Strategy<Value = i64> {
    (1..=max).prop_flat_map(|v| prop_oneof![Just(v), Just(-v)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn checkers_are_deterministic(
        n in 1u64..30,
        a in prop::collection::vec(nonzero(3), 1..=3),
        v in 0usize..8,
    ) {
        let variant = ProductVariant::ALL[v];
        prop_assert_eq!(check_thm15_i(n, &a, variant), check_thm15_i(n, &a, variant));
    }

    #[test]
    fn partial_summation_congruences_hold(
        n in 1u64..25,
        g in 1i64..=3,
        pairs in prop::collection::vec((-2i64..=2, 0u64..=1), 1..=3),
        kernel in 0usize..8,
    ) {
        // Scaling by g makes d = gcd(a, b, n) nontrivial often.
        let n = n * g as u64;
        let a: Vec<i64> = pairs.iter().map(|p| p.0 * g).collect();
        let b: Vec<u64> = pairs.iter().map(|p| p.1 * g as u64).collect();
        let f = &power_kernels()[kernel];
        let r = check_thm41(n, f, &a, &b);
        prop_assert!(r.passed(), "{:?}", r);
        let r = check_cor41(n, &a, &b);
        prop_assert!(r.passed(), "{:?}", r);
    }

    #[test]
    fn cubic_kernel_congruence_holds(n in 1u64..30, a in prop::collection::vec(-4i64..=4, 1..=3)) {
        let f = named_kernel("k3_k_minus_1").unwrap();
        prop_assert!(check_thm42(n, &f, &a).passed());
    }

    #[test]
    fn kernel_hypotheses_are_enforced(n in 2u64..30, a in prop::collection::vec(1i64..=3, 1..=3)) {
        // f1 = k/(2k-1) is not integer-valued at k = 2.
        let f1 = named_kernel("f1").unwrap();
        prop_assert_eq!(check_thm41(n, &f1, &a, &vec![0; a.len()]).status, Status::IllPosed);
        prop_assert_eq!(check_thm42(n, &named_kernel("k2").unwrap(), &a).status, Status::IllPosed);
        // f5 has C(2k-1,k) f5(k) integral but not a multiple of k at k = 1.
        let f5 = named_kernel("f5").unwrap();
        let mut with_one = a.clone();
        with_one[0] = 1;
        prop_assert_eq!(check_thm43(n, &f5, &with_one, Strength::OverN).status, Status::IllPosed);
        prop_assert!(check_thm43(n, &f5, &with_one, Strength::Integral).passed());
    }
}
