use proptest::prelude::*;

use virasoro_core::characters::{extract_multiplicities, verify_su21_branching, CharacterFamily};
use virasoro_core::{qs_mul, qs_partition_generating, qs_theta, ExactScalar, QSeries};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn c1_round_trip(mults in proptest::collection::vec(0u64..=5, 4)) {
        let order = 20;
        let family = CharacterFamily::c1(order);
        let combo: Vec<(ExactScalar, u64)> = mults
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(j, &m)| (ExactScalar::from((j * j) as i64), m))
            .collect();
        let chi = family.combine(&combo, &ExactScalar::zero(), order).unwrap();
        let back = extract_multiplicities(&chi, &family, order).unwrap();
        prop_assert_eq!(back, combo);
    }
}

#[test]
fn su21_branching_all_jmax() {
    for jmax in 0..=6u64 {
        let order = ((jmax + 1) * (jmax + 1) - 1) as usize;
        let r = verify_su21_branching(jmax, order).unwrap();
        assert!(r.pass && r.telescoping, "{r:?}");
        let expected: Vec<(u64, u64)> = (0..=jmax).map(|j| (j * j, 2 * j + 1)).collect();
        assert_eq!(r.multiplicities, expected);
    }
    assert!(verify_su21_branching(2, 9).is_err());
}

#[test]
fn theta_times_partitions_is_not_peeled_by_a_wrong_family() {
    let order = 10;
    let chi = qs_mul(&qs_theta(order), &qs_partition_generating(order));
    let shifted = CharacterFamily::new(
        ExactScalar::one(),
        vec![(ExactScalar::zero(), QSeries::from_integers(ExactScalar::zero(), &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]))],
    )
    .unwrap();
    assert!(extract_multiplicities(&chi, &shifted, order).is_err());
}
