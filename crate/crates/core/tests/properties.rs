use charprobe::distinguish::distinguish;
use charprobe::identify::identify;
use charprobe::mn_eval::chi;
use charprobe::oracle::exact_oracle;
use charprobe::partitions::Partition;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..9, 1..9).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn identify_is_exact_beyond_the_exhaustive_range(shape in partition()) {
        let n = shape.n();
        let result = identify(&mut exact_oracle(shape.clone()), n).unwrap();
        prop_assert_eq!(&result.partition, &shape);
        prop_assert!(result.transcript.count() <= n * n);
        prop_assert_eq!(result.phases.total(), result.transcript.count());
    }

    #[test]
    fn doppelganger_pairs_are_separated(shape in partition()) {
        let dop = shape.doppelganger();
        prop_assume!(dop != shape);
        let s = distinguish(&shape, &dop).unwrap();
        prop_assert_ne!(chi(&shape, &s.witness).unwrap(), chi(&dop, &s.witness).unwrap());
        prop_assert_eq!(&s.value_lambda, &chi(&shape, &s.witness).unwrap());
    }

    #[test]
    fn conjugates_are_separated(shape in partition()) {
        let conj = shape.conjugate();
        prop_assume!(conj != shape);
        let s = distinguish(&shape, &conj).unwrap();
        prop_assert_ne!(s.value_lambda, s.value_mu);
    }
}
