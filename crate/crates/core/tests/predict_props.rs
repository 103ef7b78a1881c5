mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use qtorus_core::catalog;
use qtorus_core::invariants::kdim;
use qtorus_core::predict::{dichotomy_set, extension_superset, forbidden_dims, user_vset, PredictError};
use qtorus_core::DimSemantics;

use common::presentation;

fn subset(max: usize) -> impl Strategy<Value = BTreeSet<usize>> {
    proptest::collection::btree_set(0..=max, 0..=max)
}

proptest! {
    #[test]
    fn superset_is_monotone_in_v(v in subset(4), extra in subset(4)) {
        let (q, sigma) = (catalog::corner_torus(), catalog::fresh_sigma());
        let bigger: BTreeSet<usize> = v.union(&extra).copied().collect();
        let small = extension_superset(&q, &sigma, &user_vset(v)).unwrap();
        let large = extension_superset(&q, &sigma, &user_vset(bigger)).unwrap();
        prop_assert!(small.values.is_subset(&large.values));
        prop_assert_eq!(small.semantics, DimSemantics::Superset);
    }

    #[test]
    fn forbidden_partitions_the_range(v in subset(9), n_star in 0usize..=9) {
        let s = user_vset(v);
        let forbidden = forbidden_dims(&s, n_star).unwrap();
        prop_assert!(forbidden.is_disjoint(&s.values));
        let all: BTreeSet<usize> = forbidden.union(&s.values).copied().filter(|&d| d >= 1 && d <= n_star).collect();
        prop_assert_eq!(all, (1..=n_star).collect::<BTreeSet<_>>());
    }

    #[test]
    fn dichotomy_is_always_decided(q in presentation(5, 4, 2)) {
        let n = q.n();
        let kd = kdim(&q, 2);
        match dichotomy_set(&q, &kd) {
            Ok(s) => {
                prop_assert_eq!(kd.value(), Some(n - 1));
                prop_assert!(matches!(s.values.len(), 1 | 2));
                prop_assert!(s.values.iter().all(|&d| (1..n).contains(&d)));
                prop_assert!(s.values.contains(&1));
                prop_assert!(matches!(forbidden_dims(&s, n), Err(PredictError::WrongSemantics(_))));
            }
            Err(PredictError::HypothesisFailed { .. }) => prop_assert!(kd.upper + 1 < n || kd.lower == n),
            // the hyperplane test always decides whether K.dim = n - 1
            Err(e) => prop_assert!(false, "unexpected error {e} for {kd:?}"),
        }
    }
}
