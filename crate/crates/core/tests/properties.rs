//! Randomized structural properties at small ranks.

use cluscat::{quiver_iso, CategorySpec, ClusterCategory, Family, Quiver};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn build(family: Family, rank: u32) -> ClusterCategory {
    ClusterCategory::build(CategorySpec::new(family, rank).unwrap()).unwrap()
}

fn spec_strategy() -> impl Strategy<Value = (Family, u32)> {
    prop_oneof![
        (1u32..=6).prop_map(|r| (Family::A, r)),
        (4u32..=6).prop_map(|r| (Family::D, r)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tau_round_trips((family, rank) in spec_strategy(), pick in any::<prop::sample::Index>(), k in 1i64..5) {
        let cat = build(family, rank);
        let x = *pick.get(cat.indecs());
        prop_assert_eq!(cat.tau(cat.tau(x, k), -k), x);
        prop_assert_eq!(cat.tau(x, cat.tau_period(x) as i64), x);
    }

    #[test]
    fn canonical_representatives_are_idempotent((family, rank) in spec_strategy(), pick in any::<prop::sample::Index>()) {
        let cat = build(family, rank);
        let x = *pick.get(cat.indecs());
        prop_assert_eq!(cat.canon(cat.lift(x)), x);
    }

    #[test]
    fn ext_is_symmetric((family, rank) in spec_strategy(), p1 in any::<prop::sample::Index>(), p2 in any::<prop::sample::Index>()) {
        let cat = build(family, rank);
        let x = *p1.get(cat.indecs());
        let y = *p2.get(cat.indecs());
        prop_assert_eq!(cat.ext_dim(x, y), cat.ext_dim(y, x));
        prop_assert_eq!(cat.ext_dim(x, y), cat.hom_dim(x, cat.tau(y, 1)));
    }

    #[test]
    fn permuted_quivers_are_isomorphic(n in 2usize..7, seed in any::<u64>(), perm_seed in any::<prop::sample::Index>()) {
        let mut arrows: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        let mut state = seed | 1;
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 62 == 0 {
                    *arrows.entry((i, j)).or_insert(0) += 1;
                }
            }
        }
        let labels: Vec<String> = (0..n).map(|v| v.to_string()).collect();
        let q = Quiver::new(labels, arrows).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        let k = perm_seed.index(n.max(1));
        perm.rotate_left(k);
        let p = q.permuted(&perm);
        let iso = quiver_iso(&q, &p);
        prop_assert!(iso.is_some());
        let iso = iso.unwrap();
        for (&(i, j), &m) in q.arrows() {
            prop_assert_eq!(p.count(iso[i], iso[j]), m);
        }
    }
}
