//! Property tests over arbitrary inputs, including raw L-space-knot gap
//! sets that need not come from semigroups.

use cuspidal_core::{
    build_semigroup, d_invariant, r_table, r_value, spinc_range, AlexanderPoly, Configuration,
    CuspDescriptor, SurgeryProblem,
};
use proptest::collection::vec;
use proptest::prelude::*;

fn gap_set_strategy() -> impl Strategy<Value = Vec<u64>> {
    vec(1u64..60, 0..12)
}

proptest! {
    #[test]
    fn gap_set_tables_are_well_formed(gaps in gap_set_strategy()) {
        let t = build_semigroup(&CuspDescriptor::GapSet(gaps.clone())).unwrap();
        let mut sorted = gaps;
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(t.delta(), sorted.len() as u64);
        prop_assert_eq!(t.conductor(), sorted.last().map_or(0, |g| g + 1));
        prop_assert_eq!(t.count_at(0), 0);
        for k in 0..(t.conductor() as i64 + 10) {
            let step = t.count_at(k + 1) - t.count_at(k);
            prop_assert!(step == 0 || step == 1);
        }
        for k in t.conductor() as i64..(t.conductor() as i64 + 10) {
            prop_assert_eq!(t.count_at(k), k - t.delta() as i64);
        }
        // Delta(1) = 1 holds for any gap set by construction
        prop_assert_eq!(AlexanderPoly::from_table(&t).eval_at_one(), 1);
    }

    #[test]
    fn r_is_order_independent_and_unit_stepped(
        sets in vec(gap_set_strategy(), 1..4),
        horizon in 0usize..60,
    ) {
        let tables: Vec<_> = sets
            .iter()
            .map(|s| build_semigroup(&CuspDescriptor::GapSet(s.clone())).unwrap())
            .collect();
        let cfg = Configuration::new(tables.clone()).unwrap();
        let mut rev = tables;
        rev.reverse();
        let cfg_rev = Configuration::new(rev).unwrap();
        let a = r_table(&cfg, horizon);
        let b = r_table(&cfg_rev, horizon);
        prop_assert_eq!(a.values(), b.values());
        for m in -5..0 {
            prop_assert_eq!(r_value(&cfg, m), 0);
        }
        // R is bounded below by m - g and above by the first cusp's count
        let g = cfg.g() as i64;
        for m in 0..=horizon as i64 {
            prop_assert!(r_value(&cfg, m) >= m - g);
            prop_assert!(r_value(&cfg, m) <= cfg.cusps()[0].count_at(m));
        }
    }

    #[test]
    fn spinc_range_brackets_q(q in 1i64..200) {
        let range = spinc_range(q).unwrap();
        prop_assert_eq!(range.len() as i64, q);
        for s in &range {
            prop_assert!(-q <= 2 * s.m() && 2 * s.m() < q);
        }
        for w in range.windows(2) {
            prop_assert_eq!(w[1].m(), w[0].m() + 1);
        }
    }

    #[test]
    fn d_invariant_denominators_divide_4q(
        gaps in gap_set_strategy(),
        extra in 1i64..8,
    ) {
        let t = build_semigroup(&CuspDescriptor::GapSet(gaps)).unwrap();
        let cfg = Configuration::new(vec![t]).unwrap();
        let q = 2 * cfg.g() as i64 + extra;
        let prob = SurgeryProblem::new(cfg, q).unwrap();
        for s in spinc_range(q).unwrap() {
            let d = d_invariant(&prob, s.m()).unwrap();
            let four_q = num::BigInt::from(4 * q);
            prop_assert_eq!(&four_q % d.denom(), num::BigInt::from(0));
        }
    }
}
