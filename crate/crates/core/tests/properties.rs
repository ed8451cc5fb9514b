use std::collections::BTreeSet;

use essgb::verify::{compare_results, verify_result};
use essgb::{bm_gb, ess_gb, FieldContext, PointSet, TermOrder};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = PointSet> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 1usize..6)
        .prop_flat_map(|(p, n)| {
            let row = prop::collection::vec(0..p, n);
            (Just(p), prop::collection::btree_set(row, 1..8))
        })
        .prop_map(|(p, rows): (u32, BTreeSet<Vec<u32>>)| {
            let rows: Vec<Vec<u32>> = rows.into_iter().collect();
            PointSet::from_rows(FieldContext::new(p as u64).unwrap(), &rows).unwrap()
        })
}

fn order() -> impl Strategy<Value = TermOrder> {
    prop_oneof![Just(TermOrder::Lex), Just(TermOrder::GRevLex)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn algorithms_agree(points in instance(), ord in order()) {
        let ess = ess_gb(&points, ord).unwrap();
        let bm = bm_gb(&points, ord).unwrap();
        prop_assert!(compare_results(&ess, &bm).passed());
        prop_assert_eq!(ess.checksum(), bm.checksum());
        prop_assert!(verify_result(&ess, &points, ord).passed());
    }

    #[test]
    fn point_file_round_trip(points in instance()) {
        let text = points.to_file_string();
        prop_assert_eq!(PointSet::parse(&text, *points.field()).unwrap(), points);
    }

    #[test]
    fn standard_monomial_count_is_point_count(points in instance(), ord in order()) {
        let r = ess_gb(&points, ord).unwrap();
        prop_assert_eq!(r.standard_monomials.len(), points.len());
        prop_assert_eq!(r.separators.len(), points.len());
    }

    #[test]
    fn adding_a_zero_column_adds_a_linear_generator(points in instance(), ord in order()) {
        // a coordinate that is constantly 0 contributes exactly the generator x_{n+1}
        let n = points.nvars();
        let rows: Vec<Vec<u32>> = points
            .iter()
            .map(|pt| pt.iter().map(|x| x.value()).chain([0]).collect())
            .collect();
        let wider = PointSet::from_rows(*points.field(), &rows).unwrap();
        let r = ess_gb(&wider, ord).unwrap();
        let last = format!("x{}", n + 1);
        prop_assert!(r.basis.iter().any(|g| g.to_string() == last));
        prop_assert!(!r.essential_vars().contains(&n));
    }
}
