use proptest::prelude::*;
use ripshadow::geometry::{rat, Point};
use ripshadow::homology::{betti_numbers, integer_h1, Field};
use ripshadow::shadow::{build_shadow, shadow_betti};
use ripshadow::simplicial::build_rips;

fn grid_points() -> impl Strategy<Value = Vec<Point>> {
    proptest::collection::btree_set((0i64..=12, 0i64..=12), 3..14)
        .prop_map(|s| s.into_iter().map(|(x, y)| Point::xy(rat(x, 4), rat(y, 4))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rips_and_shadow_betti_agree(points in grid_points()) {
        let r = build_rips(&points, &rat(1, 1), 3).unwrap();
        let s = build_shadow(&r).unwrap();
        let b = betti_numbers(&r, Field::Rationals, 1).unwrap();
        prop_assert_eq!(shadow_betti(&s), (b.betti[0], b.betti[1]));
        prop_assert!(integer_h1(&r).unwrap().is_torsion_free());
        prop_assert_eq!(s.euler_b1(), shadow_betti(&s).1 as i64);
        prop_assert!(s.coverage_consistent());
    }

    #[test]
    fn edges_are_concatenations_of_pieces(points in grid_points()) {
        let r = build_rips(&points, &rat(1, 1), 2).unwrap();
        let s = build_shadow(&r).unwrap();
        for (u, v) in r.edges() {
            let chain = s.chain(u, v).unwrap();
            prop_assert_eq!(chain[0], s.shadow_vertex_of(u));
            prop_assert_eq!(*chain.last().unwrap(), s.shadow_vertex_of(v));
            for w in chain.windows(2) {
                let e = s.edge_between(w[0], w[1]).unwrap();
                prop_assert!(s.edges()[e].provenance.contains(&(u, v)));
            }
        }
    }
}
