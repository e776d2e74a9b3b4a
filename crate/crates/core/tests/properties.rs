//! Randomized property tests for the arithmetic layer and the graph
//! primitives.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use sympoly_core::exact::{RatPoly, RationalFunction, RfMatrix};
use sympoly_core::facets::count_facets;
use sympoly_core::graph::{Graph, DEFAULT_FLATS_EDGE_CAP};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            proptest::collection::vec(any::<bool>(), pairs.len())
                .prop_map(move |keep| {
                    let edges: Vec<(usize, usize)> = pairs
                        .iter()
                        .zip(&keep)
                        .filter(|(_, &k)| k)
                        .map(|(&e, _)| e)
                        .collect();
                    Graph::new(n, &edges).unwrap()
                })
        })
        .prop_filter("connected", Graph::is_connected)
}

fn arb_ratpoly(max_len: usize) -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(-6i64..=6, 0..=max_len).prop_map(|c| RatPoly::from_i64(&c))
}

fn arb_ratfun() -> impl Strategy<Value = RationalFunction> {
    (arb_ratpoly(4), arb_ratpoly(4))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spanning_tree_count_matches_matrix_tree(g in arb_graph(6)) {
        let trees = g.spanning_trees().unwrap();
        prop_assert_eq!(BigInt::from(trees.len()), g.matrix_tree_count());
        for t in &trees {
            prop_assert_eq!(t.len(), g.n() - 1);
        }
    }

    #[test]
    fn distances_form_a_metric(g in arb_graph(7)) {
        let all: Vec<Vec<usize>> = (0..g.n()).map(|v| g.distances(v).unwrap()).collect();
        for u in 0..g.n() {
            prop_assert_eq!(all[u][u], 0);
            for v in 0..g.n() {
                prop_assert_eq!(all[u][v], all[v][u]);
                for w in 0..g.n() {
                    prop_assert!(all[u][w] <= all[u][v] + all[v][w]);
                }
            }
        }
    }

    #[test]
    fn contracting_a_spanning_tree_leaves_one_vertex(g in arb_graph(6)) {
        let tree = g.spanning_trees().unwrap().into_iter().next().unwrap();
        let contracted = g.contract(&tree);
        prop_assert_eq!(contracted.n(), 1);
        prop_assert_eq!(g.contract(&[]), g);
    }

    #[test]
    fn facet_count_is_even(g in arb_graph(6)) {
        prop_assert_eq!(count_facets(&g).unwrap() % 2, 0);
    }

    #[test]
    fn field_inverse_multiplies_to_one(f in arb_ratfun()) {
        prop_assume!(!f.is_zero());
        let prod = &f * &f.recip().unwrap();
        prop_assert_eq!(prod, RationalFunction::one());
    }

    #[test]
    fn series_of_product_is_cauchy_product(f in arb_ratfun(), g in arb_ratfun()) {
        prop_assume!(!f.den().coeff(0).is_zero() && !g.den().coeff(0).is_zero());
        let n = 8;
        let fs = f.series(n).unwrap();
        let gs = g.series(n).unwrap();
        let ps = (&f * &g).series(n).unwrap();
        for i in 0..=n {
            let cauchy: BigRational = (0..=i).map(|j| &fs[j] * &gs[i - j]).sum();
            prop_assert_eq!(&ps[i], &cauchy);
        }
    }

    #[test]
    fn linear_solve_residual_is_zero(entries in proptest::collection::vec(-5i64..=5, 9),
                                     rhs in proptest::collection::vec(-5i64..=5, 3)) {
        let a = RfMatrix::new(
            3,
            3,
            entries.iter().map(|&e| RationalFunction::from_int(e)).collect(),
        );
        let b: Vec<RationalFunction> = rhs.iter().map(|&e| RationalFunction::from_int(e)).collect();
        if let Ok(x) = a.solve(&b) {
            for i in 0..3 {
                let mut acc = RationalFunction::zero();
                for j in 0..3 {
                    acc = &acc + &(a.at(i, j) * &x[j]);
                }
                prop_assert_eq!(&acc, &b[i]);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Closure in the graphic matroid is extensive and idempotent.
    #[test]
    fn closure_is_extensive_and_idempotent(
        (g, mask) in arb_graph(6)
            .prop_filter("few edges", |g| g.m() <= 12)
            .prop_flat_map(|g| {
                let m = g.m() as u32;
                (Just(g), 0u64..(1u64 << m))
            })
    ) {
        let closed = g.closure(mask);
        prop_assert_eq!(closed & mask, mask);
        prop_assert_eq!(g.closure(closed), closed);
        // Closed sets are exactly the members of the flat lattice.
        let flats = g.flats(DEFAULT_FLATS_EDGE_CAP).unwrap();
        prop_assert!(flats.flats.contains(&closed));
    }
}
