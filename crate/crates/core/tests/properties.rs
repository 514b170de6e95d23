// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Property tests over random connected graphs.

use edim::families::random_tree;
use edim::io::{parse_edge_list, write_edge_list};
use edim::lp::{
    dim_f, edim_f, reduce_constraints, solve_covering_lp, solve_covering_lp_dual, CoveringLp,
};
use edim::resolving::{
    edge_code_multiset, is_edge_resolving_function, is_edge_resolving_set, is_resolving_function,
};
use edim::search::{self, brute_force_minimum, Mode};
use edim::structure::twin_partition;
use edim::{ratio, DistMatrix, Graph, VertexSet};
use proptest::prelude::*;

/// A random tree on `3..=max_n` vertices plus a few extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (
        3..=max_n,
        any::<u64>(),
        prop::collection::vec((0usize..64, 0usize..64), 0..8),
    )
        .prop_map(|(n, seed, extra)| {
            let tree = random_tree(n, seed).unwrap().graph;
            let mut pairs = tree.edges().to_vec();
            for (a, b) in extra {
                let (u, v) = (a % n, b % n);
                if u != v && !pairs.contains(&(u.min(v), u.max(v))) {
                    pairs.push((u.min(v), u.max(v)));
                }
            }
            Graph::new(n, pairs).unwrap()
        })
}

fn one() -> edim::Rational {
    ratio(1, 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fractional_bounds(g in connected_graph(9)) {
        let n = g.order() as i64;
        let (ef, df) = (edim_f(&g).unwrap(), dim_f(&g).unwrap());
        prop_assert!(ef.optimum >= one() && ef.optimum <= ratio(n, 2));
        prop_assert!(df.optimum >= one() && df.optimum <= ratio(n, 2));
        prop_assert!(ef.optimum <= ratio(search::edim(&g).unwrap().size as i64, 1));
        prop_assert!(df.optimum <= ratio(search::dim(&g).unwrap().size as i64, 1));
        prop_assert_eq!(ef.weighting.total(), ef.optimum.clone());

        let d = DistMatrix::new(&g).unwrap();
        prop_assert!(is_edge_resolving_function(&g, &d, &ef.weighting).unwrap().is_resolving());
        prop_assert!(is_resolving_function(&d, &df.weighting).unwrap().is_resolving());
    }

    #[test]
    fn twin_pairs_carry_unit_weight(g in connected_graph(9)) {
        let w = dim_f(&g).unwrap().weighting;
        for (x, y) in twin_partition(&g).twin_pairs() {
            prop_assert!(w.get(x) + w.get(y) >= one());
        }
    }

    #[test]
    fn lp_is_invariant_under_row_order(g in connected_graph(8), rotate in 0usize..100) {
        let d = DistMatrix::new(&g).unwrap();
        let lp = CoveringLp::for_edges(&g, &d).unwrap();
        let rows = lp.rows().len();
        let mut order: Vec<usize> = (0..rows).collect();
        order.rotate_left(rotate % rows);
        order.reverse();
        let base = solve_covering_lp(&lp).optimum;
        prop_assert_eq!(&solve_covering_lp(&lp.permuted(&order)).optimum, &base);
        prop_assert_eq!(&solve_covering_lp_dual(&lp).optimum, &base);
    }

    #[test]
    fn reduction_keeps_a_minimal_antichain(g in connected_graph(8)) {
        let d = DistMatrix::new(&g).unwrap();
        let rows: Vec<VertexSet> = edim::resolving::vertex_rsets(&d).map(|(_, r)| r).collect();
        let kept = reduce_constraints(rows.clone()).unwrap();
        for r in &rows {
            prop_assert!(kept.iter().any(|k| k.is_subset(r)));
        }
        for (i, a) in kept.iter().enumerate() {
            for b in &kept[i + 1..] {
                prop_assert!(!a.is_subset(b) && !b.is_subset(a));
            }
        }
        prop_assert_eq!(reduce_constraints(kept.clone()).unwrap(), kept);
    }

    #[test]
    fn search_matches_enumeration(g in connected_graph(8)) {
        let d = DistMatrix::new(&g).unwrap();
        prop_assert_eq!(search::edim(&g).unwrap().size, brute_force_minimum(&g, &d, Mode::Edge).len());
        prop_assert_eq!(search::dim(&g).unwrap().size, brute_force_minimum(&g, &d, Mode::Vertex).len());
    }

    #[test]
    fn codes_resolve_iff_distinct(g in connected_graph(10), mask in any::<u16>()) {
        let d = DistMatrix::new(&g).unwrap();
        let landmarks: Vec<usize> = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!landmarks.is_empty());
        let set = VertexSet::from_iter(g.order(), landmarks.iter().copied());
        let distinct = edge_code_multiset(&g, &d, &landmarks).unwrap().values().all(|e| e.len() == 1);
        prop_assert_eq!(distinct, is_edge_resolving_set(&g, &d, &set).is_resolving());
    }

    #[test]
    fn edge_list_round_trip(g in connected_graph(12)) {
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        prop_assert_eq!(parse_edge_list(std::str::from_utf8(&buf).unwrap()).unwrap(), g);
    }
}
