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

//! The fixed collection of test graphs shared by the verification suite,
//! the acceptance tests and the property tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::families::{self, FamilySpec};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
    /// The generating family, when the graph came from one.
    pub spec: Option<FamilySpec>,
}

/// Seeds of the 50 random trees, with their orders (4 to 14).
pub fn tree_seeds() -> impl Iterator<Item = (usize, u64)> {
    (0..50u64).map(|i| (4 + (i as usize % 11), i))
}

/// Seeds of the 30 random connected non-path graphs, with their orders
/// (4 to 10).
pub fn connected_seeds() -> impl Iterator<Item = (usize, u64)> {
    (0..30u64).map(|i| (4 + (i as usize % 7), 1000 + i))
}

/// A connected graph that is not a tree: a random tree on `n` vertices
/// plus between 1 and `n` extra random edges.
pub fn random_connected(n: usize, seed: u64) -> Result<Graph> {
    let tree = families::random_tree(n, seed)?.graph;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    missing.shuffle(&mut rng);
    let extra = rng.gen_range(1..=n).min(missing.len());
    let mut pairs = tree.edges().to_vec();
    pairs.extend_from_slice(&missing[..extra]);
    Graph::new(n, pairs)
}

/// A spider with legs of lengths 1, 1, 2 and 3 around a hub.
pub fn spider() -> Graph {
    Graph::new(8, [(0, 1), (0, 2), (0, 3), (3, 4), (0, 5), (5, 6), (6, 7)]).expect("valid spider")
}

fn family_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((3..=8).map(FamilySpec::Path));
    specs.extend((3..=12).map(FamilySpec::Cycle));
    specs.extend((3..=7).map(FamilySpec::Complete));
    specs.extend((4..=8).map(FamilySpec::Star));
    specs.extend((4..=10).map(FamilySpec::Wheel));
    for parts in [
        vec![2, 2],
        vec![2, 3],
        vec![3, 3],
        vec![2, 4],
        vec![1, 1, 2],
        vec![1, 2, 2],
        vec![2, 2, 3],
        vec![1, 1, 1, 2],
    ] {
        specs.push(FamilySpec::Multipartite(parts));
    }
    specs.push(FamilySpec::Petersen);
    for s in 2..=4 {
        for t in s..=4 {
            specs.push(FamilySpec::Grid(s, t));
        }
    }
    specs.extend(tree_seeds().map(|(n, seed)| FamilySpec::RandomTree { n, seed }));
    specs.extend([
        FamilySpec::NonplanarEdim2,
        FamilySpec::SubgraphEdim,
        FamilySpec::SameCodesH1,
        FamilySpec::SameCodesH2,
        FamilySpec::Broadcast(3),
        FamilySpec::Broadcast(4),
        FamilySpec::TwinLadderCore(2),
        FamilySpec::TwinLadder(2),
        FamilySpec::CliqueSubsets(3),
    ]);
    specs
}

/// Every corpus graph, in a fixed order. All are connected.
pub fn corpus() -> Vec<CorpusGraph> {
    let mut out: Vec<CorpusGraph> = family_specs()
        .into_iter()
        .map(|spec| CorpusGraph {
            name: spec.label(),
            graph: families::generate(&spec)
                .expect("corpus parameters are valid")
                .graph,
            spec: Some(spec),
        })
        .collect();
    out.extend(connected_seeds().map(|(n, seed)| CorpusGraph {
        name: format!("connected-{n}-{seed}"),
        graph: random_connected(n, seed).expect("valid order"),
        spec: None,
    }));
    out.push(CorpusGraph {
        name: "spider".into(),
        graph: spider(),
        spec: None,
    });
    out
}
