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

//! Exact metric dimension and edge metric dimension by set-cover
//! branch-and-bound.
//!
//! The universe is the set of vertex pairs (or edge pairs); column `v` holds
//! the pairs `v` distinguishes. A resolving set is a set of columns covering
//! the universe.
//!
//! Distinct twins `x, y` are swapped by an automorphism, and every resolving
//! set meets `{x, y}`. So some optimum contains every member of a twin class
//! except possibly its largest, and those members are forced into the cover
//! before branching.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{DistMatrix, Graph};
use crate::resolving::{is_edge_resolving_set, is_resolving_set};
use crate::structure::twin_partition;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Vertex,
    Edge,
}

#[derive(Debug, Clone)]
pub struct CoverInstance {
    pub mode: Mode,
    /// Vertex pairs, or pairs of edge ids, in lexicographic order.
    pub universe: Vec<(usize, usize)>,
    /// `columns[v]` contains pair index `i` iff `v` distinguishes `universe[i]`.
    pub columns: Vec<FixedBitSet>,
    /// Vertices some optimum is known to contain.
    pub forced: VertexSet,
}

impl CoverInstance {
    pub fn order(&self) -> usize {
        self.columns.len()
    }

    /// True iff the chosen columns cover the universe.
    pub fn covers(&self, chosen: &VertexSet) -> bool {
        let mut covered = FixedBitSet::with_capacity(self.universe.len());
        for v in chosen.iter() {
            covered.union_with(&self.columns[v]);
        }
        covered.count_ones(..) == self.universe.len()
    }
}

pub fn build_cover_instance(g: &Graph, d: &DistMatrix, mode: Mode) -> Result<CoverInstance> {
    g.require_connected()?;
    let n = g.order();
    let universe: Vec<(usize, usize)> = match mode {
        Mode::Vertex => (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .collect(),
        Mode::Edge => {
            let m = g.size();
            (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .collect()
        }
    };
    let mut columns = vec![FixedBitSet::with_capacity(universe.len()); n];
    let edges = g.edges();
    for (i, &(a, b)) in universe.iter().enumerate() {
        for (v, col) in columns.iter_mut().enumerate() {
            let distinguishes = match mode {
                Mode::Vertex => d.get(a, v) != d.get(b, v),
                Mode::Edge => d.edge_distance_raw(edges[a], v) != d.edge_distance_raw(edges[b], v),
            };
            if distinguishes {
                col.insert(i);
            }
        }
    }
    let mut forced = VertexSet::new(n);
    for class in twin_partition(g).classes {
        for &v in &class.members[..class.members.len() - 1] {
            forced.insert(v);
        }
    }
    Ok(CoverInstance {
        mode,
        universe,
        columns,
        forced,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Branch nodes explored before giving up on an optimality proof.
    pub node_budget: u64,
    /// A known upper bound on the optimum, used to prune early.
    pub upper_bound_hint: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: 10_000_000,
            upper_bound_hint: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub size: usize,
    pub witness: VertexSet,
    /// False when the node budget ran out; `size` is then the best found.
    pub proven_optimal: bool,
    pub nodes: u64,
}

struct Search<'a> {
    inst: &'a CoverInstance,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    best_size: usize,
    best: Option<Vec<usize>>,
    chosen: Vec<usize>,
    excluded: Vec<bool>,
}

impl Search<'_> {
    fn gain(&self, v: usize, covered: &FixedBitSet) -> usize {
        self.inst.columns[v].difference(covered).count()
    }

    fn run(&mut self, covered: &FixedBitSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let total = self.inst.universe.len();
        let uncovered = total - covered.count_ones(..);
        if uncovered == 0 {
            if self.chosen.len() < self.best_size {
                self.best_size = self.chosen.len();
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        if self.chosen.len() + 1 >= self.best_size {
            return;
        }

        let n = self.inst.order();
        let mut reachable = covered.clone();
        let mut best_col = None;
        let mut best_gain = 0;
        for v in 0..n {
            if self.excluded[v] || self.chosen.contains(&v) {
                continue;
            }
            reachable.union_with(&self.inst.columns[v]);
            let g = self.gain(v, covered);
            if g > best_gain {
                best_gain = g;
                best_col = Some(v);
            }
        }
        if reachable.count_ones(..) < total {
            return;
        }
        let Some(c) = best_col else {
            return;
        };
        let lower_bound = uncovered.div_ceil(best_gain);
        if self.chosen.len() + lower_bound >= self.best_size {
            return;
        }

        let mut next = covered.clone();
        next.union_with(&self.inst.columns[c]);
        self.chosen.push(c);
        self.run(&next);
        self.chosen.pop();
        if self.exhausted {
            return;
        }

        self.excluded[c] = true;
        self.run(covered);
        self.excluded[c] = false;
    }
}

fn greedy(inst: &CoverInstance) -> Vec<usize> {
    let mut chosen: Vec<usize> = inst.forced.iter().collect();
    let mut covered = FixedBitSet::with_capacity(inst.universe.len());
    for &v in &chosen {
        covered.union_with(&inst.columns[v]);
    }
    while covered.count_ones(..) < inst.universe.len() {
        let (v, gain) = (0..inst.order())
            .map(|v| (v, inst.columns[v].difference(&covered).count()))
            .fold((0, 0), |best, cur| if cur.1 > best.1 { cur } else { best });
        assert!(gain > 0, "cover instance is infeasible");
        chosen.push(v);
        covered.union_with(&inst.columns[v]);
    }
    chosen.sort_unstable();
    chosen
}

/// Minimum cover of a feasible instance, branching on the highest-gain
/// column first (ties to the lowest index), including it before excluding
/// it. Lower bound: `ceil(uncovered / max gain)`.
pub fn minimum_cover(inst: &CoverInstance, options: SearchOptions) -> SearchOutcome {
    let n = inst.order();
    let incumbent = greedy(inst);
    let mut bound = incumbent.len();
    if let Some(h) = options.upper_bound_hint {
        bound = bound.min(h + 1);
    }

    let mut covered = FixedBitSet::with_capacity(inst.universe.len());
    for v in inst.forced.iter() {
        covered.union_with(&inst.columns[v]);
    }
    let mut search = Search {
        inst,
        budget: options.node_budget,
        nodes: 0,
        exhausted: false,
        best_size: bound,
        best: None,
        chosen: inst.forced.iter().collect(),
        excluded: vec![false; n],
    };
    search.run(&covered);

    let (nodes, exhausted) = (search.nodes, search.exhausted);
    let found = search.best.take();
    if found.is_none() && bound < incumbent.len() && !exhausted {
        // The hint was below the optimum; search again without it.
        let retry = minimum_cover(
            inst,
            SearchOptions {
                upper_bound_hint: None,
                ..options
            },
        );
        return SearchOutcome {
            nodes: nodes + retry.nodes,
            ..retry
        };
    }
    let chosen = found.unwrap_or(incumbent);
    let witness = VertexSet::from_iter(n, chosen);
    assert!(inst.covers(&witness), "search returned a non-cover");
    SearchOutcome {
        size: witness.len(),
        witness,
        proven_optimal: !exhausted,
        nodes,
    }
}

fn solve(g: &Graph, mode: Mode, options: SearchOptions) -> Result<SearchOutcome> {
    g.require_connected()?;
    let min = match mode {
        Mode::Vertex => 2,
        Mode::Edge => 3,
    };
    if g.order() < min {
        return Err(Error::TooSmall { n: g.order(), min });
    }
    let d = DistMatrix::new(g)?;
    let inst = build_cover_instance(g, &d, mode)?;
    let out = minimum_cover(&inst, options);
    let verified = match mode {
        Mode::Vertex => is_resolving_set(&d, &out.witness).is_resolving(),
        Mode::Edge => is_edge_resolving_set(g, &d, &out.witness).is_resolving(),
    };
    assert!(verified, "witness {} does not resolve", out.witness);
    Ok(out)
}

/// Metric dimension `dim(G)` with a minimum resolving set.
pub fn dim(g: &Graph) -> Result<SearchOutcome> {
    solve(g, Mode::Vertex, SearchOptions::default())
}

/// Edge metric dimension `edim(G)` with a minimum edge resolving set.
pub fn edim(g: &Graph) -> Result<SearchOutcome> {
    solve(g, Mode::Edge, SearchOptions::default())
}

pub fn dim_with(g: &Graph, options: SearchOptions) -> Result<SearchOutcome> {
    solve(g, Mode::Vertex, options)
}

pub fn edim_with(g: &Graph, options: SearchOptions) -> Result<SearchOutcome> {
    solve(g, Mode::Edge, options)
}

/// Exhaustive oracle: tries every vertex subset in increasing size and
/// lexicographic order, checking each with the resolving module. Returns the
/// first resolving set found. Exponential; meant for small graphs.
pub fn brute_force_minimum(g: &Graph, d: &DistMatrix, mode: Mode) -> VertexSet {
    let n = g.order();
    let resolves = |s: &VertexSet| match mode {
        Mode::Vertex => is_resolving_set(d, s).is_resolving(),
        Mode::Edge => is_edge_resolving_set(g, d, s).is_resolving(),
    };
    for k in 0..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let s = VertexSet::from_iter(n, idx.iter().copied());
            if resolves(&s) {
                return s;
            }
            // Advance to the next k-combination.
            let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    VertexSet::full(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, FamilySpec};

    fn graph(spec: FamilySpec) -> Graph {
        families::generate(&spec).unwrap().graph
    }

    #[test]
    fn universe_sizes() {
        let p3 = graph(FamilySpec::Path(3));
        let d = DistMatrix::new(&p3).unwrap();
        let inst = build_cover_instance(&p3, &d, Mode::Edge).unwrap();
        assert_eq!(inst.universe.len(), 1);
        assert!(inst.columns[0].contains(0) && inst.columns[2].contains(0));

        let k4 = graph(FamilySpec::Complete(4));
        let d = DistMatrix::new(&k4).unwrap();
        assert_eq!(
            build_cover_instance(&k4, &d, Mode::Edge)
                .unwrap()
                .universe
                .len(),
            15
        );

        let p = graph(FamilySpec::Petersen);
        let d = DistMatrix::new(&p).unwrap();
        assert_eq!(
            build_cover_instance(&p, &d, Mode::Edge)
                .unwrap()
                .universe
                .len(),
            105
        );
    }

    #[test]
    fn complete_graphs() {
        for n in 4..=7 {
            let out = edim(&graph(FamilySpec::Complete(n))).unwrap();
            assert_eq!(out.size, n - 1);
            assert!(out.proven_optimal);
        }
    }

    #[test]
    fn k42_and_grids() {
        assert_eq!(
            edim(&graph(FamilySpec::Multipartite(vec![4, 2])))
                .unwrap()
                .size,
            4
        );
        for s in 2..=4 {
            for t in 2..=4 {
                assert_eq!(edim(&graph(FamilySpec::Grid(s, t))).unwrap().size, 2);
            }
        }
    }

    #[test]
    fn paths_have_dimension_one() {
        for n in 2..=8 {
            let out = dim(&graph(FamilySpec::Path(n))).unwrap();
            assert_eq!(out.size, 1);
        }
        let out = dim(&graph(FamilySpec::Path(4))).unwrap();
        assert!(
            out.witness == VertexSet::from_iter(4, [0])
                || out.witness == VertexSet::from_iter(4, [3])
        );
    }

    #[test]
    fn tiny_budget_reports_unproven() {
        let g = graph(FamilySpec::Petersen);
        let out = edim_with(
            &g,
            SearchOptions {
                node_budget: 1,
                upper_bound_hint: None,
            },
        )
        .unwrap();
        assert!(!out.proven_optimal);
        let full = edim(&g).unwrap();
        assert!(full.proven_optimal);
        assert!(out.size >= full.size);
    }

    #[test]
    fn wrong_hint_is_recovered() {
        let g = graph(FamilySpec::Complete(5));
        let out = edim_with(
            &g,
            SearchOptions {
                node_budget: 10_000_000,
                upper_bound_hint: Some(1),
            },
        )
        .unwrap();
        assert_eq!(out.size, 4);
    }

    #[test]
    fn brute_force_agrees_on_small_families() {
        for spec in [
            FamilySpec::Cycle(6),
            FamilySpec::Petersen,
            FamilySpec::Wheel(6),
            FamilySpec::Multipartite(vec![1, 2, 2]),
        ] {
            let g = graph(spec.clone());
            let d = DistMatrix::new(&g).unwrap();
            for mode in [Mode::Vertex, Mode::Edge] {
                let oracle = brute_force_minimum(&g, &d, mode).len();
                let inst = build_cover_instance(&g, &d, mode).unwrap();
                let out = minimum_cover(&inst, SearchOptions::default());
                assert_eq!(out.size, oracle, "{spec:?} {mode:?}");
            }
        }
    }

    #[test]
    fn too_small() {
        let k2 = graph(FamilySpec::Path(2));
        assert_eq!(edim(&k2), Err(Error::TooSmall { n: 2, min: 3 }));
    }
}
