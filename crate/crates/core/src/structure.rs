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

//! Structural analyses: twin classes, tree anatomy, fixed-pattern subgraph
//! search for `K5` and `K3,3`, and the two characterizations of graphs with
//! fractional metric dimension `n/2`.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{DistMatrix, EdgeId, Graph};
use crate::resolving::r_edge;
use crate::vertex_set::VertexSet;
use crate::weighting::{integer, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    Singleton,
    /// Members pairwise adjacent (true twins).
    Clique,
    /// Members pairwise non-adjacent (false twins).
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    pub members: Vec<usize>,
    pub kind: TwinKind,
}

/// Partition of `V` into twin classes, where `u ~ w` iff
/// `N(u) - {w} = N(w) - {u}`. Classes are ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
    class_of: Vec<usize>,
}

impl TwinPartition {
    pub fn class_of(&self, v: usize) -> &TwinClass {
        &self.classes[self.class_of[v]]
    }

    pub fn are_twins(&self, u: usize, w: usize) -> bool {
        self.class_of[u] == self.class_of[w]
    }

    /// All pairs `u < w` of distinct twins.
    pub fn twin_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.classes.iter().flat_map(|c| {
            c.members
                .iter()
                .enumerate()
                .flat_map(move |(i, &u)| c.members[i + 1..].iter().map(move |&w| (u, w)))
        })
    }
}

fn neighborhoods(g: &Graph) -> Vec<FixedBitSet> {
    g.vertices()
        .map(|v| {
            let mut b = FixedBitSet::with_capacity(g.order());
            b.extend(g.neighbors(v).iter().copied());
            b
        })
        .collect()
}

fn twins_by_neighborhood(nbhd: &[FixedBitSet], u: usize, w: usize) -> bool {
    let mut a = nbhd[u].clone();
    a.set(w, false);
    let mut b = nbhd[w].clone();
    b.set(u, false);
    a == b
}

pub fn twin_partition(g: &Graph) -> TwinPartition {
    let nbhd = neighborhoods(g);
    let mut classes: Vec<TwinClass> = Vec::new();
    let mut class_of = vec![0; g.order()];
    for v in g.vertices() {
        let found = classes
            .iter()
            .position(|c| twins_by_neighborhood(&nbhd, c.members[0], v));
        match found {
            Some(i) => {
                classes[i].members.push(v);
                class_of[v] = i;
            }
            None => {
                class_of[v] = classes.len();
                classes.push(TwinClass {
                    members: vec![v],
                    kind: TwinKind::Singleton,
                });
            }
        }
    }
    for c in &mut classes {
        if c.members.len() > 1 {
            c.kind = if g.has_edge(c.members[0], c.members[1]) {
                TwinKind::Clique
            } else {
                TwinKind::Independent
            };
        }
    }
    TwinPartition { classes, class_of }
}

/// True iff no twin class is a singleton, i.e. the graph arises from a
/// connected graph by blowing every vertex up into a clique or an
/// independent set of size at least two.
pub fn is_twin_expansion_family(g: &Graph) -> Result<bool> {
    g.require_connected()?;
    Ok(twin_partition(g)
        .classes
        .iter()
        .all(|c| c.members.len() >= 2))
}

/// Looks for a fixed-point-free bijection `φ` with `|R_v{v, φ(v)}| = 2` for
/// every `v`, as a perfect matching between two copies of `V`.
pub fn has_half_dim_bijection(g: &Graph, d: &DistMatrix) -> Result<Option<Vec<usize>>> {
    g.require_connected()?;
    let n = g.order();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let allowed: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&w| {
                    w != v && {
                        let (rv, rw) = (d.row(v), d.row(w));
                        (0..n).filter(|&z| rv[z] != rw[z]).count() == 2
                    }
                })
                .collect()
        })
        .collect();

    // Kuhn's augmenting paths.
    fn augment(
        v: usize,
        allowed: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &w in &allowed[v] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if owner[w].is_none_or(|u| augment(u, allowed, seen, owner)) {
                owner[w] = Some(v);
                return true;
            }
        }
        false
    }

    let mut owner: Vec<Option<usize>> = vec![None; n];
    for v in 0..n {
        let mut seen = vec![false; n];
        if !augment(v, &allowed, &mut seen, &mut owner) {
            return Ok(None);
        }
    }
    let mut phi = vec![0; n];
    for (w, u) in owner.iter().enumerate() {
        phi[u.expect("perfect matching")] = w;
    }
    Ok(Some(phi))
}

/// An exterior major vertex together with its terminal leaves and the
/// subtree spanned by its legs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorMajor {
    pub vertex: usize,
    pub terminals: Vec<usize>,
    pub subtree: VertexSet,
}

impl ExteriorMajor {
    pub fn terminal_degree(&self) -> usize {
        self.terminals.len()
    }
}

/// Leaves, major vertices and exterior major vertices of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeAnatomy {
    pub leaves: Vec<usize>,
    /// Vertices of degree at least three.
    pub majors: Vec<usize>,
    /// Major vertices with at least one terminal leaf, in vertex order.
    pub exterior: Vec<ExteriorMajor>,
}

impl TreeAnatomy {
    /// Number of leaves.
    pub fn sigma(&self) -> usize {
        self.leaves.len()
    }

    pub fn ex(&self) -> usize {
        self.exterior.len()
    }

    /// Exterior major vertices with terminal degree one.
    pub fn m1(&self) -> impl Iterator<Item = &ExteriorMajor> {
        self.exterior.iter().filter(|e| e.terminal_degree() == 1)
    }

    /// Exterior major vertices with terminal degree at least two.
    pub fn m2(&self) -> impl Iterator<Item = &ExteriorMajor> {
        self.exterior.iter().filter(|e| e.terminal_degree() >= 2)
    }

    pub fn ex1(&self) -> usize {
        self.m1().count()
    }
}

pub fn tree_anatomy(g: &Graph) -> Result<TreeAnatomy> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let d = DistMatrix::new(g)?;
    let leaves: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    let majors: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();

    // A leaf is terminal for the strictly nearest major vertex.
    let mut terminals: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for &leaf in &leaves {
        let Some(best) = majors.iter().map(|&m| d.get(leaf, m)).min() else {
            continue;
        };
        let mut nearest = majors.iter().filter(|&&m| d.get(leaf, m) == best);
        let first = *nearest.next().unwrap();
        if nearest.next().is_none() {
            terminals[first].push(leaf);
        }
    }

    let exterior = majors
        .iter()
        .filter(|&&m| !terminals[m].is_empty())
        .map(|&m| {
            let mut subtree = VertexSet::new(g.order());
            for &leaf in &terminals[m] {
                let span = d.get(m, leaf);
                for x in g.vertices() {
                    if d.get(m, x) + d.get(x, leaf) == span {
                        subtree.insert(x);
                    }
                }
            }
            ExteriorMajor {
                vertex: m,
                terminals: terminals[m].clone(),
                subtree,
            }
        })
        .collect();

    Ok(TreeAnatomy {
        leaves,
        majors,
        exterior,
    })
}

/// `(σ(T) - ex₁(T)) / 2`, or 1 for a path.
pub fn edimf_tree_formula(a: &TreeAnatomy) -> Rational {
    if a.majors.is_empty() {
        return integer(1);
    }
    ratio((a.sigma() - a.ex1()) as i64, 2)
}

/// Checks a covering property of the legs of a tree with at least two
/// exterior major vertices: for `w` in `M2`, an edge `e1` inside `T_w` and an edge `e2`
/// outside it, `R_e{e1, e2}` contains `V(T_w)` or `V(T_w')` for another
/// `w'` in `M2`. Returns the first violating `(w, e1, e2)`, or `None` when
/// the statement holds (or does not apply).
pub fn subtree_rset_counterexample(g: &Graph) -> Result<Option<(usize, EdgeId, EdgeId)>> {
    let anatomy = tree_anatomy(g)?;
    if anatomy.ex() < 2 {
        return Ok(None);
    }
    let d = DistMatrix::new(g)?;
    let m2: Vec<&ExteriorMajor> = anatomy.m2().collect();
    let inside = |set: &VertexSet, e: EdgeId| {
        let (u, v) = g.edges()[e.0];
        set.contains(u) && set.contains(v)
    };
    for w in &m2 {
        for e1 in g.edge_ids().filter(|&e| inside(&w.subtree, e)) {
            for e2 in g.edge_ids().filter(|&e| !inside(&w.subtree, e)) {
                let r = r_edge(g, &d, e1, e2)?;
                let holds = r.is_superset(&w.subtree)
                    || m2
                        .iter()
                        .any(|other| other.vertex != w.vertex && r.is_superset(&other.subtree));
                if !holds {
                    return Ok(Some((w.vertex, e1, e2)));
                }
            }
        }
    }
    Ok(None)
}

/// First 5-clique in lexicographic order of sorted vertex tuples.
pub fn contains_k5_subgraph(g: &Graph) -> Option<[usize; 5]> {
    fn extend(g: &Graph, clique: &mut Vec<usize>, candidates: &[usize]) -> bool {
        if clique.len() == 5 {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if g.degree(v) < 4 {
                continue;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| g.has_edge(v, w))
                .collect();
            if next.len() + clique.len() + 1 < 5 {
                continue;
            }
            clique.push(v);
            if extend(g, clique, &next) {
                return true;
            }
            clique.pop();
        }
        false
    }
    let all: Vec<usize> = g.vertices().collect();
    let mut clique = Vec::with_capacity(5);
    extend(g, &mut clique, &all).then(|| clique.try_into().unwrap())
}

/// First `K3,3` as `(side, other side)`: the lexicographically first triple
/// of degree-≥3 vertices with at least three common neighbors, paired with
/// the three smallest of them.
pub fn contains_k33_subgraph(g: &Graph) -> Option<([usize; 3], [usize; 3])> {
    let nbhd = neighborhoods(g);
    let heavy: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    for (i, &a) in heavy.iter().enumerate() {
        for (j, &b) in heavy.iter().enumerate().skip(i + 1) {
            let mut ab = nbhd[a].clone();
            ab.intersect_with(&nbhd[b]);
            if ab.count_ones(..) < 3 {
                continue;
            }
            for &c in &heavy[j + 1..] {
                let mut abc = ab.clone();
                abc.intersect_with(&nbhd[c]);
                let common: Vec<usize> = abc.ones().take(3).collect();
                if common.len() == 3 {
                    return Some(([a, b, c], [common[0], common[1], common[2]]));
                }
            }
        }
    }
    None
}

/// An isomorphism from `g` onto `h`, found by exhaustive backtracking over
/// injective vertex maps. Exponential; meant for small graphs.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for image in 0..h.order() {
            if used[image] || g.degree(v) != h.degree(image) {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], image));
            if consistent {
                map.push(image);
                used[image] = true;
                if extend(g, h, map, used) {
                    return true;
                }
                used[image] = false;
                map.pop();
            }
        }
        false
    }
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut map = Vec::with_capacity(g.order());
    let mut used = vec![false; h.order()];
    extend(g, h, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn bipartite(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
    }

    /// Center 0 with three legs of length two: 0-1-2, 0-3-4, 0-5-6.
    fn spider() -> Graph {
        Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn twin_classes_of_small_graphs() {
        let tp = twin_partition(&complete(5));
        assert_eq!(tp.classes.len(), 1);
        assert_eq!(tp.classes[0].kind, TwinKind::Clique);

        let tp = twin_partition(&star(4));
        assert_eq!(tp.classes.len(), 2);
        assert_eq!(tp.classes[0].members, vec![0]);
        assert_eq!(tp.classes[0].kind, TwinKind::Singleton);
        assert_eq!(tp.classes[1].members, vec![1, 2, 3, 4]);
        assert_eq!(tp.classes[1].kind, TwinKind::Independent);
        assert_eq!(tp.twin_pairs().count(), 6);
    }

    #[test]
    fn twin_expansion_family() {
        assert!(is_twin_expansion_family(&complete(4)).unwrap());
        assert!(!is_twin_expansion_family(&star(5)).unwrap());
        assert!(!is_twin_expansion_family(&path(4)).unwrap());
        // C4 = K2,2 blows each side up into an independent pair.
        assert!(is_twin_expansion_family(&bipartite(2, 2)).unwrap());
    }

    #[test]
    fn half_dim_bijection() {
        let k4 = complete(4);
        let d = DistMatrix::new(&k4).unwrap();
        let phi = has_half_dim_bijection(&k4, &d).unwrap().unwrap();
        for (v, &w) in phi.iter().enumerate() {
            assert_ne!(w, v);
        }
        let mut image = phi.clone();
        image.sort_unstable();
        assert_eq!(image, vec![0, 1, 2, 3]);

        let p4 = path(4);
        let d = DistMatrix::new(&p4).unwrap();
        assert_eq!(has_half_dim_bijection(&p4, &d).unwrap(), None);
    }

    #[test]
    fn anatomy_of_path_star_spider() {
        let a = tree_anatomy(&path(6)).unwrap();
        assert_eq!((a.sigma(), a.ex(), a.ex1()), (2, 0, 0));
        assert_eq!(edimf_tree_formula(&a), integer(1));

        let a = tree_anatomy(&star(5)).unwrap();
        assert_eq!((a.sigma(), a.ex(), a.ex1()), (5, 1, 0));
        assert_eq!(a.exterior[0].terminal_degree(), 5);
        assert_eq!(edimf_tree_formula(&a), ratio(5, 2));

        let a = tree_anatomy(&spider()).unwrap();
        assert_eq!(a.sigma(), 3);
        assert_eq!(a.m2().map(|e| e.vertex).collect::<Vec<_>>(), vec![0]);
        assert_eq!(a.exterior[0].subtree.len(), 7);
        assert_eq!(edimf_tree_formula(&a), ratio(3, 2));

        assert_eq!(tree_anatomy(&complete(3)), Err(Error::NotATree));
    }

    #[test]
    fn anatomy_with_degree_one_exterior_major() {
        // Major 1 (leaves 0, 2), major 3 with a single terminal leaf 4 and a
        // branch towards major 5 (leaves 6, 7).
        let g = Graph::new(8, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6), (5, 7)]).unwrap();
        let a = tree_anatomy(&g).unwrap();
        assert_eq!(a.sigma(), 5);
        assert_eq!(a.ex1(), 1);
        assert_eq!(edimf_tree_formula(&a), integer(2));
    }

    #[test]
    fn fixed_patterns() {
        assert_eq!(contains_k5_subgraph(&complete(6)), Some([0, 1, 2, 3, 4]));
        assert_eq!(contains_k5_subgraph(&complete(4)), None);
        assert_eq!(contains_k5_subgraph(&bipartite(3, 4)), None);
        assert_eq!(
            contains_k33_subgraph(&bipartite(3, 4)),
            Some(([0, 1, 2], [3, 4, 5]))
        );
        assert!(contains_k33_subgraph(&complete(6)).is_some());
        assert_eq!(contains_k33_subgraph(&complete(5)), None);
        assert_eq!(contains_k33_subgraph(&bipartite(2, 5)), None);
    }

    #[test]
    fn isomorphism_search() {
        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let star = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        let map = find_isomorphism(&c5, &star).unwrap();
        for &(u, v) in c5.edges() {
            assert!(star.has_edge(map[u], map[v]));
        }
        let (h1, h2, _) = crate::families::same_codes_pair();
        assert!(find_isomorphism(&h1.graph, &h2.graph).is_none());
        assert!(find_isomorphism(&h1.graph, &h1.graph).is_some());
    }

    #[test]
    fn subtree_rsets_on_random_trees() {
        for seed in 0..40 {
            let t = crate::families::random_tree(6 + seed as usize % 9, seed)
                .unwrap()
                .graph;
            assert_eq!(
                subtree_rset_counterexample(&t).unwrap(),
                None,
                "seed {seed}"
            );
        }
        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(subtree_rset_counterexample(&path).unwrap(), None);
    }
}
