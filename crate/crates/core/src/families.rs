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

//! Deterministic generators for the graph families and fixed constructions,
//! each publishing a name -> index map.
//!
//! Naming conventions: paths use `u1..un`, cycles and complete graphs
//! `u0..u(n-1)`, wheels put the rim `u0..u(n-2)` first and the hub `v` last,
//! grids use `u{i},{j}` with `1 <= i <= s`, `1 <= j <= t`, multipartite
//! graphs `v{part}.{k}` (parts sorted ascending), the clique-of-subsets graph
//! `a0..a(k-1)` then `b{}`, `b{0}`, `b{0,1}`, ... in bitmask order.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{edimf_tree_formula, tree_anatomy};
use crate::weighting::{integer, ratio, Rational};

/// A family tag with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1, n-1}`.
    Star(usize),
    /// Complete multipartite graph with the given part sizes.
    Multipartite(Vec<usize>),
    /// `W_n = K_1 + C_{n-1}`, order `n`.
    Wheel(usize),
    Petersen,
    /// `P_s □ P_t`.
    Grid(usize, usize),
    /// The larger graph `G_k` of the twin-ladder pair.
    TwinLadder(usize),
    /// The ladder `H_k` alone.
    TwinLadderCore(usize),
    /// The clique-of-subsets graph of order `k + 2^k`.
    CliqueSubsets(usize),
    /// The larger graph `G_m` of the broadcast pair.
    Broadcast(usize),
    SameCodesH1,
    SameCodesH2,
    NonplanarEdim2,
    SubgraphEdim,
    RandomTree {
        n: usize,
        seed: u64,
    },
}

impl FamilySpec {
    /// Short name used in reports.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Path(n) => format!("P{n}"),
            FamilySpec::Cycle(n) => format!("C{n}"),
            FamilySpec::Complete(n) => format!("K{n}"),
            FamilySpec::Star(n) => format!("K1,{}", n - 1),
            FamilySpec::Multipartite(parts) => {
                let p: Vec<String> = parts.iter().map(|a| a.to_string()).collect();
                format!("K{}", p.join(","))
            }
            FamilySpec::Wheel(n) => format!("W{n}"),
            FamilySpec::Petersen => "petersen".into(),
            FamilySpec::Grid(s, t) => format!("P{s}xP{t}"),
            FamilySpec::TwinLadder(k) => format!("twin-ladder-G{k}"),
            FamilySpec::TwinLadderCore(k) => format!("twin-ladder-H{k}"),
            FamilySpec::CliqueSubsets(k) => format!("clique-subsets-G{k}"),
            FamilySpec::Broadcast(m) => format!("broadcast-G{m}"),
            FamilySpec::SameCodesH1 => "same-codes-H1".into(),
            FamilySpec::SameCodesH2 => "same-codes-H2".into(),
            FamilySpec::NonplanarEdim2 => "nonplanar-edim2".into(),
            FamilySpec::SubgraphEdim => "subgraph-edim".into(),
            FamilySpec::RandomTree { n, seed } => format!("tree-n{n}-s{seed}"),
        }
    }
}

/// A graph with vertex names and, for the fixed constructions, the landmark
/// set that certifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    names: Vec<String>,
    index: HashMap<String, usize>,
    pub landmarks: Option<Vec<usize>>,
}

impl LabeledGraph {
    fn build(names: Vec<String>, edges: &[(&str, &str)]) -> Result<Self> {
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        assert_eq!(index.len(), names.len(), "duplicate vertex name");
        let pairs = edges
            .iter()
            .map(|(a, b)| (index[*a], index[*b]))
            .collect::<Vec<_>>();
        let graph = Graph::new(names.len(), pairs)?;
        Ok(LabeledGraph {
            graph,
            names,
            index,
            landmarks: None,
        })
    }

    fn from_indices(names: Vec<String>, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect::<HashMap<_, _>>();
        assert_eq!(index.len(), names.len(), "duplicate vertex name");
        let graph = Graph::new(names.len(), pairs)?;
        Ok(LabeledGraph {
            graph,
            names,
            index,
            landmarks: None,
        })
    }

    fn with_landmarks(mut self, names: &[&str]) -> Self {
        self.landmarks = Some(names.iter().map(|s| self.index[*s]).collect());
        self
    }

    /// Index of the named vertex. Panics on unknown names.
    pub fn vertex(&self, name: &str) -> usize {
        match self.index.get(name) {
            Some(&v) => v,
            None => panic!("no vertex named {name}"),
        }
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Indices of the named vertices, in order.
    pub fn vertices(&self, names: &[&str]) -> Vec<usize> {
        names.iter().map(|s| self.vertex(s)).collect()
    }
}

fn numbered(prefix: &str, range: impl Iterator<Item = usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

pub fn path(n: usize) -> Result<LabeledGraph> {
    if n < 1 {
        return Err(bad("path needs n >= 1"));
    }
    LabeledGraph::from_indices(numbered("u", 1..=n), (1..n).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    LabeledGraph::from_indices(
        numbered("u", 0..n),
        (0..n).map(|i| (i, (i + 1) % n)).collect(),
    )
}

pub fn complete(n: usize) -> Result<LabeledGraph> {
    if n < 1 {
        return Err(bad("complete graph needs n >= 1"));
    }
    LabeledGraph::from_indices(
        numbered("u", 0..n),
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect(),
    )
}

pub fn multipartite(parts: &[usize]) -> Result<LabeledGraph> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(bad("multipartite needs at least two non-empty parts"));
    }
    let mut sizes = parts.to_vec();
    sizes.sort_unstable();
    let mut names = Vec::new();
    let mut part_of = Vec::new();
    for (p, &a) in sizes.iter().enumerate() {
        for k in 1..=a {
            names.push(format!("v{}.{}", p + 1, k));
            part_of.push(p);
        }
    }
    let n = names.len();
    let pairs = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| part_of[i] != part_of[j])
        .collect();
    LabeledGraph::from_indices(names, pairs)
}

pub fn wheel(n: usize) -> Result<LabeledGraph> {
    if n < 4 {
        return Err(bad("wheel needs n >= 4"));
    }
    let rim = n - 1;
    let mut names = numbered("u", 0..rim);
    names.push("v".into());
    let mut pairs: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    pairs.extend((0..rim).map(|i| (i, rim)));
    LabeledGraph::from_indices(names, pairs)
}

/// Outer 5-cycle `u0..u4`, inner pentagram `w0 w2 w4 w1 w3`, spokes `ui wi`.
pub fn petersen() -> LabeledGraph {
    let mut names = numbered("u", 0..5);
    names.extend(numbered("w", 0..5));
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
        pairs.push((i, 5 + i));
    }
    LabeledGraph::from_indices(names, pairs).expect("petersen is simple")
}

pub fn grid(s: usize, t: usize) -> Result<LabeledGraph> {
    if s < 1 || t < 1 {
        return Err(bad("grid needs s, t >= 1"));
    }
    let idx = |i: usize, j: usize| (i - 1) * t + (j - 1);
    let mut names = Vec::new();
    let mut pairs = Vec::new();
    for i in 1..=s {
        for j in 1..=t {
            names.push(format!("u{i},{j}"));
            if i < s {
                pairs.push((idx(i, j), idx(i + 1, j)));
            }
            if j < t {
                pairs.push((idx(i, j), idx(i, j + 1)));
            }
        }
    }
    LabeledGraph::from_indices(names, pairs)
}

/// The twin-ladder pair: returns `G_k` and the vertices spanning `H_k`
/// (`x1..x3k` then `y1..y3k`).
pub fn twin_ladder_pair(k: usize) -> Result<(LabeledGraph, Vec<usize>)> {
    if k < 2 {
        return Err(bad("twin ladder needs k >= 2"));
    }
    let len = 3 * k;
    let mut names = numbered("x", 1..=len);
    names.extend(numbered("y", 1..=len));
    names.push("z".into());
    for j in 1..=k {
        for p in ["a", "b", "c", "d"] {
            names.push(format!("{p}{j}"));
        }
    }
    let x = |i: usize| format!("x{i}");
    let y = |i: usize| format!("y{i}");
    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 1..len {
        edges.push((x(i), x(i + 1)));
        edges.push((y(i), y(i + 1)));
        edges.push((x(i), y(i + 1)));
        edges.push((y(i), x(i + 1)));
    }
    edges.push(("z".into(), x(1)));
    edges.push(("z".into(), y(1)));
    for j in 1..=k {
        let (a, b, c, d) = (
            format!("a{j}"),
            format!("b{j}"),
            format!("c{j}"),
            format!("d{j}"),
        );
        edges.push((a.clone(), b.clone()));
        edges.push((b.clone(), c.clone()));
        edges.push((c, d.clone()));
        let base = 3 * (j - 1);
        edges.push((y(base + 1), b));
        edges.push((y(base + 2), a));
        edges.push((y(base + 3), d));
    }
    let refs: Vec<(&str, &str)> = edges
        .iter()
        .map(|(a, b)| (a.as_str(), b.as_str()))
        .collect();
    let g = LabeledGraph::build(names, &refs)?;
    let core = (0..2 * len).collect();
    Ok((g, core))
}

fn subset_name(mask: usize, k: usize) -> String {
    let members: Vec<String> = (0..k)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("b{{{}}}", members.join(","))
}

/// `A = {a0..a(k-1)}` and `B = {b_S : S ⊆ {0..k-1}}` are cliques; `b_S`
/// is joined to `a_i` iff `i ∈ S`.
pub fn clique_subsets_graph(k: usize) -> Result<LabeledGraph> {
    if !(3..=10).contains(&k) {
        return Err(bad("clique-of-subsets needs 3 <= k <= 10"));
    }
    let size_b = 1usize << k;
    let mut names = numbered("a", 0..k);
    names.extend((0..size_b).map(|mask| subset_name(mask, k)));
    let mut pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((i, j));
        }
    }
    for s in 0..size_b {
        for t in s + 1..size_b {
            pairs.push((k + s, k + t));
        }
        for i in 0..k {
            if s >> i & 1 == 1 {
                pairs.push((i, k + s));
            }
        }
    }
    LabeledGraph::from_indices(names, pairs)
}

/// Name of `b_S` in [`clique_subsets_graph`] for the given members of `S`.
pub fn subset_vertex_name(members: &[usize]) -> String {
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    let parts: Vec<String> = sorted.iter().map(|i| i.to_string()).collect();
    format!("b{{{}}}", parts.join(","))
}

/// The broadcast pair: `G_m` and the vertices spanning the clique `H_m`.
/// Vertices `w{i},{j}` (`1 <= j <= i <= m`) come first, then `u1..um`;
/// `u_i` is joined to `V_i` and to every `w{j},{i}` with `j > i`.
pub fn broadcast_pair(m: usize) -> Result<(LabeledGraph, Vec<usize>)> {
    if m < 3 {
        return Err(bad("broadcast pair needs m >= 3"));
    }
    let mut names = Vec::new();
    for i in 1..=m {
        for j in 1..=i {
            names.push(format!("w{i},{j}"));
        }
    }
    let clique = names.len();
    names.extend(numbered("u", 1..=m));
    let w = |i: usize, j: usize| i * (i - 1) / 2 + (j - 1);
    let mut pairs = Vec::new();
    for a in 0..clique {
        for b in a + 1..clique {
            pairs.push((a, b));
        }
    }
    for i in 1..=m {
        let u = clique + i - 1;
        for j in 1..=i {
            pairs.push((u, w(i, j)));
        }
        for j in i + 1..=m {
            pairs.push((u, w(j, i)));
        }
    }
    let g = LabeledGraph::from_indices(names, pairs)?;
    Ok((g, (0..clique).collect()))
}

/// Two non-isomorphic graphs on `v1..v6` sharing the edge-code set over the
/// landmarks `(v1, v3)`: the 6-cycle plus chord `v2v6`, and plus chord
/// `v2v5`.
pub fn same_codes_pair() -> (LabeledGraph, LabeledGraph, Vec<usize>) {
    let names = || numbered("v", 1..=6);
    let ring = [
        ("v1", "v2"),
        ("v2", "v3"),
        ("v3", "v4"),
        ("v4", "v5"),
        ("v5", "v6"),
        ("v6", "v1"),
    ];
    let mut e1 = ring.to_vec();
    e1.push(("v2", "v6"));
    let mut e2 = ring.to_vec();
    e2.push(("v2", "v5"));
    let h1 = LabeledGraph::build(names(), &e1)
        .unwrap()
        .with_landmarks(&["v1", "v3"]);
    let h2 = LabeledGraph::build(names(), &e2)
        .unwrap()
        .with_landmarks(&["v1", "v3"]);
    let s = h1.landmarks.clone().unwrap();
    (h1, h2, s)
}

/// A non-planar graph (it has a `K3,3` minor on `{u1,u2,u3}`,
/// `{v1,v2,v3}`) with edge metric dimension two; landmarks `(x1, y4)`.
pub fn nonplanar_edim2() -> LabeledGraph {
    let names = [
        "u1", "u2", "u3", "v1", "v2", "v3", "x1", "x2", "y1", "y2", "y3", "y4", "z1", "z2", "z3",
    ]
    .map(String::from)
    .to_vec();
    let edges = [
        ("u1", "x1"),
        ("x1", "x2"),
        ("x2", "v1"),
        ("v1", "u2"),
        ("u2", "v3"),
        ("v2", "u1"),
        ("u1", "v3"),
        ("v3", "u3"),
        ("u3", "v2"),
        ("u2", "y1"),
        ("y1", "y2"),
        ("y2", "y3"),
        ("y3", "y4"),
        ("y4", "v2"),
        ("u3", "z1"),
        ("z1", "z2"),
        ("z2", "z3"),
        ("z3", "v1"),
    ];
    LabeledGraph::build(names, &edges)
        .unwrap()
        .with_landmarks(&["x1", "y4"])
}

/// `K4,2` on `{p1..p4} ∪ {q1, q2}` plus outer vertices `a, b, c, t, w`;
/// landmarks `(a, b, c)`. Returns the graph and the vertices spanning
/// `K4,2`.
pub fn subgraph_edim_pair() -> (LabeledGraph, Vec<usize>) {
    let names = ["p1", "p2", "p3", "p4", "q1", "q2", "a", "b", "c", "t", "w"]
        .map(String::from)
        .to_vec();
    let mut edges = Vec::new();
    for p in ["p1", "p2", "p3", "p4"] {
        for q in ["q1", "q2"] {
            edges.push((p, q));
        }
    }
    edges.extend([
        ("b", "p3"),
        ("b", "p4"),
        ("t", "p2"),
        ("t", "a"),
        ("a", "w"),
        ("w", "c"),
        ("w", "p4"),
        ("c", "q2"),
    ]);
    let g = LabeledGraph::build(names, &edges)
        .unwrap()
        .with_landmarks(&["a", "b", "c"]);
    let core = g.vertices(&["p1", "p2", "p3", "p4", "q1", "q2"]);
    (g, core)
}

/// Uniform labeled tree on `n` vertices, decoded from a Prüfer sequence drawn
/// with a ChaCha8 stream seeded by `seed`.
pub fn random_tree(n: usize, seed: u64) -> Result<LabeledGraph> {
    if n < 2 {
        return Err(bad("random tree needs n >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut pairs = Vec::with_capacity(n - 1);
    for &v in &code {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        pairs.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    pairs.push((rest[0], rest[1]));
    LabeledGraph::from_indices(numbered("v", 0..n), pairs)
}

pub fn generate(spec: &FamilySpec) -> Result<LabeledGraph> {
    match *spec {
        FamilySpec::Path(n) => path(n),
        FamilySpec::Cycle(n) => cycle(n),
        FamilySpec::Complete(n) => complete(n),
        FamilySpec::Star(n) => {
            if n < 2 {
                return Err(bad("star needs n >= 2"));
            }
            multipartite(&[1, n - 1])
        }
        FamilySpec::Multipartite(ref parts) => multipartite(parts),
        FamilySpec::Wheel(n) => wheel(n),
        FamilySpec::Petersen => Ok(petersen()),
        FamilySpec::Grid(s, t) => grid(s, t),
        FamilySpec::TwinLadder(k) => twin_ladder_pair(k).map(|(g, _)| g),
        FamilySpec::TwinLadderCore(k) => {
            let (g, core) = twin_ladder_pair(k)?;
            restrict(&g, &core)
        }
        FamilySpec::CliqueSubsets(k) => clique_subsets_graph(k),
        FamilySpec::Broadcast(m) => broadcast_pair(m).map(|(g, _)| g),
        FamilySpec::SameCodesH1 => Ok(same_codes_pair().0),
        FamilySpec::SameCodesH2 => Ok(same_codes_pair().1),
        FamilySpec::NonplanarEdim2 => Ok(nonplanar_edim2()),
        FamilySpec::SubgraphEdim => Ok(subgraph_edim_pair().0),
        FamilySpec::RandomTree { n, seed } => random_tree(n, seed),
    }
}

/// Induced subgraph on `vertices`, keeping their names.
pub fn restrict(g: &LabeledGraph, vertices: &[usize]) -> Result<LabeledGraph> {
    let sub = g.graph.induced_subgraph(vertices)?;
    let names = vertices.iter().map(|&v| g.names[v].clone()).collect();
    LabeledGraph::from_indices(names, sub.edges().to_vec())
}

fn order_of(spec: &FamilySpec) -> Result<usize> {
    Ok(generate(spec)?.graph.order())
}

/// Closed-form fractional edge metric dimension where one is known.
pub fn closed_form_edimf(spec: &FamilySpec) -> Result<Rational> {
    let n = order_of(spec)?;
    if n < 3 {
        return Err(bad("edim_f needs order >= 3"));
    }
    let half = |x: usize| ratio(x as i64, 2);
    Ok(match *spec {
        FamilySpec::Path(_) => integer(1),
        FamilySpec::Cycle(n) => cycle_value(n),
        FamilySpec::Complete(n) => half(n),
        FamilySpec::Star(n) => half(n - 1),
        FamilySpec::Multipartite(ref parts) => {
            if parts.len() == 2 && parts.contains(&1) {
                half(n - 1)
            } else {
                half(n)
            }
        }
        FamilySpec::Wheel(n) => {
            if n <= 5 {
                half(n)
            } else {
                half(n - 1)
            }
        }
        FamilySpec::Petersen => ratio(5, 2),
        FamilySpec::Grid(s, t) if s >= 2 && t >= 2 => integer(2),
        FamilySpec::TwinLadderCore(k) => integer(3 * k as i64),
        FamilySpec::CliqueSubsets(k) => half(k + (1 << k)),
        FamilySpec::RandomTree { .. } => edimf_tree_formula(&tree_anatomy(&generate(spec)?.graph)?),
        _ => return Err(Error::UnknownForm(spec.label())),
    })
}

fn cycle_value(n: usize) -> Rational {
    if n % 2 == 1 {
        ratio(n as i64, n as i64 - 1)
    } else {
        ratio(n as i64, n as i64 - 2)
    }
}

/// Closed-form fractional metric dimension where one is known.
pub fn closed_form_dimf(spec: &FamilySpec) -> Result<Rational> {
    let n = order_of(spec)?;
    if n < 2 {
        return Err(bad("dim_f needs order >= 2"));
    }
    let half = |x: usize| ratio(x as i64, 2);
    let multipartite = |parts: &[usize]| {
        if parts.iter().filter(|&&a| a == 1).count() == 1 {
            half(n - 1)
        } else {
            half(n)
        }
    };
    Ok(match *spec {
        FamilySpec::Path(_) => integer(1),
        FamilySpec::Cycle(n) => cycle_value(n),
        FamilySpec::Complete(n) => half(n),
        FamilySpec::Star(n) => multipartite(&[1, n - 1]),
        FamilySpec::Multipartite(ref parts) => multipartite(parts),
        FamilySpec::Wheel(n) => match n {
            4 | 5 => integer(2),
            6 => ratio(3, 2),
            _ => ratio(n as i64 - 1, 4),
        },
        FamilySpec::Petersen => ratio(5, 3),
        FamilySpec::Grid(s, t) if s >= 2 && t >= 2 => integer(2),
        FamilySpec::TwinLadderCore(k) => integer(3 * k as i64),
        FamilySpec::CliqueSubsets(k) => integer(k as i64),
        FamilySpec::RandomTree { .. } => edimf_tree_formula(&tree_anatomy(&generate(spec)?.graph)?),
        _ => return Err(Error::UnknownForm(spec.label())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_sizes() {
        let check = |spec: FamilySpec, n: usize, m: usize| {
            let g = generate(&spec).unwrap().graph;
            assert_eq!((g.order(), g.size()), (n, m), "{spec:?}");
            assert!(g.is_connected(), "{spec:?}");
        };
        check(FamilySpec::Wheel(6), 6, 10);
        check(FamilySpec::Grid(6, 4), 24, 38);
        check(FamilySpec::CliqueSubsets(3), 11, 43);
        check(FamilySpec::Petersen, 10, 15);
        check(FamilySpec::TwinLadder(2), 21, 34);
        check(FamilySpec::TwinLadderCore(2), 12, 20);
        // Each u_i gets i + (m - i) = m edges.
        check(FamilySpec::Broadcast(3), 9, 15 + 9);
        check(FamilySpec::Broadcast(4), 14, 45 + 16);
        check(FamilySpec::NonplanarEdim2, 15, 18);
        check(FamilySpec::SubgraphEdim, 11, 16);
        check(FamilySpec::SameCodesH1, 6, 7);
        check(FamilySpec::Multipartite(vec![2, 1, 2]), 5, 8);
    }

    #[test]
    fn names_are_published() {
        let g = petersen();
        assert_eq!(g.vertex("w3"), 8);
        assert_eq!(g.name(0), "u0");
        assert!(g.graph.has_edge(g.vertex("w0"), g.vertex("w2")));

        let g = grid(6, 4).unwrap();
        assert_eq!(g.vertex("u2,3"), 6);

        let g = clique_subsets_graph(3).unwrap();
        assert_eq!(g.vertex("b{}"), 3);
        assert_eq!(g.vertex(&subset_vertex_name(&[2, 0])), 3 + 0b101);

        let (g, core) = broadcast_pair(4).unwrap();
        assert_eq!(core.len(), 10);
        let u1 = g.vertex("u1");
        let mut nb: Vec<&str> = g.graph.neighbors(u1).iter().map(|&v| g.name(v)).collect();
        nb.sort_unstable();
        assert_eq!(nb, vec!["w1,1", "w2,1", "w3,1", "w4,1"]);
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(
            generate(&FamilySpec::Cycle(2)),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            generate(&FamilySpec::Wheel(3)),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            generate(&FamilySpec::TwinLadder(1)),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            generate(&FamilySpec::CliqueSubsets(2)),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            generate(&FamilySpec::Broadcast(2)),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            generate(&FamilySpec::Multipartite(vec![3])),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn random_trees_are_deterministic_trees() {
        let a = random_tree(10, 7).unwrap();
        let b = random_tree(10, 7).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(random_tree(2, 0).unwrap().graph.edges(), &[(0, 1)]);
        for seed in 0..20 {
            let g = random_tree(12, seed).unwrap().graph;
            assert!(g.is_tree());
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            closed_form_edimf(&FamilySpec::Wheel(5)).unwrap(),
            ratio(5, 2)
        );
        let k122 = FamilySpec::Multipartite(vec![1, 2, 2]);
        assert_eq!(closed_form_edimf(&k122).unwrap(), ratio(5, 2));
        assert_eq!(closed_form_dimf(&k122).unwrap(), integer(2));
        assert_eq!(
            closed_form_edimf(&FamilySpec::Cycle(3)).unwrap(),
            ratio(3, 2)
        );
        assert_eq!(
            closed_form_edimf(&FamilySpec::Star(6)).unwrap(),
            ratio(5, 2)
        );
        assert!(matches!(
            closed_form_edimf(&FamilySpec::NonplanarEdim2),
            Err(Error::UnknownForm(_))
        ));
    }
}
