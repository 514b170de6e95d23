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

//! Distinguishing sets, code vectors, and checks for (edge) resolving sets
//! and functions.
//!
//! A vertex `z` distinguishes the vertex pair `{x, y}` when
//! `d(x, z) != d(y, z)`, and the edge pair `{e1, e2}` when
//! `d(e1, z) != d(e2, z)`, with `d(e, z)` the distance to the nearer endpoint.
//! The set of all such `z` is the pair's R-set. A vertex set resolves the
//! graph when it meets every R-set; a weighting resolves it when every R-set
//! carries total weight at least one.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{DistMatrix, EdgeId, Graph};
use crate::vertex_set::VertexSet;
use crate::weighting::Weighting;

/// Distances from one vertex or edge to an ordered landmark list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeVector(pub Vec<u32>);

impl fmt::Display for CodeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Outcome of a resolving check. On failure carries the lexicographically
/// first pair no landmark (or not enough weight) distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict<T> {
    Resolving,
    Unresolved(T, T),
}

impl<T: Copy> Verdict<T> {
    pub fn is_resolving(&self) -> bool {
        matches!(self, Verdict::Resolving)
    }

    pub fn witness(&self) -> Option<(T, T)> {
        match *self {
            Verdict::Resolving => None,
            Verdict::Unresolved(a, b) => Some((a, b)),
        }
    }
}

/// `R_v{x, y}`.
pub fn r_vertex(d: &DistMatrix, x: usize, y: usize) -> Result<VertexSet> {
    let n = d.order();
    for v in [x, y] {
        if v >= n {
            return Err(Error::OutOfRange { vertex: v, n });
        }
    }
    if x == y {
        return Err(Error::EqualVertices(x));
    }
    Ok(r_vertex_raw(d, x, y))
}

pub(crate) fn r_vertex_raw(d: &DistMatrix, x: usize, y: usize) -> VertexSet {
    let (rx, ry) = (d.row(x), d.row(y));
    VertexSet::from_iter(d.order(), (0..d.order()).filter(|&z| rx[z] != ry[z]))
}

/// `R_e{e1, e2}`.
pub fn r_edge(g: &Graph, d: &DistMatrix, e1: EdgeId, e2: EdgeId) -> Result<VertexSet> {
    let a = g.edge(e1)?;
    let b = g.edge(e2)?;
    if e1 == e2 {
        return Err(Error::EqualEdges(e1.0));
    }
    Ok(r_edge_raw(d, a, b))
}

pub(crate) fn r_edge_raw(d: &DistMatrix, a: (usize, usize), b: (usize, usize)) -> VertexSet {
    let n = d.order();
    VertexSet::from_iter(
        n,
        (0..n).filter(|&z| d.edge_distance_raw(a, z) != d.edge_distance_raw(b, z)),
    )
}

/// All `C(n, 2)` vertex pairs `x < y` with their R-sets, materialized lazily.
pub fn vertex_rsets(d: &DistMatrix) -> impl Iterator<Item = ((usize, usize), VertexSet)> + '_ {
    let n = d.order();
    (0..n).flat_map(move |x| (x + 1..n).map(move |y| ((x, y), r_vertex_raw(d, x, y))))
}

/// All `C(m, 2)` edge pairs `e1 < e2` with their R-sets, materialized lazily.
pub fn edge_rsets<'a>(
    g: &'a Graph,
    d: &'a DistMatrix,
) -> impl Iterator<Item = ((EdgeId, EdgeId), VertexSet)> + 'a {
    let edges = g.edges();
    let m = edges.len();
    (0..m).flat_map(move |i| {
        (i + 1..m).map(move |j| ((EdgeId(i), EdgeId(j)), r_edge_raw(d, edges[i], edges[j])))
    })
}

fn check_landmarks(n: usize, landmarks: &[usize]) -> Result<()> {
    if landmarks.is_empty() {
        return Err(Error::BadLandmarks);
    }
    let mut seen = vec![false; n];
    for &v in landmarks {
        if v >= n {
            return Err(Error::OutOfRange { vertex: v, n });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::BadLandmarks);
        }
    }
    Ok(())
}

/// `code_U(e)` for the ordered landmark list `U`.
pub fn code_edge(g: &Graph, d: &DistMatrix, landmarks: &[usize], e: EdgeId) -> Result<CodeVector> {
    check_landmarks(g.order(), landmarks)?;
    let ends = g.edge(e)?;
    Ok(CodeVector(
        landmarks
            .iter()
            .map(|&u| d.edge_distance_raw(ends, u))
            .collect(),
    ))
}

/// `code_U(x)` for a vertex.
pub fn code_vertex(d: &DistMatrix, landmarks: &[usize], x: usize) -> Result<CodeVector> {
    check_landmarks(d.order(), landmarks)?;
    if x >= d.order() {
        return Err(Error::OutOfRange {
            vertex: x,
            n: d.order(),
        });
    }
    Ok(CodeVector(landmarks.iter().map(|&u| d.get(x, u)).collect()))
}

/// Groups edges by their code vector. The landmarks resolve the edges iff
/// every group is a singleton.
pub fn edge_code_multiset(
    g: &Graph,
    d: &DistMatrix,
    landmarks: &[usize],
) -> Result<BTreeMap<CodeVector, Vec<EdgeId>>> {
    check_landmarks(g.order(), landmarks)?;
    let mut groups: BTreeMap<CodeVector, Vec<EdgeId>> = BTreeMap::new();
    for (i, &ends) in g.edges().iter().enumerate() {
        let code = CodeVector(
            landmarks
                .iter()
                .map(|&u| d.edge_distance_raw(ends, u))
                .collect(),
        );
        groups.entry(code).or_default().push(EdgeId(i));
    }
    Ok(groups)
}

/// Checks `|S ∩ R_v{x, y}| >= 1` for every vertex pair.
pub fn is_resolving_set(d: &DistMatrix, s: &VertexSet) -> Verdict<usize> {
    let n = d.order();
    let landmarks = s.to_vec();
    for x in 0..n {
        for y in x + 1..n {
            if landmarks.iter().all(|&z| d.get(x, z) == d.get(y, z)) {
                return Verdict::Unresolved(x, y);
            }
        }
    }
    Verdict::Resolving
}

/// Checks `|S ∩ R_e{e1, e2}| >= 1` for every edge pair.
pub fn is_edge_resolving_set(g: &Graph, d: &DistMatrix, s: &VertexSet) -> Verdict<EdgeId> {
    let edges = g.edges();
    let landmarks = s.to_vec();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if landmarks
                .iter()
                .all(|&z| d.edge_distance_raw(edges[i], z) == d.edge_distance_raw(edges[j], z))
            {
                return Verdict::Unresolved(EdgeId(i), EdgeId(j));
            }
        }
    }
    Verdict::Resolving
}

fn check_weighting(n: usize, w: &Weighting) -> Result<()> {
    if w.len() != n {
        return Err(Error::WeightLength { got: w.len(), n });
    }
    Weighting::new(w.values().to_vec()).map(|_| ())
}

/// Checks `g(R_v{x, y}) >= 1` for every vertex pair, exactly.
pub fn is_resolving_function(d: &DistMatrix, w: &Weighting) -> Result<Verdict<usize>> {
    let n = d.order();
    check_weighting(n, w)?;
    let (nums, denom) = w.scaled();
    for x in 0..n {
        for y in x + 1..n {
            let (rx, ry) = (d.row(x), d.row(y));
            let mass = (0..n)
                .filter(|&z| rx[z] != ry[z])
                .fold(BigInt::zero(), |acc, z| acc + &nums[z]);
            if mass < denom {
                return Ok(Verdict::Unresolved(x, y));
            }
        }
    }
    Ok(Verdict::Resolving)
}

/// Checks `g(R_e{e1, e2}) >= 1` for every edge pair, exactly.
pub fn is_edge_resolving_function(
    g: &Graph,
    d: &DistMatrix,
    w: &Weighting,
) -> Result<Verdict<EdgeId>> {
    let n = g.order();
    check_weighting(n, w)?;
    let (nums, denom) = w.scaled();
    let edges = g.edges();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let mass = (0..n)
                .filter(|&z| d.edge_distance_raw(edges[i], z) != d.edge_distance_raw(edges[j], z))
                .fold(BigInt::zero(), |acc, z| acc + &nums[z]);
            if mass < denom {
                return Ok(Verdict::Unresolved(EdgeId(i), EdgeId(j)));
            }
        }
    }
    Ok(Verdict::Resolving)
}
