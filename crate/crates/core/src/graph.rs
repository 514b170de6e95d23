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

//! Simple undirected graphs with canonical edge indexing and exact
//! shortest-path distances.
//!
//! Vertices are the integers `0..n`. Edges are stored as pairs `(u, v)` with
//! `u < v`, sorted lexicographically, and an [`EdgeId`] is an index into that
//! sorted list. Every code vector and LP column in this crate refers to this
//! order, so output is reproducible across runs.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Index of an edge in [`Graph::edges`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Pairs may be given in either
    /// orientation; loops and repeated pairs are rejected.
    pub fn new(n: usize, edge_pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        for (a, b) in edge_pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::OutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adjacency,
            edges,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Canonical edge list, `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<(usize, usize)> {
        self.edges.get(e.0).copied().ok_or(Error::EdgeOutOfRange {
            index: e.0,
            m: self.edges.len(),
        })
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    /// Looks up the id of edge `uv` (either orientation).
    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(EdgeId)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// BFS distances from `source`; unreachable vertices get `None`.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        if source >= self.n {
            return dist;
        }
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True iff BFS from vertex 0 reaches every vertex. The empty graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        self.first_unreached().is_none()
    }

    fn first_unreached(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        self.bfs(0).iter().position(Option::is_none)
    }

    /// Fails with [`Error::Disconnected`] naming vertex 0 and the smallest
    /// vertex it cannot reach.
    pub fn require_connected(&self) -> Result<()> {
        match self.first_unreached() {
            None => Ok(()),
            Some(v) => Err(Error::Disconnected(0, v)),
        }
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if index[v] != usize::MAX {
                return Err(Error::BadParameter(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let pairs = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), pairs)
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }
}

/// All-pairs shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistMatrix {
    /// One BFS per vertex. Errors on disconnected input.
    pub fn new(g: &Graph) -> Result<Self> {
        g.require_connected()?;
        let n = g.order();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(g.bfs(s).into_iter().map(|d| d.expect("connected")));
        }
        Ok(DistMatrix { n, data })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, w: usize) -> u32 {
        self.data[u * self.n + w]
    }

    /// Row of distances from `u`.
    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// `d(e, v) = min(d(x, v), d(y, v))` for `e = xy`.
    pub fn edge_distance(&self, g: &Graph, e: EdgeId, v: usize) -> Result<u32> {
        let (x, y) = g.edge(e)?;
        g.check_vertex(v)?;
        Ok(self.edge_distance_raw((x, y), v))
    }

    #[inline]
    pub(crate) fn edge_distance_raw(&self, (x, y): (usize, usize), v: usize) -> u32 {
        self.get(x, v).min(self.get(y, v))
    }
}

/// Convenience wrapper for [`DistMatrix::new`].
pub fn all_pairs_distances(g: &Graph) -> Result<DistMatrix> {
    DistMatrix::new(g)
}
