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

//! Fractional (edge) metric dimension as an exact covering LP.
//!
//! The covering LP minimizes `Σ g(v)` subject to `g(R) >= 1` for every R-set
//! `R` and `g >= 0`. Upper bounds `g <= 1` are left out: lowering any entry
//! above one to one keeps every row satisfied and only lowers the objective,
//! so every optimum already lies in `[0, 1]`.
//!
//! [`solve_covering_lp`] runs the simplex on the dual packing LP
//! (`max Σ y_R` subject to `Σ_{R ∋ v} y_R <= 1`), whose slack basis is
//! feasible from the start and whose tableau has one row per vertex rather
//! than one per R-set. The covering weighting is read off the shadow prices.
//! Both solutions are checked exactly before returning: the weighting covers
//! every row and its total equals the packing value, which certifies
//! optimality by weak duality. [`solve_covering_lp_dual`] solves the
//! covering form directly with two phases and serves as an independent route.

pub mod simplex;

use std::collections::HashSet;
use std::io::{self, Write};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{DistMatrix, Graph};
use crate::resolving::{edge_rsets, vertex_rsets};
use crate::vertex_set::VertexSet;
use crate::weighting::{Rational, Weighting};
use simplex::{maximize, Constraint, Relation};

/// A reduced covering LP over `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringLp {
    n: usize,
    rows: Vec<VertexSet>,
}

/// Exact optimum and one optimal weighting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub optimum: Rational,
    pub weighting: Weighting,
}

impl CoveringLp {
    /// Reduces `rows` and wraps them. All rows must have capacity `n`.
    pub fn new(n: usize, rows: Vec<VertexSet>) -> Result<Self> {
        if let Some(r) = rows.iter().position(|r| r.capacity() != n) {
            return Err(Error::BadParameter(format!(
                "row {r} has capacity {}, expected {n}",
                rows[r].capacity()
            )));
        }
        Ok(CoveringLp {
            n,
            rows: reduce_constraints(rows)?,
        })
    }

    /// Rows of the vertex-resolving LP of a connected graph.
    pub fn for_vertices(g: &Graph, d: &DistMatrix) -> Result<Self> {
        Self::new(g.order(), vertex_rsets(d).map(|(_, r)| r).collect())
    }

    /// Rows of the edge-resolving LP of a connected graph.
    pub fn for_edges(g: &Graph, d: &DistMatrix) -> Result<Self> {
        Self::new(g.order(), edge_rsets(g, d).map(|(_, r)| r).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    /// Same LP with rows in the given order. Panics unless `order` is a
    /// permutation of the row indices.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.rows.len());
        CoveringLp {
            n: self.n,
            rows: order.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    /// Plain-text dump: one line per row, member indices separated by spaces.
    pub fn write_rows<W: Write>(&self, mut out: W) -> io::Result<()> {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Drops duplicate rows and every row that contains another row. The result
/// is the minimal antichain under inclusion, sorted by size and then by
/// members; its feasible region equals that of the input.
pub fn reduce_constraints(rows: Vec<VertexSet>) -> Result<Vec<VertexSet>> {
    if let Some(i) = rows.iter().position(VertexSet::is_empty) {
        return Err(Error::EmptyRow(i));
    }
    let unique: HashSet<VertexSet> = rows.into_iter().collect();
    let mut sorted: Vec<(usize, Vec<usize>, VertexSet)> = unique
        .into_iter()
        .map(|r| (r.len(), r.to_vec(), r))
        .collect();
    sorted.sort_unstable_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let mut kept: Vec<VertexSet> = Vec::new();
    for (_, _, row) in sorted {
        if !kept.iter().any(|k| k.is_subset(&row)) {
            kept.push(row);
        }
    }
    Ok(kept)
}

fn row_sums_cover(lp: &CoveringLp, w: &Weighting) -> bool {
    let one = Rational::one();
    lp.rows.iter().all(|r| w.weight_of(r) >= one)
}

fn indicator_row(r: &VertexSet, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|v| {
            if r.contains(v) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// Exact optimum of the covering LP: two-phase simplex on the covering form
/// with surplus and artificial columns.
///
/// The returned weighting is checked to cover every row, and the shadow
/// prices are checked to form a packing of the same value, which certifies
/// optimality.
pub fn solve_covering_lp(lp: &CoveringLp) -> LpSolution {
    let n = lp.n;
    let objective = vec![-Rational::one(); n];
    let constraints: Vec<Constraint> = lp
        .rows
        .iter()
        .map(|r| Constraint {
            coefficients: indicator_row(r, n),
            relation: Relation::Ge,
            rhs: Rational::one(),
        })
        .collect();
    let opt = maximize(&objective, &constraints).expect("covering LP is feasible and bounded");
    let optimum = -opt.value;

    let one = Rational::one();
    let clamped: Vec<Rational> = opt
        .x
        .into_iter()
        .map(|x| if x > one { one.clone() } else { x })
        .collect();
    let weighting = Weighting::new(clamped).expect("clamped weights lie in [0, 1]");
    assert!(row_sums_cover(lp, &weighting), "weighting violates a row");
    assert_eq!(weighting.total(), optimum, "clamping changed the objective");

    let packing: Vec<Rational> = opt.duals.into_iter().map(|y| -y).collect();
    assert!(
        packing.iter().all(|y| *y >= Rational::zero()),
        "negative packing value"
    );
    for v in 0..n {
        let load = lp
            .rows
            .iter()
            .zip(&packing)
            .filter(|(r, _)| r.contains(v))
            .fold(Rational::zero(), |acc, (_, y)| acc + y);
        assert!(load <= one, "packing overloads vertex {v}");
    }
    let packed = packing.iter().fold(Rational::zero(), |acc, y| acc + y);
    assert_eq!(packed, optimum, "duality gap");

    LpSolution { optimum, weighting }
}

/// Exact optimum via the dual packing LP `max Σ y_R` subject to
/// `Σ_{R ∋ v} y_R <= 1`. Its slack basis is feasible, so no first phase is
/// needed; the covering weighting is read off the shadow prices. An
/// independent route to [`solve_covering_lp`].
pub fn solve_covering_lp_dual(lp: &CoveringLp) -> LpSolution {
    let n = lp.n;
    let objective = vec![Rational::one(); lp.rows.len()];
    let incidence: Vec<Vec<Rational>> = lp.rows.iter().map(|r| indicator_row(r, n)).collect();
    let constraints: Vec<Constraint> = (0..n)
        .map(|v| Constraint {
            coefficients: incidence.iter().map(|row| row[v].clone()).collect(),
            relation: Relation::Le,
            rhs: Rational::one(),
        })
        .collect();
    let opt = maximize(&objective, &constraints).expect("packing LP is feasible and bounded");
    let weighting = Weighting::new(opt.duals).expect("optimal covering weights lie in [0, 1]");
    assert!(
        row_sums_cover(lp, &weighting),
        "dual weighting violates a row"
    );
    assert_eq!(weighting.total(), opt.value, "duality gap");
    LpSolution {
        optimum: opt.value,
        weighting,
    }
}

fn require_order(g: &Graph, min: usize) -> Result<()> {
    if g.order() < min {
        return Err(Error::TooSmall { n: g.order(), min });
    }
    Ok(())
}

/// Fractional metric dimension `dim_f(G)` with an optimal resolving function.
pub fn dim_f(g: &Graph) -> Result<LpSolution> {
    g.require_connected()?;
    require_order(g, 2)?;
    let d = DistMatrix::new(g)?;
    Ok(solve_covering_lp(&CoveringLp::for_vertices(g, &d)?))
}

/// Fractional edge metric dimension `edim_f(G)` with an optimal edge
/// resolving function.
pub fn edim_f(g: &Graph) -> Result<LpSolution> {
    g.require_connected()?;
    require_order(g, 3)?;
    let d = DistMatrix::new(g)?;
    Ok(solve_covering_lp(&CoveringLp::for_edges(g, &d)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weighting::{integer, ratio};

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, v.iter().copied())
    }

    #[test]
    fn dominance_keeps_the_smaller_row() {
        let a = set(4, &[0, 1]);
        let ab = set(4, &[0, 1, 2]);
        assert_eq!(
            reduce_constraints(vec![ab, a.clone(), a.clone()]).unwrap(),
            vec![a]
        );
        assert_eq!(
            reduce_constraints(vec![set(3, &[0]), VertexSet::new(3)]),
            Err(Error::EmptyRow(1))
        );
    }

    #[test]
    fn c5_vertex_rows() {
        let g = cycle(5);
        let d = DistMatrix::new(&g).unwrap();
        let lp = CoveringLp::for_vertices(&g, &d).unwrap();
        assert_eq!(lp.rows().len(), 5);
        assert!(lp.rows().iter().all(|r| r.len() == 4));
    }

    #[test]
    fn single_row() {
        let lp = CoveringLp::new(2, vec![set(2, &[0, 1])]).unwrap();
        assert_eq!(solve_covering_lp(&lp).optimum, integer(1));
        assert_eq!(solve_covering_lp_dual(&lp).optimum, integer(1));
    }

    #[test]
    fn cycles_match_closed_form() {
        assert_eq!(edim_f(&cycle(5)).unwrap().optimum, ratio(5, 4));
        assert_eq!(edim_f(&cycle(6)).unwrap().optimum, ratio(3, 2));
        assert_eq!(dim_f(&cycle(6)).unwrap().optimum, ratio(3, 2));
    }

    #[test]
    fn primal_and_dual_routes_agree() {
        for n in 3..=8 {
            let g = cycle(n);
            let d = DistMatrix::new(&g).unwrap();
            let lp = CoveringLp::for_edges(&g, &d).unwrap();
            assert_eq!(
                solve_covering_lp(&lp).optimum,
                solve_covering_lp_dual(&lp).optimum
            );
        }
    }

    #[test]
    fn rejects_small_or_disconnected() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(edim_f(&k2), Err(Error::TooSmall { n: 2, min: 3 }));
        assert_eq!(dim_f(&k2).unwrap().optimum, integer(1));
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(dim_f(&two), Err(Error::Disconnected(..))));
    }

    #[test]
    fn dump_format() {
        let lp = CoveringLp::new(4, vec![set(4, &[1, 3]), set(4, &[0, 2])]).unwrap();
        let mut out = Vec::new();
        lp.write_rows(&mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "0 2\n1 3\n");
    }
}
