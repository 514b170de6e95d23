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

//! Dense tableau simplex over exact rationals.
//!
//! Two phases with artificial variables, Bland's rule for both the entering
//! and the leaving variable. Degenerate pivots are taken as they come; Bland
//! guarantees termination without perturbation.

use num_traits::{One, Signed, Zero};

use crate::weighting::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct Optimum {
    pub value: Rational,
    pub x: Vec<Rational>,
    /// Shadow price of each constraint: the rate of change of the optimum
    /// per unit increase of its right-hand side.
    pub duals: Vec<Rational>,
    pub pivots: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Structural,
    Slack,
    Surplus,
    Artificial,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs `z_j - c_j`; the last entry is the objective value.
    obj: Vec<Rational>,
    basis: Vec<usize>,
    kinds: Vec<Kind>,
    pivots: usize,
}

impl Tableau {
    fn width(&self) -> usize {
        self.kinds.len()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Rational::one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let support: Vec<usize> = (0..=self.width())
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            let factor = row[c].clone();
            if factor.is_zero() {
                return;
            }
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = c;
        self.pivots += 1;
    }

    /// Runs Bland's rule to optimality over columns accepted by `allowed`.
    fn optimize(&mut self, allowed: impl Fn(usize) -> bool) -> Result<(), Status> {
        loop {
            let entering = (0..self.width()).find(|&j| allowed(j) && self.obj[j].is_negative());
            let Some(c) = entering else {
                return Ok(());
            };
            let rhs = self.width();
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &best {
                    None => true,
                    Some((b, q)) => ratio < *q || (ratio == *q && self.basis[i] < self.basis[*b]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                None => return Err(Status::Unbounded),
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn load_objective(&mut self, costs: &[Rational]) {
        let w = self.width();
        let mut obj = vec![Rational::zero(); w + 1];
        for (j, c) in costs.iter().enumerate() {
            obj[j] = -c.clone();
        }
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (o, a) in obj.iter_mut().zip(&self.rows[i]).take(w + 1) {
                if !a.is_zero() {
                    *o += cb * a;
                }
            }
        }
        self.obj = obj;
    }
}

/// Maximizes `objective · x` subject to `constraints` and `x >= 0`.
pub fn maximize(objective: &[Rational], constraints: &[Constraint]) -> Result<Optimum, Status> {
    let nvars = objective.len();
    let mut kinds = vec![Kind::Structural; nvars];
    let mut slack_col = vec![None; constraints.len()];
    let mut art_col = vec![None; constraints.len()];

    // Normalize to non-negative right-hand sides.
    let normalized: Vec<(Vec<Rational>, Relation, Rational)> = constraints
        .iter()
        .map(|c| {
            assert_eq!(c.coefficients.len(), nvars, "constraint width");
            if c.rhs.is_negative() {
                let rel = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (
                    c.coefficients.iter().map(|x| -x.clone()).collect(),
                    rel,
                    -c.rhs.clone(),
                )
            } else {
                (c.coefficients.clone(), c.relation, c.rhs.clone())
            }
        })
        .collect();

    for (i, (_, rel, _)) in normalized.iter().enumerate() {
        match rel {
            Relation::Le => {
                slack_col[i] = Some(kinds.len());
                kinds.push(Kind::Slack);
            }
            Relation::Ge => {
                slack_col[i] = Some(kinds.len());
                kinds.push(Kind::Surplus);
            }
            Relation::Eq => {}
        }
    }
    for (i, (_, rel, _)) in normalized.iter().enumerate() {
        if *rel != Relation::Le {
            art_col[i] = Some(kinds.len());
            kinds.push(Kind::Artificial);
        }
    }

    let width = kinds.len();
    let mut rows = Vec::with_capacity(constraints.len());
    let mut basis = Vec::with_capacity(constraints.len());
    for (i, (coef, rel, rhs)) in normalized.iter().enumerate() {
        let mut row = vec![Rational::zero(); width + 1];
        row[..nvars].clone_from_slice(coef);
        match rel {
            Relation::Le => {
                row[slack_col[i].unwrap()] = Rational::one();
                basis.push(slack_col[i].unwrap());
            }
            Relation::Ge => {
                row[slack_col[i].unwrap()] = -Rational::one();
                row[art_col[i].unwrap()] = Rational::one();
                basis.push(art_col[i].unwrap());
            }
            Relation::Eq => {
                row[art_col[i].unwrap()] = Rational::one();
                basis.push(art_col[i].unwrap());
            }
        }
        row[width] = rhs.clone();
        rows.push(row);
    }

    let mut t = Tableau {
        rows,
        obj: Vec::new(),
        basis,
        kinds,
        pivots: 0,
    };

    let has_artificials = t.kinds.contains(&Kind::Artificial);
    if has_artificials {
        let phase1: Vec<Rational> = t
            .kinds
            .iter()
            .map(|k| {
                if *k == Kind::Artificial {
                    -Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        t.load_objective(&phase1);
        t.optimize(|_| true).expect("phase one is bounded");
        if t.obj[width].is_negative() {
            return Err(Status::Infeasible);
        }
        // Drive zero-level artificials out of the basis; rows where that is
        // impossible are redundant and dropped.
        let mut i = 0;
        while i < t.rows.len() {
            if t.kinds[t.basis[i]] == Kind::Artificial {
                let col =
                    (0..width).find(|&j| t.kinds[j] != Kind::Artificial && !t.rows[i][j].is_zero());
                match col {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut costs = vec![Rational::zero(); width];
    costs[..nvars].clone_from_slice(objective);
    t.load_objective(&costs);
    let kinds = t.kinds.clone();
    t.optimize(|j| kinds[j] != Kind::Artificial)?;

    let mut x = vec![Rational::zero(); nvars];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < nvars {
            x[b] = t.rows[i][width].clone();
        }
    }
    let duals = (0..constraints.len())
        .map(|i| {
            let y = match normalized[i].1 {
                Relation::Le => t.obj[slack_col[i].unwrap()].clone(),
                Relation::Ge => -t.obj[slack_col[i].unwrap()].clone(),
                Relation::Eq => t.obj[art_col[i].unwrap()].clone(),
            };
            if constraints[i].rhs.is_negative() {
                -y
            } else {
                y
            }
        })
        .collect();
    Ok(Optimum {
        value: t.obj[width].clone(),
        x,
        duals,
        pivots: t.pivots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weighting::{integer, ratio};

    fn c(coef: &[i64], relation: Relation, rhs: i64) -> Constraint {
        Constraint {
            coefficients: coef.iter().map(|&x| integer(x)).collect(),
            relation,
            rhs: integer(rhs),
        }
    }

    #[test]
    fn textbook_max() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6).
        let obj = [integer(3), integer(5)];
        let cons = [
            c(&[1, 0], Relation::Le, 4),
            c(&[0, 2], Relation::Le, 12),
            c(&[3, 2], Relation::Le, 18),
        ];
        let opt = maximize(&obj, &cons).unwrap();
        assert_eq!(opt.value, integer(36));
        assert_eq!(opt.x, vec![integer(2), integer(6)]);
        // Shadow prices of the textbook instance.
        assert_eq!(opt.duals, vec![integer(0), ratio(3, 2), integer(1)]);
    }

    #[test]
    fn two_phase_min_cover() {
        // min x + y + z s.t. x + y >= 1, y + z >= 1, x + z >= 1 -> 3/2.
        let obj = [integer(-1), integer(-1), integer(-1)];
        let cons = [
            c(&[1, 1, 0], Relation::Ge, 1),
            c(&[0, 1, 1], Relation::Ge, 1),
            c(&[1, 0, 1], Relation::Ge, 1),
        ];
        let opt = maximize(&obj, &cons).unwrap();
        assert_eq!(opt.value, ratio(-3, 2));
        assert_eq!(opt.x, vec![ratio(1, 2); 3]);
        assert_eq!(opt.duals, vec![ratio(-1, 2); 3]);
    }

    #[test]
    fn equality_and_redundant_rows() {
        // x + y = 2 twice, max x -> 2.
        let cons = [c(&[1, 1], Relation::Eq, 2), c(&[1, 1], Relation::Eq, 2)];
        let opt = maximize(&[integer(1), integer(0)], &cons).unwrap();
        assert_eq!(opt.value, integer(2));
        let total: Rational = opt.duals.iter().sum();
        assert_eq!(total, integer(1));
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let cons = [c(&[1], Relation::Le, 1), c(&[1], Relation::Ge, 2)];
        assert_eq!(
            maximize(&[integer(1)], &cons).unwrap_err(),
            Status::Infeasible
        );
        let cons = [c(&[1, -1], Relation::Le, 1)];
        assert_eq!(
            maximize(&[integer(1), integer(0)], &cons).unwrap_err(),
            Status::Unbounded
        );
    }

    #[test]
    fn negative_rhs_is_normalized() {
        // -x <= -3  <=>  x >= 3; min x -> 3.
        let cons = [c(&[-1], Relation::Le, -3)];
        let opt = maximize(&[integer(-1)], &cons).unwrap();
        assert_eq!(opt.value, integer(-3));
        assert_eq!(opt.duals, vec![integer(1)]);
    }
}
