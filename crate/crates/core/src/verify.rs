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

//! The reproduction suite behind `edim verify`.
//!
//! Each check compares an expected value with a computed one, both rendered
//! as text so that equality is syntactic (`5/2`, never `2.5`). Every check
//! carries a source tag. `formula` marks a closed-form value and
//! `reference` a hard-coded datum such as a code vector. `oracle` marks a
//! value recomputed independently, for example by brute force.

use std::collections::BTreeSet;
use std::fmt::{self, Display};
use std::io::{self, Write};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::corpus::{self, CorpusGraph};
use crate::error::Result;
use crate::families::{self, FamilySpec, LabeledGraph};
use crate::graph::{DistMatrix, Graph};
use crate::lp::{dim_f, edim_f};
use crate::resolving::{
    code_edge, edge_code_multiset, is_edge_resolving_set, is_resolving_set, r_edge,
};
use crate::search::{self, brute_force_minimum, Mode};
use crate::structure::{
    contains_k33_subgraph, contains_k5_subgraph, edimf_tree_formula, find_isomorphism,
    has_half_dim_bijection, is_twin_expansion_family, subtree_rset_counterexample, tree_anatomy,
    twin_partition,
};
use crate::vertex_set::VertexSet;
use crate::weighting::{integer, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Formula,
    Reference,
    Oracle,
}

impl Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Formula => "formula",
            Source::Reference => "reference",
            Source::Oracle => "oracle",
        })
    }
}

/// What a check observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Outcome {
    /// Passes iff both values render identically.
    pub fn equal(expected: impl Display, got: impl Display) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        Outcome {
            pass: expected == got,
            expected,
            got,
        }
    }

    /// For claims that are not equalities, such as `<=5`.
    pub fn claim(expected: impl Display, got: impl Display, pass: bool) -> Self {
        Outcome {
            expected: expected.to_string(),
            got: got.to_string(),
            pass,
        }
    }

    fn holds(violation: Option<String>) -> Self {
        match violation {
            None => Outcome::equal("holds", "holds"),
            Some(v) => Outcome::claim("holds", v, false),
        }
    }
}

type Runner = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub struct Check {
    pub name: String,
    pub source: Source,
    run: Runner,
}

impl Check {
    fn new(
        name: impl Into<String>,
        source: Source,
        run: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Check {
            name: name.into(),
            source,
            run: Box::new(run),
        }
    }

    /// Runs the check. Library errors and panics become failing entries.
    pub fn execute(&self) -> CheckResult {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(|| (self.run)())) {
            Ok(Ok(o)) => o,
            Ok(Err(e)) => Outcome::claim("-", format!("error:{e}").replace(' ', "_"), false),
            Err(_) => Outcome::claim("-", "panic", false),
        };
        CheckResult {
            name: self.name.clone(),
            source: self.source,
            outcome,
            elapsed: start.elapsed(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub source: Source,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

impl Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.outcome;
        write!(
            f,
            "{} {} expected={} got={} source={}",
            if o.pass { "PASS" } else { "FAIL" },
            self.name,
            o.expected,
            o.got,
            self.source
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    /// Sorted by check name.
    pub results: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.outcome.pass)
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| !r.outcome.pass).count()
    }

    /// Writes one line per check and a summary. Contains no timings, so the
    /// output is identical across runs.
    pub fn write_lines<W: Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.results {
            writeln!(out, "{r}")?;
        }
        writeln!(
            out,
            "{} checks, {} passed, {} failed",
            self.results.len(),
            self.results.len() - self.failures(),
            self.failures()
        )
    }

    pub fn write_timings<W: Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.results {
            writeln!(out, "{:>10.3}ms {}", r.elapsed.as_secs_f64() * 1e3, r.name)?;
        }
        Ok(())
    }
}

/// Runs every check whose name contains `filter`, concurrently, and orders
/// the results by name.
pub fn run(filter: Option<&str>) -> VerifyReport {
    let checks: Vec<Check> = all_checks()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.name.contains(f)))
        .collect();
    let mut results: Vec<CheckResult> = checks.par_iter().map(Check::execute).collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));
    VerifyReport { results }
}

fn gen(spec: &FamilySpec) -> Result<Graph> {
    Ok(families::generate(spec)?.graph)
}

fn half(n: usize) -> Rational {
    ratio(n as i64, 2)
}

fn edge_named(lg: &LabeledGraph, a: &str, b: &str) -> crate::graph::EdgeId {
    lg.graph
        .edge_id(lg.vertex(a), lg.vertex(b))
        .unwrap_or_else(|| panic!("no edge {a}{b}"))
}

fn names_of(lg: &LabeledGraph, set: &VertexSet) -> String {
    let mut names: Vec<&str> = set.iter().map(|v| lg.name(v)).collect();
    names.sort_unstable();
    format!("{{{}}}", names.join(","))
}

/// Every check, in no particular order. Instance-size caps are noted next
/// to each group.
pub fn all_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    formula_checks(&mut checks);
    construction_checks(&mut checks);
    tree_checks(&mut checks);
    corpus_checks(&mut checks);
    checks
}

fn lp_value(
    name: String,
    source: Source,
    spec: FamilySpec,
    expected: Rational,
    solve: fn(&Graph) -> Result<crate::lp::LpSolution>,
) -> Check {
    Check::new(name, source, move || {
        Ok(Outcome::equal(&expected, solve(&gen(&spec)?)?.optimum))
    })
}

fn formula_checks(out: &mut Vec<Check>) {
    // Cycles C3..C12.
    for n in 3..=12usize {
        let expected = if n % 2 == 1 {
            ratio(n as i64, n as i64 - 1)
        } else {
            ratio(n as i64, n as i64 - 2)
        };
        out.push(lp_value(
            format!("cycle/C{n}/edimf"),
            Source::Formula,
            FamilySpec::Cycle(n),
            expected,
            edim_f,
        ));
    }

    out.push(lp_value(
        "petersen/edimf".into(),
        Source::Formula,
        FamilySpec::Petersen,
        ratio(5, 2),
        edim_f,
    ));
    out.push(lp_value(
        "petersen/dimf".into(),
        Source::Formula,
        FamilySpec::Petersen,
        ratio(5, 3),
        dim_f,
    ));

    // Wheels W4..W10.
    for n in 4..=10usize {
        let expected = if n <= 5 { half(n) } else { half(n - 1) };
        out.push(lp_value(
            format!("wheel/W{n}/edimf"),
            Source::Formula,
            FamilySpec::Wheel(n),
            expected,
            edim_f,
        ));
    }
    out.push(lp_value(
        "wheel/W6/dimf".into(),
        Source::Formula,
        FamilySpec::Wheel(6),
        ratio(3, 2),
        dim_f,
    ));

    // Stars on 4..8 vertices, then graphs whose value is n/2.
    for n in 4..=8usize {
        out.push(lp_value(
            format!("multipartite/K1,{}/edimf", n - 1),
            Source::Formula,
            FamilySpec::Star(n),
            half(n - 1),
            edim_f,
        ));
    }
    for parts in [
        vec![1, 1, 1],
        vec![1, 1, 1, 1],
        vec![2, 3],
        vec![1, 2, 2],
        vec![2, 2, 3],
    ] {
        let n: usize = parts.iter().sum();
        let spec = FamilySpec::Multipartite(parts);
        out.push(lp_value(
            format!("multipartite/{}/edimf", spec.label()),
            Source::Formula,
            spec,
            half(n),
            edim_f,
        ));
    }
    out.push(lp_value(
        "multipartite/K1,2,2/dimf".into(),
        Source::Formula,
        FamilySpec::Multipartite(vec![1, 2, 2]),
        integer(2),
        dim_f,
    ));
    out.push(Check::new(
        "multipartite/K1,2,2/gap",
        Source::Formula,
        || {
            let g = gen(&FamilySpec::Multipartite(vec![1, 2, 2]))?;
            let (e, d) = (edim_f(&g)?.optimum, dim_f(&g)?.optimum);
            let pass = e > d;
            Ok(Outcome::claim(
                "5/2>2",
                format!("{e}{}{d}", if pass { ">" } else { "<=" }),
                pass && e == ratio(5, 2),
            ))
        },
    ));

    // edim(K_n) = n - 1 for n = 4..7, and the gap (n - 2)/2 at n = 6, 7.
    for n in 4..=7usize {
        out.push(Check::new(
            format!("complete/K{n}/edim"),
            Source::Formula,
            move || {
                Ok(Outcome::equal(
                    n - 1,
                    search::edim(&gen(&FamilySpec::Complete(n))?)?.size,
                ))
            },
        ));
    }
    for n in [6usize, 7] {
        out.push(Check::new(
            format!("complete/K{n}/gap"),
            Source::Formula,
            move || {
                let g = gen(&FamilySpec::Complete(n))?;
                let gap = integer(search::edim(&g)?.size as i64) - edim_f(&g)?.optimum;
                Ok(Outcome::equal(ratio(n as i64 - 2, 2), gap))
            },
        ));
    }

    // Grids P_s x P_t, s, t in 2..4.
    for s in 2..=4usize {
        for t in 2..=4usize {
            let spec = FamilySpec::Grid(s, t);
            out.push(lp_value(
                format!("grid/P{s}xP{t}/edimf"),
                Source::Formula,
                spec.clone(),
                integer(2),
                edim_f,
            ));
            out.push(Check::new(
                format!("grid/P{s}xP{t}/edim"),
                Source::Formula,
                move || Ok(Outcome::equal(2, search::edim(&gen(&spec)?)?.size)),
            ));
        }
    }

    for n in 3..=8usize {
        out.push(lp_value(
            format!("path/P{n}/edimf"),
            Source::Formula,
            FamilySpec::Path(n),
            integer(1),
            edim_f,
        ));
    }
    for (n, seed) in corpus::connected_seeds() {
        out.push(Check::new(
            format!("path/connected-{n}-{seed}/edimf"),
            Source::Formula,
            move || {
                let v = edim_f(&corpus::random_connected(n, seed)?)?.optimum;
                let pass = v > integer(1);
                Ok(Outcome::claim(">1", &v, pass))
            },
        ));
    }

    // Clique-of-subsets graph, k = 3 (11 vertices).
    out.push(lp_value(
        "clique-subsets/G3/dimf".into(),
        Source::Formula,
        FamilySpec::CliqueSubsets(3),
        integer(3),
        dim_f,
    ));
    out.push(lp_value(
        "clique-subsets/G3/edimf".into(),
        Source::Formula,
        FamilySpec::CliqueSubsets(3),
        ratio(11, 2),
        edim_f,
    ));

    // Twin ladder, k = 2 (H2 has 12 vertices, G2 has 21).
    out.push(Check::new("twin-ladder/H2/edim", Source::Formula, || {
        Ok(Outcome::equal(
            6,
            search::edim(&gen(&FamilySpec::TwinLadderCore(2))?)?.size,
        ))
    }));
    out.push(lp_value(
        "twin-ladder/H2/edimf".into(),
        Source::Formula,
        FamilySpec::TwinLadderCore(2),
        integer(6),
        edim_f,
    ));
    out.push(Check::new("twin-ladder/G2/edim", Source::Formula, || {
        let v = search::edim(&gen(&FamilySpec::TwinLadder(2))?)?.size;
        Ok(Outcome::claim("<=5", v, v <= 5))
    }));
    out.push(Check::new("twin-ladder/G2/edimf", Source::Formula, || {
        let v = edim_f(&gen(&FamilySpec::TwinLadder(2))?)?.optimum;
        let pass = v <= integer(5);
        Ok(Outcome::claim("<=5", &v, pass))
    }));

    // Broadcast pair, m = 3.
    out.push(Check::new(
        "broadcast/G3/u-resolving",
        Source::Formula,
        || {
            let lg = families::generate(&FamilySpec::Broadcast(3))?;
            let d = DistMatrix::new(&lg.graph)?;
            let s = VertexSet::from_iter(lg.graph.order(), lg.vertices(&["u1", "u2", "u3"]));
            Ok(Outcome::equal(
                true,
                is_resolving_set(&d, &s).is_resolving(),
            ))
        },
    ));
    out.push(Check::new("broadcast/H3/dimf", Source::Formula, || {
        let (g, core) = families::broadcast_pair(3)?;
        let h = families::restrict(&g, &core)?;
        Ok(Outcome::equal(3, dim_f(&h.graph)?.optimum))
    }));
}

fn construction_checks(out: &mut Vec<Check>) {
    const NONPLANAR: [(&str, &str, &str); 18] = [
        ("u1", "x1", "(0,2)"),
        ("x1", "x2", "(0,3)"),
        ("x2", "v1", "(1,4)"),
        ("u1", "v2", "(1,1)"),
        ("u1", "v3", "(1,2)"),
        ("u2", "v1", "(2,4)"),
        ("u2", "y1", "(3,3)"),
        ("y1", "y2", "(4,2)"),
        ("y2", "y3", "(4,1)"),
        ("y3", "y4", "(3,0)"),
        ("y4", "v2", "(2,0)"),
        ("u2", "v3", "(2,3)"),
        ("u3", "z1", "(3,2)"),
        ("z1", "z2", "(4,3)"),
        ("z2", "z3", "(3,4)"),
        ("z3", "v1", "(2,5)"),
        ("u3", "v2", "(2,1)"),
        ("u3", "v3", "(2,2)"),
    ];
    for (a, b, code) in NONPLANAR {
        out.push(Check::new(
            format!("construction/nonplanar-edim2/code/{a}{b}"),
            Source::Reference,
            move || {
                let lg = families::nonplanar_edim2();
                let d = DistMatrix::new(&lg.graph)?;
                let s = lg.landmarks.clone().expect("built-in landmarks");
                Ok(Outcome::equal(
                    code,
                    code_edge(&lg.graph, &d, &s, edge_named(&lg, a, b))?,
                ))
            },
        ));
    }
    out.push(Check::new(
        "construction/nonplanar-edim2/edim",
        Source::Reference,
        || {
            Ok(Outcome::equal(
                2,
                search::edim(&families::nonplanar_edim2().graph)?.size,
            ))
        },
    ));
    out.push(Check::new(
        "construction/nonplanar-edim2/patterns",
        Source::Reference,
        || {
            let g = families::nonplanar_edim2().graph;
            let found = contains_k5_subgraph(&g).is_some() || contains_k33_subgraph(&g).is_some();
            Ok(Outcome::equal("none", if found { "found" } else { "none" }))
        },
    ));

    out.push(Check::new(
        "construction/same-codes/codes",
        Source::Reference,
        || {
            let (h1, h2, s) = families::same_codes_pair();
            let render = |lg: &LabeledGraph| -> Result<String> {
                let d = DistMatrix::new(&lg.graph)?;
                let groups = edge_code_multiset(&lg.graph, &d, &s)?;
                Ok(groups
                    .iter()
                    .map(|(c, es)| format!("{c}x{}", es.len()))
                    .collect())
            };
            let (c1, c2) = (render(&h1)?, render(&h2)?);
            let expected = "(0,1)x1(0,2)x1(1,0)x1(1,1)x1(1,2)x1(2,0)x1(2,1)x1";
            Ok(Outcome::claim(
                expected,
                format!("{c1}|{c2}"),
                c1 == expected && c2 == expected,
            ))
        },
    ));
    out.push(Check::new(
        "construction/same-codes/non-isomorphic",
        Source::Oracle,
        || {
            let (h1, h2, _) = families::same_codes_pair();
            Ok(Outcome::equal(
                true,
                find_isomorphism(&h1.graph, &h2.graph).is_none(),
            ))
        },
    ));

    out.push(Check::new(
        "construction/subgraph-edim/codes",
        Source::Reference,
        || {
            const KNOWN: [&str; 16] = [
                "(1,3,2)", "(0,3,2)", "(0,2,1)", "(1,2,0)", "(1,1,1)", "(2,2,0)", "(3,0,2)",
                "(2,0,2)", "(3,2,2)", "(3,2,1)", "(2,2,2)", "(2,2,1)", "(3,1,2)", "(3,1,1)",
                "(2,1,2)", "(2,1,1)",
            ];
            let (lg, _) = families::subgraph_edim_pair();
            let d = DistMatrix::new(&lg.graph)?;
            let s = lg.landmarks.clone().expect("built-in landmarks");
            let got: BTreeSet<String> = lg
                .graph
                .edge_ids()
                .map(|e| code_edge(&lg.graph, &d, &s, e).map(|c| c.to_string()))
                .collect::<Result<_>>()?;
            let expected: BTreeSet<String> = KNOWN.iter().map(|s| s.to_string()).collect();
            let join = |s: &BTreeSet<String>| s.iter().cloned().collect::<String>();
            Ok(Outcome::equal(join(&expected), join(&got)))
        },
    ));
    out.push(Check::new(
        "construction/subgraph-edim/landmarks",
        Source::Reference,
        || {
            let (lg, _) = families::subgraph_edim_pair();
            let d = DistMatrix::new(&lg.graph)?;
            let s = VertexSet::from_iter(
                lg.graph.order(),
                lg.landmarks.clone().expect("built-in landmarks"),
            );
            Ok(Outcome::equal(
                true,
                is_edge_resolving_set(&lg.graph, &d, &s).is_resolving(),
            ))
        },
    ));
    out.push(Check::new(
        "construction/subgraph-edim/edim-K4,2",
        Source::Reference,
        || {
            let (lg, core) = families::subgraph_edim_pair();
            Ok(Outcome::equal(
                4,
                search::edim(&families::restrict(&lg, &core)?.graph)?.size,
            ))
        },
    ));
    out.push(Check::new(
        "construction/subgraph-edim/edim",
        Source::Reference,
        || {
            let v = search::edim(&families::subgraph_edim_pair().0.graph)?.size;
            Ok(Outcome::claim("<=3", v, v <= 3))
        },
    ));

    out.push(Check::new("petersen/rset", Source::Reference, || {
        let lg = families::petersen();
        let d = DistMatrix::new(&lg.graph)?;
        let r = r_edge(
            &lg.graph,
            &d,
            edge_named(&lg, "u0", "u1"),
            edge_named(&lg, "u1", "u2"),
        )?;
        Ok(Outcome::equal("{u0,u2,u3,u4,w0,w2}", names_of(&lg, &r)))
    }));
    out.push(Check::new(
        "clique-subsets/G3/rset",
        Source::Formula,
        || {
            let lg = families::clique_subsets_graph(3)?;
            let d = DistMatrix::new(&lg.graph)?;
            let (b0, b012) = (
                families::subset_vertex_name(&[0]),
                families::subset_vertex_name(&[0, 1, 2]),
            );
            let r = r_edge(
                &lg.graph,
                &d,
                edge_named(&lg, "a0", &b0),
                edge_named(&lg, "a0", &b012),
            )?;
            let mut expected = [b0, b012];
            expected.sort_unstable();
            Ok(Outcome::equal(
                format!("{{{}}}", expected.join(",")),
                names_of(&lg, &r),
            ))
        },
    ));

    out.push(Check::new("twin-ladder/H2/twins", Source::Formula, || {
        let lg = families::generate(&FamilySpec::TwinLadderCore(2))?;
        let mut classes: Vec<String> = twin_partition(&lg.graph)
            .classes
            .iter()
            .map(|c| {
                names_of(
                    &lg,
                    &VertexSet::from_iter(lg.graph.order(), c.members.iter().copied()),
                )
            })
            .collect();
        classes.sort_unstable();
        let mut expected: Vec<String> = (1..=6).map(|i| format!("{{x{i},y{i}}}")).collect();
        expected.sort_unstable();
        Ok(Outcome::equal(expected.concat(), classes.concat()))
    }));
    out.push(Check::new(
        "twin-ladder/G2/witness",
        Source::Formula,
        || {
            let (lg, _) = families::twin_ladder_pair(2)?;
            let d = DistMatrix::new(&lg.graph)?;
            let s = VertexSet::from_iter(
                lg.graph.order(),
                lg.vertices(&["z", "a1", "c1", "a2", "c2"]),
            );
            Ok(Outcome::equal(
                true,
                is_edge_resolving_set(&lg.graph, &d, &s).is_resolving(),
            ))
        },
    ));
}

fn tree_checks(out: &mut Vec<Check>) {
    // The 50 seeded random trees, 4 to 14 vertices.
    for (n, seed) in corpus::tree_seeds() {
        let spec = FamilySpec::RandomTree { n, seed };
        let label = spec.label();
        let s = spec.clone();
        out.push(Check::new(
            format!("tree/{label}/edimf"),
            Source::Formula,
            move || {
                let g = gen(&s)?;
                Ok(Outcome::equal(
                    edimf_tree_formula(&tree_anatomy(&g)?),
                    edim_f(&g)?.optimum,
                ))
            },
        ));
        let s = spec.clone();
        out.push(Check::new(
            format!("tree/{label}/dimf"),
            Source::Formula,
            move || {
                let g = gen(&s)?;
                Ok(Outcome::equal(edim_f(&g)?.optimum, dim_f(&g)?.optimum))
            },
        ));
        out.push(Check::new(
            format!("tree/{label}/subtree-rsets"),
            Source::Formula,
            move || {
                let violation = subtree_rset_counterexample(&gen(&spec)?)?;
                Ok(Outcome::holds(
                    violation.map(|(w, e1, e2)| format!("w={w},{e1},{e2}")),
                ))
            },
        ));
    }
    out.push(Check::new("tree/spider/edimf", Source::Formula, || {
        let g = corpus::spider();
        Ok(Outcome::equal(
            edimf_tree_formula(&tree_anatomy(&g)?),
            edim_f(&g)?.optimum,
        ))
    }));
}

/// The two characterizations of `dim_f = n/2` agree with the LP, and
/// `dim_f = n/2` forces `edim_f = n/2`.
pub fn characterization_violation(g: &Graph) -> Result<Option<String>> {
    let n = g.order();
    let d = DistMatrix::new(g)?;
    let lp_half = dim_f(g)?.optimum == half(n);
    let twins = is_twin_expansion_family(g)?;
    let matching = has_half_dim_bijection(g, &d)?.is_some();
    if lp_half != twins || lp_half != matching {
        return Ok(Some(format!(
            "lp={lp_half},twins={twins},matching={matching}"
        )));
    }
    if lp_half {
        let e = edim_f(g)?.optimum;
        if e != half(n) {
            return Ok(Some(format!("edimf={e}")));
        }
    }
    Ok(None)
}

/// Twin pairs: `R_e{zx, zy} = {x, y}` for each common neighbour `z`, and
/// both optimal LP weightings put total weight at least 1 on `{x, y}`.
pub fn twin_violation(g: &Graph) -> Result<Option<String>> {
    let d = DistMatrix::new(g)?;
    let weights = [dim_f(g)?.weighting, edim_f(g)?.weighting];
    for (x, y) in twin_partition(g).twin_pairs() {
        for w in &weights {
            if w.get(x) + w.get(y) < integer(1) {
                return Ok(Some(format!("weight({x},{y})<1")));
            }
        }
        for &z in g
            .neighbors(x)
            .iter()
            .filter(|&&z| z != y && g.has_edge(z, y))
        {
            let (zx, zy) = (g.edge_id(z, x).unwrap(), g.edge_id(z, y).unwrap());
            if r_edge(g, &d, zx, zy)? != VertexSet::from_iter(g.order(), [x, y]) {
                return Ok(Some(format!("rset({z};{x},{y})")));
            }
        }
    }
    Ok(None)
}

/// `1 <= edim_f <= n/2`, `edim_f <= edim`, `dim_f <= dim`, and graphs with
/// `edim = 2` contain neither `K5` nor `K3,3`.
pub fn sandwich_violation(g: &Graph) -> Result<Option<String>> {
    let n = g.order();
    let (ef, df) = (edim_f(g)?.optimum, dim_f(g)?.optimum);
    let (e, d) = (search::edim(g)?, search::dim(g)?);
    if !e.proven_optimal || !d.proven_optimal {
        return Ok(Some("search-budget".into()));
    }
    if ef < integer(1) || ef > half(n) {
        return Ok(Some(format!("edimf={ef}")));
    }
    if ef > integer(e.size as i64) {
        return Ok(Some(format!("edimf={ef}>edim={}", e.size)));
    }
    if df > integer(d.size as i64) {
        return Ok(Some(format!("dimf={df}>dim={}", d.size)));
    }
    if e.size == 2 && (contains_k5_subgraph(g).is_some() || contains_k33_subgraph(g).is_some()) {
        return Ok(Some("edim=2-with-pattern".into()));
    }
    Ok(None)
}

fn corpus_checks(out: &mut Vec<Check>) {
    for CorpusGraph { name, graph, spec } in corpus::corpus() {
        let n = graph.order();
        // Characterizations and the twin property: n <= 12.
        if n <= 12 {
            let g = graph.clone();
            out.push(Check::new(
                format!("characterization/{name}"),
                Source::Formula,
                move || Ok(Outcome::holds(characterization_violation(&g)?)),
            ));
            let g = graph.clone();
            out.push(Check::new(
                format!("twins/{name}"),
                Source::Formula,
                move || Ok(Outcome::holds(twin_violation(&g)?)),
            ));
        }
        // Bounds: every corpus graph with n >= 3.
        if n >= 3 {
            let g = graph.clone();
            out.push(Check::new(
                format!("sandwich/{name}"),
                Source::Formula,
                move || Ok(Outcome::holds(sandwich_violation(&g)?)),
            ));
        }
        // Exhaustive subset enumeration: 3 <= n <= 10.
        if (3..=10).contains(&n) {
            let g = graph.clone();
            out.push(Check::new(
                format!("exhaustive/{name}"),
                Source::Oracle,
                move || {
                    let d = DistMatrix::new(&g)?;
                    let oracle = format!(
                        "edim={},dim={}",
                        brute_force_minimum(&g, &d, Mode::Edge).len(),
                        brute_force_minimum(&g, &d, Mode::Vertex).len()
                    );
                    let got = format!(
                        "edim={},dim={}",
                        search::edim(&g)?.size,
                        search::dim(&g)?.size
                    );
                    Ok(Outcome::equal(oracle, got))
                },
            ));
        }
        // Closed forms for the parameterized families (trees are covered above).
        if let Some(spec) = spec.filter(|s| !matches!(s, FamilySpec::RandomTree { .. })) {
            for (what, expected, solve) in [
                (
                    "edimf",
                    families::closed_form_edimf(&spec),
                    edim_f as fn(&Graph) -> Result<crate::lp::LpSolution>,
                ),
                (
                    "dimf",
                    families::closed_form_dimf(&spec),
                    dim_f as fn(&Graph) -> Result<crate::lp::LpSolution>,
                ),
            ] {
                let Ok(expected) = expected else { continue };
                let g = graph.clone();
                out.push(Check::new(
                    format!("closed-form/{name}/{what}"),
                    Source::Formula,
                    move || Ok(Outcome::equal(&expected, solve(&g)?.optimum)),
                ));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let checks = all_checks();
        let names: BTreeSet<&str> = checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names.len(), checks.len());
    }

    #[test]
    fn petersen_filter() {
        let report = run(Some("petersen/"));
        let names: Vec<&str> = report.results.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "closed-form/petersen/dimf",
                "closed-form/petersen/edimf",
                "petersen/dimf",
                "petersen/edimf",
                "petersen/rset"
            ]
        );
        assert!(report.passed(), "{:?}", report.results);
        assert_eq!(
            report.results[3].to_string(),
            "PASS petersen/edimf expected=5/2 got=5/2 source=formula"
        );
    }

    #[test]
    fn failures_are_entries() {
        let c = Check::new("x", Source::Oracle, || Err(crate::Error::NotATree));
        let r = c.execute();
        assert!(!r.outcome.pass);
        assert_eq!(r.outcome.got, "error:graph_is_not_a_tree");
    }
}
