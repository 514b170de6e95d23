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

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use edim::families::{self, FamilySpec, LabeledGraph};
use edim::lp::{self, CoveringLp};
use edim::{io as graph_io, search, verify, DistMatrix, Error};

/// Metric dimension, edge metric dimension and their fractional versions.
#[derive(Parser)]
#[command(name = "edim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant of the graph in an edge-list file.
    Compute {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        what: What,
        /// Also write the reduced covering LP, one row per line.
        #[arg(long)]
        dump_lp: Option<PathBuf>,
    },
    /// Write a generated graph as an edge list plus a `.names` file.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Part sizes of a complete multipartite graph, e.g. `1,2,2`.
        #[arg(long, value_delimiter = ',')]
        parts: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; defaults to `<family label>.edges`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the reproduction checks.
    Verify {
        /// Only run checks whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Print per-check timings on stderr.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Dim,
    Edim,
    Dimf,
    Edimf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Multipartite,
    Wheel,
    Petersen,
    Grid,
    TwinLadder,
    CliqueSubsets,
    Broadcast,
    SameCodes,
    NonplanarEdim2,
    SubgraphEdim,
    RandomTree,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Disconnected(..) | Error::TooSmall { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute {
            input,
            what,
            dump_lp,
        } => compute(&input, what, dump_lp.as_deref()),
        Command::Gen {
            family,
            n,
            s,
            t,
            k,
            m,
            parts,
            seed,
            out,
        } => gen(
            family,
            Params {
                n,
                s,
                t,
                k,
                m,
                parts,
                seed,
            },
            out,
        ),
        Command::Verify { filter, timings } => return run_verify(filter.as_deref(), timings),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("edim: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn compute(input: &Path, what: What, dump_lp: Option<&Path>) -> Result<(), Failure> {
    let text = fs::read_to_string(input).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", input.display()),
    })?;
    let g = graph_io::parse_edge_list(&text)?;
    g.require_connected()?;
    let min = match what {
        What::Dim | What::Dimf => 2,
        What::Edim | What::Edimf => 3,
    };
    if g.order() < min {
        return Err(Error::TooSmall { n: g.order(), min }.into());
    }

    if let Some(path) = dump_lp {
        let d = DistMatrix::new(&g)?;
        let lp = match what {
            What::Dim | What::Dimf => CoveringLp::for_vertices(&g, &d)?,
            What::Edim | What::Edimf => CoveringLp::for_edges(&g, &d)?,
        };
        lp.write_rows(BufWriter::new(File::create(path)?))?;
    }

    let stdout = io::stdout();
    let mut out = stdout.lock();
    match what {
        What::Dim | What::Edim => {
            let result = if matches!(what, What::Dim) {
                search::dim(&g)?
            } else {
                search::edim(&g)?
            };
            if !result.proven_optimal {
                eprintln!("edim: node budget exhausted; the value is an upper bound");
            }
            writeln!(out, "{}", result.size)?;
            writeln!(out, "{}", result.witness)?;
        }
        What::Dimf | What::Edimf => {
            let sol = if matches!(what, What::Dimf) {
                lp::dim_f(&g)?
            } else {
                lp::edim_f(&g)?
            };
            writeln!(out, "{}", sol.optimum)?;
            for (v, w) in sol.weighting.values().iter().enumerate() {
                writeln!(out, "{v}={w}")?;
            }
        }
    }
    Ok(())
}

struct Params {
    n: Option<usize>,
    s: Option<usize>,
    t: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    parts: Vec<usize>,
    seed: u64,
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure {
        code: 2,
        message: format!("this family needs --{flag}"),
    })
}

fn gen(family: Family, p: Params, out: Option<PathBuf>) -> Result<(), Failure> {
    // The main graph, plus an optional second graph and its file suffix.
    let (main, second): (LabeledGraph, Option<(LabeledGraph, &str)>) = match family {
        Family::Path => (
            families::generate(&FamilySpec::Path(need(p.n, "n")?))?,
            None,
        ),
        Family::Cycle => (
            families::generate(&FamilySpec::Cycle(need(p.n, "n")?))?,
            None,
        ),
        Family::Complete => (
            families::generate(&FamilySpec::Complete(need(p.n, "n")?))?,
            None,
        ),
        Family::Star => (
            families::generate(&FamilySpec::Star(need(p.n, "n")?))?,
            None,
        ),
        Family::Multipartite => (families::multipartite(&p.parts)?, None),
        Family::Wheel => (
            families::generate(&FamilySpec::Wheel(need(p.n, "n")?))?,
            None,
        ),
        Family::Petersen => (families::petersen(), None),
        Family::Grid => (families::grid(need(p.s, "s")?, need(p.t, "t")?)?, None),
        Family::TwinLadder => {
            let (g, core) = families::twin_ladder_pair(need(p.k, "k")?)?;
            let h = families::restrict(&g, &core)?;
            (g, Some((h, "core")))
        }
        Family::CliqueSubsets => (families::clique_subsets_graph(need(p.k, "k")?)?, None),
        Family::Broadcast => {
            let (g, core) = families::broadcast_pair(need(p.m, "m")?)?;
            let h = families::restrict(&g, &core)?;
            (g, Some((h, "core")))
        }
        Family::SameCodes => {
            let (h1, h2, _) = families::same_codes_pair();
            (h1, Some((h2, "h2")))
        }
        Family::NonplanarEdim2 => (families::nonplanar_edim2(), None),
        Family::SubgraphEdim => {
            let (g, core) = families::subgraph_edim_pair();
            let h = families::restrict(&g, &core)?;
            (g, Some((h, "core")))
        }
        Family::RandomTree => (families::random_tree(need(p.n, "n")?, p.seed)?, None),
    };

    let out = out.unwrap_or_else(|| {
        let name = family
            .to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string();
        PathBuf::from(format!("{name}.edges"))
    });
    write_graph(&main, &out)?;
    if let Some((h, suffix)) = second {
        write_graph(&h, &sibling(&out, suffix))?;
    }
    Ok(())
}

/// `dir/g.edges` with suffix `core` becomes `dir/g-core.edges`.
fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}-{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}-{suffix}"),
    };
    path.with_file_name(name)
}

fn write_graph(lg: &LabeledGraph, path: &Path) -> Result<(), Failure> {
    let mut edges = BufWriter::new(File::create(path)?);
    graph_io::write_edge_list(&lg.graph, &mut edges)?;
    edges.flush()?;
    let mut names_path = path.as_os_str().to_owned();
    names_path.push(".names");
    let mut names = BufWriter::new(File::create(PathBuf::from(names_path))?);
    graph_io::write_name_map(lg.names(), &mut names)?;
    names.flush()?;
    Ok(())
}

fn run_verify(filter: Option<&str>, timings: bool) -> ExitCode {
    let start = Instant::now();
    let report = verify::run(filter);
    let stdout = io::stdout();
    if let Err(e) = report.write_lines(stdout.lock()) {
        eprintln!("edim: {e}");
        return ExitCode::from(2);
    }
    if timings {
        let _ = report.write_timings(io::stderr().lock());
    }
    eprintln!("verify finished in {:.1}s", start.elapsed().as_secs_f64());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
