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

//! Metric dimension, edge metric dimension, and their fractional
//! relaxations, computed exactly.
//!
//! Fractional values come from an exact rational simplex over the reduced
//! covering LP ([`lp`]); integer values from set-cover branch-and-bound
//! ([`search`]). [`structure`] holds twin classes, tree anatomy and pattern
//! search, and [`families`] the generators for every graph used in tests.
//!
//! ```
//! use edim::families::cycle;
//! use edim::lp::edim_f;
//!
//! let c5 = cycle(5)?.graph;
//! assert_eq!(edim_f(&c5)?.optimum, edim::ratio(5, 4));
//! # Ok::<(), edim::Error>(())
//! ```

pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod lp;
pub mod resolving;
pub mod search;
pub mod structure;
pub mod verify;
pub mod vertex_set;
pub mod weighting;

pub use error::{Error, Result};
pub use graph::{all_pairs_distances, DistMatrix, EdgeId, Graph};
pub use vertex_set::VertexSet;
pub use weighting::{ratio, Rational, Weighting};

/// The guide's chapters, compiled so that their examples run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/resolving.md")]
    mod resolving {}
    #[doc = include_str!("../../../book/src/fractional.md")]
    mod fractional {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/structure.md")]
    mod structure {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
