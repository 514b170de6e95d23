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

use thiserror::Error;

/// Errors raised by graph construction and the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: vertices {0} and {1} lie in different components")]
    Disconnected(usize, usize),
    #[error("edge index {index} out of range for a graph with {m} edges")]
    EdgeOutOfRange { index: usize, m: usize },
    #[error("vertex pair must be distinct, got {0} twice")]
    EqualVertices(usize),
    #[error("edge pair must be distinct, got edge {0} twice")]
    EqualEdges(usize),
    #[error("weight of vertex {0} lies outside [0, 1]")]
    WeightOutOfRange(usize),
    #[error("weighting has {got} entries, graph has {n} vertices")]
    WeightLength { got: usize, n: usize },
    #[error("landmark list is empty or repeats a vertex")]
    BadLandmarks,
    #[error("constraint row {0} is empty")]
    EmptyRow(usize),
    #[error("graph has {n} vertices, at least {min} required")]
    TooSmall { n: usize, min: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("no closed form known for {0}")]
    UnknownForm(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
