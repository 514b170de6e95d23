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

//! Plain-text graph files.
//!
//! An edge list starts with `p <n> <m>` and is followed by `m` lines
//! `<u> <v>` of 0-indexed endpoints. Lines starting with `#` and blank lines
//! are ignored. A name map holds one `<name> <index>` line per vertex.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn numbers<const K: usize>(line: usize, text: &str) -> Result<[usize; K]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != K {
        return Err(parse_err(
            line,
            format!("expected {K} fields, found {}", fields.len()),
        ));
    }
    let mut out = [0; K];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| parse_err(line, format!("`{field}` is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Lines that carry content, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `p <n> <m>` header"))?;
    let rest = header
        .strip_prefix("p")
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| parse_err(hline, "missing `p <n> <m>` header"))?;
    let [n, m] = numbers::<2>(hline, rest)?;

    let mut pairs = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    let mut last = hline;
    for (lineno, line) in lines {
        last = lineno;
        let [u, v] = numbers::<2>(lineno, line)?;
        if u >= n || v >= n {
            return Err(parse_err(
                lineno,
                format!("vertex out of range for n = {n}"),
            ));
        }
        if u == v {
            return Err(parse_err(lineno, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(lineno, format!("duplicate edge {u} {v}")));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(parse_err(
            last,
            format!("header declares {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::new(n, pairs)
}

pub fn read_edge_list<R: BufRead>(mut reader: R) -> Result<Graph> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| parse_err(0, e.to_string()))?;
    parse_edge_list(&text)
}

/// Writes `g` with edges in canonical (sorted, smaller endpoint first) order.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "p {} {}", g.order(), g.size())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn write_name_map<W: Write>(names: &[String], mut out: W) -> std::io::Result<()> {
    for (i, name) in names.iter().enumerate() {
        writeln!(out, "{name} {i}")?;
    }
    Ok(())
}

/// Parses a name map back into a vector indexed by vertex.
pub fn parse_name_map(text: &str) -> Result<Vec<String>> {
    let mut entries = Vec::new();
    for (lineno, line) in content_lines(text) {
        let (name, index) = line
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| parse_err(lineno, "expected `<name> <index>`"))?;
        let index: usize = index
            .parse()
            .map_err(|_| parse_err(lineno, format!("`{index}` is not an index")))?;
        entries.push((index, name.trim().to_string(), lineno));
    }
    entries.sort();
    let mut names = Vec::with_capacity(entries.len());
    for (i, (index, name, lineno)) in entries.into_iter().enumerate() {
        if index != i {
            return Err(parse_err(
                lineno,
                format!("indices are not 0..n (missing or repeated {i})"),
            ));
        }
        names.push(name);
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::new(4, [(2, 3), (1, 0), (1, 2)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "p 4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a triangle\n\np 3 3\n0 1\n# middle\n1 2\n2 0\n";
        assert_eq!(parse_edge_list(text).unwrap().size(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line_of = |text: &str| match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line_of(""), 1);
        assert_eq!(line_of("q 3 2\n"), 1);
        assert_eq!(line_of("p 3 2\n0 1\n1 x\n"), 3);
        assert_eq!(line_of("p 3 2\n0 1\n1 3\n"), 3);
        assert_eq!(line_of("p 3 2\n0 1\n1 1\n"), 3);
        assert_eq!(line_of("p 3 2\n0 1\n1 0\n"), 3);
        assert_eq!(line_of("p 3 2\n0 1\n"), 2);
        assert_eq!(line_of("p 3 1\n0 1 2\n"), 2);
    }

    #[test]
    fn name_maps() {
        let names = vec!["x1".to_string(), "y 2".to_string()];
        let mut buf = Vec::new();
        write_name_map(&names, &mut buf).unwrap();
        assert_eq!(
            parse_name_map(std::str::from_utf8(&buf).unwrap()).unwrap(),
            names
        );
        assert!(parse_name_map("a 0\nb 2\n").is_err());
    }
}
