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

//! End-to-end tests of the `edim` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn edim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn gen(dir: &TempDir, file: &str, args: &[&str]) -> String {
    let out = dir.path().join(file).to_string_lossy().into_owned();
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", &out]);
    let o = edim(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn cycle_edimf() {
    let dir = TempDir::new().unwrap();
    let c5 = gen(&dir, "c5.edges", &["--family", "cycle", "--n", "5"]);
    let o = edim(&["compute", "--input", &c5, "--what", "edimf"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("5/4"));
    let weights: Vec<&str> = lines.collect();
    assert_eq!(weights.len(), 5);
    assert!(weights
        .iter()
        .enumerate()
        .all(|(v, l)| l.starts_with(&format!("{v}="))));
}

#[test]
fn path_dim_witness() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.edges", "p 4 3\n0 1\n1 2\n2 3\n");
    let o = edim(&["compute", "--input", &p4, "--what", "dim"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "1");
    assert!(lines[1] == "{0}" || lines[1] == "{3}", "{}", lines[1]);
}

#[test]
fn petersen_edimf_and_lp_dump() {
    let dir = TempDir::new().unwrap();
    let p = gen(&dir, "petersen.edges", &["--family", "petersen"]);
    let dump = dir.path().join("rows.txt");
    let o = edim(&[
        "compute",
        "--input",
        &p,
        "--what",
        "edimf",
        "--dump-lp",
        dump.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("5/2"));
    let rows = fs::read_to_string(dump).unwrap();
    assert!(!rows.is_empty());
    for line in rows.lines() {
        assert!(line
            .split(' ')
            .all(|t| t.parse::<usize>().is_ok_and(|v| v < 10)));
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.edges", "p 3 2\n0 1\n1 x\n");
    let o = edim(&["compute", "--input", &bad, "--what", "dim"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("line 3"), "{err}");

    let split = write(&dir, "split.edges", "p 4 2\n0 1\n2 3\n");
    assert_eq!(
        edim(&["compute", "--input", &split, "--what", "edimf"])
            .status
            .code(),
        Some(3)
    );

    let k2 = write(&dir, "k2.edges", "p 2 1\n0 1\n");
    assert_eq!(
        edim(&["compute", "--input", &k2, "--what", "edim"])
            .status
            .code(),
        Some(3)
    );
    assert!(edim(&["compute", "--input", &k2, "--what", "dim"])
        .status
        .success());

    let out = dir.path().join("c.edges");
    let o = edim(&[
        "gen",
        "--family",
        "cycle",
        "--n",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = edim(&[
        "gen",
        "--family",
        "grid",
        "--s",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

fn header(path: &str) -> String {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .next()
        .unwrap()
        .to_string()
}

#[test]
fn gen_files() {
    let dir = TempDir::new().unwrap();
    let grid = gen(
        &dir,
        "grid.edges",
        &["--family", "grid", "--s", "6", "--t", "4"],
    );
    assert_eq!(header(&grid), "p 24 38");

    let np = gen(&dir, "np.edges", &["--family", "nonplanar-edim2"]);
    assert_eq!(header(&np), "p 15 18");
    let names = fs::read_to_string(format!("{np}.names")).unwrap();
    assert_eq!(names.lines().count(), 15);
    assert!(names.lines().any(|l| l.starts_with("x1 ")));

    let g2 = gen(&dir, "g2.edges", &["--family", "twin-ladder", "--k", "2"]);
    assert_eq!(header(&g2), "p 21 34");
    let h2 = dir.path().join("g2-core.edges");
    assert_eq!(header(h2.to_str().unwrap()), "p 12 20");
    assert!(Path::new(&format!("{}.names", h2.display())).exists());

    let k = gen(
        &dir,
        "k.edges",
        &["--family", "multipartite", "--parts", "1,2,2"],
    );
    let o = edim(&["compute", "--input", &k, "--what", "edimf"]);
    assert_eq!(stdout(&o).lines().next(), Some("5/2"));
}

#[test]
fn verify_filter_is_deterministic() {
    let a = edim(&["verify", "--filter", "cycle"]);
    assert!(a.status.success());
    let text = stdout(&a);
    let checks: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert_eq!(checks.len(), 10);
    assert!(checks.iter().all(|l| l.starts_with("PASS cycle/")));
    assert!(text.contains("PASS cycle/C5/edimf expected=5/4 got=5/4"));
    let b = edim(&["verify", "--filter", "cycle"]);
    assert_eq!(a.stdout, b.stdout);

    let p = stdout(&edim(&["verify", "--filter", "petersen"]));
    assert!(p.contains("PASS petersen/edimf expected=5/2 got=5/2"));
    assert!(p.contains("PASS petersen/dimf expected=5/3 got=5/3"));
}
