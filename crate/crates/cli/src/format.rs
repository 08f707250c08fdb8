//! The `.rbds` instance format and the solution format.
//!
//! ```text
//! c comment
//! p rbds <nB> <nR> <k>
//! g seed <algo-id> <seed>
//! e <blue-id> <red-id>
//! ```
//!
//! Blue ids are `1..=nB`, red ids `nB+1..=nB+nR`. A solution is one line
//! `s <id> <id> ...`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rbds_core::{Instance, RBGraph, Solution, VertexId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

pub(crate) fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedLine {
    pub algorithm: String,
    pub seed: u64,
}

/// A parsed instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub instance: Instance,
    pub seed: Option<SeedLine>,
}

impl InstanceFile {
    pub fn new(instance: Instance) -> Self {
        InstanceFile { instance, seed: None }
    }
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T, ParseError> {
    match tok {
        None => err(line, format!("missing {what}")),
        Some(t) => t.parse().or_else(|_| err(line, format!("bad {what} '{t}'"))),
    }
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut header: Option<(usize, usize, i64)> = None;
    let mut seed = None;
    let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return err(line, "second header");
                }
                if toks.next() != Some("rbds") {
                    return err(line, "expected 'p rbds <nB> <nR> <k>'");
                }
                let nb: usize = parse_num(line, toks.next(), "blue count")?;
                let nr: usize = parse_num(line, toks.next(), "red count")?;
                let k: i64 = parse_num(line, toks.next(), "budget")?;
                if k < 0 {
                    return err(line, "budget must be non-negative");
                }
                if nb + nr > u32::MAX as usize / 2 {
                    return err(line, "too many vertices");
                }
                header = Some((nb, nr, k));
            }
            "g" => {
                if toks.next() != Some("seed") {
                    return err(line, "expected 'g seed <algo-id> <seed>'");
                }
                let Some(algorithm) = toks.next() else { return err(line, "missing algorithm id") };
                let value: u64 = parse_num(line, toks.next(), "seed")?;
                seed = Some(SeedLine { algorithm: algorithm.to_string(), seed: value });
            }
            "e" => {
                let Some((nb, nr, _)) = header else { return err(line, "edge before header") };
                let b: u32 = parse_num(line, toks.next(), "blue id")?;
                let r: u32 = parse_num(line, toks.next(), "red id")?;
                let (nb, nr) = (nb as u32, nr as u32);
                if b < 1 || b > nb {
                    return err(line, format!("blue id {b} outside 1..={nb}"));
                }
                if r <= nb || r > nb + nr {
                    return err(line, format!("red id {r} outside {}..={}", nb + 1, nb + nr));
                }
                if !edges.insert((b, r)) {
                    return err(line, format!("duplicate edge {b} {r}"));
                }
            }
            other => return err(line, format!("unknown line type '{other}'")),
        }
        if let Some(extra) = toks.next() {
            return err(line, format!("unexpected token '{extra}'"));
        }
    }
    let Some((nb, nr, k)) = header else { return err(text.lines().count().max(1), "missing header") };
    let graph = RBGraph::from_parts(nb, nr, edges.into_iter().map(|(b, r)| (VertexId(b), VertexId(r))))
        .expect("edges validated");
    Ok(InstanceFile { instance: Instance::new(graph, k), seed })
}

/// Writes an instance whose graph uses the file's id layout (blues
/// `1..=nB`, then reds, no gaps, no same-color edges).
pub fn write_instance(file: &InstanceFile) -> String {
    let g = &file.instance.graph;
    let mut out = String::new();
    writeln!(out, "p rbds {} {} {}", g.num_blue(), g.num_red(), file.instance.k).unwrap();
    if let Some(s) = &file.seed {
        writeln!(out, "g seed {} {}", s.algorithm, s.seed).unwrap();
    }
    for (u, v) in g.edges() {
        let (b, r) = if g.is_blue(u) { (u, v) } else { (v, u) };
        writeln!(out, "e {} {}", b, r).unwrap();
    }
    out
}

/// Whether ids are exactly blues `1..=nB` followed by reds.
pub fn has_file_layout(g: &RBGraph) -> bool {
    let nb = g.num_blue() as u32;
    g.vertices().enumerate().all(|(i, v)| v.0 == i as u32 + 1 && g.is_blue(v) == (v.0 <= nb))
        && g.edges().all(|(u, v)| g.color(u) != g.color(v))
}

/// Relabels a graph into the file layout. Returns the new graph and, for
/// every file id `i`, the original id at index `i - 1`.
pub fn renumber(g: &RBGraph) -> (RBGraph, Vec<VertexId>) {
    let order: Vec<VertexId> = g.blues().chain(g.reds()).collect();
    let mut index = vec![0u32; g.id_bound()];
    for (i, &v) in order.iter().enumerate() {
        index[v.index()] = i as u32 + 1;
    }
    let out = RBGraph::from_parts(
        g.num_blue(),
        g.num_red(),
        g.edges().map(|(u, v)| (VertexId(index[u.index()]), VertexId(index[v.index()]))),
    )
    .expect("relabeling keeps the graph simple");
    (out, order)
}

/// The canonical negative instance: one blue, one isolated red, budget 0.
pub fn no_instance() -> InstanceFile {
    InstanceFile::new(Instance::new(RBGraph::from_parts(1, 1, []).unwrap(), 0))
}

pub fn write_solution(sol: &Solution) -> String {
    let mut out = String::from("s");
    for v in sol.iter() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    out
}

/// Reads one `s` line; `c` comments and an `OPT <n>` summary line are
/// skipped so the output of `solve` can be fed back in.
pub fn parse_solution(text: &str) -> Result<Solution, ParseError> {
    let mut found: Option<Solution> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") | Some("OPT") => continue,
            Some("s") => {
                if found.is_some() {
                    return err(line, "second solution line");
                }
                let mut chosen = BTreeSet::new();
                for t in toks {
                    let id: u32 = parse_num(line, Some(t), "vertex id")?;
                    chosen.insert(VertexId(id));
                }
                found = Some(Solution { chosen });
            }
            Some(other) => return err(line, format!("unknown line type '{other}'")),
        }
    }
    match found {
        Some(s) => Ok(s),
        None => err(text.lines().count().max(1), "no solution line"),
    }
}
