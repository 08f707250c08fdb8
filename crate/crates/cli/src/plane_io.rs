//! Rotation systems and plain edge lists.
//!
//! ```text
//! p plane <n> <m>
//! v <id>: <nbr1> <nbr2> ...      (clockwise, ids 1..=n)
//!
//! p edge <n> <m>
//! e <u> <v>
//! ```

use std::fmt::Write as _;

use rbds_core::transforms::DsInstance;
use rbds_core::{PlaneGraph, SimpleGraph};

use crate::format::{err, parse_num, ParseError};

fn check_id(line: usize, id: usize, n: usize) -> Result<usize, ParseError> {
    if id < 1 || id > n {
        return err(line, format!("vertex id {id} outside 1..={n}"));
    }
    Ok(id - 1)
}

pub fn parse_plane(text: &str) -> Result<PlaneGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut rotation: Vec<Option<Vec<usize>>> = Vec::new();
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
                if toks.next() != Some("plane") {
                    return err(line, "expected 'p plane <n> <m>'");
                }
                let n = parse_num(line, toks.next(), "vertex count")?;
                let m = parse_num(line, toks.next(), "edge count")?;
                header = Some((n, m));
                rotation = vec![None; n];
            }
            "v" => {
                let Some((n, _)) = header else { return err(line, "vertex line before header") };
                let Some(id) = toks.next().and_then(|t| t.strip_suffix(':')) else {
                    return err(line, "expected 'v <id>: <neighbors>'");
                };
                let v = check_id(line, parse_num(line, Some(id), "vertex id")?, n)?;
                if rotation[v].is_some() {
                    return err(line, format!("vertex {id} listed twice"));
                }
                let mut order = Vec::new();
                for t in toks.by_ref() {
                    order.push(check_id(line, parse_num(line, Some(t), "neighbor id")?, n)?);
                }
                rotation[v] = Some(order);
            }
            other => return err(line, format!("unknown line type '{other}'")),
        }
        if let Some(extra) = toks.next() {
            return err(line, format!("unexpected token '{extra}'"));
        }
    }
    let last = text.lines().count().max(1);
    let Some((_, m)) = header else { return err(last, "missing header") };
    let rotation: Vec<Vec<usize>> = rotation.into_iter().map(Option::unwrap_or_default).collect();
    let pg = PlaneGraph::new(rotation).or_else(|e| err(last, e.to_string()))?;
    if pg.num_edges() != m {
        return err(last, format!("header says {m} edges, rotation has {}", pg.num_edges()));
    }
    Ok(pg)
}

pub fn write_plane(pg: &PlaneGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p plane {} {}", pg.num_vertices(), pg.num_edges()).unwrap();
    for (v, rot) in pg.rotations().iter().enumerate() {
        write!(out, "v {}:", v + 1).unwrap();
        for w in rot {
            write!(out, " {}", w + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut g: Option<SimpleGraph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => continue,
            "p" => {
                if g.is_some() {
                    return err(line, "second header");
                }
                if toks.next() != Some("edge") {
                    return err(line, "expected 'p edge <n> <m>'");
                }
                let n = parse_num(line, toks.next(), "vertex count")?;
                let _: usize = parse_num(line, toks.next(), "edge count")?;
                g = Some(SimpleGraph::new(n));
            }
            "e" => {
                let Some(g) = g.as_mut() else { return err(line, "edge before header") };
                let n = g.num_vertices();
                let u = check_id(line, parse_num(line, toks.next(), "vertex id")?, n)?;
                let v = check_id(line, parse_num(line, toks.next(), "vertex id")?, n)?;
                if u == v {
                    return err(line, "self-loop");
                }
                if !g.add_edge(u, v) {
                    return err(line, format!("duplicate edge {} {}", u + 1, v + 1));
                }
            }
            other => return err(line, format!("unknown line type '{other}'")),
        }
        if let Some(extra) = toks.next() {
            return err(line, format!("unexpected token '{extra}'"));
        }
    }
    g.map_or_else(|| err(text.lines().count().max(1), "missing header"), Ok)
}

pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.num_vertices(), g.num_edges()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Edge list with the budget, the two added vertices and the id map as
/// comments.
pub fn write_ds(ds: &DsInstance) -> String {
    let mut out = String::new();
    writeln!(out, "c k={}", ds.k).unwrap();
    writeln!(out, "c hub {}", ds.hub + 1).unwrap();
    writeln!(out, "c pendant {}", ds.pendant + 1).unwrap();
    for (i, o) in ds.origin.iter().enumerate() {
        if let Some(v) = o {
            writeln!(out, "c map {} {}", i + 1, v).unwrap();
        }
    }
    out.push_str(&write_edge_list(&ds.graph));
    out
}
