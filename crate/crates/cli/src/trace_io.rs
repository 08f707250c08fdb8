//! Line-oriented trace files.
//!
//! ```text
//! f  nv=<n>  ne=<m>  hash=<hex>  k=<k>
//! r  <tag>  k_delta=<d>  removed=[id:color:(n1,n2,...);...]  added=[id:(n1,n2)]  witness=(..)
//! m  <kernel-file-id>  <vertex-id>
//! ```
//!
//! Fields are written tab-separated; any whitespace is accepted on input.
//! `f` fingerprints the original graph, `r` lines are the applications in
//! order, and `m` lines map the renumbered ids of the kernel file back to
//! the ids the trace uses.

use std::fmt::Write as _;

use rbds_core::kernel::{AddedVertex, Fingerprint, RemovedVertex};
use rbds_core::{Color, KernelTrace, RuleApplication, RuleTag, VertexId};

use crate::format::{err, parse_num, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceFile {
    pub trace: KernelTrace,
    /// Budget of the original instance.
    pub k: i64,
    /// `kernel_ids[i]` is the trace id of kernel file vertex `i + 1`.
    pub kernel_ids: Vec<VertexId>,
}

fn list(ids: &[VertexId]) -> String {
    let parts: Vec<String> = ids.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn write_application(app: &RuleApplication) -> String {
    let removed: Vec<String> =
        app.removed.iter().map(|r| format!("{}:{}:{}", r.id, r.color.as_char(), list(&r.neighbors))).collect();
    let added: Vec<String> = app.added.iter().map(|a| format!("{}:{}", a.id, list(&a.neighbors))).collect();
    format!(
        "r\t{}\tk_delta={}\tremoved=[{}]\tadded=[{}]\twitness={}",
        app.tag,
        app.delta_k,
        removed.join(";"),
        added.join(";"),
        list(&app.witness)
    )
}

pub fn write_trace(file: &TraceFile) -> String {
    let fp = &file.trace.original;
    let mut out = String::new();
    writeln!(out, "f\tnv={}\tne={}\thash={}\tk={}", fp.n_vertices, fp.n_edges, fp.hash_hex(), file.k).unwrap();
    for app in &file.trace.applications {
        out.push_str(&write_application(app));
        out.push('\n');
    }
    for (i, v) in file.kernel_ids.iter().enumerate() {
        writeln!(out, "m\t{}\t{}", i + 1, v).unwrap();
    }
    out
}

fn field<'a>(line: usize, tok: Option<&'a str>, key: &str) -> Result<&'a str, ParseError> {
    match tok.and_then(|t| t.strip_prefix(key)).and_then(|t| t.strip_prefix('=')) {
        Some(v) => Ok(v),
        None => err(line, format!("expected {key}=...")),
    }
}

fn parse_list(line: usize, s: &str) -> Result<Vec<VertexId>, ParseError> {
    let Some(inner) = s.strip_prefix('(').and_then(|s| s.strip_suffix(')')) else {
        return err(line, format!("expected parenthesized id list, got '{s}'"));
    };
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|t| parse_num(line, Some(t), "vertex id").map(VertexId)).collect()
}

fn parse_bracketed(line: usize, s: &str) -> Result<Vec<&str>, ParseError> {
    let Some(inner) = s.strip_prefix('[').and_then(|s| s.strip_suffix(']')) else {
        return err(line, format!("expected bracketed list, got '{s}'"));
    };
    Ok(if inner.is_empty() { Vec::new() } else { inner.split(';').collect() })
}

fn parse_application(line: usize, toks: &mut std::str::SplitWhitespace<'_>) -> Result<RuleApplication, ParseError> {
    let tag_str = toks.next().unwrap_or("");
    let Ok(tag) = tag_str.parse::<RuleTag>() else { return err(line, format!("unknown rule tag '{tag_str}'")) };
    let delta_k: i64 = parse_num(line, Some(field(line, toks.next(), "k_delta")?), "k_delta")?;
    let mut removed = Vec::new();
    for item in parse_bracketed(line, field(line, toks.next(), "removed")?)? {
        let mut parts = item.splitn(3, ':');
        let id = parse_num(line, parts.next(), "removed id").map(VertexId)?;
        let color = parts.next().and_then(|c| c.chars().next().filter(|_| c.len() == 1)).and_then(Color::from_char);
        let Some(color) = color else { return err(line, "bad color in removed entry") };
        let neighbors = parse_list(line, parts.next().unwrap_or(""))?;
        removed.push(RemovedVertex { id, color, neighbors });
    }
    let mut added = Vec::new();
    for item in parse_bracketed(line, field(line, toks.next(), "added")?)? {
        let Some((id, nbrs)) = item.split_once(':') else { return err(line, "bad added entry") };
        let id = parse_num(line, Some(id), "added id").map(VertexId)?;
        added.push(AddedVertex { id, neighbors: parse_list(line, nbrs)? });
    }
    let witness = parse_list(line, field(line, toks.next(), "witness")?)?;
    let app = RuleApplication { tag, removed, added, witness, delta_k };
    if let Err(e) = app.check_shape() {
        return err(line, e.to_string());
    }
    Ok(app)
}

pub fn parse_trace(text: &str) -> Result<TraceFile, ParseError> {
    let mut header: Option<(Fingerprint, i64)> = None;
    let mut applications = Vec::new();
    let mut kernel_ids = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match kind {
            "c" => continue,
            "f" => {
                if header.is_some() {
                    return err(line, "second fingerprint line");
                }
                let n_vertices = parse_num(line, Some(field(line, toks.next(), "nv")?), "nv")?;
                let n_edges = parse_num(line, Some(field(line, toks.next(), "ne")?), "ne")?;
                let hex = field(line, toks.next(), "hash")?;
                let Ok(hash) = u64::from_str_radix(hex, 16) else { return err(line, "bad hash") };
                let k = parse_num(line, Some(field(line, toks.next(), "k")?), "k")?;
                header = Some((Fingerprint { n_vertices, n_edges, hash }, k));
            }
            "r" => {
                if header.is_none() {
                    return err(line, "record before fingerprint line");
                }
                applications.push(parse_application(line, &mut toks)?);
            }
            "m" => {
                let file_id: usize = parse_num(line, toks.next(), "kernel file id")?;
                if file_id != kernel_ids.len() + 1 {
                    return err(line, "map lines must list kernel ids 1, 2, ... in order");
                }
                kernel_ids.push(VertexId(parse_num(line, toks.next(), "vertex id")?));
            }
            other => return err(line, format!("unknown line type '{other}'")),
        }
        if let Some(extra) = toks.next() {
            return err(line, format!("unexpected token '{extra}'"));
        }
    }
    let Some((original, k)) = header else { return err(text.lines().count().max(1), "missing fingerprint line") };
    Ok(TraceFile { trace: KernelTrace { original, applications }, k, kernel_ids })
}
