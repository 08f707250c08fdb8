//! Corpus benchmarking.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use rayon::prelude::*;
use rbds_core::{kernelize, KernelResult, RuleTag};

use crate::format::parse_instance;

pub const CSV_HEADER: [&str; 8] = ["instance", "nV_in", "nV_out", "k", "k'", "rules_fired_by_type", "wall_ms", "ratio"];

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub n_in: usize,
    /// `None` when the verdict is NO.
    pub n_out: Option<usize>,
    pub k: i64,
    pub k_out: Option<i64>,
    /// Nonzero counts only, in tag order.
    pub rules: Vec<(RuleTag, usize)>,
    pub wall_ms: f64,
}

impl BenchRow {
    /// Kernel vertices per unit of output budget.
    pub fn ratio(&self) -> Option<f64> {
        match (self.n_out, self.k_out) {
            (Some(n), Some(k)) if k > 0 => Some(n as f64 / k as f64),
            _ => None,
        }
    }

    pub fn rules_field(&self) -> String {
        self.rules.iter().map(|(t, c)| format!("{t}:{c}")).collect::<Vec<_>>().join(";")
    }

    pub fn record(&self) -> [String; 8] {
        let opt = |o: Option<String>| o.unwrap_or_default();
        [
            self.instance.clone(),
            self.n_in.to_string(),
            opt(self.n_out.map(|n| n.to_string())),
            self.k.to_string(),
            opt(self.k_out.map(|k| k.to_string())),
            self.rules_field(),
            format!("{:.3}", self.wall_ms),
            opt(self.ratio().map(|r| format!("{r:.4}"))),
        ]
    }
}

pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    files.retain(|p| p.extension().is_some_and(|e| e == "rbds"));
    files.sort();
    Ok(files)
}

pub fn bench_file(path: &Path) -> Result<BenchRow> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let inst = parse_instance(&text).with_context(|| path.display().to_string())?.instance;
    let start = Instant::now();
    let result = kernelize(&inst)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let trace = result.trace();
    let rules = RuleTag::ALL.iter().map(|&t| (t, trace.count(t))).filter(|&(_, c)| c > 0).collect();
    let (n_out, k_out) = match &result {
        KernelResult::Reduced { kernel, .. } => (Some(kernel.graph.num_vertices()), Some(kernel.k)),
        KernelResult::No { .. } => (None, None),
    };
    let instance = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(BenchRow { instance, n_in: inst.graph.num_vertices(), n_out, k: inst.k, k_out, rules, wall_ms })
}

/// Kernelizes every `.rbds` file in `dir` in parallel; rows come back in
/// file-name order.
pub fn bench_dir(dir: &Path) -> Result<Vec<BenchRow>> {
    corpus_files(dir)?.par_iter().map(|p| bench_file(p)).collect()
}

pub fn write_csv<W: std::io::Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()?;
    Ok(())
}
