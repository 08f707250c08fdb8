use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Parser, Subcommand};
use rbds_cli::format::{no_instance, renumber, SeedLine};
use rbds_cli::plane_io::{parse_edge_list, parse_plane, write_ds};
use rbds_cli::{bench, json, parse_instance, parse_solution, parse_trace, write_instance, write_solution, write_trace};
use rbds_cli::{InstanceFile, ParseError, TraceFile};
use rbds_core::generators::{gen_grid, gen_matching, gen_random_planar, RNG_ALGORITHM};
use rbds_core::planarity::KuratowskiKind;
use rbds_core::simple::underlying;
use rbds_core::{
    face_cover_to_rbds, is_planar, kernelize, min_rbds, rbds_to_ds, verify_solution, Instance, KernelResult, Planarity,
    RBGraph, SimpleGraph, Solution, SolveOutcome, VertexId, SIZE_FACTOR,
};

/// `println!` that ignores a closed stdout.
macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

const EXIT_IO: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_SEMANTIC: u8 = 3;
const EXIT_NEGATIVE_CHECK: u8 = 10;
const EXIT_NO: u8 = 20;

const EXIT_HELP: &str = "\
Exit codes:
   0  success (REDUCED, VALID, PLANAR, OPT found)
   1  file could not be read or written
   2  malformed input file or bad command line
   3  input parses but violates a precondition (transform input, trace/kernel mismatch)
  10  verify printed INVALID or check-planar printed NONPLANAR
  20  kernelize printed NO or solve printed INFEASIBLE";

#[derive(Parser)]
#[command(name = "rbds", version, about = "Linear kernel for red-blue dominating set on planar graphs", after_help = EXIT_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the reduction rules and report the kernel or a NO verdict.
    Kernelize {
        input: PathBuf,
        /// Write the rule applications here.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the reduced instance here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// On NO, write the two-vertex negative instance (to --out, or stdout).
        #[arg(long)]
        emit_no_instance: bool,
        /// Write the verdict, kernel and trace as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Solve exactly; with --lift, treat the input as a kernel and lift.
    Solve {
        input: PathBuf,
        #[arg(long)]
        lift: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a solution dominates every red within the budget.
    Verify { input: PathBuf, solution: PathBuf },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        /// Override the budget.
        #[arg(long, global = true)]
        k: Option<i64>,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Problem transforms.
    Transform {
        #[command(subcommand)]
        kind: TransformKind,
    },
    /// Test planarity of an instance, rotation system or edge list.
    CheckPlanar { input: PathBuf },
    /// Kernelize every .rbds file in a directory and emit CSV.
    Bench {
        dir: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Grid { rows: usize, cols: usize },
    Matching { m: usize },
    RandomPlanar { n: usize, density: f64 },
}

#[derive(Subcommand)]
enum TransformKind {
    /// Rotation system to red-blue instance (faces blue, vertices red).
    FaceCover {
        input: PathBuf,
        /// Budget of the output; defaults to the number of faces.
        #[arg(long)]
        k: Option<i64>,
        /// Write the face and vertex id map here.
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Red-blue instance to a dominating set edge list.
    ToDs {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

type Run = Result<u8, Failure>;

fn fail(code: u8, error: impl Into<anyhow::Error>) -> Failure {
    Failure { code, error: error.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(EXIT_IO, anyhow!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| fail(EXIT_IO, anyhow!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => write(p, text),
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn parsed<T>(path: &Path, r: Result<T, ParseError>) -> Result<T, Failure> {
    r.map_err(|e| fail(EXIT_PARSE, anyhow!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> Result<InstanceFile, Failure> {
    parsed(path, parse_instance(&read(path)?))
}

fn kernelize_cmd(
    input: &Path,
    trace_path: Option<&Path>,
    out: Option<&Path>,
    emit_no_instance: bool,
    json_path: Option<&Path>,
) -> Run {
    let inst = read_instance(input)?.instance;
    let result = kernelize(&inst).map_err(|e| fail(EXIT_SEMANTIC, e))?;
    if let Some(p) = json_path {
        write(p, &format!("{:#}\n", json::result_json(&result)))?;
    }
    let (kernel_ids, code) = match &result {
        KernelResult::Reduced { kernel, .. } => {
            let (g, order) = renumber(&kernel.graph);
            if let Some(p) = out {
                write(p, &write_instance(&InstanceFile::new(Instance::new(g, kernel.k))))?;
            }
            say!(
                "REDUCED nB={} nR={} k'={} bound=46k'={}",
                kernel.graph.num_blue(),
                kernel.graph.num_red(),
                kernel.k,
                SIZE_FACTOR * kernel.k
            );
            (order, 0)
        }
        KernelResult::No { reason, .. } => {
            say!("NO reason={}", reason.as_str());
            if emit_no_instance {
                emit(out, &write_instance(&no_instance()))?;
            }
            (Vec::new(), EXIT_NO)
        }
    };
    if let Some(p) = trace_path {
        let file = TraceFile { trace: result.trace().clone(), k: inst.k, kernel_ids };
        write(p, &write_trace(&file))?;
    }
    Ok(code)
}

/// Rebuilds the kernel with the ids used in the trace.
fn relabel_kernel(file_graph: &RBGraph, kernel_ids: &[VertexId]) -> Result<RBGraph, Failure> {
    if kernel_ids.len() != file_graph.num_vertices() {
        return Err(fail(
            EXIT_SEMANTIC,
            anyhow!("trace maps {} kernel vertices, kernel file has {}", kernel_ids.len(), file_graph.num_vertices()),
        ));
    }
    let id = |v: VertexId| kernel_ids[v.index() - 1];
    let vertices = file_graph.vertices().map(|v| (id(v), file_graph.color(v).expect("live")));
    RBGraph::from_labeled(vertices, file_graph.edges().map(|(u, v)| (id(u), id(v))))
        .map_err(|e| fail(EXIT_SEMANTIC, anyhow!("trace map: {e}")))
}

fn solve_cmd(input: &Path, lift: Option<&Path>, out: Option<&Path>) -> Run {
    let inst = read_instance(input)?.instance;
    let (size, witness) = match min_rbds(&inst.graph) {
        SolveOutcome::Infeasible => {
            say!("INFEASIBLE");
            return Ok(EXIT_NO);
        }
        SolveOutcome::Optimal { size, witness } => (size, witness),
    };
    let mut text = String::new();
    let solution = match lift {
        None => witness,
        Some(tp) => {
            let tf = parsed(tp, parse_trace(&read(tp)?))?;
            let kernel = relabel_kernel(&inst.graph, &tf.kernel_ids)?;
            let mapped: Solution = witness.iter().map(|v| tf.kernel_ids[v.index() - 1]).collect();
            writeln!(text, "c kernel-opt {size}").unwrap();
            tf.trace.lift(&kernel, &mapped).map_err(|e| fail(EXIT_SEMANTIC, e))?
        }
    };
    writeln!(text, "OPT {}", solution.len()).unwrap();
    text.push_str(&write_solution(&solution));
    emit(out, &text)?;
    if out.is_some() {
        say!("OPT {}", solution.len());
    }
    Ok(0)
}

fn verify_cmd(input: &Path, solution: &Path) -> Run {
    let inst = read_instance(input)?.instance;
    let sol = parsed(solution, parse_solution(&read(solution)?))?;
    if !verify_solution(&inst.graph, &sol) {
        say!("INVALID reason=not-dominating");
        return Ok(EXIT_NEGATIVE_CHECK);
    }
    if sol.len() as i64 > inst.k {
        say!("INVALID reason=over-budget size={} k={}", sol.len(), inst.k);
        return Ok(EXIT_NEGATIVE_CHECK);
    }
    say!("VALID size={}", sol.len());
    Ok(0)
}

fn gen_cmd(kind: &GenKind, seed: u64, k: Option<i64>, out: Option<&Path>) -> Run {
    let usage = |msg: &str| Err(fail(EXIT_PARSE, anyhow!("{msg}")));
    let mut file = match *kind {
        GenKind::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return usage("grid needs rows, cols >= 1");
            }
            InstanceFile::new(gen_grid(rows, cols))
        }
        GenKind::Matching { m } => {
            if m == 0 {
                return usage("matching needs m >= 1");
            }
            InstanceFile::new(gen_matching(m))
        }
        GenKind::RandomPlanar { n, density } => {
            if n < 3 || !(density > 0.0 && density <= 1.0) {
                return usage("random-planar needs n >= 3 and 0 < density <= 1");
            }
            InstanceFile {
                instance: gen_random_planar(n, density, seed),
                seed: Some(SeedLine { algorithm: RNG_ALGORITHM.to_string(), seed }),
            }
        }
    };
    if let Some(k) = k {
        if k < 0 {
            return usage("budget must be non-negative");
        }
        file.instance.k = k;
    }
    emit(out, &write_instance(&file))?;
    Ok(0)
}

fn face_cover_cmd(input: &Path, k: Option<i64>, map: Option<&Path>, out: Option<&Path>) -> Run {
    let pg = parsed(input, parse_plane(&read(input)?))?;
    let fc = face_cover_to_rbds(&pg).map_err(|e| fail(EXIT_SEMANTIC, e))?;
    let k = k.unwrap_or(fc.faces.len() as i64);
    if k < 0 {
        return Err(fail(EXIT_PARSE, anyhow!("budget must be non-negative")));
    }
    if let Some(p) = map {
        let mut text = String::from("c f <blue-id> <vertex>:<multiplicity> ...\nc v <red-id> <vertex>\n");
        for (f, face) in fc.faces.iter().enumerate() {
            write!(text, "f {}", fc.face_blue(f)).unwrap();
            for &v in &face.vertices {
                write!(text, " {}:{}", v + 1, face.multiplicity(v)).unwrap();
            }
            text.push('\n');
        }
        for v in 0..pg.num_vertices() {
            writeln!(text, "v {} {}", fc.vertex_red(v), v + 1).unwrap();
        }
        write(p, &text)?;
    }
    emit(out, &write_instance(&InstanceFile::new(Instance::new(fc.graph, k))))?;
    Ok(0)
}

fn to_ds_cmd(input: &Path, out: Option<&Path>) -> Run {
    let inst = read_instance(input)?.instance;
    let ds = rbds_to_ds(&inst).map_err(|e| fail(EXIT_SEMANTIC, e))?;
    emit(out, &write_ds(&ds))?;
    Ok(0)
}

/// Reads any of the three graph formats, returning the graph and the label
/// printed for each vertex index.
fn read_any_graph(path: &Path) -> Result<(SimpleGraph, Vec<u32>), Failure> {
    let text = read(path)?;
    let kind =
        text.lines().map(str::split_whitespace).find_map(|mut t| (t.next() == Some("p")).then(|| t.next()).flatten());
    let numbered = |g: SimpleGraph| {
        let labels = (1..=g.num_vertices() as u32).collect();
        (g, labels)
    };
    match kind {
        Some("rbds") => {
            let inst = parsed(path, parse_instance(&text))?.instance;
            let (g, ids) = underlying(&inst.graph);
            Ok((g, ids.into_iter().map(|v| v.0).collect()))
        }
        Some("plane") => Ok(numbered(parsed(path, parse_plane(&text))?.graph())),
        Some("edge") => Ok(numbered(parsed(path, parse_edge_list(&text))?)),
        _ => Err(fail(EXIT_PARSE, anyhow!("{}: expected a 'p rbds', 'p plane' or 'p edge' header", path.display()))),
    }
}

fn check_planar_cmd(input: &Path) -> Run {
    let (g, label) = read_any_graph(input)?;
    match is_planar(&g) {
        Planarity::Planar(rotation) => {
            say!("PLANAR");
            say!("p plane {} {}", g.num_vertices(), g.num_edges());
            for (v, rot) in rotation.iter().enumerate() {
                let nbrs: Vec<String> = rot.iter().map(|&w| label[w].to_string()).collect();
                say!("v {}: {}", label[v], nbrs.join(" "));
            }
            Ok(0)
        }
        Planarity::NonPlanar(w) => {
            let kind = match w.kind {
                KuratowskiKind::K5 => "K5",
                KuratowskiKind::K33 => "K33",
            };
            say!("NONPLANAR {kind}");
            for (u, v) in &w.edges {
                say!("w {} {}", label[*u], label[*v]);
            }
            Ok(EXIT_NEGATIVE_CHECK)
        }
    }
}

fn bench_cmd(dir: &Path, out: Option<&Path>) -> Run {
    let rows = bench::bench_dir(dir).map_err(|e| {
        let code = if e.downcast_ref::<ParseError>().is_some() { EXIT_PARSE } else { EXIT_IO };
        fail(code, e)
    })?;
    let mut buf = Vec::new();
    bench::write_csv(&rows, &mut buf).map_err(|e| fail(EXIT_IO, e))?;
    emit(out, &String::from_utf8(buf).expect("csv is utf-8"))?;
    Ok(0)
}

fn run(cli: Cli) -> Run {
    match &cli.command {
        Command::Kernelize { input, trace, out, emit_no_instance, json } => {
            kernelize_cmd(input, trace.as_deref(), out.as_deref(), *emit_no_instance, json.as_deref())
        }
        Command::Solve { input, lift, out } => solve_cmd(input, lift.as_deref(), out.as_deref()),
        Command::Verify { input, solution } => verify_cmd(input, solution),
        Command::Gen { kind, seed, k, out } => gen_cmd(kind, *seed, *k, out.as_deref()),
        Command::Transform { kind: TransformKind::FaceCover { input, k, map, out } } => {
            face_cover_cmd(input, *k, map.as_deref(), out.as_deref())
        }
        Command::Transform { kind: TransformKind::ToDs { input, out } } => to_ds_cmd(input, out.as_deref()),
        Command::CheckPlanar { input } => check_planar_cmd(input),
        Command::Bench { dir, out } => bench_cmd(dir, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
