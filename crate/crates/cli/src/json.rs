//! Structured export mirroring the text formats.

use rbds_core::{Instance, KernelResult, KernelTrace, RuleApplication};
use serde_json::{json, Value};

pub fn instance_json(inst: &Instance) -> Value {
    let g = &inst.graph;
    json!({
        "k": inst.k,
        "blue": g.blues().map(|v| v.0).collect::<Vec<_>>(),
        "red": g.reds().map(|v| v.0).collect::<Vec<_>>(),
        "edges": g.edges().map(|(u, v)| [u.0, v.0]).collect::<Vec<_>>(),
    })
}

pub fn application_json(app: &RuleApplication) -> Value {
    json!({
        "tag": app.tag.as_str(),
        "k_delta": app.delta_k,
        "removed": app.removed.iter().map(|r| json!({
            "id": r.id.0,
            "color": r.color.as_char().to_string(),
            "neighbors": r.neighbors.iter().map(|v| v.0).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "added": app.added.iter().map(|a| json!({
            "id": a.id.0,
            "neighbors": a.neighbors.iter().map(|v| v.0).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "witness": app.witness.iter().map(|v| v.0).collect::<Vec<_>>(),
    })
}

pub fn trace_json(trace: &KernelTrace) -> Value {
    json!({
        "original": {
            "vertices": trace.original.n_vertices,
            "edges": trace.original.n_edges,
            "hash": trace.original.hash_hex(),
        },
        "applications": trace.applications.iter().map(application_json).collect::<Vec<_>>(),
    })
}

pub fn result_json(result: &KernelResult) -> Value {
    match result {
        KernelResult::Reduced { kernel, trace } => json!({
            "verdict": "reduced",
            "kernel": instance_json(kernel),
            "trace": trace_json(trace),
        }),
        KernelResult::No { reason, trace } => json!({
            "verdict": "no",
            "reason": reason.as_str(),
            "trace": trace_json(trace),
        }),
    }
}
