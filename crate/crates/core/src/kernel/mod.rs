//! Reduction rules, the kernelization driver, and solution lifting.

mod driver;
mod rules;
mod trace;

use thiserror::Error;

use crate::graph::{GraphError, VertexId};

pub use driver::{kernelize, kernelize_reference, KernelResult, NoReason, SIZE_FACTOR};
pub use rules::{
    apply_rule, find_rule1, find_rule2, find_rule3, find_rule3_definitional, find_rule4, is_reduced, Finding, PairCase,
};
pub use trace::{lift_solution, AddedVertex, Fingerprint, KernelTrace, RemovedVertex, RuleApplication, RuleTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("budget must be non-negative, got {0}")]
    NegativeBudget(i64),
    #[error("finding refers to vertex {0}, which is no longer live")]
    StaleFinding(VertexId),
    #[error("graph is not reduced under Rules 1 and 2")]
    NotReducedUnderElementaryRules,
    #[error("kernel solution does not dominate the kernel graph")]
    InvalidKernelSolution,
    #[error("trace was recorded on a different graph")]
    FingerprintMismatch,
    #[error("trace replay diverged at vertex {0}")]
    ReplayDiverged(VertexId),
    #[error("malformed trace record: {0}")]
    MalformedRecord(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
