//! Kernelization for Red-Blue Dominating Set on planar graphs.
//!
//! The crate needs only `alloc`. It provides the red/blue graph model, the
//! four reduction rules with a replayable trace, an exact set-cover solver,
//! left-right planarity testing, the Face Cover and Dominating Set
//! transforms, and seeded generators.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod generators;
pub mod graph;
pub mod kernel;
pub mod planarity;
pub mod simple;
pub mod solver;
pub mod transforms;

pub use graph::{sanitize, Color, GraphError, Instance, RBGraph, SanitizeReport, Solution, VertexId};
pub use kernel::{
    apply_rule, find_rule1, find_rule2, find_rule3, find_rule4, is_reduced, kernelize, lift_solution, Finding,
    KernelError, KernelResult, KernelTrace, NoReason, PairCase, RuleApplication, RuleTag, SIZE_FACTOR,
};
pub use planarity::{bipartite_euler_bound, faces, is_planar, Face, Planarity, PlaneGraph};
pub use simple::SimpleGraph;
pub use solver::{decide_rbds, min_ds, min_rbds, verify_solution, SolveOutcome};
pub use transforms::{face_cover_to_rbds, rbds_to_ds};
