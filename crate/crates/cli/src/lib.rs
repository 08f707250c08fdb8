//! File formats and helpers behind the `rbds` command-line tool.

pub mod bench;
pub mod format;
pub mod json;
pub mod plane_io;
pub mod trace_io;

pub use format::{parse_instance, parse_solution, write_instance, write_solution, InstanceFile, ParseError};
pub use trace_io::{parse_trace, write_trace, TraceFile};
