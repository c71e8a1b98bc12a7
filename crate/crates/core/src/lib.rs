//! Strong regulatory graphs.
//!
//! A strong regulatory graph is a signed directed graph whose vertices take
//! the values -1 (inactive), 0 (ambiguous) and 1 (active). A vertex is set
//! active or inactive only when all of its potentially active regulators
//! agree; conflicting or unresolved regulation makes it ambiguous.
//!
//! * [`graph`] and [`update`]: the data model and the synchronous update rule.
//! * [`dynamics`]: trajectories, transition systems and attractors.
//! * [`phenotype`]: deciding and constructing phenotype attractors.
//! * [`boolenc`]: an equivalent Boolean network over two bits per vertex.
//! * [`io`]: text formats, DOT export and JSON reports.

pub mod boolenc;
pub mod bundled;
pub mod dynamics;
mod error;
pub mod graph;
pub mod io;
pub mod phenotype;
pub mod space;
mod ternary;
pub mod update;

pub use dynamics::{
    build_sts, enumerate_attractors, is_attractor, is_trap_set, simulate, Attractor, Trajectory,
    TransitionSystem,
};
pub use error::{Result, SrgError};
pub use graph::{GraphBuilder, RegulatoryGraph, Sign, VertexId};
pub use space::{StateSpace, DEFAULT_STATE_LIMIT};
pub use ternary::{Ternary, TernaryState};
pub use update::{apply_clamps, regulators, regulators_reflexive, step, update_vertex, RegSet};
