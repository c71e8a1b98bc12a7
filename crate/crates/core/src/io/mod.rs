//! Text formats, DOT rendering and JSON report types.

mod dot;
mod network;
pub mod report;
mod state;

pub use dot::{graph_to_dot, sts_to_dot};
pub use network::{format_network, parse_network};
pub use state::{format_state, format_state_named, parse_assignments, parse_state};
