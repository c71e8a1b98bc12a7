//! Example networks shipped with the library.

use crate::graph::RegulatoryGraph;
use crate::io::parse_network;

pub const FIG1A: &str = include_str!("../networks/fig1a.srg");
pub const FIG1B: &str = include_str!("../networks/fig1b.srg");
pub const MAPK: &str = include_str!("../networks/mapk.srg");

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 3] = ["fig1a", "fig1b", "mapk"];

pub fn source(name: &str) -> Option<&'static str> {
    match name {
        "fig1a" => Some(FIG1A),
        "fig1b" => Some(FIG1B),
        "mapk" => Some(MAPK),
        _ => None,
    }
}

pub fn by_name(name: &str) -> Option<RegulatoryGraph> {
    source(name).map(|text| parse_network(text).expect("bundled networks parse"))
}

/// A -> B, B -| A, C -> A.
pub fn fig1a() -> RegulatoryGraph {
    parse_network(FIG1A).expect("bundled network parses")
}

/// A -> B, B -> A, C -| A.
pub fn fig1b() -> RegulatoryGraph {
    parse_network(FIG1B).expect("bundled network parses")
}

/// MAPK / PI3K-AKT fragment with RTK clamped to -1.
pub fn mapk() -> RegulatoryGraph {
    parse_network(MAPK).expect("bundled network parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mapk_shape() {
        let g = mapk();
        assert_eq!(
            g.names(),
            ["RTK", "RAS", "PI3K", "MAPK", "PIP3", "FOXO3", "AKT"]
        );
        assert_eq!(g.edges().len(), 9);
        assert_eq!(g.clamps().count(), 1);
    }

    #[test]
    fn lookup() {
        for name in NAMES {
            assert!(by_name(name).is_some());
        }
        assert!(by_name("nope").is_none());
    }
}
