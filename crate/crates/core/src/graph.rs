use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SrgError};
use crate::ternary::{Ternary, TernaryState};

/// Dense ordinal of a vertex, assigned in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Activation,
    Inhibition,
}

impl Sign {
    pub fn arrow(self) -> &'static str {
        match self {
            Sign::Activation => "->",
            Sign::Inhibition => "-|",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub source: VertexId,
    pub sign: Sign,
    pub target: VertexId,
}

/// A signed directed graph with optional per-vertex clamps.
///
/// Immutable once built; use [`GraphBuilder`] to construct one. Activation
/// and inhibition edges partition the edge set, so each ordered pair carries
/// at most one sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegulatoryGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    activators: Vec<Vec<usize>>,
    inhibitors: Vec<Vec<usize>>,
    activation_targets: Vec<Vec<usize>>,
    clamps: Vec<Option<Ternary>>,
}

impl RegulatoryGraph {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.names.len()).map(VertexId)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    /// Looks a vertex up by name.
    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.index
            .get(name)
            .map(|&i| VertexId(i))
            .ok_or_else(|| SrgError::UnknownVertex(name.to_string()))
    }

    /// Checks that `v` belongs to this graph.
    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.names.len() {
            Ok(())
        } else {
            Err(SrgError::VertexOutOfRange {
                index: v.0,
                count: self.names.len(),
            })
        }
    }

    /// Checks that `state` is defined on exactly this graph's vertices.
    pub fn check_state(&self, state: &TernaryState) -> Result<()> {
        if state.len() == self.names.len() {
            Ok(())
        } else {
            Err(SrgError::StateArity {
                expected: self.names.len(),
                found: state.len(),
            })
        }
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_sign(&self, source: VertexId, target: VertexId) -> Option<Sign> {
        self.edges
            .iter()
            .find(|e| e.source == source && e.target == target)
            .map(|e| e.sign)
    }

    /// Sources of activation edges into `v`.
    pub fn activators(&self, v: VertexId) -> &[usize] {
        &self.activators[v.0]
    }

    /// Sources of inhibition edges into `v`.
    pub fn inhibitors(&self, v: VertexId) -> &[usize] {
        &self.inhibitors[v.0]
    }

    pub fn predecessors(&self, v: VertexId, sign: Sign) -> &[usize] {
        match sign {
            Sign::Activation => &self.activators[v.0],
            Sign::Inhibition => &self.inhibitors[v.0],
        }
    }

    /// Targets of activation edges out of `v`.
    pub fn activation_successors(&self, v: VertexId) -> &[usize] {
        &self.activation_targets[v.0]
    }

    pub fn clamp(&self, v: VertexId) -> Option<Ternary> {
        self.clamps[v.0]
    }

    pub fn clamps(&self) -> impl Iterator<Item = (VertexId, Ternary)> + '_ {
        self.clamps
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|value| (VertexId(i), value)))
    }

    pub fn clamp_values(&self) -> &[Option<Ternary>] {
        &self.clamps
    }

    pub fn has_clamps(&self) -> bool {
        self.clamps.iter().any(Option::is_some)
    }

    /// Returns a copy of this graph with `v` clamped to `value` (replacing any existing clamp).
    pub fn with_clamp(&self, v: VertexId, value: Ternary) -> Result<RegulatoryGraph> {
        self.check_vertex(v)?;
        if value == Ternary::Ambiguous {
            return Err(SrgError::Parse {
                line: 0,
                message: "clamp value must be -1 or 1".into(),
            });
        }
        let mut g = self.clone();
        g.clamps[v.0] = Some(value);
        Ok(g)
    }

    /// Returns a copy with every clamp removed.
    pub fn without_clamps(&self) -> RegulatoryGraph {
        let mut g = self.clone();
        g.clamps.iter_mut().for_each(|c| *c = None);
        g
    }
}

/// Incremental constructor for [`RegulatoryGraph`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    signs: HashMap<(usize, usize), Sign>,
    clamps: HashMap<usize, Ternary>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a vertex, failing if the name is already taken.
    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.index.contains_key(name) {
            return Err(SrgError::DuplicateVertex(name.to_string()));
        }
        Ok(self.ensure_vertex(name))
    }

    /// Returns the existing vertex with this name or declares it.
    pub fn ensure_vertex(&mut self, name: &str) -> VertexId {
        if let Some(&i) = self.index.get(name) {
            return VertexId(i);
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        VertexId(i)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Adds a signed edge between declared or implicitly declared vertices.
    ///
    /// Repeating an edge with the same sign is a no-op; repeating it with the
    /// opposite sign is a partition violation.
    pub fn add_edge(&mut self, source: &str, sign: Sign, target: &str) -> Result<()> {
        self.add_edge_at(source, sign, target, 0)
    }

    pub(crate) fn add_edge_at(
        &mut self,
        source: &str,
        sign: Sign,
        target: &str,
        line: usize,
    ) -> Result<()> {
        let s = self.ensure_vertex(source);
        let t = self.ensure_vertex(target);
        match self.signs.get(&(s.0, t.0)) {
            Some(&existing) if existing == sign => Ok(()),
            Some(_) => Err(SrgError::PartitionViolation {
                line,
                source_name: source.to_string(),
                target: target.to_string(),
            }),
            None => {
                self.signs.insert((s.0, t.0), sign);
                self.edges.push(Edge {
                    source: s,
                    sign,
                    target: t,
                });
                Ok(())
            }
        }
    }

    /// Clamps an already declared vertex to `-1` or `1`.
    pub fn clamp(&mut self, name: &str, value: Ternary) -> Result<()> {
        let &i = self
            .index
            .get(name)
            .ok_or_else(|| SrgError::UnknownVertex(name.to_string()))?;
        if value == Ternary::Ambiguous {
            return Err(SrgError::Parse {
                line: 0,
                message: format!("clamp on `{name}` must be -1 or 1"),
            });
        }
        match self.clamps.get(&i) {
            Some(&prev) if prev != value => Err(SrgError::ConflictingClamp(name.to_string())),
            _ => {
                self.clamps.insert(i, value);
                Ok(())
            }
        }
    }

    pub fn build(self) -> RegulatoryGraph {
        let n = self.names.len();
        let mut activators = vec![Vec::new(); n];
        let mut inhibitors = vec![Vec::new(); n];
        let mut activation_targets = vec![Vec::new(); n];
        for e in &self.edges {
            match e.sign {
                Sign::Activation => {
                    activators[e.target.0].push(e.source.0);
                    activation_targets[e.source.0].push(e.target.0);
                }
                Sign::Inhibition => inhibitors[e.target.0].push(e.source.0),
            }
        }
        let mut clamps = vec![None; n];
        for (i, v) in self.clamps {
            clamps[i] = Some(v);
        }
        RegulatoryGraph {
            names: self.names,
            index: self.index,
            edges: self.edges,
            activators,
            inhibitors,
            activation_targets,
            clamps,
        }
    }
}
