use crate::error::{Result, SrgError};
use crate::graph::RegulatoryGraph;
use crate::ternary::{Ternary, TernaryState};

/// Default cap on enumerated states: 3^14.
pub const DEFAULT_STATE_LIMIT: u64 = 4_782_969;

/// Dense indexing of the clamp-consistent state space.
///
/// Index order is mixed-radix base 3 over free vertices in declaration order,
/// first vertex most significant, digits ordered (-1, 0, 1). This coincides
/// with lexicographic order on state tuples.
#[derive(Debug, Clone)]
pub struct StateSpace {
    template: Vec<Ternary>,
    free: Vec<usize>,
    size: u64,
}

impl StateSpace {
    /// Number of clamp-consistent states, or `None` if it does not fit in a `u128`.
    pub fn count(graph: &RegulatoryGraph) -> Option<u128> {
        let free = graph.clamp_values().iter().filter(|c| c.is_none()).count();
        3u128.checked_pow(u32::try_from(free).ok()?)
    }

    /// Builds the indexer, refusing spaces larger than `limit`.
    pub fn new(graph: &RegulatoryGraph, limit: u64) -> Result<Self> {
        let size = Self::count(graph).unwrap_or(u128::MAX);
        // successor tables are stored as u32
        let cap = limit.min(u32::MAX as u64);
        if size > cap as u128 {
            return Err(SrgError::StateSpaceTooLarge { size, limit });
        }
        let template = graph
            .clamp_values()
            .iter()
            .map(|c| c.unwrap_or(Ternary::Inactive))
            .collect();
        let free = graph
            .clamp_values()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(i, _)| i)
            .collect();
        Ok(StateSpace {
            template,
            free,
            size: size as u64,
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn vertex_count(&self) -> usize {
        self.template.len()
    }

    /// Writes the state with the given index into `out`.
    pub fn decode_into(&self, mut index: u64, out: &mut [Ternary]) {
        out.copy_from_slice(&self.template);
        for &v in self.free.iter().rev() {
            out[v] = Ternary::from_digit((index % 3) as u8);
            index /= 3;
        }
    }

    pub fn decode(&self, index: u64) -> TernaryState {
        let mut out = self.template.clone();
        self.decode_into(index, &mut out);
        TernaryState::new(out)
    }

    /// Index of a clamp-consistent state. Clamped positions are not checked.
    pub fn encode_slice(&self, state: &[Ternary]) -> u64 {
        self.free
            .iter()
            .fold(0u64, |acc, &v| acc * 3 + state[v].digit() as u64)
    }

    /// Index of `state`, or `None` if it has the wrong arity or violates a clamp.
    pub fn encode(&self, state: &TernaryState) -> Option<u64> {
        if state.len() != self.template.len() {
            return None;
        }
        let consistent = self
            .template
            .iter()
            .zip(state.values())
            .enumerate()
            .all(|(i, (t, s))| self.free.binary_search(&i).is_ok() || t == s);
        consistent.then(|| self.encode_slice(state.values()))
    }

    pub fn states(&self) -> impl Iterator<Item = TernaryState> + '_ {
        (0..self.size).map(move |i| self.decode(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    #[test]
    fn canonical_order_is_lexicographic() {
        let mut b = GraphBuilder::new();
        for n in ["A", "B", "C"] {
            b.add_vertex(n).unwrap();
        }
        let g = b.build();
        let space = StateSpace::new(&g, 100).unwrap();
        assert_eq!(space.size(), 27);
        let all: Vec<_> = space.states().collect();
        assert_eq!(all[0].to_i8s(), [-1, -1, -1]);
        assert_eq!(all[1].to_i8s(), [-1, -1, 0]);
        assert_eq!(all[26].to_i8s(), [1, 1, 1]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (i, s) in all.iter().enumerate() {
            assert_eq!(space.encode(s), Some(i as u64));
        }
    }

    #[test]
    fn clamped_vertices_are_fixed() {
        let mut b = GraphBuilder::new();
        b.add_vertex("A").unwrap();
        b.add_vertex("B").unwrap();
        b.clamp("A", Ternary::Active).unwrap();
        let g = b.build();
        let space = StateSpace::new(&g, 100).unwrap();
        assert_eq!(space.size(), 3);
        assert!(space.states().all(|s| s[0] == Ternary::Active));
        assert_eq!(
            space.encode(&TernaryState::from_i8s(&[-1, 0]).unwrap()),
            None
        );
    }

    #[test]
    fn limit_refusal() {
        let mut b = GraphBuilder::new();
        for i in 0..5 {
            b.add_vertex(&format!("x{i}")).unwrap();
        }
        let g = b.build();
        assert_eq!(
            StateSpace::new(&g, 242).unwrap_err(),
            SrgError::StateSpaceTooLarge {
                size: 243,
                limit: 242
            }
        );
        assert!(StateSpace::new(&g, 243).is_ok());
    }
}
