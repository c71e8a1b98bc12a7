use std::fmt;

use serde::{Deserialize, Serialize};

/// Activation status of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Ternary {
    Inactive,
    Ambiguous,
    Active,
}

impl Ternary {
    /// All values in canonical digit order.
    pub const ALL: [Ternary; 3] = [Ternary::Inactive, Ternary::Ambiguous, Ternary::Active];

    pub fn as_i8(self) -> i8 {
        match self {
            Ternary::Inactive => -1,
            Ternary::Ambiguous => 0,
            Ternary::Active => 1,
        }
    }

    pub fn from_i8(value: i8) -> Option<Self> {
        match value {
            -1 => Some(Ternary::Inactive),
            0 => Some(Ternary::Ambiguous),
            1 => Some(Ternary::Active),
            _ => None,
        }
    }

    /// Digit in the base-3 state encoding: -1 -> 0, 0 -> 1, 1 -> 2.
    pub fn digit(self) -> u8 {
        (self.as_i8() + 1) as u8
    }

    pub fn from_digit(digit: u8) -> Self {
        Ternary::ALL[digit as usize]
    }

    pub fn negate(self) -> Self {
        match self {
            Ternary::Inactive => Ternary::Active,
            Ternary::Ambiguous => Ternary::Ambiguous,
            Ternary::Active => Ternary::Inactive,
        }
    }

    /// Active or ambiguous.
    pub fn is_potentially_active(self) -> bool {
        self != Ternary::Inactive
    }
}

impl From<Ternary> for i8 {
    fn from(value: Ternary) -> Self {
        value.as_i8()
    }
}

impl TryFrom<i8> for Ternary {
    type Error = String;

    fn try_from(value: i8) -> Result<Self, Self::Error> {
        Ternary::from_i8(value).ok_or_else(|| format!("{value} is not in {{-1, 0, 1}}"))
    }
}

impl fmt::Display for Ternary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

/// A total assignment of statuses, indexed by vertex ordinal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TernaryState(Vec<Ternary>);

impl TernaryState {
    pub fn new(values: Vec<Ternary>) -> Self {
        TernaryState(values)
    }

    pub fn uniform(len: usize, value: Ternary) -> Self {
        TernaryState(vec![value; len])
    }

    /// Builds a state from `-1/0/1` integers. Returns `None` on any other value.
    pub fn from_i8s(values: &[i8]) -> Option<Self> {
        values
            .iter()
            .map(|&v| Ternary::from_i8(v))
            .collect::<Option<Vec<_>>>()
            .map(TernaryState)
    }

    pub fn to_i8s(&self) -> Vec<i8> {
        self.0.iter().map(|v| v.as_i8()).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Ternary] {
        &self.0
    }

    pub fn values_mut(&mut self) -> &mut [Ternary] {
        &mut self.0
    }

    pub fn get(&self, index: usize) -> Option<Ternary> {
        self.0.get(index).copied()
    }

    pub fn set(&mut self, index: usize, value: Ternary) {
        self.0[index] = value;
    }

    pub fn into_inner(self) -> Vec<Ternary> {
        self.0
    }
}

impl std::ops::Index<usize> for TernaryState {
    type Output = Ternary;

    fn index(&self, index: usize) -> &Ternary {
        &self.0[index]
    }
}

/// Tuple form, e.g. `(-1,1,0)`.
impl fmt::Display for TernaryState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}
