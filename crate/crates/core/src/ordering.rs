use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("vertex {vertex} at position {position} is out of range for {n} vertices")]
    OutOfRange {
        position: usize,
        vertex: usize,
        n: usize,
    },
    #[error("vertex {vertex} appears twice (positions {first} and {second})")]
    Duplicate {
        vertex: usize,
        first: usize,
        second: usize,
    },
    #[error("ordering has {got} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// A permutation of `0..n` together with its inverse.
///
/// `order[i]` is the vertex visited at step `i`; `position(v)` is the step at
/// which `v` is visited, so `a <σ b` is `position(a) < position(b)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self, OrderingError> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(OrderingError::OutOfRange {
                    position: i,
                    vertex: v,
                    n,
                });
            }
            if position[v] != usize::MAX {
                return Err(OrderingError::Duplicate {
                    vertex: v,
                    first: position[v],
                    second: i,
                });
            }
            position[v] = i;
        }
        Ok(VertexOrdering { order, position })
    }

    /// The identity ordering `(0, 1, ..., n-1)`.
    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.order
    }

    pub fn vertex_at(&self, step: usize) -> usize {
        self.order[step]
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// `a <σ b`.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    /// Restriction to the vertices kept by an induced-subgraph mapping, renumbered.
    pub fn restrict(&self, mapping: &[Option<usize>]) -> Result<Self, OrderingError> {
        VertexOrdering::new(self.order.iter().filter_map(|&v| mapping[v]).collect())
    }
}

impl fmt::Debug for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.order)
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl TryFrom<Vec<usize>> for VertexOrdering {
    type Error = OrderingError;

    fn try_from(order: Vec<usize>) -> Result<Self, OrderingError> {
        VertexOrdering::new(order)
    }
}

impl Serialize for VertexOrdering {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.order.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexOrdering {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let order = Vec::<usize>::deserialize(deserializer)?;
        VertexOrdering::new(order).map_err(serde::de::Error::custom)
    }
}
