//! Deciding isomorphism of monomial digraphs.
//!
//! The sufficient direction is constructive: `(x, y) -> (x^k, y)` for a unit
//! `k`. Everything else goes through [`iso_search`], which prunes with the
//! invariants module, then runs colour refinement with individualization and
//! backtracking. Every `Iso` answer carries a mapping that has been checked
//! arc by arc.

mod explicit;
mod refine;
mod search;
mod shape;

pub use explicit::{
    conjugate_classes, explicit_iso, psi_automorphism, ExplicitIso, ParameterClass,
};
pub use refine::{class_sizes, refine_jointly, stable_coloring};
pub use search::{
    iso_search, iso_search_with_profiles, search_isomorphism, IsoCertificate, SearchHints,
    SearchOptions, Verdict, DEFAULT_NODE_BUDGET, SEARCH_EXHAUSTED,
};
pub use shape::{extract_g, GShape};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{Digraph, GraphError, VertexId};
use crate::invariants::InvariantError;

#[derive(Debug, Error)]
pub enum IsoError {
    #[error("mapping has {got} entries, digraph has {expected} vertices")]
    DomainSize { expected: usize, got: usize },
    #[error("psi_c needs a nonzero scalar")]
    ZeroScalar,
    #[error("search budget of {budget} nodes exhausted without a decision")]
    Undecided { budget: u64, nodes: u64 },
    #[error("second coordinate of the image depends on the first coordinate at y = {y}")]
    DependsOnFirstCoordinate { y: u32 },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A vertex map given as an image array: vertex `v` goes to `self[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexMap(Vec<VertexId>);

impl VertexMap {
    pub fn new(images: Vec<VertexId>) -> Self {
        VertexMap(images)
    }

    pub fn identity(n: usize) -> Self {
        VertexMap((0..n as VertexId).collect())
    }

    #[inline]
    pub fn apply(&self, v: VertexId) -> VertexId {
        self.0[v as usize]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        self.0.iter().all(|&v| {
            let fresh = (v as usize) < seen.len() && !seen[v as usize];
            if fresh {
                seen[v as usize] = true;
            }
            fresh
        })
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> VertexMap {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w as usize] = v as VertexId;
        }
        VertexMap(inv)
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        VertexMap(self.0.iter().map(|&v| next.apply(v)).collect())
    }
}

/// True iff `map` is a bijection with `u -> v` in `d1` exactly when
/// `map(u) -> map(v)` in `d2`.
pub fn verify_mapping(d1: &Digraph, d2: &Digraph, map: &VertexMap) -> Result<bool, IsoError> {
    let n = d1.vertex_count();
    if map.len() != n {
        return Err(IsoError::DomainSize {
            expected: n,
            got: map.len(),
        });
    }
    if d2.vertex_count() != n || d1.arc_count() != d2.arc_count() || !map.is_bijection() {
        return Ok(false);
    }
    // injective and arc counts equal, so arc preservation gives non-arc preservation
    Ok(d1
        .arcs()
        .all(|(u, v)| d2.has_arc(map.apply(u), map.apply(v))))
}
