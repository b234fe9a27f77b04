//! Digraphs with materialized adjacency, and the monomial construction.

mod algo;
mod cover;
mod export;
mod monomial;

pub use algo::{
    count_cycles_by_length, diameter, strong_components, Distance, DEFAULT_CYCLE_BUDGET,
};
pub use cover::BipartiteCover;
pub use export::ExportFormat;
pub use monomial::{vertex_coords, MonomialDigraph, MonomialParams};

use thiserror::Error;

use crate::field::FieldError;

pub type VertexId = u32;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("parameters out of range: need 1 <= m, n <= {max}, got m = {m}, n = {n}")]
    ParamsOutOfRange { m: u32, n: u32, max: u32 },
    #[error("arc endpoint {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("cycle enumeration exceeded its budget of {0} extension steps")]
    BudgetExceeded(u64),
    #[error("instance too large for cycle enumeration: {vertices} vertices, length cap {max_len}")]
    TooLarge { vertices: usize, max_len: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Directed graph on vertices `0..n` with sorted, duplicate-free out- and
/// in-adjacency stored in compressed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out_offsets: Vec<usize>,
    out_targets: Vec<VertexId>,
    in_offsets: Vec<usize>,
    in_sources: Vec<VertexId>,
}

fn compress(n: usize, mut pairs: Vec<(VertexId, VertexId)>) -> (Vec<usize>, Vec<VertexId>) {
    pairs.sort_unstable();
    pairs.dedup();
    let mut offsets = vec![0usize; n + 1];
    for &(a, _) in &pairs {
        offsets[a as usize + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    (offsets, pairs.into_iter().map(|(_, b)| b).collect())
}

impl Digraph {
    /// Builds a digraph from an arc list. Duplicate arcs collapse.
    pub fn from_arcs(
        vertex_count: usize,
        arcs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let arcs: Vec<_> = arcs.into_iter().collect();
        if let Some(&(u, v)) = arcs
            .iter()
            .find(|&&(u, v)| u as usize >= vertex_count || v as usize >= vertex_count)
        {
            let bad = if u as usize >= vertex_count { u } else { v };
            return Err(GraphError::VertexOutOfRange(bad));
        }
        let reversed = arcs.iter().map(|&(u, v)| (v, u)).collect();
        let (out_offsets, out_targets) = compress(vertex_count, arcs);
        let (in_offsets, in_sources) = compress(vertex_count, reversed);
        Ok(Digraph {
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.out_offsets.len() - 1
    }

    pub fn arc_count(&self) -> usize {
        self.out_targets.len()
    }

    #[inline]
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.out_targets[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    #[inline]
    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.in_sources[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    #[inline]
    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out_neighbors(u).binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertex_count() as VertexId
    }

    /// All arcs in `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |u| self.out_neighbors(u).iter().map(move |&v| (u, v)))
    }

    pub fn reverse(&self) -> Digraph {
        Digraph {
            out_offsets: self.in_offsets.clone(),
            out_targets: self.in_sources.clone(),
            in_offsets: self.out_offsets.clone(),
            in_sources: self.out_targets.clone(),
        }
    }

    pub fn loops(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(move |&v| self.has_arc(v, v))
    }
}
