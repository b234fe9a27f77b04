use super::{Digraph, VertexId};

/// Bipartite cover of a digraph: classes `X` and `Y` are copies of the
/// vertex set and `x ~ y` iff `x -> y`.
///
/// Vertices are numbered `0..n` for `X` and `n..2n` for `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteCover {
    part_size: usize,
    /// `(x, y)` pairs, with `y` given as an index into its own class.
    edges: Vec<(VertexId, VertexId)>,
}

impl BipartiteCover {
    pub fn of(d: &Digraph) -> Self {
        BipartiteCover {
            part_size: d.vertex_count(),
            edges: d.arcs().collect(),
        }
    }

    pub fn part_size(&self) -> usize {
        self.part_size
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.part_size
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(x, y)` with both endpoints in their own class numbering.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Degree of every vertex in global numbering (`X` first, then `Y`).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for &(x, y) in &self.edges {
            deg[x as usize] += 1;
            deg[self.part_size + y as usize] += 1;
        }
        deg
    }

    /// Exchanges the roles of `X` and `Y`.
    pub fn swap_classes(&self) -> Self {
        let mut edges: Vec<_> = self.edges.iter().map(|&(x, y)| (y, x)).collect();
        edges.sort_unstable();
        BipartiteCover {
            part_size: self.part_size,
            edges,
        }
    }
}
