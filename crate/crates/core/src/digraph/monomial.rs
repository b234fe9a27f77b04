use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Digraph, GraphError, VertexId};
use crate::field::{FieldElement, FieldSpec};

/// The triple `(q, m, n)` naming `D(q; m, n)`, with `1 <= m, n <= q - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MonomialParams {
    pub q: u32,
    pub m: u32,
    pub n: u32,
}

impl MonomialParams {
    pub fn new(q: u32, m: u32, n: u32) -> Result<Self, GraphError> {
        let max = q.saturating_sub(1);
        if m == 0 || n == 0 || m > max || n > max {
            return Err(GraphError::ParamsOutOfRange { m, n, max });
        }
        Ok(MonomialParams { q, m, n })
    }

    /// Parameters of the reversed digraph.
    pub fn reversed(self) -> Self {
        MonomialParams {
            q: self.q,
            m: self.n,
            n: self.m,
        }
    }
}

impl fmt::Display for MonomialParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({};{},{})", self.q, self.m, self.n)
    }
}

/// `D(q; m, n)` together with the field it was built over.
#[derive(Debug, Clone)]
pub struct MonomialDigraph {
    params: MonomialParams,
    field: Arc<FieldSpec>,
    graph: Digraph,
}

impl MonomialDigraph {
    /// Arc `(x1, x2) -> (y1, y2)` iff `x2 + y2 = x1^m * y1^n`. For every
    /// `(x1, x2, y1)` exactly one `y2` solves this, so each out-degree is `q`.
    pub fn build(field: Arc<FieldSpec>, m: u32, n: u32) -> Result<Self, GraphError> {
        let params = MonomialParams::new(field.q(), m, n)?;
        let q = field.q();
        let pow_m: Vec<FieldElement> = field.elements().map(|x| field.pow_pos(x, m)).collect();
        let pow_n: Vec<FieldElement> = field.elements().map(|y| field.pow_pos(y, n)).collect();

        let mut arcs = Vec::with_capacity((q as usize).pow(3));
        for x1 in field.elements() {
            for x2 in field.elements() {
                let tail = x1.idx() * q + x2.idx();
                for y1 in field.elements() {
                    let rhs = field.mul(pow_m[x1.idx() as usize], pow_n[y1.idx() as usize]);
                    let y2 = field.sub(rhs, x2);
                    arcs.push((tail, y1.idx() * q + y2.idx()));
                }
            }
        }
        let graph = Digraph::from_arcs((q * q) as usize, arcs)?;
        Ok(MonomialDigraph {
            params,
            field,
            graph,
        })
    }

    pub fn from_params(params: MonomialParams) -> Result<Self, GraphError> {
        let field = Arc::new(FieldSpec::with_order(params.q)?);
        Self::build(field, params.m, params.n)
    }

    pub fn params(&self) -> MonomialParams {
        self.params
    }

    pub fn q(&self) -> u32 {
        self.params.q
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn into_graph(self) -> Digraph {
        self.graph
    }

    /// The reverse digraph, which is `D(q; n, m)`.
    pub fn reversed(&self) -> MonomialDigraph {
        MonomialDigraph {
            params: self.params.reversed(),
            field: Arc::clone(&self.field),
            graph: self.graph.reverse(),
        }
    }

    #[inline]
    pub fn vertex_id(&self, x1: FieldElement, x2: FieldElement) -> VertexId {
        x1.idx() * self.params.q + x2.idx()
    }

    #[inline]
    pub fn coords(&self, v: VertexId) -> (FieldElement, FieldElement) {
        vertex_coords(self.params.q, v)
    }
}

/// Decodes a vertex id `idx(x1) * q + idx(x2)`.
#[inline]
pub fn vertex_coords(q: u32, v: VertexId) -> (FieldElement, FieldElement) {
    (
        FieldElement::from_index(v / q),
        FieldElement::from_index(v % q),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(q: u32, m: u32, n: u32) -> MonomialDigraph {
        MonomialDigraph::from_params(MonomialParams::new(q, m, n).unwrap()).unwrap()
    }

    fn v(g: &MonomialDigraph, a: u32, b: u32) -> VertexId {
        g.vertex_id(FieldElement::from_index(a), FieldElement::from_index(b))
    }

    #[test]
    fn d312_small_facts() {
        let g = d(3, 1, 2);
        assert!(g.graph().has_arc(v(&g, 1, 0), v(&g, 0, 0)));
        assert!(!g.graph().has_arc(v(&g, 0, 0), v(&g, 1, 1)));
        let loops: Vec<_> = g.graph().loops().collect();
        let mut expected = vec![v(&g, 0, 0), v(&g, 2, 1), v(&g, 1, 2)];
        expected.sort();
        assert_eq!(loops, expected);
    }

    #[test]
    fn params_range() {
        assert!(MonomialParams::new(3, 0, 1).is_err());
        assert!(MonomialParams::new(3, 3, 1).is_err());
        assert!(MonomialParams::new(3, 2, 2).is_ok());
        assert!(MonomialParams::new(2, 1, 1).is_ok());
    }

    #[test]
    fn degrees_and_reverse_duality_small_q() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let field = Arc::new(FieldSpec::with_order(q).unwrap());
            for m in 1..q {
                for n in 1..q {
                    let g = MonomialDigraph::build(Arc::clone(&field), m, n).unwrap();
                    for u in g.graph().vertices() {
                        assert_eq!(g.graph().out_neighbors(u).len(), q as usize);
                        assert_eq!(g.graph().in_neighbors(u).len(), q as usize);
                    }
                    let dual = MonomialDigraph::build(Arc::clone(&field), n, m).unwrap();
                    assert_eq!(g.graph().reverse(), *dual.graph(), "q={q} m={m} n={n}");
                }
            }
        }
    }
}
