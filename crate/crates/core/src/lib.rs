//! Monomial digraphs `D(q; m, n)` over finite fields.
//!
//! The vertex set is `GF(q)^2` and `(x1, x2) -> (y1, y2)` is an arc iff
//! `x2 + y2 = x1^m * y1^n`. This crate builds these digraphs, computes
//! isomorphism invariants with brute-force and closed-form routes, decides
//! isomorphism between parameter pairs with checkable certificates, and runs
//! sweeps comparing every pair of parameter classes for a range of `q`.
//!
//! ```
//! use monodigraph::digraph::{MonomialDigraph, MonomialParams};
//! use monodigraph::invariants::{two_cycle_count, two_cycle_formula};
//!
//! let params = MonomialParams::new(3, 1, 2).unwrap();
//! let d = MonomialDigraph::from_params(params).unwrap();
//! assert_eq!(d.graph().arc_count(), 27);
//! assert_eq!(two_cycle_count(d.graph()), two_cycle_formula(params).unwrap());
//! ```

pub mod cli;
pub mod digraph;
pub mod field;
pub mod invariants;
pub mod iso;
pub mod sweep;

pub use digraph::{Digraph, MonomialDigraph, MonomialParams};
pub use field::{FieldElement, FieldSpec};
