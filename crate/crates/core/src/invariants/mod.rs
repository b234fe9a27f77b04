//! Isomorphism invariants of monomial digraphs and their closed-form counts.
//!
//! Every quantity with a formula also has a brute-force route over the
//! materialized digraph. Formula-based checks assume odd `q`; brute-force
//! counts are available for every `q`.

mod motif;

pub use motif::{motif_census, MotifSpec};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{
    count_cycles_by_length, Digraph, GraphError, MonomialDigraph, MonomialParams,
};
use crate::field::{gcd_bar, FieldElement, FieldSpec};

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("the 2-cycle formula needs odd q, got q = {0}")]
    EvenOrder(u32),
    #[error("parameters have different field orders: {0} vs {1}")]
    MismatchedOrder(u32, u32),
    #[error("unknown motif `{0}`")]
    UnknownMotif(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// gcd-bars of `m`, `n`, `m + n` and `m - n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GcdProfile {
    pub m_bar: u32,
    pub n_bar: u32,
    pub sum_bar: u32,
    pub diff_bar: u32,
}

pub fn gcd_profile(p: MonomialParams) -> GcdProfile {
    let (m, n) = (i64::from(p.m), i64::from(p.n));
    GcdProfile {
        m_bar: gcd_bar(m, p.q),
        n_bar: gcd_bar(n, p.q),
        sum_bar: gcd_bar(m + n, p.q),
        diff_bar: gcd_bar(m - n, p.q),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoopCounts {
    pub total: u64,
    /// Distinct nonzero second coordinates among looped vertices.
    pub distinct_nonzero_y: u64,
}

/// Scans the diagonal of the arc relation.
pub fn count_loops(d: &MonomialDigraph) -> LoopCounts {
    let q = d.q() as usize;
    let mut seen = vec![false; q];
    let mut total = 0;
    for v in d.graph().loops() {
        total += 1;
        let (_, y) = d.coords(v);
        seen[y.idx() as usize] = true;
    }
    LoopCounts {
        total,
        distinct_nonzero_y: seen[1..].iter().filter(|&&s| s).count() as u64,
    }
}

/// Unordered pairs of distinct vertices joined by arcs both ways.
pub fn two_cycle_count(d: &Digraph) -> u64 {
    d.vertices()
        .map(|u| {
            d.out_neighbors(u)
                .iter()
                .filter(|&&v| v > u && d.has_arc(v, u))
                .count() as u64
        })
        .sum()
}

/// `c2(q; m, n) = q (q - 1) (2 + gcd_bar(m - n)) / 2`, valid for odd `q`.
pub fn two_cycle_formula(p: MonomialParams) -> Result<u64, InvariantError> {
    if p.q % 2 == 0 {
        return Err(InvariantError::EvenOrder(p.q));
    }
    let q = u64::from(p.q);
    let diff_bar = u64::from(gcd_bar(i64::from(p.m) - i64::from(p.n), p.q));
    Ok(q * (q - 1) * (2 + diff_bar) / 2)
}

/// Number of roots of `X^d - 2X + 1` in the field, by evaluating every element.
pub fn trinomial_root_count(field: &FieldSpec, d: u32) -> u64 {
    assert!(d >= 1, "trinomial exponent must be positive");
    let one = FieldElement::ONE;
    let two = field.add(one, one);
    field
        .elements()
        .filter(|&x| {
            let val = field.add(field.sub(field.pow_pos(x, d), field.mul(two, x)), one);
            val.is_zero()
        })
        .count() as u64
}

/// The gcd-bar conditions a pair of isomorphic digraphs must share.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BarCondition {
    MBar,
    NBar,
    SumBar,
    DiffBar,
}

impl BarCondition {
    pub fn name(self) -> &'static str {
        match self {
            BarCondition::MBar => "m_bar",
            BarCondition::NBar => "n_bar",
            BarCondition::SumBar => "sum_bar",
            BarCondition::DiffBar => "diff_bar",
        }
    }
}

/// Per-condition result of [`necessary_filter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FilterOutcome {
    pub m_bar: bool,
    pub n_bar: bool,
    pub sum_bar: bool,
    pub diff_bar: bool,
}

impl FilterOutcome {
    /// `m_bar` and `n_bar` both agree.
    pub fn condition_i(&self) -> bool {
        self.m_bar && self.n_bar
    }

    pub fn condition_ii(&self) -> bool {
        self.sum_bar
    }

    pub fn condition_iii(&self) -> bool {
        self.diff_bar
    }

    pub fn passes(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<BarCondition> {
        [
            (self.m_bar, BarCondition::MBar),
            (self.n_bar, BarCondition::NBar),
            (self.sum_bar, BarCondition::SumBar),
            (self.diff_bar, BarCondition::DiffBar),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, c)| c)
    }
}

/// Compares the four gcd-bars. These are necessary for isomorphism when `q`
/// is odd; for even `q` only [`cover_multiset_condition`] is known to be.
pub fn necessary_filter(
    a: MonomialParams,
    b: MonomialParams,
) -> Result<FilterOutcome, InvariantError> {
    if a.q != b.q {
        return Err(InvariantError::MismatchedOrder(a.q, b.q));
    }
    let (ga, gb) = (gcd_profile(a), gcd_profile(b));
    Ok(FilterOutcome {
        m_bar: ga.m_bar == gb.m_bar,
        n_bar: ga.n_bar == gb.n_bar,
        sum_bar: ga.sum_bar == gb.sum_bar,
        diff_bar: ga.diff_bar == gb.diff_bar,
    })
}

/// `{m_bar, n_bar}` equal as multisets: the bipartite covers are isomorphic.
/// Necessary for digraph isomorphism at every `q`.
pub fn cover_multiset_condition(a: MonomialParams, b: MonomialParams) -> bool {
    let (ga, gb) = (gcd_profile(a), gcd_profile(b));
    let mut x = [ga.m_bar, ga.n_bar];
    let mut y = [gb.m_bar, gb.n_bar];
    x.sort_unstable();
    y.sort_unstable();
    a.q == b.q && x == y
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ProfileOptions {
    /// Also count directed cycles of lengths `1..=L`.
    pub cycle_length: Option<usize>,
    pub cycle_budget: Option<u64>,
}

/// All invariants of one digraph, in a fixed serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub m_bar: u32,
    pub n_bar: u32,
    pub sum_bar: u32,
    pub diff_bar: u32,
    pub loop_total: u64,
    pub loop_distinct_nonzero_y: u64,
    pub two_cycle_count: u64,
    pub k_motif_count: u64,
    pub k22_motif_count: u64,
    pub cycle_spectrum: Option<Vec<u64>>,
}

impl InvariantProfile {
    /// First graph-computed field on which two profiles differ. The gcd-bar
    /// fields are skipped; they are compared by [`necessary_filter`].
    pub fn first_structural_difference(&self, other: &Self) -> Option<&'static str> {
        if self.loop_total != other.loop_total {
            Some("loop_total")
        } else if self.loop_distinct_nonzero_y != other.loop_distinct_nonzero_y {
            Some("loop_distinct_nonzero_y")
        } else if self.two_cycle_count != other.two_cycle_count {
            Some("two_cycle_count")
        } else if self.k_motif_count != other.k_motif_count {
            Some("k_motif_count")
        } else if self.k22_motif_count != other.k22_motif_count {
            Some("k22_motif_count")
        } else if self.cycle_spectrum.is_some()
            && other.cycle_spectrum.is_some()
            && self.cycle_spectrum != other.cycle_spectrum
        {
            Some("cycle_spectrum")
        } else {
            None
        }
    }
}

pub fn profile(
    d: &MonomialDigraph,
    opts: ProfileOptions,
) -> Result<InvariantProfile, InvariantError> {
    let bars = gcd_profile(d.params());
    let loops = count_loops(d);
    let g = d.graph();
    let cycle_spectrum = opts
        .cycle_length
        .map(|len| {
            count_cycles_by_length(
                g,
                len,
                opts.cycle_budget
                    .unwrap_or(crate::digraph::DEFAULT_CYCLE_BUDGET),
            )
        })
        .transpose()?;
    Ok(InvariantProfile {
        m_bar: bars.m_bar,
        n_bar: bars.n_bar,
        sum_bar: bars.sum_bar,
        diff_bar: bars.diff_bar,
        loop_total: loops.total,
        loop_distinct_nonzero_y: loops.distinct_nonzero_y,
        two_cycle_count: two_cycle_count(g),
        k_motif_count: motif_census(g, MotifSpec::K),
        k22_motif_count: motif_census(g, MotifSpec::DirectedK22),
        cycle_spectrum,
    })
}
