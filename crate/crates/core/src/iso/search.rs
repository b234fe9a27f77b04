use std::time::{Duration, Instant};

use serde::Serialize;

use super::refine::refine_jointly;
use super::{psi_automorphism, verify_mapping, IsoError, VertexMap};
use crate::digraph::{Digraph, MonomialDigraph, VertexId};
use crate::invariants::{
    self, cover_multiset_condition, necessary_filter, InvariantProfile, ProfileOptions,
};

/// Default cap on backtracking nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Iso,
    NonIso,
}

/// Outcome of a decided search. `permutation` is present iff the verdict is
/// `Iso`, `witness` iff it is `NonIso`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoCertificate {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<VertexMap>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl IsoCertificate {
    pub fn is_iso(&self) -> bool {
        self.verdict == Verdict::Iso
    }

    /// Witness of a certificate settled before any search.
    pub fn by_invariant(&self) -> bool {
        self.verdict == Verdict::NonIso && self.witness.as_deref() != Some(SEARCH_EXHAUSTED)
    }

    fn non_iso(witness: &str, nodes: u64, started: Instant) -> Self {
        IsoCertificate {
            verdict: Verdict::NonIso,
            permutation: None,
            witness: Some(witness.to_string()),
            nodes,
            elapsed: started.elapsed(),
        }
    }
}

pub const SEARCH_EXHAUSTED: &str = "search-exhausted";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    /// Skip invariant comparison and go straight to the search.
    pub search_only: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_NODE_BUDGET,
            search_only: false,
        }
    }
}

/// Hints that change the order of the search, never its completeness.
#[derive(Debug, Clone, Default)]
pub struct SearchHints {
    /// Try to map this vertex of the first graph to the same vertex of the
    /// second graph before anything else.
    pub seed: Option<VertexId>,
    /// Orbit representative of each vertex of the second graph under a known
    /// automorphism group; only representatives are tried at the root.
    pub root_orbit_rep: Option<Vec<VertexId>>,
}

struct Search<'a> {
    g1: &'a Digraph,
    g2: &'a Digraph,
    hints: &'a SearchHints,
    nodes: u64,
    budget: u64,
}

struct OutOfBudget;

impl Search<'_> {
    fn descend(
        &mut self,
        mut c1: Vec<u32>,
        mut c2: Vec<u32>,
        depth: usize,
    ) -> Result<Option<VertexMap>, OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        let mut pair = [std::mem::take(&mut c1), std::mem::take(&mut c2)];
        if !refine_jointly(&[self.g1, self.g2], &mut pair) {
            return Ok(None);
        }
        let [c1, c2] = pair;
        let n = c1.len();

        let mut size = vec![0usize; n];
        for &c in &c1 {
            size[c as usize] += 1;
        }
        let class_count = size.iter().filter(|&&s| s > 0).count();
        if class_count == n {
            let mut by_color = vec![0 as VertexId; n];
            for (v, &c) in c2.iter().enumerate() {
                by_color[c as usize] = v as VertexId;
            }
            let map = VertexMap::new(c1.iter().map(|&c| by_color[c as usize]).collect());
            let ok = verify_mapping(self.g1, self.g2, &map).unwrap_or(false);
            return Ok(ok.then_some(map));
        }

        let seed = if depth == 0 {
            self.hints
                .seed
                .filter(|&s| size[c1[s as usize] as usize] > 1 && c1[s as usize] == c2[s as usize])
        } else {
            None
        };
        let (cell, v1) = match seed {
            Some(s) => (c1[s as usize], s),
            None => {
                let cell = (0..n as u32)
                    .filter(|&c| size[c as usize] > 1)
                    .min_by_key(|&c| (size[c as usize], c))
                    .expect("non-discrete colouring has a non-singleton cell");
                let v1 = c1
                    .iter()
                    .position(|&c| c == cell)
                    .expect("cell is non-empty");
                (cell, v1 as VertexId)
            }
        };

        let mut candidates: Vec<VertexId> = (0..n as VertexId)
            .filter(|&v| c2[v as usize] == cell)
            .collect();
        if depth == 0 {
            if let Some(rep) = &self.hints.root_orbit_rep {
                candidates.retain(|&v| rep[v as usize] == v);
            }
            if let Some(s) = seed {
                if let Some(pos) = candidates.iter().position(|&v| v == s) {
                    candidates[..=pos].rotate_right(1);
                }
            }
        }

        let fresh = class_count as u32;
        for v2 in candidates {
            let mut n1 = c1.clone();
            let mut n2 = c2.clone();
            n1[v1 as usize] = fresh;
            n2[v2 as usize] = fresh;
            if let Some(map) = self.descend(n1, n2, depth + 1)? {
                return Ok(Some(map));
            }
        }
        Ok(None)
    }
}

/// Individualization-refinement search for an isomorphism `g1 -> g2`.
///
/// Returns the mapping (re-verified) or `None` once the whole tree has been
/// covered, together with the node count.
pub fn search_isomorphism(
    g1: &Digraph,
    g2: &Digraph,
    budget: u64,
    hints: &SearchHints,
) -> Result<(Option<VertexMap>, u64), IsoError> {
    if g1.vertex_count() != g2.vertex_count() || g1.arc_count() != g2.arc_count() {
        return Ok((None, 0));
    }
    let n = g1.vertex_count();
    let mut search = Search {
        g1,
        g2,
        hints,
        nodes: 0,
        budget,
    };
    match search.descend(vec![0; n], vec![0; n], 0) {
        Ok(found) => Ok((found, search.nodes)),
        Err(OutOfBudget) => Err(IsoError::Undecided {
            budget,
            nodes: search.nodes,
        }),
    }
}

/// Orbit representatives (smallest id) under the cyclic group generated by
/// `psi_g` for the primitive element `g`.
fn psi_orbit_reps(d: &MonomialDigraph) -> Result<Vec<VertexId>, IsoError> {
    let gen = psi_automorphism(d, d.field().primitive())?;
    let n = gen.len();
    let mut rep = vec![VertexId::MAX; n];
    for v in 0..n as VertexId {
        if rep[v as usize] != VertexId::MAX {
            continue;
        }
        let mut w = v;
        loop {
            rep[w as usize] = v;
            w = gen.apply(w);
            if w == v {
                break;
            }
        }
    }
    Ok(rep)
}

/// Decides `d1 ~= d2`, computing invariant profiles on the way.
pub fn iso_search(
    d1: &MonomialDigraph,
    d2: &MonomialDigraph,
    opts: SearchOptions,
) -> Result<IsoCertificate, IsoError> {
    let p1 = invariants::profile(d1, ProfileOptions::default())?;
    let p2 = invariants::profile(d2, ProfileOptions::default())?;
    iso_search_with_profiles(d1, d2, &p1, &p2, opts)
}

/// As [`iso_search`], with profiles supplied by the caller (e.g. a cache).
///
/// Order of checks: gcd-bar conditions (all four for odd `q`, the bipartite
/// cover multiset for even `q`), then the graph-computed profile fields, then
/// the search. For odd `q` and `m1 != n1` the search tries origin-fixing
/// maps first.
pub fn iso_search_with_profiles(
    d1: &MonomialDigraph,
    d2: &MonomialDigraph,
    p1: &InvariantProfile,
    p2: &InvariantProfile,
    opts: SearchOptions,
) -> Result<IsoCertificate, IsoError> {
    let started = Instant::now();
    let (a, b) = (d1.params(), d2.params());
    if a.q != b.q {
        return Ok(IsoCertificate::non_iso("vertex_count", 0, started));
    }
    if !opts.search_only {
        if a.q % 2 == 1 {
            if let Some(cond) = necessary_filter(a, b)?.first_failure() {
                return Ok(IsoCertificate::non_iso(cond.name(), 0, started));
            }
        } else if !cover_multiset_condition(a, b) {
            return Ok(IsoCertificate::non_iso("cover_multiset", 0, started));
        }
        if let Some(field) = p1.first_structural_difference(p2) {
            return Ok(IsoCertificate::non_iso(field, 0, started));
        }
    }

    let hints = SearchHints {
        seed: (a.q % 2 == 1 && a.m != a.n).then_some(0),
        root_orbit_rep: Some(psi_orbit_reps(d2)?),
    };
    let (found, nodes) = search_isomorphism(d1.graph(), d2.graph(), opts.budget, &hints)?;
    Ok(match found {
        Some(map) => {
            debug_assert!(verify_mapping(d1.graph(), d2.graph(), &map)?);
            IsoCertificate {
                verdict: Verdict::Iso,
                permutation: Some(map),
                witness: None,
                nodes,
                elapsed: started.elapsed(),
            }
        }
        None => IsoCertificate::non_iso(SEARCH_EXHAUSTED, nodes, started),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::MonomialParams;

    fn build(q: u32, m: u32, n: u32) -> MonomialDigraph {
        MonomialDigraph::from_params(MonomialParams::new(q, m, n).unwrap()).unwrap()
    }

    #[test]
    fn m_bar_witness_for_d312_vs_reverse() {
        let c = iso_search(&build(3, 1, 2), &build(3, 2, 1), SearchOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::NonIso);
        assert_eq!(c.witness.as_deref(), Some("m_bar"));
        assert!(c.by_invariant());
    }

    #[test]
    fn finds_iso_for_explicit_pair() {
        let (d1, d2) = (build(5, 1, 2), build(5, 3, 2));
        let c = iso_search(&d1, &d2, SearchOptions::default()).unwrap();
        assert!(c.is_iso());
        assert!(verify_mapping(d1.graph(), d2.graph(), c.permutation.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn search_only_still_rejects_reverse_pair() {
        let opts = SearchOptions {
            search_only: true,
            ..Default::default()
        };
        let c = iso_search(&build(5, 2, 4), &build(5, 4, 2), opts).unwrap();
        assert_eq!(c.verdict, Verdict::NonIso);
        assert_eq!(c.witness.as_deref(), Some(SEARCH_EXHAUSTED));
    }

    #[test]
    fn tiny_budget_is_undecided_not_non_iso() {
        let opts = SearchOptions {
            budget: 1,
            search_only: true,
        };
        let r = iso_search(&build(7, 1, 2), &build(7, 5, 4), opts);
        assert!(matches!(r, Err(IsoError::Undecided { .. })), "{r:?}");
    }

    #[test]
    fn generic_search_on_small_digraphs() {
        let a = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Digraph::from_arcs(4, [(2, 0), (0, 3), (3, 1), (1, 2)]).unwrap();
        let (found, _) = search_isomorphism(&a, &b, 1000, &SearchHints::default()).unwrap();
        assert!(verify_mapping(&a, &b, &found.unwrap()).unwrap());

        let c = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        let (found, _) = search_isomorphism(&a, &c, 1000, &SearchHints::default()).unwrap();
        assert!(found.is_none());
    }
}
