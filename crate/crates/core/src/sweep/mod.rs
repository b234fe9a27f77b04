//! Sweeps over prime powers checking that parameter classes are exactly the
//! isomorphism classes.
//!
//! For each `q`, every member of a class is checked against its canonical
//! representative with the explicit power map, and every pair of class
//! representatives is compared: invariants first, then the search.
//! Budget exhaustion is recorded as undecided, never as a verdict.

mod cache;

pub use cache::{CacheEntry, ProfileCache};

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::{GraphError, MonomialDigraph, MonomialParams};
use crate::field::{prime_powers_in, FieldSpec};
use crate::invariants::{profile, InvariantError, InvariantProfile, ProfileOptions};
use crate::iso::{
    class_sizes, conjugate_classes, explicit_iso, iso_search_with_profiles, stable_coloring,
    IsoError, ParameterClass, SearchOptions, VertexMap,
};

/// Largest `q` a full sweep accepts unless raised explicitly.
pub const DEFAULT_MAX_Q: u32 = 16;
/// Largest `q` an `m = 1` sweep accepts unless raised explicitly.
pub const DEFAULT_MAX_Q_M1: u32 = 27;

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("q_max = {q_max} exceeds the sweep guard {guard}; raise max_q to allow it")]
    RangeTooLarge { q_max: u32, guard: u32 },
    #[error("explicit map failed between {rep} and {member}")]
    WithinClassFailure {
        rep: MonomialParams,
        member: MonomialParams,
    },
    #[error("cache {path}: {source}")]
    Cache {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cache {path}: corrupt record on line {line}: {message}")]
    CorruptCache {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    /// Guard on `q_max`; defaults to [`DEFAULT_MAX_Q`] or [`DEFAULT_MAX_Q_M1`].
    pub max_q: Option<u32>,
    pub search: SearchOptions,
    pub cache: Option<Arc<ProfileCache>>,
    /// Keep every isomorphism found (explicit maps and, with
    /// `search_within_class`, search-found maps) in the report.
    pub collect_isomorphisms: bool,
    /// Also run the search on representative/member pairs.
    pub search_within_class: bool,
}

/// An isomorphism `D(q; from) -> D(q; to)` found during a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoveredIso {
    pub from: MonomialParams,
    pub to: MonomialParams,
    pub mapping: VertexMap,
    pub by_search: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub a: (u32, u32),
    pub b: (u32, u32),
    pub permutation: VertexMap,
}

/// Per-`q` sweep result. Serialized key order is fixed by field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub q: u32,
    pub class_count: usize,
    pub within_class_checks: u64,
    pub cross_class_pairs: u64,
    pub resolved_by_invariant: u64,
    pub resolved_by_search: u64,
    pub undecided: u64,
    pub counterexamples: Vec<Counterexample>,
    pub wall_time_ms: u64,
    #[serde(skip)]
    pub isomorphisms: Vec<DiscoveredIso>,
}

impl SweepReport {
    /// Fraction of cross-class pairs settled without search.
    pub fn filter_efficacy(&self) -> f64 {
        if self.cross_class_pairs == 0 {
            1.0
        } else {
            self.resolved_by_invariant as f64 / self.cross_class_pairs as f64
        }
    }

    /// Every class pair at this `q` is separated: nothing undecided, no cross-class isomorphism.
    pub fn consistent(&self) -> bool {
        self.undecided == 0 && self.counterexamples.is_empty()
    }

    /// Copy with the timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> SweepReport {
        SweepReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }
}

enum PairOutcome {
    Invariant,
    Search,
    Undecided,
    Iso(VertexMap),
}

fn cached_profile(
    d: &MonomialDigraph,
    cache: Option<&ProfileCache>,
) -> Result<InvariantProfile, SweepError> {
    if let Some(entry) = cache.and_then(|c| c.get(d.params())) {
        return Ok(entry.profile);
    }
    let prof = profile(d, ProfileOptions::default())?;
    if let Some(c) = cache {
        let p = d.params();
        c.put(CacheEntry {
            q: p.q,
            m: p.m,
            n: p.n,
            profile: prof.clone(),
            refinement_signature: Some(class_sizes(&stable_coloring(d.graph()))),
        })?;
    }
    Ok(prof)
}

fn sweep_one(
    q: u32,
    classes: Vec<ParameterClass>,
    opts: &SweepOptions,
) -> Result<SweepReport, SweepError> {
    let started = Instant::now();
    let field = Arc::new(FieldSpec::with_order(q).map_err(GraphError::from)?);
    let cache = opts.cache.as_deref();

    let reps: Vec<MonomialDigraph> = classes
        .par_iter()
        .map(|c| {
            let (m, n) = c.canonical_rep();
            MonomialDigraph::build(Arc::clone(&field), m, n)
        })
        .collect::<Result<_, _>>()?;
    let profiles: Vec<InvariantProfile> = reps
        .par_iter()
        .map(|d| cached_profile(d, cache))
        .collect::<Result<_, _>>()?;

    // within-class: representative against every other member
    let within: Vec<(MonomialParams, MonomialParams)> = classes
        .iter()
        .flat_map(|c| {
            let rep = c.rep_params();
            c.members[1..]
                .iter()
                .map(move |&(m, n)| (rep, MonomialParams { q, m, n }))
        })
        .collect();
    let within_results: Vec<Vec<DiscoveredIso>> = within
        .par_iter()
        .map(|&(rep, member)| -> Result<Vec<DiscoveredIso>, SweepError> {
            let d_rep = MonomialDigraph::build(Arc::clone(&field), rep.m, rep.n)?;
            let d_mem = MonomialDigraph::build(Arc::clone(&field), member.m, member.n)?;
            let fail = || SweepError::WithinClassFailure { rep, member };
            let iso = explicit_iso(&field, rep, member).ok_or_else(fail)?;
            if !iso.verify(d_rep.graph(), d_mem.graph())? {
                return Err(fail());
            }
            let mut found = Vec::new();
            if opts.collect_isomorphisms {
                found.push(DiscoveredIso {
                    from: member,
                    to: rep,
                    mapping: iso.forward,
                    by_search: false,
                });
                found.push(DiscoveredIso {
                    from: rep,
                    to: member,
                    mapping: iso.inverse,
                    by_search: false,
                });
            }
            if opts.search_within_class {
                let p_rep = cached_profile(&d_rep, cache)?;
                let p_mem = cached_profile(&d_mem, cache)?;
                let cert = iso_search_with_profiles(&d_rep, &d_mem, &p_rep, &p_mem, opts.search)?;
                let mapping = cert.permutation.ok_or_else(fail)?;
                if opts.collect_isomorphisms {
                    found.push(DiscoveredIso {
                        from: rep,
                        to: member,
                        mapping,
                        by_search: true,
                    });
                }
            }
            Ok(found)
        })
        .collect::<Result<_, _>>()?;

    let pairs: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|i| (i + 1..reps.len()).map(move |j| (i, j)))
        .collect();
    let outcomes: Vec<PairOutcome> = pairs
        .par_iter()
        .map(|&(i, j)| {
            match iso_search_with_profiles(
                &reps[i],
                &reps[j],
                &profiles[i],
                &profiles[j],
                opts.search,
            ) {
                Ok(cert) if cert.is_iso() => Ok(PairOutcome::Iso(
                    cert.permutation.expect("iso certificate carries a mapping"),
                )),
                Ok(cert) if cert.by_invariant() => Ok(PairOutcome::Invariant),
                Ok(_) => Ok(PairOutcome::Search),
                Err(IsoError::Undecided { nodes, .. }) => {
                    log::warn!(
                        "undecided after {nodes} nodes: {} vs {}",
                        reps[i].params(),
                        reps[j].params()
                    );
                    Ok(PairOutcome::Undecided)
                }
                Err(e) => Err(SweepError::from(e)),
            }
        })
        .collect::<Result<_, SweepError>>()?;

    let mut report = SweepReport {
        q,
        class_count: classes.len(),
        within_class_checks: within.len() as u64,
        cross_class_pairs: pairs.len() as u64,
        resolved_by_invariant: 0,
        resolved_by_search: 0,
        undecided: 0,
        counterexamples: Vec::new(),
        wall_time_ms: 0,
        isomorphisms: within_results.into_iter().flatten().collect(),
    };
    for (&(i, j), outcome) in pairs.iter().zip(outcomes) {
        match outcome {
            PairOutcome::Invariant => report.resolved_by_invariant += 1,
            PairOutcome::Search => report.resolved_by_search += 1,
            PairOutcome::Undecided => report.undecided += 1,
            PairOutcome::Iso(permutation) => {
                let (a, b) = (classes[i].canonical_rep(), classes[j].canonical_rep());
                log::error!(
                    "cross-class isomorphism D({q};{},{}) ~ D({q};{},{})",
                    a.0,
                    a.1,
                    b.0,
                    b.1
                );
                report
                    .counterexamples
                    .push(Counterexample { a, b, permutation });
            }
        }
    }
    report.wall_time_ms = started.elapsed().as_millis() as u64;
    log::info!(
        "q = {q}: {} classes, {} cross pairs, {} by invariant, {} by search, {} undecided, {} ms",
        report.class_count,
        report.cross_class_pairs,
        report.resolved_by_invariant,
        report.resolved_by_search,
        report.undecided,
        report.wall_time_ms
    );
    Ok(report)
}

fn check_guard(q_max: u32, opts: &SweepOptions, default: u32) -> Result<(), SweepError> {
    let guard = opts.max_q.unwrap_or(default);
    if q_max > guard {
        return Err(SweepError::RangeTooLarge { q_max, guard });
    }
    Ok(())
}

/// Full sweep over all prime powers in `[q_min, q_max]`.
pub fn sweep(q_min: u32, q_max: u32, opts: &SweepOptions) -> Result<Vec<SweepReport>, SweepError> {
    check_guard(q_max, opts, DEFAULT_MAX_Q)?;
    prime_powers_in(q_min, q_max)
        .into_iter()
        .map(|q| sweep_one(q, conjugate_classes(q), opts))
        .collect()
}

/// Classes of `(1, n)` pairs: each class of [`conjugate_classes`] cut down
/// to its members with `m = 1`. Since `k * 1 = 1` forces `k = 1`, these are
/// singletons.
pub fn m1_classes(q: u32) -> Vec<ParameterClass> {
    conjugate_classes(q)
        .into_iter()
        .filter_map(|c| {
            let members: Vec<_> = c.members.into_iter().filter(|&(m, _)| m == 1).collect();
            (!members.is_empty()).then_some(ParameterClass { q, members })
        })
        .collect()
}

/// Sweep restricted to `m = 1`, over odd prime powers in `[q_min, q_max]`.
pub fn sweep_m1(
    q_min: u32,
    q_max: u32,
    opts: &SweepOptions,
) -> Result<Vec<SweepReport>, SweepError> {
    check_guard(q_max, opts, DEFAULT_MAX_Q_M1)?;
    prime_powers_in(q_min, q_max)
        .into_iter()
        .filter(|q| q % 2 == 1)
        .map(|q| sweep_one(q, m1_classes(q), opts))
        .collect()
}
