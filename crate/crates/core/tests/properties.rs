use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;
use proptest::sample::select;

use monodigraph::digraph::{
    count_cycles_by_length, diameter, strong_components, Digraph, Distance, MonomialDigraph,
    MonomialParams,
};
use monodigraph::field::{
    gcd_bar, interpolate, prime_powers_in, units_mod, FieldElement, FieldSpec,
};
use monodigraph::invariants::{profile, ProfileOptions};
use monodigraph::iso::{
    class_sizes, conjugate_classes, explicit_iso, iso_search, psi_automorphism, stable_coloring,
    verify_mapping, SearchOptions,
};
use monodigraph::sweep::{sweep, ProfileCache, SweepOptions};

const ORDERS: [u32; 15] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27];

fn field(q: u32) -> FieldSpec {
    FieldSpec::with_order(q).unwrap()
}

fn build(q: u32, m: u32, n: u32) -> MonomialDigraph {
    MonomialDigraph::from_params(MonomialParams::new(q, m, n).unwrap()).unwrap()
}

/// (q, a, b, c) with three field element indices.
fn field_triple() -> impl Strategy<Value = (u32, u32, u32, u32)> {
    select(&ORDERS[..]).prop_flat_map(|q| (Just(q), 0..q, 0..q, 0..q))
}

fn params_upto(max_q: u32) -> impl Strategy<Value = (u32, u32, u32)> {
    let qs: Vec<u32> = prime_powers_in(2, max_q);
    select(qs).prop_flat_map(|q| (Just(q), 1..q, 1..q))
}

proptest! {
    #[test]
    fn field_axioms((q, a, b, c) in field_triple()) {
        let f = field(q);
        let (a, b, c) = (FieldElement::from_index(a), FieldElement::from_index(b), FieldElement::from_index(c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
        // characteristic: p copies of a sum to zero
        let p_times = (0..f.p()).fold(FieldElement::ZERO, |acc, _| f.add(acc, a));
        prop_assert_eq!(p_times, FieldElement::ZERO);
    }

    #[test]
    fn log_is_additive((q, a, b, _c) in field_triple()) {
        let f = field(q);
        let (a, b) = (FieldElement::from_index(a), FieldElement::from_index(b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let expected = (f.log(a).unwrap() + f.log(b).unwrap()) % (q - 1);
        prop_assert_eq!(f.log(f.mul(a, b)).unwrap(), expected);
        prop_assert_eq!(f.exp(u64::from(f.log(a).unwrap())), a);
    }

    #[test]
    fn pow_reduces_mod_q_minus_1((q, a, _b, _c) in field_triple(), k in -200i64..200) {
        let f = field(q);
        let a = FieldElement::from_index(a);
        prop_assume!(!a.is_zero());
        let r = k.rem_euclid(i64::from(q) - 1);
        prop_assert_eq!(f.pow(a, k).unwrap(), f.pow(a, r).unwrap());
        let by_mul = (0..r).fold(FieldElement::ONE, |acc, _| f.mul(acc, a));
        prop_assert_eq!(f.pow(a, r).unwrap(), by_mul);
    }

    #[test]
    fn construction_is_deterministic(q in select(&ORDERS[..])) {
        let (a, b) = (field(q), field(q));
        prop_assert_eq!(a.modulus_high_first(), b.modulus_high_first());
        prop_assert_eq!(a.primitive(), b.primitive());
        prop_assert_eq!(a.exp_table(), b.exp_table());
    }

    #[test]
    fn reverse_duality((q, m, n) in params_upto(9)) {
        let d = build(q, m, n);
        let r = build(q, n, m);
        let mut want: Vec<_> = d.graph().reverse().arcs().collect();
        let mut got: Vec<_> = r.graph().arcs().collect();
        want.sort_unstable();
        got.sort_unstable();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn profile_invariant_under_explicit_map((q, m, n) in params_upto(13), k_idx in 0usize..64) {
        let units = units_mod(q - 1);
        let k = units[k_idx % units.len()];
        let (m2, n2) = (((k * m - 1) % (q - 1)) + 1, ((k * n - 1) % (q - 1)) + 1);
        let (a, b) = (build(q, m, n), build(q, m2, n2));
        let iso = explicit_iso(a.field(), a.params(), b.params());
        prop_assert!(iso.is_some(), "no explicit map {} <- {}", a.params(), b.params());
        prop_assert!(iso.unwrap().verify(a.graph(), b.graph()).unwrap());
        let opts = ProfileOptions { cycle_length: Some(3), cycle_budget: None };
        prop_assert_eq!(profile(&a, opts).unwrap(), profile(&b, opts).unwrap());
    }

    #[test]
    fn interpolation_matches_linear_solve(p in select(vec![3u32, 5, 7, 11, 13]), seed in prop::collection::vec(0u32..13, 13)) {
        let f = field(p);
        let ys: Vec<u32> = seed.iter().take(p as usize).map(|y| y % p).collect();
        let points: Vec<_> = ys
            .iter()
            .enumerate()
            .map(|(x, &y)| (FieldElement::from_index(x as u32), FieldElement::from_index(y)))
            .collect();
        let poly = interpolate(&f, &points);
        let oracle = vandermonde_solve(p, &ys);
        let got: Vec<u32> = (0..p as usize).map(|i| poly.coeff(i).idx()).collect();
        prop_assert_eq!(&got, &oracle);
        for &(x, y) in &points {
            prop_assert_eq!(poly.eval(&f, x), y);
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Coefficients `c_0..c_{p-1}` with `sum c_i x^i = ys[x]` mod prime `p`, by
/// Gauss-Jordan elimination on the Vandermonde system.
fn vandermonde_solve(p: u32, ys: &[u32]) -> Vec<u32> {
    let p64 = u64::from(p);
    let n = ys.len();
    let mut rows: Vec<Vec<u64>> = (0..n)
        .map(|x| {
            let mut row: Vec<u64> = (0..n).map(|i| pow_mod(x as u64, i as u64, p64)).collect();
            row.push(u64::from(ys[x]));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| rows[r][col] != 0)
            .expect("Vandermonde matrix is invertible");
        rows.swap(col, pivot);
        let inv = pow_mod(rows[col][col], p64 - 2, p64);
        for v in rows[col].iter_mut() {
            *v = *v * inv % p64;
        }
        for r in 0..n {
            if r != col && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..=n {
                    rows[r][c] = (rows[r][c] + p64 * p64 - factor * rows[col][c]) % p64;
                }
            }
        }
    }
    rows.iter().map(|r| r[n] as u32).collect()
}

#[test]
fn power_map_kernel_and_image_sizes() {
    for q in prime_powers_in(2, 27) {
        let f = field(q);
        for n in 1..q {
            let nb = gcd_bar(i64::from(n), q);
            let image: HashSet<FieldElement> =
                f.nonzero_elements().map(|x| f.pow_pos(x, n)).collect();
            let kernel = f
                .nonzero_elements()
                .filter(|&x| f.pow_pos(x, n) == FieldElement::ONE)
                .count();
            assert_eq!(kernel as u32, nb, "|I_{n}| in GF({q})");
            assert_eq!(image.len() as u32, (q - 1) / nb, "|A_{n}| in GF({q})");
        }
    }
}

fn reachability(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.vertex_count();
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for (u, v) in d.arcs() {
        r[u as usize][v as usize] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                for j in 0..n {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

#[test]
fn strong_components_match_reachability() {
    for q in prime_powers_in(2, 5) {
        for m in 1..q {
            for n in 1..q {
                let d = build(q, m, n);
                let r = reachability(d.graph());
                let comps = strong_components(d.graph());
                let mut comp_of = vec![usize::MAX; r.len()];
                for (i, c) in comps.iter().enumerate() {
                    for &v in c {
                        comp_of[v as usize] = i;
                    }
                }
                for u in 0..r.len() {
                    for v in 0..r.len() {
                        assert_eq!(
                            comp_of[u] == comp_of[v],
                            r[u][v] && r[v][u],
                            "D({q};{m},{n}) {u} {v}"
                        );
                    }
                }
            }
        }
    }
}

fn floyd_warshall_diameter(d: &Digraph) -> Distance {
    let n = d.vertex_count();
    let inf = u32::MAX / 2;
    let mut dist = vec![vec![inf; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = 0;
    }
    for (u, v) in d.arcs() {
        if u != v {
            dist[u as usize][v as usize] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i][k] + dist[k][j];
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    let max = dist.iter().flatten().copied().max().unwrap_or(0);
    if max >= inf {
        Distance::Infinite
    } else {
        Distance::Finite(max)
    }
}

#[test]
fn diameter_matches_floyd_warshall() {
    assert_eq!(
        diameter(build(2, 1, 1).graph(), false),
        floyd_warshall_diameter(build(2, 1, 1).graph())
    );
    for q in prime_powers_in(3, 5) {
        for m in 1..q {
            for n in 1..q {
                let d = build(q, m, n);
                assert_eq!(
                    diameter(d.graph(), false),
                    floyd_warshall_diameter(d.graph()),
                    "D({q};{m},{n})"
                );
                // reversal preserves the diameter
                assert_eq!(
                    diameter(d.graph(), false),
                    diameter(&d.graph().reverse(), false)
                );
            }
        }
    }
}

#[test]
fn reversal_preserves_cycle_spectrum() {
    for q in prime_powers_in(2, 7) {
        let len = if q <= 5 { 8 } else { 6 };
        for m in 1..q {
            for n in 1..q {
                let d = build(q, m, n);
                let a = count_cycles_by_length(d.graph(), len, u64::MAX).unwrap();
                let b = count_cycles_by_length(&d.graph().reverse(), len, u64::MAX).unwrap();
                assert_eq!(a, b, "D({q};{m},{n})");
            }
        }
    }
}

#[test]
fn psi_maps_form_a_group_of_automorphisms() {
    for q in prime_powers_in(2, 9) {
        for m in 1..q {
            for n in 1..q {
                let d = build(q, m, n);
                let f = Arc::clone(d.field());
                let maps: Vec<_> = f
                    .nonzero_elements()
                    .map(|c| (c, psi_automorphism(&d, c).unwrap()))
                    .collect();
                for (c, pc) in &maps {
                    assert!(verify_mapping(d.graph(), d.graph(), pc).unwrap());
                    for (e, pe) in &maps {
                        let composed = pc.then(pe);
                        let direct = psi_automorphism(&d, f.mul(*c, *e)).unwrap();
                        assert_eq!(composed, direct);
                    }
                }
                assert!(psi_automorphism(&d, FieldElement::ZERO).is_err());
            }
        }
    }
}

#[test]
fn refinement_class_sizes_agree_on_isomorphic_pairs() {
    for q in prime_powers_in(2, 7) {
        for class in conjugate_classes(q) {
            let (m, n) = class.canonical_rep();
            let want = class_sizes(&stable_coloring(build(q, m, n).graph()));
            for &(m2, n2) in &class.members[1..] {
                assert_eq!(
                    class_sizes(&stable_coloring(build(q, m2, n2).graph())),
                    want,
                    "q = {q}"
                );
            }
        }
    }
}

#[test]
fn filtered_and_search_only_verdicts_agree() {
    for q in prime_powers_in(2, 9) {
        let reps: Vec<MonomialDigraph> = conjugate_classes(q)
            .iter()
            .map(|c| MonomialDigraph::from_params(c.rep_params()).unwrap())
            .collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                let filtered = iso_search(a, b, SearchOptions::default()).unwrap();
                let raw = iso_search(
                    a,
                    b,
                    SearchOptions {
                        search_only: true,
                        ..Default::default()
                    },
                )
                .unwrap();
                assert_eq!(
                    filtered.verdict,
                    raw.verdict,
                    "{} vs {}",
                    a.params(),
                    b.params()
                );
                assert!(!raw.is_iso());
            }
        }
    }
}

#[test]
fn sweeps_are_deterministic_and_cache_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let plain = sweep(2, 9, &SweepOptions::default()).unwrap();
    let run_cached = || {
        let cache = Arc::new(ProfileCache::open(&path).unwrap());
        let opts = SweepOptions {
            cache: Some(cache),
            ..Default::default()
        };
        sweep(2, 9, &opts).unwrap()
    };
    let cold = run_cached();
    let warm = run_cached();
    let strip = |r: &[monodigraph::sweep::SweepReport]| {
        r.iter().map(|x| x.without_timing()).collect::<Vec<_>>()
    };
    assert_eq!(strip(&cold), strip(&warm));
    assert_eq!(strip(&plain), strip(&cold));
    assert_eq!(
        strip(&plain),
        strip(&sweep(2, 9, &SweepOptions::default()).unwrap())
    );
}
