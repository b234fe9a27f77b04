// Invariant profiles for every D(q; m, n) at one q, with the closed-form
// 2-cycle and loop counts checked against the brute-force ones.
//
// cargo run --example invariants_table -- 7

use std::sync::Arc;

use monodigraph::field::{gcd_bar, FieldSpec};
use monodigraph::invariants::{profile, two_cycle_formula, ProfileOptions};
use monodigraph::MonomialDigraph;

pub fn main() {
    let q: u32 = std::env::args().nth(1).map_or(7, |a| a.parse().expect("q"));
    run(q);
}

pub fn run(q: u32) {
    let field = Arc::new(FieldSpec::with_order(q).expect("q must be a prime power"));
    let opts = ProfileOptions {
        cycle_length: Some(4),
        cycle_budget: None,
    };

    println!(" m  n | m̄  n̄ m+n m-n | loops ydist  c2 (formula) |   K   K22 | cycles 1..4");
    for m in 1..q {
        for n in 1..q {
            let d = MonomialDigraph::build(Arc::clone(&field), m, n).unwrap();
            let p = profile(&d, opts).unwrap();
            let formula = two_cycle_formula(d.params()).map_or("-".to_string(), |c| c.to_string());
            let ydist_formula = (q - 1) / gcd_bar(i64::from(m + n), q);
            println!(
                "{m:>2} {n:>2} | {:>2} {:>2} {:>3} {:>3} | {:>5} {:>2}/{:<2} {:>3} ({formula:>3}) | {:>3} {:>5} | {:?}",
                p.m_bar, p.n_bar, p.sum_bar, p.diff_bar,
                p.loop_total, p.loop_distinct_nonzero_y, ydist_formula,
                p.two_cycle_count, p.k_motif_count, p.k22_motif_count,
                p.cycle_spectrum.unwrap_or_default(),
            );
        }
    }
}
