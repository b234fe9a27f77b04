// D(17; 1, 4) and D(17; 1, 12) share every gcd-bar value, yet differ in the
// number of K motifs (two looped vertices joined by an arc). The counts track
// the roots of X^5 - 2X + 1 and X^13 - 2X + 1.

use monodigraph::field::FieldSpec;
use monodigraph::invariants::{gcd_profile, motif_census, trinomial_root_count, MotifSpec};
use monodigraph::iso::{iso_search, SearchOptions};
use monodigraph::{MonomialDigraph, MonomialParams};

pub fn main() {
    let field = FieldSpec::with_order(17).unwrap();
    let pairs = [(1, 4, 5), (1, 12, 13)];
    let mut digraphs = Vec::new();
    for (m, n, d) in pairs {
        let p = MonomialParams::new(17, m, n).unwrap();
        let g = MonomialDigraph::from_params(p).unwrap();
        println!(
            "{p}: {:?}, K = {}, directed K22 = {}, roots of X^{d} - 2X + 1: {}",
            gcd_profile(p),
            motif_census(g.graph(), MotifSpec::K),
            motif_census(g.graph(), MotifSpec::DirectedK22),
            trinomial_root_count(&field, d)
        );
        digraphs.push(g);
    }
    let cert = iso_search(&digraphs[0], &digraphs[1], SearchOptions::default()).unwrap();
    println!(
        "verdict: {:?} (witness {})",
        cert.verdict,
        cert.witness.unwrap_or_default()
    );
}
