// A digraph and its reverse always have the same cycle counts, so cycle
// spectra alone cannot separate D(q; (q-1)/2, q-1) from D(q; q-1, (q-1)/2);
// the gcd of m already does.

use monodigraph::digraph::{count_cycles_by_length, DEFAULT_CYCLE_BUDGET};
use monodigraph::invariants::necessary_filter;
use monodigraph::{MonomialDigraph, MonomialParams};

pub fn main() {
    for q in [5u32, 9] {
        let h = (q - 1) / 2;
        let (a, b) = (
            MonomialParams::new(q, h, q - 1).unwrap(),
            MonomialParams::new(q, q - 1, h).unwrap(),
        );
        for p in [a, b] {
            let d = MonomialDigraph::from_params(p).unwrap();
            let spectrum = count_cycles_by_length(d.graph(), 6, DEFAULT_CYCLE_BUDGET).unwrap();
            println!("{p}: cycles of length 1..6 = {spectrum:?}");
        }
        let f = necessary_filter(a, b).unwrap();
        println!(
            "  {f:?}; first failing condition: {:?}\n",
            f.first_failure().map(|c| c.name())
        );
    }
}
