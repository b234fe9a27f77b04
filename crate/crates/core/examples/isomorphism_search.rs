// Decide isomorphism for one pair, then look at the certificate.
//
// cargo run --example isomorphism_search -- 9 1 2 3 6

use monodigraph::field::FieldSpec;
use monodigraph::iso::{explicit_iso, extract_g, iso_search, verify_mapping, SearchOptions};
use monodigraph::{MonomialDigraph, MonomialParams};

pub fn main() {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let [q, m1, n1, m2, n2] = args[..] else {
        return run(9, (1, 2), (5, 2));
    };
    run(q, (m1, n1), (m2, n2));
}

pub fn run(q: u32, (m1, n1): (u32, u32), (m2, n2): (u32, u32)) {
    let a = MonomialParams::new(q, m1, n1).unwrap();
    let b = MonomialParams::new(q, m2, n2).unwrap();
    let (d1, d2) = (
        MonomialDigraph::from_params(a).unwrap(),
        MonomialDigraph::from_params(b).unwrap(),
    );

    let cert = iso_search(&d1, &d2, SearchOptions::default()).expect("decided within budget");
    println!(
        "{a} vs {b}: {:?} after {} nodes ({:?})",
        cert.verdict, cert.nodes, cert.elapsed
    );
    let Some(map) = &cert.permutation else {
        println!("witness: {}", cert.witness.unwrap_or_default());
        return;
    };
    println!(
        "mapping verifies: {}",
        verify_mapping(d1.graph(), d2.graph(), map).unwrap()
    );

    let field = FieldSpec::with_order(q).unwrap();
    match extract_g(map, &field) {
        Ok(shape) => println!(
            "second coordinate g(y) has coefficients {:?}; odd-only {}, permutation {}, fixes origin {}",
            shape.g.coeffs().iter().map(|c| c.idx()).collect::<Vec<_>>(),
            shape.odd_degree_only,
            shape.is_permutation,
            shape.fixes_origin
        ),
        Err(e) => println!("no g(y): {e}"),
    }

    if let Some(explicit) = explicit_iso(&field, b, a) {
        let ok = explicit.verify(d2.graph(), d1.graph()).unwrap();
        println!(
            "explicit power map x -> x^{} from {a} to {b} verifies: {ok}",
            explicit.k
        );
    }
}
