// Arithmetic tables of a small extension field.
//
// cargo run --example field_tables -- 3 2

use monodigraph::field::FieldSpec;

pub fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("numeric argument"));
    let p = args.next().unwrap_or(3);
    let e = args.next().unwrap_or(2);
    run(p, e);
}

pub fn run(p: u32, e: u32) {
    let f = FieldSpec::new(p, e).unwrap_or_else(|err| panic!("GF({p}^{e}): {err}"));

    let modulus: Vec<String> = f.modulus_high_first().iter().map(u32::to_string).collect();
    println!("GF({}) = GF({p})[X] / ({})", f.q(), modulus.join(" "));
    println!(
        "primitive element: {} (digits {:?})",
        f.primitive(),
        f.digits(f.primitive())
    );

    println!("\n   i  g^i  digits");
    for (i, &v) in f.exp_table().iter().enumerate().take(f.q() as usize - 1) {
        let x = f.element(v).unwrap();
        println!("{i:>4} {v:>4}  {:?}", f.digits(x));
    }

    println!("\nmultiplication table (element indices):");
    for a in f.elements() {
        let row: Vec<String> = f
            .elements()
            .map(|b| format!("{:>3}", f.mul(a, b).idx()))
            .collect();
        println!("{}", row.join(""));
    }
}
