// Class-by-class comparison for a range of q, with a profile cache on disk.
//
// RUST_LOG=info cargo run --release --example sweep_small -- 2 11

use std::sync::Arc;

use monodigraph::sweep::{sweep, ProfileCache, SweepOptions};

pub fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("numeric argument"));
    let (lo, hi) = (args.next().unwrap_or(2), args.next().unwrap_or(11));
    run(lo, hi);
}

pub fn run(lo: u32, hi: u32) {
    let dir = std::env::temp_dir().join("monodigraph-example");
    std::fs::create_dir_all(&dir).unwrap();
    let cache = Arc::new(ProfileCache::open(dir.join("profiles.jsonl")).unwrap());
    let opts = SweepOptions {
        cache: Some(Arc::clone(&cache)),
        ..Default::default()
    };

    for r in sweep(lo, hi, &opts).unwrap() {
        println!(
            "q = {:>2}: {:>3} classes, {:>4} pairs, {:>5.1}% without search, {} undecided, {} counterexamples",
            r.q,
            r.class_count,
            r.cross_class_pairs,
            100.0 * r.filter_efficacy(),
            r.undecided,
            r.counterexamples.len()
        );
    }
    println!("{} cached profiles in {}", cache.len(), dir.display());
}
