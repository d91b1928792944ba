//! Correlators `⟨Σ_a S^a_1 S^a_n⟩` of the infinite chain at zero temperature, from
//! the decomposition tables, next to the stored reference values.
//!
//! Run with `cargo run --release --example correlators`.

use s1fc::correlator::{correlator, reference_values, CorrelatorOptions};
use std::time::Instant;

fn main() {
    let opts = CorrelatorOptions { digits: 12, ..Default::default() };
    for n in [2, 3] {
        let t = Instant::now();
        match correlator(n, &opts) {
            Ok(r) => println!("n={n}: {}  = {}  ({:.2?})", r.pipoly, r.decimal, t.elapsed()),
            Err(e) => println!("n={n}: {} [{}] ({:.2?})", e, e.kind(), t.elapsed()),
        }
    }
    for n in 2..=5 {
        let r = reference_values(n, 12).expect("stored value");
        println!("reference n={n}: {}  (degree {} in π²)", r.decimal, r.value().degree().unwrap_or(0));
    }
}
