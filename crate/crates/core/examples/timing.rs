//! Times the constant-term engine and checks the result against the
//! conjectured denominator.
//!
//! ```text
//! cargo run --release -p trace-poincare-core --example timing -- 4 2 pure
//! ```

use std::time::Instant;

use trace_poincare_core::denomconj::conjectured_denominator;
use trace_poincare_core::molien::{molien_series, reconstruct_proper};
use trace_poincare_core::{ProblemSpec, Ring};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(3);
    let k: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let ring = match args.get(2).map(String::as_str) {
        Some("mixed") => Ring::MixedTrace,
        _ => Ring::PureTrace,
    };
    let spec = ProblemSpec::new(n, k, ring).expect("n >= 1, k >= 2");
    let den = conjectured_denominator(n, k, ring).expect("n >= 2");
    let order = den.degree() + 10;
    let start = Instant::now();
    let s = molien_series(&spec, order);
    println!("{spec} D={order}: {:?}", start.elapsed());
    match den.product.as_ref().map(|d| reconstruct_proper(&s, d, 5)) {
        Some(Ok(f)) => println!("numerator {}", f.numerator),
        Some(Err(e)) => println!("reconstruction failed: {e}"),
        None => println!("no product form: {}", den.cyclotomic),
    }
}
