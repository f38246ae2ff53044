//! A_r(n) = [x^n] g^r / t(n): exact values, a guessed closed form in n,
//! and its limit B_r.
//!
//!     cargo run --release --example ratios -- 3

use tutte_cas::domain::{closed_form_a, default_sample_count, ratio_samples};

fn main() -> tutte_cas::Result<()> {
    let r: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);

    for (n, a) in ratio_samples(r, 8)? {
        println!("A_{r}({n}) = {a}");
    }

    let samples = default_sample_count(r);
    let report = closed_form_a(r, samples)?;
    match (&report.formula, &report.limit) {
        (Some(f), Some(b)) => {
            println!("A_{r}(n) = {}", f.to_string_in_var("n"));
            println!("B_{r} = {b}");
        }
        _ => println!("no closed form found from {samples} samples"),
    }
    Ok(())
}
