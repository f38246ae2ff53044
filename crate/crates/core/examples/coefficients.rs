//! Triangulation counts t(n) from the term ratio, and coefficients of
//! powers of g(x).
//!
//!     cargo run --release --example coefficients

use tutte_cas::domain::{tutte_numbers, tutte_ratio, tutte_series};

fn main() -> tutte_cas::Result<()> {
    println!("t(n+1)/t(n) = {}", tutte_ratio().to_string_in_var("n"));

    let t = tutte_numbers(12);
    for (n, v) in t.iter().enumerate().skip(1) {
        println!("t({n}) = {v}");
    }

    let g = tutte_series(10);
    for r in 2..=4 {
        let gr = g.pow(r)?;
        println!("g^{r} = {gr}");
    }
    Ok(())
}
