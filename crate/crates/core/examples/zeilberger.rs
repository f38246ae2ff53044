//! Creative telescoping. First the binomial row sum, then the convolution
//! t(k) t(n-k) behind [x^n] g^2.
//!
//! For the convolution the telescoper has order 2 and its certificate checks
//! exactly, yet the operator does not kill the windowed sum S(n) over
//! 1 <= k <= n-1. The telescoping argument sums over the natural support of
//! the Gamma continuation of t, which also has t(0) = 1 and t(-1) = 3/4.
//! Adding those boundary terms gives S(n) + 2 t(n) + 3/2 t(n+1) + [n = 0],
//! and that sequence is annihilated.

use tutte_cas::arith::{int, parse_ratfun2, rat, Rational, Zero};
use tutte_cas::domain::{g_squared_term, tutte_numbers, tutte_series};
use tutte_cas::telescope::{numeric_sum_check, verify_certificate, zeilberger, HyperTerm2, Support};

fn main() -> tutte_cas::Result<()> {
    let binomial = HyperTerm2::new(
        parse_ratfun2("(n+1)/(n+1-k)", "n", "k")?,
        parse_ratfun2("(n-k)/(k+1)", "n", "k")?,
        Support::Natural { lower: 0 },
        (0, int(1)),
    )?;
    let cert = zeilberger(&binomial, 2).expect("binomial sum telescopes");
    println!("sum_k C(n,k): {}", cert.operator);
    println!("  R = {}", cert.r);
    println!(
        "  sums 0..=30 annihilated: {}",
        numeric_sum_check(&binomial, &cert.operator, 0, 30)?.all_zero()
    );

    let term = g_squared_term();
    let cert = zeilberger(&term, 3).expect("convolution telescopes");
    println!("sum_k t(k) t(n-k): order {}", cert.operator.order());
    for (i, c) in cert.operator.to_strings().iter().enumerate() {
        println!("  a(n+{i}): {c}");
    }
    println!("  certificate identity holds: {}", verify_certificate(&term, &cert));

    let windowed = numeric_sum_check(&term, &cert.operator, 3, 40)?;
    println!(
        "  windowed sums annihilated: {} (first failure {:?})",
        windowed.all_zero(),
        windowed.first_failure
    );

    let t: Vec<Rational> = tutte_numbers(45).into_iter().map(Rational::from_integer).collect();
    let g = tutte_series(45);
    let s = g.mul(&g);
    let natural = |n: i64| {
        let n = n as usize;
        let boundary = if n == 0 { int(1) } else { int(0) };
        &s.coeffs()[n] + &t[n] * int(2) + &t[n + 1] * rat(3, 2) + boundary
    };
    let ok = (0..=40).all(|n| cert.operator.residual_with(n, natural).is_zero());
    println!("  natural-support sums annihilated for 0 <= n <= 40: {ok}");
    Ok(())
}
