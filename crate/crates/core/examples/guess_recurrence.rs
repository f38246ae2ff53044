//! Guess linear recurrences with polynomial coefficients from data.

use tutte_cas::arith::{int, Rational};
use tutte_cas::domain::{tutte_numbers, tutte_series};
use tutte_cas::guess::{guess_recurrence, GuessConfig};

fn main() {
    let cfg = GuessConfig::default();

    let mut fib = vec![int(0), int(1)];
    for i in 2..60 {
        let next = &fib[i - 1] + &fib[i - 2];
        fib.push(next);
    }
    report("Fibonacci", guess_recurrence(&fib, 0, &cfg));

    let t: Vec<Rational> = tutte_numbers(80)
        .into_iter()
        .skip(1)
        .map(Rational::from_integer)
        .collect();
    report("t(n), n >= 1", guess_recurrence(&t, 1, &cfg));

    let g = tutte_series(120);
    let s: Vec<Rational> = g.mul(&g).coeffs()[2..].to_vec();
    report("[x^n] g^2, n >= 2", guess_recurrence(&s, 2, &cfg));
}

fn report(label: &str, rec: Option<tutte_cas::holonomic::Recurrence>) {
    match rec {
        Some(rec) => println!("{label}: {rec}"),
        None => println!("{label}: nothing within the search bounds"),
    }
}
