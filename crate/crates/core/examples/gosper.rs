//! Indefinite summation of hypergeometric terms given by their term ratio.
//! A certificate R(k) makes T(k) = R(k) t(k) an antidifference:
//! T(k+1) - T(k) = t(k).

use tutte_cas::arith::parse_ratfun;
use tutte_cas::telescope::{gosper, HyperTerm1};

fn main() -> tutte_cas::Result<()> {
    let cases = [
        ("k! k", "(k+1)^2/k"),
        ("k", "(k+1)/k"),
        ("k!", "k+1"),
        ("2^k", "2"),
        ("1/(k(k+1))", "k/(k+2)"),
    ];
    for (label, ratio) in cases {
        let term = HyperTerm1::new(parse_ratfun(ratio, "k")?)?;
        match gosper(&term) {
            Some(r) => println!("{label:<12} ratio {ratio:<12} R(k) = {}", r.to_string_in_var("k")),
            None => println!("{label:<12} ratio {ratio:<12} not Gosper-summable"),
        }
    }
    Ok(())
}
