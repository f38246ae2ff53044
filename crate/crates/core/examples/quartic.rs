//! Recover the algebraic equation P(x, g) = 0 from 61 coefficients, then
//! evaluate it at the radius of convergence x = 27/256.

use tutte_cas::arith::rat;
use tutte_cas::domain::{eval_quartic_at, partial_sum, quartic, tutte_series};
use tutte_cas::guess::{guess_algeq, GuessConfig};

fn main() {
    let series = tutte_series(60);
    let found = guess_algeq(&series, 4, 3, &GuessConfig::default());
    match found {
        Some(p) => {
            println!("guessed: {p}");
            println!("matches the known quartic: {}", p == quartic().p);
        }
        None => println!("no equation with deg_y <= 4, deg_x <= 3"),
    }

    let x0 = rat(27, 256);
    let roots = eval_quartic_at(&x0);
    let shown: Vec<String> = roots.iter().map(ToString::to_string).collect();
    println!("rational roots of P({x0}, y): [{}]", shown.join(", "));
    for terms in [100, 500, 2000] {
        let s = partial_sum(27.0 / 256.0, terms);
        println!(
            "sum of the first {terms} terms at 27/256: {s:.9} (5/27 = {:.9})",
            5.0 / 27.0
        );
    }
}
