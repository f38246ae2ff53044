//! The limits B_r for r = 2..=11, exact and to ten significant digits.
//! Each B_r comes from a guessed closed form of A_r(n), and is compared with
//! r (5/27)^(r-1).

use num_traits::pow;
use tutte_cas::arith::{rat, render_decimal, Rational};
use tutte_cas::domain::b_table;

fn main() -> tutte_cas::Result<()> {
    for (r, b) in b_table(11)? {
        let expected = Rational::from_integer(r.into()) * pow(rat(5, 27), r as usize - 1);
        let mark = if b == expected { "ok" } else { "MISMATCH" };
        println!("{r:>2}: {b}, {}  [{mark}]", render_decimal(&b, 10));
    }
    Ok(())
}
