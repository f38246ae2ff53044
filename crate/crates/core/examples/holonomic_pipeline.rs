//! Algebraic equation -> linear ODE -> coefficient recurrence, then unroll
//! the recurrence and compare with the counts.

use tutte_cas::arith::{int, Rational};
use tutte_cas::domain::{quartic, tutte_numbers};
use tutte_cas::holonomic::{algeq_to_ode, ode_to_rec, rec_check, rec_unroll, AlgebraicEquation};

fn main() -> tutte_cas::Result<()> {
    let eq = AlgebraicEquation::new(quartic().p)?;
    let ode = algeq_to_ode(&eq)?;
    println!("ODE of order {}:", ode.order());
    for (j, c) in ode.coeffs().iter().enumerate() {
        println!("  y^({j}): {}", c.to_string_in("x"));
    }

    let rec = ode_to_rec(&ode);
    println!("recurrence: {rec}");

    let unrolled = rec_unroll(&rec, 1, &[int(1)], 15)?;
    let counts: Vec<Rational> = tutte_numbers(15).into_iter().map(Rational::from_integer).collect();
    let shown: Vec<String> = unrolled.iter().map(ToString::to_string).collect();
    println!("unrolled from t(1) = 1: {}", shown.join(", "));
    println!("agrees with t(1..=15): {}", unrolled[..] == counts[1..]);

    let report = rec_check(&rec, &counts, 1)?;
    println!(
        "residual check from n = {}: all zero = {}",
        report.checked_from,
        report.all_zero()
    );
    Ok(())
}
