//! The expression grammar: parse polynomials and rational functions, print
//! them canonically, and parse the printed form back.

use tutte_cas::arith::{parse_expr, parse_ratfun, ParsedExpr};
use tutte_cas::domain::QUARTIC;

fn main() -> tutte_cas::Result<()> {
    let p = parse_expr(QUARTIC, &["x", "y"])?.into_bipoly().expect("a polynomial");
    println!("quartic: {p}");
    let again = parse_expr(&p.to_string(), &["x", "y"])?
        .into_bipoly()
        .expect("a polynomial");
    println!("round trip equal: {}", again == p);

    let f = parse_ratfun("10*(n-1)*(n^2+14*n+12)/(3*(3*n+5)*(3*n+4)*(n+2))", "n")?;
    println!("A_2(n) = {}", f.to_string_in_var("n"));
    println!("limit at infinity: {:?}", f.limit_at_infinity().map(|q| q.to_string()));

    match parse_expr("(2/4)*3 - 1", &[])? {
        ParsedExpr::Rational(q) => println!("constant: {q}"),
        other => println!("unexpected: {other:?}"),
    }
    if let Err(e) = parse_expr("x^ + 1", &["x"]) {
        println!("syntax error reported: {e}");
    }
    Ok(())
}
