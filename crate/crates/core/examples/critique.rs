//! Evaluate a competing closed form for the leading constant and compare
//! with the exact value 10/27.

use tutte_cas::domain::critique_check;

fn main() {
    let c = critique_check();
    println!("competing expression: {:.10}", c.jr_value);
    println!("simplified 20/(9 sqrt(pi)): {:.10}", c.simplified_value);
    println!("exact constant 10/27: {:.10}", c.c_value);
    println!("exceeds 1: {}", c.exceeds_one);
    println!("{}", c.verdict);
}
