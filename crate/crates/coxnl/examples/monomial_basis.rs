//! Graded pieces of the Cox ring: monomial bases, effectiveness, and
//! exact polynomial arithmetic inside one piece.
//!
//!     cargo run --example monomial_basis

use coxnl::cox::{is_effective, monomial_basis, parse_polynomial};
use coxnl::fan::{parse_class_literal, Fan, Variety};

const P3: &str = include_str!("../../../fixtures/p3.fan");
const P1XP2: &str = include_str!("../../../fixtures/p1xp2.fan");

fn main() -> coxnl::Result<()> {
    let p3 = Variety::new(Fan::from_str_format(P3)?)?;

    // dim S^d on P^3 is binomial(d+3, 3).
    for d in 0..=4 {
        let class = parse_class_literal(&p3, &d.to_string())?;
        println!("P^3, degree {d}: {} monomials", monomial_basis(&p3, &class).len());
    }

    // On a product the count factors: (a+1) * binomial(b+2, 2).
    let p1xp2 = Variety::new(Fan::from_str_format(P1XP2)?)?;
    let b23 = parse_class_literal(&p1xp2, "2,3")?;
    println!(
        "P^1 x P^2, bidegree (2,3): {} monomials",
        monomial_basis(&p1xp2, &b23).len()
    );

    // A class with a negative coordinate has no sections at all.
    let neg = parse_class_literal(&p1xp2, "-1,5")?;
    println!(
        "bidegree (-1,5): effective={}, basis size {}",
        is_effective(&p1xp2, &neg),
        monomial_basis(&p1xp2, &neg).len()
    );

    // Multiplication lands in the sum of the degrees, exactly.
    let f = parse_polynomial(&p3, "x0^2 - 3*x1*x2")?;
    let g = parse_polynomial(&p3, "x2 + x3")?;
    let fg = f.mul(&g, &p3);
    println!("({f}) * ({g}) = {fg}");
    println!("degrees: {} * {} -> {}", f.degree(), g.degree(), fg.degree());
    Ok(())
}
