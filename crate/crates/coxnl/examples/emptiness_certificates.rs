//! Certifying that a hypersurface is quasi-smooth: per maximal cone, look
//! for a power m with x_rho^m in the ideal (f) + J0(f) for every ray
//! outside the cone. Finding one for each cone proves the singular locus
//! misses the torus orbits, exactly and without Groebner bases.
//!
//!     cargo run --example emptiness_certificates

use coxnl::cox::poly_from_str_format;
use coxnl::fan::{parse_class_literal, Fan, Variety};
use coxnl::gen::{dense_polynomial, rng_from_seed};
use coxnl::ideal::nondegenerate_check;

const P3: &str = include_str!("../../../fixtures/p3.fan");
const P1XP1: &str = include_str!("../../../fixtures/p1xp1.fan");
const FERMAT: &str = include_str!("../../../fixtures/fermat_quartic.poly");
const DEGENERATE: &str = include_str!("../../../fixtures/degenerate_quartic.poly");

fn main() -> coxnl::Result<()> {
    let p3 = Variety::new(Fan::from_str_format(P3)?)?;

    // The Fermat quartic certifies with power 4 in every cone.
    let fermat = poly_from_str_format(&p3, FERMAT)?;
    println!("Fermat quartic on P^3:");
    println!("{}", nondegenerate_check(&p3, &fermat, Some(8)));

    // x0^2 x1^2 is a genuinely singular quartic: no power certifies, and
    // the search reports that honestly instead of timing out.
    let degenerate = poly_from_str_format(&p3, DEGENERATE)?;
    println!("x0^2 x1^2 on P^3:");
    println!("{}", nondegenerate_check(&p3, &degenerate, Some(12)));

    // A random (2,2) curve on P^1 x P^1 certifies as well.
    let p1xp1 = Variety::new(Fan::from_str_format(P1XP1)?)?;
    let deg = parse_class_literal(&p1xp1, "2,2")?;
    let f = dense_polynomial(&p1xp1, &deg, &mut rng_from_seed(31));
    println!("seeded (2,2) curve on P^1 x P^1:");
    println!("{}", nondegenerate_check(&p1xp1, &f, Some(12)));
    Ok(())
}
