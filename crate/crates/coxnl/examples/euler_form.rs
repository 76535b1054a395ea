//! Euler form coefficients: the d x d ray minors of a complete simplicial
//! fan. On a smooth fan every maximal cone has determinant +-1; weighted
//! projective spaces show the multiplicities instead. The Euler identity
//! sum_rho x_rho df/dx_rho = (weights) f specializes on projective space
//! to deg(f) * f.
//!
//!     cargo run --example euler_form

use coxnl::cox::parse_polynomial;
use coxnl::fan::{Fan, Variety};
use coxnl::gorenstein::euler_coefficients;
use coxnl::rint;

const P2: &str = include_str!("../../../fixtures/p2.fan");
const P112: &str = include_str!("../../../fixtures/p112.fan");

fn main() -> coxnl::Result<()> {
    for (name, text) in [("P^2", P2), ("P(1,1,2)", P112)] {
        let fan = Fan::from_str_format(text)?;
        let form = euler_coefficients(&fan);
        println!("{name}:");
        for (iota, det) in &form.dets {
            let rays: Vec<String> = iota.iter().map(|i| i.to_string()).collect();
            println!("  det(v_{}) = {det}", rays.join(", v_"));
        }
    }

    // Euler identity on P^2: x0 f_x0 + x1 f_x1 + x2 f_x2 = 3 f for a cubic.
    let v = Variety::new(Fan::from_str_format(P2)?)?;
    let f = parse_polynomial(&v, "x0^3 + x1^3 + x2^3 - 5*x0*x1*x2")?;
    let mut total = coxnl::cox::GradedPolynomial::zero(f.degree().clone());
    for rho in 0..v.n_rays() {
        total = total.add(&f.log_derivative(rho))?;
    }
    let three_f = f.scale(&rint(3));
    println!("sum x_rho df/dx_rho == 3f: {}", total == three_f);
    Ok(())
}
