//! The toric Jacobian ring of the Fermat quartic surface is an Artinian
//! Gorenstein ring with socle in degree 12: the graded pieces climb to a
//! one-dimensional top, every apolar space matches the ideal piece, and
//! the multiplication pairing into the socle is nondegenerate.
//!
//!     cargo run --example jacobian_and_gorenstein

use coxnl::cox::poly_from_str_format;
use coxnl::fan::{Fan, Variety};
use coxnl::gorenstein::{pairing_matrix, socle_functional, verify_cox_gorenstein};
use coxnl::ideal::jacobian_ideal;

const P3: &str = include_str!("../../../fixtures/p3.fan");
const FERMAT: &str = include_str!("../../../fixtures/fermat_quartic.poly");

fn main() -> coxnl::Result<()> {
    let v = Variety::new(Fan::from_str_format(P3)?)?;
    let f = poly_from_str_format(&v, FERMAT)?;
    let j0 = jacobian_ideal(&f, &v);
    println!("f = {f}");
    println!("J0(f) has {} generators x_rho df/dx_rho", j0.generators().len());

    // Socle degree (dim + 1) deg f - beta_0: on P^3 that is 4*4 - 4 = 12.
    let socle = v.sub_classes(
        &v.scale_class(f.degree(), (v.dim() + 1) as i64),
        &v.anticanonical(),
    );
    println!("expected socle degree: {socle}");

    let report = verify_cox_gorenstein(&v, &j0, &socle, None);
    println!("{report}");

    // The pairing S^a x S^(12-a) -> S^12 = k, written against monomial
    // bases of the quotient, has full rank in every split degree.
    let lambda = socle_functional(&v, &j0, &socle)?;
    for a in [2, 5, 6] {
        let alpha = v.scale_class(&v.ray_class(0), a);
        let pairing = pairing_matrix(&v, &j0, &lambda, &alpha);
        println!(
            "pairing at ({}) x ({}): {} x {} nondegenerate={}",
            a,
            12 - a,
            pairing.row_monomials.len(),
            pairing.col_monomials.len(),
            pairing.nondegenerate
        );
    }
    Ok(())
}
