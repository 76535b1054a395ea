//! Two independent routes to the same tangent space. For a quartic f
//! containing a line, a class representative P of degree N defines a
//! tangent space two ways: membership of P H in the partial-derivative
//! ideal, and the transporter of H S^{N - beta} into the kernel of the
//! socle functional of the toric Jacobian ring. The routes share no
//! linear algebra, so their agreement, with both equal to the flag
//! ideal's degree beta piece, is a genuine cross-check.
//!
//!     cargo run --example hodge_class_crosscheck

use coxnl::cox::{monomial_basis, poly_from_str_format, GradedPolynomial};
use coxnl::fan::{Fan, Variety};
use coxnl::gen::{nonzero_coeff, rng_from_seed};
use coxnl::nl::{
    hodge_class_candidates, t0_transporter, tangent_space_from_class, FlagDatum,
};
use coxnl::{Int, Rat};
use num_traits::Zero;

const P3: &str = include_str!("../../../fixtures/p3.fan");
const A1: &str = include_str!("../../../fixtures/line_a1.poly");
const A2: &str = include_str!("../../../fixtures/line_a2.poly");
const K1: &str = include_str!("../../../fixtures/line_k1_d4.poly");
const K2: &str = include_str!("../../../fixtures/line_k2_d4.poly");

fn main() -> coxnl::Result<()> {
    let v = Variety::new(Fan::from_str_format(P3)?)?;
    let datum = FlagDatum::new(
        &v,
        vec![poly_from_str_format(&v, A1)?, poly_from_str_format(&v, A2)?],
        vec![poly_from_str_format(&v, K1)?, poly_from_str_format(&v, K2)?],
    )?;
    let (n_class, _) = datum.socle_data(&v)?;

    // Candidate classes: everything of degree N annihilating the image of
    // the flag ideal under the socle pairing. For this line the space is
    // 17-dimensional and exceeds the 16-dimensional Jacobian piece by
    // exactly one dimension, the class of the line.
    let cands = hodge_class_candidates(&v, &datum)?;
    println!(
        "candidates: dim {} over Jacobian piece of dim {} (strict: {})",
        cands.space.dim(),
        cands.jacobian_dim,
        cands.strict
    );

    // A generic candidate representative.
    let basis = monomial_basis(&v, &n_class);
    let mut rng = rng_from_seed(5);
    let mut coeffs = vec![Rat::zero(); basis.len()];
    for row in &cands.space.basis {
        let c = Rat::from(Int::from(nonzero_coeff(&mut rng)));
        for (i, x) in row.iter().enumerate() {
            coeffs[i] += &c * x;
        }
    }
    let terms: Vec<_> = basis
        .into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let p = GradedPolynomial::from_terms(&v, n_class, terms)?;

    let flag_piece = datum.flag_ideal().graded_piece(&v, &datum.beta);
    let route_a = tangent_space_from_class(&v, &datum.f, &p, &datum.beta)?;
    let route_b = t0_transporter(&v, &datum.f, &p, &datum.beta)?;

    println!("P represents a nonzero class: {}", !route_a.p_in_jacobian);
    println!("route A (ideal membership):  dim {}", route_a.space.dim());
    println!("route B (socle transporter): dim {}", route_b.dim());
    println!("routes agree: {}", route_a.space == route_b);
    println!("both equal the flag ideal piece: {}", route_a.space == flag_piece);
    Ok(())
}
