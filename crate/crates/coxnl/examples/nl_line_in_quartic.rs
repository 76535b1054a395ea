//! A quartic surface containing a line imposes exactly one condition: the
//! family of quartics through the line (s:t:s:t) in P^3 has codimension 1
//! inside all quartics, and the first-order tangent space at a generic
//! member is the degree 4 piece of the ideal (A1, A2, K1, K2).
//!
//!     cargo run --example nl_line_in_quartic

use coxnl::cox::poly_from_str_format;
use coxnl::fan::{parse_class_literal, Fan, Variety};
use coxnl::ideal::jacobian_ideal;
use coxnl::nl::{nl_tangent_codim, FlagDatum};

const P3: &str = include_str!("../../../fixtures/p3.fan");
const A1: &str = include_str!("../../../fixtures/line_a1.poly");
const A2: &str = include_str!("../../../fixtures/line_a2.poly");
const K1: &str = include_str!("../../../fixtures/line_k1_d4.poly");
const K2: &str = include_str!("../../../fixtures/line_k2_d4.poly");

fn main() -> coxnl::Result<()> {
    let v = Variety::new(Fan::from_str_format(P3)?)?;
    let equations = vec![poly_from_str_format(&v, A1)?, poly_from_str_format(&v, A2)?];
    let cofactors = vec![poly_from_str_format(&v, K1)?, poly_from_str_format(&v, K2)?];

    // f = A1 K1 + A2 K2 vanishes on the line A1 = A2 = 0 by construction.
    let datum = FlagDatum::new(&v, equations, cofactors)?;
    println!("line: {} = {} = 0", datum.equations[0], datum.equations[1]);
    println!("f = {}", datum.f);

    // Power 13 certifies quasi-smoothness: one past the socle degree of
    // the toric Jacobian ring, where the quotient vanishes entirely.
    let report = nl_tangent_codim(&v, &datum, None, Some(13))?;
    println!("{report}");

    // The codimension comes from an exact rank computation: dim S^4 = 35
    // against the degree 4 piece of the flag ideal.
    let beta = parse_class_literal(&v, "4")?;
    let flag_piece = datum.flag_ideal().graded_piece(&v, &beta);
    let j0_piece = jacobian_ideal(&datum.f, &v).graded_piece(&v, &beta);
    println!(
        "dim I^4 = {} in S^4 of dim {}; J0 piece of dim {} sits inside",
        flag_piece.dim(),
        flag_piece.ambient_dim,
        j0_piece.dim()
    );
    println!("codimension of the family: {}", report.codim);
    Ok(())
}
