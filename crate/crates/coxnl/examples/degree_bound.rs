//! Toric intersection numbers and the nef degree bound. On P^1 x P^2 with
//! eta = O(1,1) and beta = O(2,3), the largest q with beta - q eta nef is
//! q = 2, leaving beta' = O(0,1). For a subvariety W cut by nef divisors
//! the eta-degree splits exactly as
//! <eta beta; W> = q <eta eta; W> + <eta beta'; W>, so the left side is
//! at least q whenever W has positive eta-degree.
//!
//!     cargo run --example degree_bound

use coxnl::chow::{intersection_number, verify_degree_bound};
use coxnl::fan::{parse_class_literal, Fan, Variety};

const P1XP2: &str = include_str!("../../../fixtures/p1xp2.fan");

fn main() -> coxnl::Result<()> {
    let v = Variety::new(Fan::from_str_format(P1XP2)?)?;
    let eta = parse_class_literal(&v, "1,1")?;
    let beta = parse_class_literal(&v, "2,3")?;

    let dec = v.decompose_beta(&beta, &eta)?;
    println!(
        "beta = q eta + beta' with q = {} and beta' = {}",
        dec.q,
        dec.beta_prime_class.as_ref().expect("integral decomposition")
    );

    // Triple intersection numbers on a threefold, all exact rationals.
    for (label, classes) in [
        ("eta^3", vec![eta.clone(), eta.clone(), eta.clone()]),
        ("eta^2 beta", vec![eta.clone(), eta.clone(), beta.clone()]),
        ("eta beta^2", vec![eta.clone(), beta.clone(), beta.clone()]),
    ] {
        println!("{label} = {}", intersection_number(&v, &classes)?);
    }

    // The bound, checked on a few nef curve classes w.
    for w_text in ["1,0", "0,1", "1,1", "2,3", "5,1"] {
        let w = parse_class_literal(&v, w_text)?;
        let report = verify_degree_bound(&v, &beta, &eta, &[w])?;
        println!("w = ({w_text}): {report}");
    }
    Ok(())
}
