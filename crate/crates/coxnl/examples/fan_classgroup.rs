//! Fans in, class groups out: validate a fan, read off the grading of its
//! Cox ring, and test classes for nef and ample.
//!
//!     cargo run --example fan_classgroup

use coxnl::fan::{parse_class_literal, Fan, Variety};

const P3: &str = include_str!("../../../fixtures/p3.fan");
const P112: &str = include_str!("../../../fixtures/p112.fan");
const P1XP2: &str = include_str!("../../../fixtures/p1xp2.fan");

fn main() -> coxnl::Result<()> {
    for (name, text) in [("P^3", P3), ("P(1,1,2)", P112), ("P^1 x P^2", P1XP2)] {
        let fan = Fan::from_str_format(text)?;
        let report = fan.validate();
        println!("{name}: valid={}", report.is_valid());

        let v = Variety::new(fan)?;
        let cg = v.class_group();
        println!("  dim {} with {} rays, Cl(X) free rank {}", v.dim(), v.n_rays(), cg.free_rank);
        for rho in 0..v.n_rays() {
            println!("  [D_{rho}] = {}", v.ray_class(rho));
        }
        println!("  -K_X = {}", v.anticanonical());

        // The anticanonical class of these examples is ample, hence nef.
        let k = v.anticanonical();
        println!("  -K_X nef: {}, ample: {}", v.is_nef(&k), v.is_ample(&k));
    }

    // On a product the nef cone is a genuine quadrant: (1,0) is nef but
    // not ample, and (1,-1) is not nef at all.
    let v = Variety::new(Fan::from_str_format(P1XP2)?)?;
    let h1 = parse_class_literal(&v, "1,0")?;
    let mixed = parse_class_literal(&v, "1,-1")?;
    println!("on P^1 x P^2:");
    println!("  (1,0)  nef: {}, ample: {}", v.is_nef(&h1), v.is_ample(&h1));
    println!("  (1,-1) nef: {}", v.is_nef(&mixed));
    Ok(())
}
