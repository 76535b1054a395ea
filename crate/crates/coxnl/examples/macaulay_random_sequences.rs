//! Random regular sequences are Cox-Gorenstein: draw dense forms of
//! degrees (2,2,2) on P^2 with seeded coefficients, verify the quotient
//! has a one-dimensional socle in degree sum(d_i) - beta_0 and that every
//! graded piece of the ideal equals its apolar description.
//!
//!     cargo run --example macaulay_random_sequences

use coxnl::fan::{Fan, Variety};
use coxnl::gen::{dense_sequence, rng_from_seed};
use coxnl::gorenstein::{effective_splittings, verify_cox_gorenstein};
use coxnl::ideal::GradedIdeal;

const P2: &str = include_str!("../../../fixtures/p2.fan");

fn main() -> coxnl::Result<()> {
    let v = Variety::new(Fan::from_str_format(P2)?)?;
    let h = v.ray_class(0);
    let degrees = vec![v.scale_class(&h, 2), v.scale_class(&h, 2), v.scale_class(&h, 2)];

    // sum(2,2,2) - beta_0 = 6 - 3 = 3 on P^2.
    let socle = v.scale_class(&h, 3);
    println!(
        "verifying degree {} socle; split degrees: {}",
        socle,
        effective_splittings(&v, &socle)
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );

    for seed in 0..4 {
        let gens = dense_sequence(&v, &degrees, &mut rng_from_seed(seed));
        let ideal = GradedIdeal::new(gens);
        let report = verify_cox_gorenstein(&v, &ideal, &socle, None);
        let dims: Vec<String> = report
            .rows
            .iter()
            .map(|r| format!("{}", r.apolar_dim))
            .collect();
        println!(
            "seed {seed}: pass={} socle_dim={} ideal dims by degree: {}",
            report.pass,
            report.socle_dim,
            dims.join(" ")
        );
    }
    Ok(())
}
