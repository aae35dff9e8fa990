//! Twisting the Lie model of S² by an MC element with coefficients in H*(S²×S²).

use fnspace::graded::TruncProfile;
use fnspace::mc::{mc_verify, twist, Scalars};
use fnspace::models::Model;

fn main() -> fnspace::Result<()> {
    let model = Model::parse(include_str!("../models/spheres.toml"))?;
    let trunc = TruncProfile::new(4, -6, 4)?;
    let xi = model.mc("x.v").expect("declared in the file");
    println!("ξ = {}  (MC: {})", xi.format(), mc_verify(xi, &trunc).0);
    let twisted = twist(xi, &trunc)?;
    for k in 0..twisted.q.len() {
        println!("Q(s{}) = {}", xi.alg.space().name(k), twisted.format_q(k));
    }
    let restricted = twisted.restrict(Scalars::Ideal)?;
    print!("{}", restricted.homology(trunc.window())?);
    Ok(())
}
