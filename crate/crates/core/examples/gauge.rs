//! Gauge action on an MC element of sl₂ with coefficients in polynomial forms on the interval.

use fnspace::graded::TruncProfile;
use fnspace::linalg::ratio;
use fnspace::mc::{gauge_act, mc_verify, GaugeParam, MCElem};
use fnspace::models::Model;
use fnspace::structures::Vector;

fn main() -> fnspace::Result<()> {
    let lie = Model::parse(include_str!("../models/lie.toml"))?;
    let cd = Model::parse(include_str!("../models/cdga.toml"))?;
    let sl2 = lie.linfty("sl2").expect("declared").clone();
    let omega = cd.finite("interval").expect("declared").clone();
    let dz = omega.basis().index("dz")?;
    let z = omega.basis().index("z")?;
    let trunc = TruncProfile::new(4, -4, 4)?;
    let xi = MCElem::new(sl2.clone(), omega.clone(), vec![Vector::zero(), Vector::zero(), Vector::basis(dz)])?;
    let lambda = GaugeParam::new(&sl2, &omega, &[(z, 0, ratio(1, 2))])?;
    let eta = gauge_act(&lambda, &xi, &trunc)?;
    println!("ξ = {}", xi.format());
    println!("η = {}  (MC: {})", eta.format(), mc_verify(&eta, &trunc).0);
    Ok(())
}
