//! Two independent computations of a based function space model, compared degree by degree.

use fnspace::graded::TruncProfile;
use fnspace::models::{agreement, cross_check, Model};

fn main() -> fnspace::Result<()> {
    let model = Model::parse(include_str!("../models/spheres.toml"))?;
    let trunc = TruncProfile::new(3, -4, 1)?;
    let x = model.finite("S2xS2").expect("declared");
    let xi = model.mc("x.v").expect("declared");
    let report = cross_check(x, &xi.alg, xi, &trunc)?;
    println!("{report}");
    let (checked, equal) = agreement(&report);
    println!("{checked} degrees compared, all equal: {equal}");
    Ok(())
}
