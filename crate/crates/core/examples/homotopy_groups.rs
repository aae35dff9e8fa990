//! Rational homotopy groups of free and based loop spaces of S³ and of maps S² → S³.

use fnspace::graded::TruncProfile;
use fnspace::mc::MCElem;
use fnspace::models::{function_space_model, pi_groups, sphere_lie};
use fnspace::structures::FiniteCdga;

fn main() -> fnspace::Result<()> {
    let trunc = TruncProfile::new(3, -6, 6)?;
    let y = sphere_lie(3)?;
    for (n, based) in [(1, false), (1, true), (2, false), (2, true)] {
        let x = FiniteCdga::sphere(n, false);
        let xi = MCElem::zero(y.clone(), x.clone());
        let model = function_space_model(&x, &y, &xi, based, &trunc)?;
        let mut r = pi_groups(&model, 1, 6)?;
        r.title = format!("{} maps S^{n} -> S^3", if based { "based" } else { "free" });
        println!("{r}");
    }
    Ok(())
}
