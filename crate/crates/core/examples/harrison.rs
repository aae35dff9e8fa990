//! Harrison homology of a finite cdga, untwisted and twisted by a cdga map.

use fnspace::models::commands::{harrison, Options};
use fnspace::models::Model;

fn main() -> fnspace::Result<()> {
    let model = Model::parse(include_str!("../models/cdga.toml"))?;
    let opts = Options::for_model(&model);
    println!("{}", harrison(&model, "graded", None, &opts)?);
    println!("{}", harrison(&model, "graded", Some("graded-to-pair"), &opts)?);
    Ok(())
}
