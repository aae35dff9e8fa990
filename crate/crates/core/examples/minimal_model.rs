//! Minimal L∞ model of a dgla with nontrivial differential.

use fnspace::models::commands::{minmodel, Options};
use fnspace::models::Model;

fn main() -> fnspace::Result<()> {
    let model = Model::parse(include_str!("../models/lie.toml"))?;
    let opts = Options::for_model(&model);
    for name in ["mixed", "contractible"] {
        println!("{}", minmodel(&model, name, &opts)?);
    }
    Ok(())
}
