//! Chevalley-Eilenberg cohomology of the Heisenberg algebra and of sl₂.

use fnspace::models::commands::{ce, Options};
use fnspace::models::Model;

fn main() -> fnspace::Result<()> {
    let model = Model::parse(include_str!("../models/lie.toml"))?;
    let opts = Options::for_model(&model);
    for name in ["h3", "sl2"] {
        println!("{}", ce(&model, name, None, &opts)?);
    }
    println!("{}", ce(&model, "aff", Some("aff"), &opts)?);
    Ok(())
}
