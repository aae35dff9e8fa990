//! Parsing, validating and re-serializing a model file.

use fnspace::models::commands::{check, Options};
use fnspace::models::{Model, ModelSpec};

const SRC: &str = r#"
[[object]]
name = "heisenberg"
kind = "dgla"
generators = ["x:0", "y:0", "z:0"]
bracket = { "[x,y]" = "z" }

[[object]]
name = "circle"
kind = "sphere"
n = 1
"#;

fn main() -> fnspace::Result<()> {
    let spec = ModelSpec::from_toml(SRC)?;
    print!("{}", spec.to_toml());
    let model = Model::build(spec)?;
    println!("{}", check(&model, &Options::for_model(&model))?);
    match Model::parse(&SRC.replace("\"[x,y]\" = \"z\"", "\"[x,y]\" = \"z\", \"[x,z]\" = \"x\"")) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
