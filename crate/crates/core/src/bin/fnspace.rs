use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fnspace::graded::TruncProfile;
use fnspace::models::commands::{self, Options};
use fnspace::models::{Grading, Model, Report};
use fnspace::{Error, Result};

#[derive(Parser)]
#[command(name = "fnspace", version, about = "Rational models of function spaces from declarative model files")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Maximal word weight for series and truncated algebras.
    #[arg(long, global = true)]
    trunc_weight: Option<usize>,
    /// Lowest homological degree reported.
    #[arg(long, global = true, allow_hyphen_values = true)]
    deg_min: Option<i32>,
    /// Highest homological degree reported.
    #[arg(long, global = true, allow_hyphen_values = true)]
    deg_max: Option<i32>,
    /// Use the augmentation ideal (based maps) instead of the unital algebra.
    #[arg(long, global = true)]
    based: bool,
    /// Degree convention for reported tables.
    #[arg(long, global = true, value_enum, default_value_t = GradingArg::Homological)]
    grading: GradingArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the report into this directory.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GradingArg {
    Homological,
    Cohomological,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every object, map and MC element.
    Check { file: PathBuf },
    /// Homology of an object.
    Homology { file: PathBuf, object: String },
    /// Chevalley-Eilenberg cohomology, trivial or adjoint coefficients.
    Ce {
        file: PathBuf,
        object: String,
        #[arg(long)]
        coeff: Option<String>,
    },
    /// Harrison homology of a finite cdga, optionally twisted by a map.
    Harrison {
        file: PathBuf,
        object: String,
        #[arg(long)]
        map: Option<String>,
    },
    /// Minimal L∞ model.
    Minmodel { file: PathBuf, object: String },
    /// Twist by a Maurer-Cartan element.
    Twist { file: PathBuf, mc: String },
    /// Maurer-Cartan elements.
    Mc {
        #[command(subcommand)]
        action: McAction,
    },
    /// Lie model of the mapping space from X to Y.
    Mapmodel(MapArgs),
    /// Rational homotopy groups of the mapping space.
    Pi {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
    },
    /// Compare the twisted tensor and Harrison routes.
    Crosscheck(MapArgs),
}

#[derive(Subcommand)]
enum McAction {
    /// Check the Maurer-Cartan equation for the named elements, or all.
    Verify { file: PathBuf, names: Vec<String> },
}

#[derive(Args)]
struct MapArgs {
    file: PathBuf,
    /// Augmentation ideal of a cdga model of the source.
    x: String,
    /// Lie model of the target.
    y: String,
    /// Maurer-Cartan element picking the component; zero when omitted.
    #[arg(long)]
    mc: Option<String>,
}

fn load(path: &PathBuf) -> Result<Model> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    Model::parse(&src)
}

fn options(model: &Model, g: &Global, n_max: u32) -> Result<Options> {
    let t = model.trunc;
    let trunc = TruncProfile::new(
        g.trunc_weight.unwrap_or(t.weight_max),
        g.deg_min.unwrap_or(t.deg_min.0),
        g.deg_max.unwrap_or(t.deg_max.0),
    )?;
    let grading = match g.grading {
        GradingArg::Homological => Grading::Homological,
        GradingArg::Cohomological => Grading::Cohomological,
    };
    Ok(Options { trunc, based: g.based, grading, n_max })
}

fn run(cli: &Cli) -> Result<(&'static str, Report)> {
    let g = &cli.global;
    let with = |file: &PathBuf, n_max: u32| -> Result<(Model, Options)> {
        let m = load(file)?;
        let o = options(&m, g, n_max)?;
        Ok((m, o))
    };
    Ok(match &cli.command {
        Command::Check { file } => {
            let (m, o) = with(file, 6)?;
            ("check", commands::check(&m, &o)?)
        }
        Command::Homology { file, object } => {
            let (m, o) = with(file, 6)?;
            ("homology", commands::homology(&m, object, &o)?)
        }
        Command::Ce { file, object, coeff } => {
            let (m, o) = with(file, 6)?;
            ("ce", commands::ce(&m, object, coeff.as_deref(), &o)?)
        }
        Command::Harrison { file, object, map } => {
            let (m, o) = with(file, 6)?;
            ("harrison", commands::harrison(&m, object, map.as_deref(), &o)?)
        }
        Command::Minmodel { file, object } => {
            let (m, o) = with(file, 6)?;
            ("minmodel", commands::minmodel(&m, object, &o)?)
        }
        Command::Twist { file, mc } => {
            let (m, o) = with(file, 6)?;
            ("twist", commands::twist_cmd(&m, mc, &o)?)
        }
        Command::Mc { action: McAction::Verify { file, names } } => {
            let (m, o) = with(file, 6)?;
            ("mc-verify", commands::mc_verify_cmd(&m, names, &o)?)
        }
        Command::Mapmodel(a) => {
            let (m, o) = with(&a.file, 6)?;
            ("mapmodel", commands::mapmodel(&m, &a.x, &a.y, a.mc.as_deref(), &o)?)
        }
        Command::Pi { map: a, n_max } => {
            let (m, o) = with(&a.file, *n_max)?;
            ("pi", commands::pi(&m, &a.x, &a.y, a.mc.as_deref(), &o)?)
        }
        Command::Crosscheck(a) => {
            let (m, o) = with(&a.file, 6)?;
            ("crosscheck", commands::crosscheck(&m, &a.x, &a.y, a.mc.as_deref(), &o)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((name, report)) => {
            let (body, ext) = match cli.global.format {
                Format::Text => (report.to_string(), "txt"),
                Format::Json => (report.to_json(), "json"),
            };
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(body.as_bytes());
            if cli.global.format == Format::Json {
                let _ = writeln!(out);
            }
            if let Some(dir) = &cli.global.out_dir {
                let path = dir.join(format!("{name}.{ext}"));
                if let Err(e) = std::fs::create_dir_all(dir).and_then(|_| std::fs::write(&path, &body)) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
