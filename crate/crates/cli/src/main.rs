use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use toric_cartier_cli::{parse_instance, run, CliError, Command, Format, Options};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CommandArg {
    Enumerate,
    Verify,
    NonLc,
    TestIdeal,
    StableImage,
    CrossValidate,
    Plot,
}

impl From<CommandArg> for Command {
    fn from(c: CommandArg) -> Self {
        match c {
            CommandArg::Enumerate => Command::Enumerate,
            CommandArg::Verify => Command::Verify,
            CommandArg::NonLc => Command::NonLc,
            CommandArg::TestIdeal => Command::TestIdeal,
            CommandArg::StableImage => Command::StableImage,
            CommandArg::CrossValidate => Command::CrossValidate,
            CommandArg::Plot => Command::Plot,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Doc,
    Svg,
}

/// Fixed ideals of toric Cartier algebras.
///
/// Exit status: 0 on success, 1 when an ideal is not fixed or a cross-check fails,
/// 2 on invalid input.
#[derive(Debug, Parser)]
#[command(name = "toric-cartier", version)]
struct Args {
    command: CommandArg,

    /// Instance file in the key/value format.
    #[arg(long)]
    instance: PathBuf,

    /// Ideal for `verify`, e.g. "(1,1),(1,2)"; "0" is the zero ideal.
    #[arg(long)]
    ideal: Option<String>,

    /// Truncation of the operator sum; defaults to three periods.
    #[arg(long = "N", value_name = "N")]
    n: Option<u32>,

    /// Box margin for the oracle and the plot viewport.
    #[arg(long)]
    margin: Option<i64>,

    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum)]
    format: Option<FormatArg>,

    /// Include elapsed time in the document (makes output time-dependent).
    #[arg(long)]
    timing: bool,
}

fn main_inner(args: Args) -> Result<bool, CliError> {
    let text = std::fs::read_to_string(&args.instance).map_err(|source| CliError::Io {
        path: args.instance.display().to_string(),
        source,
    })?;
    let cfg = parse_instance(&text)?;
    let opts = Options {
        ideal: args.ideal,
        n: args.n,
        margin: args.margin,
        format: args.format.map(|f| match f {
            FormatArg::Doc => Format::Doc,
            FormatArg::Svg => Format::Svg,
        }),
        timing: args.timing,
    };
    let out = run(args.command.into(), &cfg, &opts)?;
    match &args.out {
        Some(path) => std::fs::write(path, &out.text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{}", out.text),
    }
    Ok(out.success)
}

fn main() -> ExitCode {
    match main_inner(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
