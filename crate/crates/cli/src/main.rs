use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use smoothwm_cli::input::IsogenyKind;
use smoothwm_cli::{cmd_check, cmd_model, cmd_sigma_sc, CliError, Format, Options};

/// Smoothness of affine spherical varieties from their weight monoid.
#[derive(Parser, Debug)]
#[command(name = "smoothwm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit canonical JSON (the default).
    #[arg(long, global = true, conflicts_with = "explain")]
    json: bool,
    /// Emit a human-readable account of the same result.
    #[arg(long, global = true)]
    explain: bool,
    /// Exit with code 3 when no smoothness verdict can be given.
    #[arg(long, global = true)]
    require_verdict: bool,
    /// Include wall-clock timings in the output.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide smoothness for an input document (file path, or stdin when omitted or "-").
    Check { path: Option<PathBuf> },
    /// Decide whether the model monoid Λ+ is smooth.
    Model(GroupArgs),
    /// List the spherically closed spherical roots.
    SigmaSc(GroupArgs),
}

#[derive(Args, Debug)]
struct GroupArgs {
    /// Type string such as "A2xC3".
    #[arg(long = "type")]
    type_string: String,
    #[arg(long, default_value = "simply_connected")]
    isogeny: IsogenyKind,
    /// Rank of an additional central torus.
    #[arg(long, default_value_t = 0)]
    torus_rank: usize,
}

fn emit(code: i32, stdout: &str) -> ExitCode {
    print!("{stdout}");
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let err = CliError::parse(e.to_string().trim().to_string());
            let r = err.respond(&Options::default());
            return emit(r.code, &r.stdout);
        }
    };
    let opts = Options {
        format: if cli.explain { Format::Explain } else { Format::Json },
        require_verdict: cli.require_verdict,
        timings: cli.timings,
    };
    let r = match &cli.command {
        Command::Check { path } => {
            let text = match path {
                Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
                _ => {
                    let mut s = String::new();
                    std::io::stdin().read_to_string(&mut s).map(|_| s)
                }
            };
            match text {
                Ok(t) => cmd_check(&t, &opts),
                Err(e) => CliError::parse(format!("cannot read input: {e}")).respond(&opts),
            }
        }
        Command::Model(g) => cmd_model(&g.type_string, g.isogeny, g.torus_rank, &opts),
        Command::SigmaSc(g) => cmd_sigma_sc(&g.type_string, g.isogeny, g.torus_rank, &opts),
    };
    emit(r.code, &r.stdout)
}
