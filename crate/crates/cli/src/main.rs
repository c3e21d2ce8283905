use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use germforge::ideal::Limits;
use germforge_cli::{apply_limit_overrides, error_exit_code, exit_code, run, Command, Options};

#[derive(Parser)]
#[command(name = "germforge", version, about = "Tameness and fibre topology of composed polynomial map germs")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args)]
struct Flags {
    /// Exit with status 1 when any checked condition fails
    #[arg(long, global = true)]
    strict: bool,
    /// Seed for generic-value draws
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on S-pairs processed per run (overrides GERMFORGE_LIMITS)
    #[arg(long, global = true)]
    max_pairs: Option<u64>,
    /// Cap on intermediate polynomial degree (overrides GERMFORGE_LIMITS)
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Also write the JSON report to PATH (`-` for stdout)
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Treat F as locally open, enabling homotopy-level fibre conclusions
    #[arg(long, global = true)]
    assert_locally_open: bool,
}

#[derive(Subcommand)]
enum Sub {
    /// Stratifications, Milnor sets, discriminants and tameness of every map
    Analyze { file: PathBuf },
    /// Tameness of one map
    TameCheck { file: PathBuf, map: String },
    /// Whether F is tamely composable with G, with the equivalent forms and the sufficient condition
    ComposeCheck { file: PathBuf, f: String, g: String },
    /// Fibre decomposition, cell count and Euler characteristics of G∘F
    FiberReport { file: PathBuf, f: String, g: String },
    /// Groebner or local standard basis of an ideal, e.g. "x^2 - y, x*y"
    Gb {
        ideal: String,
        /// Variables in order (inferred from the ideal when omitted)
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
        /// degrevlex, lex or local
        #[arg(long, default_value = "degrevlex")]
        order: String,
    },
}

fn options(flags: &Flags) -> anyhow::Result<Options> {
    let mut limits = Limits::default();
    if let Ok(spec) = std::env::var("GERMFORGE_LIMITS") {
        limits = apply_limit_overrides(limits, &spec).context("in GERMFORGE_LIMITS")?;
    }
    if let Some(p) = flags.max_pairs {
        limits.max_pairs = p;
    }
    if let Some(d) = flags.max_degree {
        limits.max_degree = d;
    }
    Ok(Options { strict: flags.strict, seed: flags.seed, limits, assert_locally_open: flags.assert_locally_open })
}

fn execute(cli: Cli) -> anyhow::Result<i32> {
    let opts = options(&cli.flags)?;
    let cmd = match cli.command {
        Sub::Analyze { file } => Command::Analyze { file },
        Sub::TameCheck { file, map } => Command::TameCheck { file, map },
        Sub::ComposeCheck { file, f, g } => Command::ComposeCheck { file, inner: f, outer: g },
        Sub::FiberReport { file, f, g } => Command::FiberReport { file, inner: f, outer: g },
        Sub::Gb { ideal, vars, order } => Command::Gb { ideal, vars, order },
    };
    let report = run(&cmd, &opts)?;
    match &cli.flags.json {
        Some(p) if p.as_os_str() == "-" => println!("{}", report.to_json()),
        Some(p) => {
            std::fs::write(p, report.to_json() + "\n").with_context(|| format!("writing {}", p.display()))?;
            print!("{}", report.render_text());
        }
        None => print!("{}", report.render_text()),
    }
    Ok(exit_code(&report, &opts))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
