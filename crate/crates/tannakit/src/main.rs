use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use tannakit::commands::threads_from_env;
use tannakit::{load, run, CliError, Command, Format, PosetQuery, RunConfig};

/// Presentations of universal quantum groups of quadratic algebras and
/// bilinear forms.
#[derive(Parser, Debug)]
#[command(name = "tannakit", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Algebra or form spec (JSON).
    spec: PathBuf,
    /// Main degree or length bound of the command.
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// `poset`: is A ≤ B?
    #[arg(long, num_args = 2, value_names = ["A", "B"], conflicts_with = "interval")]
    leq: Option<Vec<String>>,
    /// `poset`: the interval [A, B].
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    interval: Option<Vec<String>>,
    /// `comod`: a word such as "r1 r2^-1 r1"; repeatable.
    #[arg(long = "word")]
    words: Vec<String>,
}

fn execute(cli: Cli) -> Result<(), CliError> {
    // Computation is sequential; the variable is checked so that bad values
    // are reported rather than ignored.
    threads_from_env(std::env::var("TANNAKIT_THREADS").ok().as_deref())?;
    let spec = load(&cli.spec)?;
    let mut cfg = RunConfig { words: cli.words, ..RunConfig::default() };
    if let Some(b) = cli.bound {
        cfg = cfg.with_bound(cli.command, b)?;
    }
    cfg.poset = match (cli.leq, cli.interval) {
        (Some(v), _) => Some(PosetQuery::Leq(v[0].clone(), v[1].clone())),
        (_, Some(v)) => Some(PosetQuery::Interval(v[0].clone(), v[1].clone())),
        _ => None,
    };
    let doc = run(cli.command, &spec, &cfg)?;
    let rendered = doc.render(cli.format);
    match cli.out {
        Some(path) => std::fs::write(&path, rendered)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tannakit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
