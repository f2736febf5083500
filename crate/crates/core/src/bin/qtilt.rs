use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use qtilt::pipeline::{run, Command, RunConfig, DEFAULT_SEED};
use qtilt::quiver::DEFAULT_LENGTH_CAP;

/// Builds the algebras attached to a co-c-sortable word and checks the tilting
/// module between them.
#[derive(Parser, Debug)]
#[command(name = "qtilt", version)]
struct Cli {
    /// check-word, gamma, jacobian, auslander, tilt, verify-main or demo-sec5
    command: String,
    /// Quiver file (`vertex <id>` / `arrow <name> <src> <tgt>` lines).
    #[arg(long)]
    quiver: Option<PathBuf>,
    /// Layers such as "3 | 2 3 | 1 2 3 | 1 2 3", or a file holding them.
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Path length cap for Gröbner computations.
    #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
    cap: usize,
    /// Seed used to sample a word when --word is omitted.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let command: Command = match cli.command.parse() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("qtilt: {e}");
            return ExitCode::from(2);
        }
    };
    let cfg = RunConfig { command, quiver: cli.quiver, word: cli.word, json: cli.json, dot: cli.dot, cap: cli.cap, seed: cli.seed };
    ExitCode::from(run(&cfg) as u8)
}
