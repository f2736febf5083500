//! Runs the full pipeline on the data files shipped with the crate and prints
//! the verdicts.

use qtilt::pipeline::{run_pipeline, Command, RunConfig};

fn main() -> qtilt::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let mut cfg = RunConfig::new(Command::VerifyMain);
    cfg.quiver = Some(dir.join("a3_reversed.quiver"));
    cfg.word = Some("1 | 1 2 | 1 2 3".into());
    let out = run_pipeline(&cfg)?;
    for (name, ok) in &out.checks {
        println!("{name}: {ok}");
    }
    println!("renumbering: {}", out.report["renumbering"]);
    Ok(())
}
