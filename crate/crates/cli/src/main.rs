mod commands;
mod manifest;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::manifest::{envelope, sha256_hex, Inputs, RunManifest};

#[derive(Parser, Debug)]
#[command(name = "chessboard", version, about = "Multiple chessboard complexes: generation, homology, shellings, bounds")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Global {
    /// Schema-versioned JSON output with an embedded run manifest.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Maximum face count of a complex before homology is attempted.
    #[arg(long, global = true)]
    budget: Option<u128>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record wall time in the manifest (output is then not byte-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a complex and write it as JSON.
    Gen(commands::GenArgs),
    /// Reduced (or plain) integral homology of a complex file.
    Homology(commands::HomologyArgs),
    /// Homological connectivity and the first nonvanishing group.
    Connectivity(commands::FileArg),
    /// Shelling order of a board with unit column caps.
    Shell(commands::ShellArgs),
    /// Check a facet order; exits 1 on a violation.
    VerifyShelling(commands::VerifyArgs),
    /// Connectivity bounds against computed connectivity.
    Bounds {
        #[command(subcommand)]
        command: commands::BoundsCommand,
    },
    /// Colored Tverberg partition search.
    Tverberg(commands::TverbergArgs),
    /// Run the regression fixtures and print a pass/fail table.
    Report(report::ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relabeling {
    Identity,
    Reverse,
}

/// What a command hands back for printing.
pub struct Output {
    pub result: Value,
    /// Human-readable form; `None` means the result JSON is itself the
    /// artifact (complex and order files).
    pub text: Option<String>,
    pub ok: bool,
    pub seed: Option<u64>,
}

pub struct Ctx {
    pub global: Global,
    pub inputs: Inputs,
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if let Some(t) = cli.global.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    let start = Instant::now();
    let mut ctx = Ctx { global: cli.global.clone(), inputs: Inputs::default() };
    let (name, params, out) = match &cli.command {
        Command::Gen(a) => ("gen", serde_json::to_value(a)?, commands::gen(&mut ctx, a)?),
        Command::Homology(a) => ("homology", serde_json::to_value(a)?, commands::homology(&mut ctx, a)?),
        Command::Connectivity(a) => ("connectivity", serde_json::to_value(a)?, commands::connectivity(&mut ctx, a)?),
        Command::Shell(a) => ("shell", serde_json::to_value(a)?, commands::shell(&mut ctx, a)?),
        Command::VerifyShelling(a) => ("verify-shelling", serde_json::to_value(a)?, commands::verify(&mut ctx, a)?),
        Command::Bounds { command } => ("bounds", serde_json::to_value(command)?, commands::bounds(&mut ctx, command)?),
        Command::Tverberg(a) => ("tverberg", serde_json::to_value(a)?, commands::tverberg(&mut ctx, a)?),
        Command::Report(a) => ("report", serde_json::to_value(a)?, report::run(&mut ctx, a)?),
    };
    let mut global = serde_json::to_value(&ctx.global)?;
    global.as_object_mut().expect("struct").remove("out");
    let manifest = RunManifest {
        command: name.to_string(),
        params: serde_json::json!({ "global": global, "command": params }),
        seed: out.seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
        wall_time_ms: ctx.global.timing.then(|| start.elapsed().as_millis()),
        inputs: ctx.inputs.digests,
        output_sha256: sha256_hex(serde_json::to_string(&out.result)?.as_bytes()),
    };
    let rendered = if ctx.global.json {
        envelope(&manifest, &out.result)
    } else {
        match out.text {
            Some(text) => format!("{text}# manifest {}\n", serde_json::to_string(&manifest)?),
            None => {
                let mut artifact = out.result.clone();
                if let Some(obj) = artifact.as_object_mut() {
                    obj.insert("manifest".into(), serde_json::to_value(&manifest)?);
                }
                serde_json::to_string(&artifact)? + "\n"
            }
        }
    };
    match &ctx.global.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => std::io::stdout().lock().write_all(rendered.as_bytes())?,
    }
    Ok(if out.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
