use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use homhopf_cli::{exit_code, parse_input, run, Command, ReportDocument, RunOptions};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Build and verify Hom-Hopf algebras over the rationals.
#[derive(Parser, Debug)]
#[command(name = "homhopf", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// JSON input document.
    #[arg(long)]
    input: PathBuf,
    /// Truncation degree N for enveloping algebras.
    #[arg(long)]
    degree: Option<usize>,
    /// Leaf-weight bound W for the weighted cross-check in build-uea.
    #[arg(long)]
    weight_bound: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Proceed even when the twist-order hypotheses fail.
    #[arg(long)]
    no_order_constraint: bool,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

fn emit(r: &ReportDocument, format: Format) {
    match format {
        Format::Json => println!("{}", r.to_json()),
        Format::Text => print!("{}", r.to_text()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = RunOptions {
        command: cli.command,
        degree: cli.degree,
        weight_bound: cli.weight_bound,
        no_order_constraint: cli.no_order_constraint,
        timing: cli.timing,
    };
    let outcome = parse_input(&cli.input).and_then(|doc| run(&doc, &opts));
    match outcome {
        Ok(r) => {
            emit(&r, cli.format);
            ExitCode::from(exit_code(&r) as u8)
        }
        Err(e) => {
            let mut r = ReportDocument::new(cli.command.name());
            for i in &e.issues {
                r.error(format!("{} ({}): {}", i.pointer, serde_json::to_string(&i.kind).unwrap_or_default(), i.message));
            }
            r.finish();
            emit(&r, cli.format);
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}
