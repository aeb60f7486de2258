//! `gamma-k0`: command-line front end over problem files.
//!
//! Exit status is 0 when the command succeeds or its answer is true, 1 when the answer is
//! false or refuted, and 2 on malformed input or any construction error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "gamma-k0", version, about = "Simplicial Γ-groups, decomposition witnesses and graded matricial realizations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write a JSON certificate for the result to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub cert: Option<PathBuf>,

    /// Levels to explore for colimit queries.
    #[arg(long, global = true, value_name = "N")]
    pub horizon: Option<usize>,

    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Report on Γ, Δ, stabilizers, and the cone and order-unit status of given elements.
    CheckSimplicial { file: PathBuf },
    /// Decomposition witness for a zero relation among positive elements.
    SdpWitness { file: PathBuf },
    /// Unperforation witness for x with a·x ≥ 0, plus the bounded one-term search.
    UnperfWitness { file: PathBuf },
    /// Factor a positive map through a simplicial group with the same kernel.
    Shen { file: PathBuf },
    /// Graded matricial ring realizing (G, u).
    Realize {
        file: PathBuf,
        /// Order-unit as JSON, e.g. "[2,1]" for rank one or "[[2,1],[0,1]]".
        #[arg(long)]
        unit: Option<String>,
    },
    /// Ring tower realizing a tower with units.
    RealizeTower { file: PathBuf },
    /// Grothendieck group data of a graded matricial ring.
    K0 { file: PathBuf },
    /// Whether two graded matricial rings are graded isomorphic.
    GradedIso { left: PathBuf, right: PathBuf },
    /// Checks on the extension by ℤ[Γ/Δ], or on an extended tower.
    Extend { file: PathBuf },
    /// Equality queries in the colimit of a tower.
    ColimitEq { file: PathBuf },
    /// Re-check a certificate written by --cert.
    Verify { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&outcome.json).expect("reports serialize")
            } else {
                outcome.lines.join("\n")
            };
            println!("{text}");
            if let (Some(path), Some(cert)) = (&cli.cert, &outcome.cert) {
                let body = serde_json::to_string_pretty(cert).expect("certificates serialize") + "\n";
                if let Err(e) = std::fs::write(path, body) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(if outcome.verdict { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
