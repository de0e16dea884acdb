//! Batch front end: construct, verify, compute, audit, and report.
//!
//! Exit codes: 0 all checks pass, 1 I/O failure, 2 check failure, 3 schema
//! error. Output JSON is deterministic: fixed field order and 12-significant
//! digit floats.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use torlink::commands::{self, CmdError};

#[derive(Parser)]
#[command(
    name = "torlink",
    about = "Lagrangian tori in R^4: constructions, invariants, linking, audits"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output directory for file-producing commands.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Grid resolution (power of two in [64, 4096]).
    #[arg(long, global = true, default_value_t = 256)]
    resolution: usize,
    /// Relative tolerance for the construction checks.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,
    /// Also write SVG plots of the (x1,y1) and (x2,y2) projections.
    #[arg(long, global = true)]
    plot: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a surface or the linked torus pair and verify it.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Lattice invariants of a torus.
    Invariants {
        #[command(subcommand)]
        what: InvariantsCmd,
    },
    /// Unlinking verdict for a pair of tori.
    Verdict {
        /// First torus: clifford:R, chekanov:R, product:R:S, or file:PATH.
        #[arg(long)]
        l1: String,
        #[arg(long)]
        l2: String,
        /// Whether the pi1 image of the first torus in the complement of the
        /// second vanishes, when known.
        #[arg(long)]
        pi1_trivial: Option<bool>,
    },
    /// Build the linked pair and emit its homological linking certificate.
    Link {
        #[arg(long = "a2-1")]
        a2_1: f64,
        #[arg(long = "a2-2")]
        a2_2: f64,
    },
    /// Audit the index bookkeeping of a holomorphic building.
    Audit {
        file: PathBuf,
        /// Override the profile: plane-limit (budget 1) or sphere-limit (2).
        #[arg(long)]
        profile: Option<String>,
    },
    /// Capacity values and embedding obstructions.
    Capacity {
        #[command(subcommand)]
        what: CapacityCmd,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// The product torus |z1| = |z2| = r.
    Clifford {
        #[arg(long)]
        r: f64,
    },
    /// The standard exotic monotone torus.
    Chekanov {
        #[arg(long)]
        r: f64,
    },
    /// The linked pair with prescribed minimal areas (first strictly larger).
    LinkedPair {
        #[arg(long = "a2-1")]
        a2_1: f64,
        #[arg(long = "a2-2")]
        a2_2: f64,
        /// Height of the return tube of the threaded torus.
        #[arg(long)]
        alpha: Option<f64>,
    },
}

#[derive(Subcommand)]
enum InvariantsCmd {
    /// Product torus L(r, s); radii parsed as exact decimals.
    Product {
        #[arg(long)]
        r: String,
        #[arg(long)]
        s: String,
    },
    /// Torus descriptor from a JSON file.
    File { path: PathBuf },
}

#[derive(Subcommand)]
enum CapacityCmd {
    /// The torus capacity of the polydisk P(a, b).
    Polydisk {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
    },
    /// Whether L(r,s) is obstructed from embedding into P(a,b).
    Obstruction {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
    },
}

fn run(cli: Cli) -> Result<bool, CmdError> {
    let resolution = commands::check_resolution(cli.resolution)?;
    match cli.cmd {
        Cmd::Construct { what } => match what {
            ConstructCmd::Clifford { r } => {
                let json = commands::construct_clifford(r, resolution, &cli.out, cli.plot)?;
                print!("{}", json.to_string_pretty());
                Ok(true)
            }
            ConstructCmd::Chekanov { r } => {
                let json = commands::construct_chekanov(r, resolution, &cli.out, cli.plot)?;
                print!("{}", json.to_string_pretty());
                Ok(true)
            }
            ConstructCmd::LinkedPair { a2_1, a2_2, alpha } => {
                let (json, ok) = commands::construct_linked_pair(
                    a2_1, a2_2, resolution, alpha, cli.tol, &cli.out, cli.plot,
                )?;
                print!("{}", json.to_string_pretty());
                Ok(ok)
            }
        },
        Cmd::Invariants { what } => {
            let json = match what {
                InvariantsCmd::Product { r, s } => commands::invariants_product(&r, &s)?,
                InvariantsCmd::File { path } => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CmdError::Io(format!("{}: {e}", path.display())))?;
                    let value: serde_json::Value =
                        serde_json::from_str(&text).map_err(|e| CmdError::Schema(e.to_string()))?;
                    let d = torlink::io::lattice::descriptor_from_json(&value)?;
                    commands::descriptor_invariants(&d)?
                }
            };
            print!("{}", json.to_string_pretty());
            Ok(true)
        }
        Cmd::Verdict { l1, l2, pi1_trivial } => {
            let json = commands::verdict_cmd(&l1, &l2, pi1_trivial)?;
            print!("{}", json.to_string_pretty());
            Ok(true)
        }
        Cmd::Link { a2_1, a2_2 } => {
            let (json, linked) = commands::link_cmd(a2_1, a2_2, resolution, &cli.out, cli.plot)?;
            print!("{}", json.to_string_pretty());
            Ok(linked)
        }
        Cmd::Audit { file, profile } => {
            let (json, ok) = commands::audit_cmd(&file, profile.as_deref())?;
            print!("{}", json.to_string_pretty());
            Ok(ok)
        }
        Cmd::Capacity { what } => {
            let json = match what {
                CapacityCmd::Polydisk { a, b } => commands::capacity_cmd(a, b)?,
                CapacityCmd::Obstruction { r, s, a, b } => commands::obstruction_cmd(r, s, a, b)?,
            };
            print!("{}", json.to_string_pretty());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
