//! Command-line surface. Usage errors from argument parsing exit with code 1;
//! `--help` and `--version` exit with code 0. The substantive exit codes
//! (2 = inconsistent exact sequence, 3 = verification mismatch) are reserved
//! for the solvers, so usage problems are folded into the input-error code.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable tables.
    Table,
    /// Machine-readable JSON documents.
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theory {
    /// Intersection homology of the cone.
    Ih,
    /// Homology of the intersection space.
    Hi,
    /// Both theories plus the degrees where they differ.
    Both,
}

#[derive(Debug, Parser)]
#[command(
    name = "strata",
    version,
    about = "Exact homology of cones and suspensions over a link: intersection homology, \
             intersection-space homology, Mayer-Vietoris and exact-sequence solvers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced simplicial homology of a facet complex.
    Homology(HomologyArgs),
    /// Invariants of the open cone over a link.
    Cone(ConeArgs),
    /// Invariants of the suspension of a link.
    Suspension(SuspensionArgs),
    /// Run a named catalog space and report its invariants.
    Example(ExampleArgs),
    /// Solve a Mayer-Vietoris problem for the reduced homology of a union.
    Mv(MvArgs),
    /// Solve a long exact sequence for unknown dimensions and ranks.
    Les(LesArgs),
    /// List catalog entries, or show one entry in detail.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
pub struct HomologyArgs {
    /// Facet file: one facet per line, vertices as whitespace-separated integers.
    pub file: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Print every degree from the lowest up to the top, including zero ranks.
    #[arg(long)]
    pub dense: bool,
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    /// Link input: a facet file, or a JSON Betti-table document.
    pub file: PathBuf,
    /// Perversity: zero | m | um | top, or a comma-separated value list.
    #[arg(long, short = 'p', allow_hyphen_values = true, conflicts_with = "sweep_perversities")]
    pub perversity: Option<String>,
    /// Allow perversity value lists outside the classical growth conditions.
    #[arg(long)]
    pub extended: bool,
    /// Which theory to report.
    #[arg(long, value_enum, default_value = "both")]
    pub theory: Theory,
    /// Re-derive the reported invariants from an explicit chain model
    /// (requires a facet file; skipped for Betti-table input).
    #[arg(long)]
    pub verify: bool,
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Print every degree including zero ranks.
    #[arg(long)]
    pub dense: bool,
    /// Evaluate one row per perversity over the standard families plus
    /// every constant extended perversity from -2 to l+1.
    #[arg(long)]
    pub sweep_perversities: bool,
}

#[derive(Debug, Args)]
pub struct SuspensionArgs {
    /// Link input: a facet file, or a JSON Betti-table document.
    pub file: PathBuf,
    /// Perversity: zero | m | um | top, or a comma-separated value list.
    #[arg(long, short = 'p', allow_hyphen_values = true, conflicts_with = "sweep_perversities")]
    pub perversity: Option<String>,
    /// Allow perversity value lists outside the classical growth conditions.
    #[arg(long)]
    pub extended: bool,
    /// Re-derive the reported invariants from an explicit chain model
    /// (requires a facet file; skipped for Betti-table input).
    #[arg(long)]
    pub verify: bool,
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Print every degree including zero ranks.
    #[arg(long)]
    pub dense: bool,
    /// Evaluate one row per perversity over the standard families plus
    /// every constant extended perversity from -2 to l+1.
    #[arg(long)]
    pub sweep_perversities: bool,
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    /// Catalog name of the space (see `strata catalog`).
    pub name: String,
    /// Perversity: zero | m | um | top, or a comma-separated value list.
    #[arg(allow_hyphen_values = true)]
    pub perversity: String,
    /// Allow perversity value lists outside the classical growth conditions.
    #[arg(long)]
    pub extended: bool,
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct MvArgs {
    /// JSON document with the Betti tables of the two pieces, their
    /// intersection, and the known restriction-map ranks.
    pub file: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LesArgs {
    /// Exact-sequence file: alternating `term` and `arrow` lines.
    pub file: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// Entry to show in detail; omit to list all entries.
    pub name: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

pub fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let ok = matches!(
                err.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            );
            let _ = err.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(output) => {
            print!("{}", output.stdout);
            for warning in &output.warnings {
                eprintln!("warning: {}", warning);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(err.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn perversity_flag_conflicts_with_sweep() {
        let err = Cli::try_parse_from([
            "strata",
            "cone",
            "link.txt",
            "--perversity",
            "m",
            "--sweep-perversities",
        ])
        .unwrap_err();
        assert_eq!(err.kind(), ErrorKind::ArgumentConflict);
    }

    #[test]
    fn example_takes_positional_name_and_perversity() {
        let cli = Cli::try_parse_from(["strata", "example", "su3-universal-implosion", "m"]).unwrap();
        match cli.command {
            Command::Example(args) => {
                assert_eq!(args.name, "su3-universal-implosion");
                assert_eq!(args.perversity, "m");
            }
            other => panic!("parsed the wrong subcommand: {:?}", other),
        }
    }
}
