use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kron_core::verify::Target;
use kron_core::Partition;

/// Exact Kronecker products with s_(d,d): closed forms, oracle checks and
/// generating functions.
#[derive(Debug, Parser)]
#[command(name = "kron", version)]
pub struct Cli {
    /// Persistent character cache; loaded before and saved after the command.
    #[arg(long, global = true, env = "KRONCACHE_PATH")]
    pub cache: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Allow oracle-backed work above degree 26.
    #[arg(long, global = true)]
    pub force: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// s_(d,d) ∗ s_(d+k,d-k) from the closed form.
    TwoRow(DkArgs),
    /// s_(d,d) ∗ s_(2d-k,1^k) from the hook recursion.
    Hook(DkArgs),
    /// s_μ ∗ s_ν from characters.
    Oracle(OracleArgs),
    /// Run a verification sweep; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Rational generating functions G_k and L_{k,r}.
    Gf(GfArgs),
    /// Every coefficient of s_(d,d) ∗ s_(d+k,d-k) for d <= max-d.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct DkArgs {
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_parser = parse_partition)]
    pub mu: Partition,
    #[arg(long, value_parser = parse_partition)]
    pub nu: Partition,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_parser = parse_target)]
    pub target: Target,
    #[arg(long, default_value_t = 6)]
    pub max_d: usize,
    #[arg(long)]
    pub max_k: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GfKind {
    G,
    L,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[arg(value_enum)]
    pub kind: GfKind,
    #[arg(long)]
    pub k: usize,
    /// Coefficient value, required for `l`.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub max_d: usize,
    #[arg(long)]
    pub max_k: Option<usize>,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: kron_core::KronError| e.to_string())
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Target::ALL.iter().map(|t| t.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_oracle_shapes() {
        let cli = Cli::try_parse_from(["kron", "oracle", "--mu", "[2,1]", "--nu", "2,1"]).unwrap();
        match cli.command {
            Command::Oracle(a) => {
                assert_eq!(a.mu, Partition::new(vec![2, 1]));
                assert_eq!(a.nu, a.mu);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_target() {
        assert!(Cli::try_parse_from(["kron", "verify", "everything"]).is_err());
    }

    #[test]
    fn global_flags_after_subcommand() {
        let cli =
            Cli::try_parse_from(["kron", "two-row", "--d", "2", "--k", "1", "--format", "csv"])
                .unwrap();
        assert_eq!(cli.format, Format::Csv);
        assert!(!cli.force);
    }
}
