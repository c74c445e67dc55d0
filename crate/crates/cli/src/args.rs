//! Command-line surface: subcommands, flags, and the small value types they
//! parse into.

use std::fmt;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "parsep",
    version,
    about = "Partition class counts, the staircase bijection, and exact q-series identity checks"
)]
pub struct Cli {
    /// Emit a JSON run report instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for verification sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    /// Accepted for reproducibility plumbing; every sweep is exhaustive, so
    /// no sampling consumes it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Raise the guard ceiling: maximum weight for enumeration commands
    /// (default 60), maximum order for pure series commands (default 200).
    #[arg(long, global = true)]
    pub limit: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Count the partitions of n in a class.
    Count(ClassQuery),
    /// List the partitions of n in a class, one literal per line.
    List(ClassQuery),
    /// Apply the bijection to a single partition literal.
    Map(MapArgs),
    /// Sweep one of the counting identities over a parameter range.
    Verify(VerifyArgs),
    /// Print the coefficients of a named series, one `n:coefficient` line
    /// per exponent.
    Series(SeriesArgs),
    /// Compare the two sides of a named identity.
    Identity(IdentityArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Count(_) => "count",
            Command::List(_) => "list",
            Command::Map(_) => "map",
            Command::Verify(_) => "verify",
            Command::Series(_) => "series",
            Command::Identity(_) => "identity",
        }
    }
}

#[derive(Args)]
pub struct ClassQuery {
    /// Weight of the partitions to enumerate.
    #[arg(long)]
    pub n: u64,

    /// Which class to test membership in.
    #[arg(long, value_enum)]
    pub class: ClassArg,

    /// Modulus, required for the D, O, AP, and DR classes.
    #[arg(long)]
    pub p: Option<u64>,

    /// Residue, required for the D, O, A, and MOD4 classes.
    #[arg(long)]
    pub r: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ClassArg {
    #[value(name = "D")]
    D,
    #[value(name = "O")]
    O,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "AP")]
    Ap,
    #[value(name = "DR")]
    Dr,
    #[value(name = "MOD4")]
    Mod4,
}

impl fmt::Display for ClassArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ClassArg::D => "D",
            ClassArg::O => "O",
            ClassArg::A => "A",
            ClassArg::B => "B",
            ClassArg::Ap => "AP",
            ClassArg::Dr => "DR",
            ClassArg::Mod4 => "MOD4",
        };
        write!(f, "{name}")
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("direction").required(true).args(["forward", "inverse"])))]
pub struct MapArgs {
    /// Modulus.
    #[arg(long)]
    pub p: u64,

    /// Residue (1 <= r < p).
    #[arg(long)]
    pub r: u64,

    /// Map a staircase-class partition literal to its separated-class image.
    #[arg(long, value_name = "PARTITION")]
    pub forward: Option<String>,

    /// Map a separated-class partition literal back, printing the staircase
    /// used.
    #[arg(long, value_name = "PARTITION")]
    pub inverse: Option<String>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Which identity to sweep.
    #[arg(value_enum)]
    pub theorem: TheoremArg,

    /// Inclusive weight range, e.g. 0..45.
    #[arg(long)]
    pub n: Option<RangeArg>,

    /// Inclusive modulus range, e.g. 2..5.
    #[arg(long)]
    pub p: Option<RangeArg>,

    /// Inclusive residue range; defaults to every residue valid for each p.
    #[arg(long)]
    pub r: Option<RangeArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum TheoremArg {
    /// Separated class size equals staircase class size, certified by the
    /// bijection.
    #[value(name = "T2")]
    T2,
    /// Even-chain counts equal mod-4 residue counts.
    #[value(name = "T3")]
    T3,
    /// Signed counts follow the m(4m±1) pattern.
    #[value(name = "T4")]
    T4,
    /// Progression class counts equal distinct-residue class counts.
    #[value(name = "COR")]
    Cor,
}

impl fmt::Display for TheoremArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TheoremArg::T2 => "T2",
            TheoremArg::T3 => "T3",
            TheoremArg::T4 => "T4",
            TheoremArg::Cor => "COR",
        };
        write!(f, "{name}")
    }
}

#[derive(Args)]
pub struct SeriesArgs {
    /// Which series to print.
    #[arg(value_enum)]
    pub target: SeriesTarget,

    /// Monomial parameter for the Lebesgue-type series: 0, 1, -1, q, -q^3, ...
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,

    /// Odd residue (1 or 3) for the genA series.
    #[arg(long)]
    pub r: Option<u64>,

    /// Truncation order.
    #[arg(long = "T", default_value_t = 64)]
    pub order: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum SeriesTarget {
    /// Unrestricted partition counts, 1/(q;q)_inf.
    #[value(name = "pfn")]
    Pfn,
    /// Sum side of the Lebesgue-type identity for the given parameter.
    #[value(name = "lebesgue")]
    Lebesgue,
    /// Product side of the Slater-type identity.
    #[value(name = "slater")]
    Slater,
    /// Even-chain generating series (sum form).
    #[value(name = "genA")]
    GenA,
    /// Signed generating series of the B family.
    #[value(name = "genB")]
    GenB,
    /// Theta-style series with 1 exactly at the exponents m(4m±1).
    #[value(name = "theta")]
    Theta,
}

impl fmt::Display for SeriesTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SeriesTarget::Pfn => "pfn",
            SeriesTarget::Lebesgue => "lebesgue",
            SeriesTarget::Slater => "slater",
            SeriesTarget::GenA => "genA",
            SeriesTarget::GenB => "genB",
            SeriesTarget::Theta => "theta",
        };
        write!(f, "{name}")
    }
}

#[derive(Args)]
pub struct IdentityArgs {
    /// Which identity to check.
    #[arg(value_enum)]
    pub id: IdentityTarget,

    /// Monomial parameter for the Lebesgue-type identity.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,

    /// Odd residue (1 or 3) for the genA identity.
    #[arg(long)]
    pub r: Option<u64>,

    /// Truncation order.
    #[arg(long = "T", default_value_t = 64)]
    pub order: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum IdentityTarget {
    /// Lebesgue-type sum equals its product for the given parameter.
    #[value(name = "lebesgue")]
    Lebesgue,
    /// Slater-type identity, both printed and corrected normalizations.
    #[value(name = "slater")]
    Slater,
    /// genA sum = genA product = enumeration series.
    #[value(name = "genA")]
    GenA,
    /// genB signed sum = theta series = signed enumeration series.
    #[value(name = "genB")]
    GenB,
    /// Partition series coefficients match exhaustive enumeration.
    #[value(name = "pfn")]
    Pfn,
}

impl fmt::Display for IdentityTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            IdentityTarget::Lebesgue => "lebesgue",
            IdentityTarget::Slater => "slater",
            IdentityTarget::GenA => "genA",
            IdentityTarget::GenB => "genB",
            IdentityTarget::Pfn => "pfn",
        };
        write!(f, "{name}")
    }
}

/// An inclusive integer range written `A..B`, or a single value `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: u64,
    pub hi: u64,
}

impl RangeArg {
    pub fn new(lo: u64, hi: u64) -> Self {
        RangeArg { lo, hi }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid range bound {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?} (lower bound exceeds upper)"));
        }
        Ok(RangeArg { lo, hi })
    }
}

impl fmt::Display for RangeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!("0..45".parse::<RangeArg>().unwrap(), RangeArg::new(0, 45));
        assert_eq!("7".parse::<RangeArg>().unwrap(), RangeArg::new(7, 7));
        assert!("5..2".parse::<RangeArg>().is_err());
        assert!("a..b".parse::<RangeArg>().is_err());
    }

    #[test]
    fn cli_parses_spec_invocations() {
        use clap::Parser;
        for argv in [
            vec!["parsep", "count", "--n", "5", "--class", "D", "--p", "2", "--r", "1"],
            vec!["parsep", "count", "--n", "0", "--class", "O", "--p", "3", "--r", "2"],
            vec!["parsep", "list", "--n", "4", "--class", "O", "--p", "2", "--r", "1"],
            vec!["parsep", "map", "--p", "4", "--r", "1", "--forward", "32,32,21,17,16,13,9,8,8,8,8,5,4,4,4,1"],
            vec!["parsep", "map", "--p", "2", "--r", "1", "--forward", ""],
            vec!["parsep", "verify", "T2", "--n", "0..45", "--p", "2..5"],
            vec!["parsep", "verify", "T4", "--n", "0..60"],
            vec!["parsep", "identity", "lebesgue", "--a", "-1", "--T", "50"],
            vec!["parsep", "identity", "slater", "--T", "60"],
            vec!["parsep", "series", "theta", "--T", "20"],
            vec!["parsep", "series", "genA", "--r", "3", "--T", "40", "--json"],
        ] {
            Cli::try_parse_from(&argv).unwrap_or_else(|e| panic!("{argv:?}: {e}"));
        }
    }

    #[test]
    fn map_requires_exactly_one_direction() {
        use clap::Parser;
        assert!(Cli::try_parse_from(["parsep", "map", "--p", "2", "--r", "1"]).is_err());
        assert!(Cli::try_parse_from([
            "parsep", "map", "--p", "2", "--r", "1", "--forward", "1", "--inverse", "1"
        ])
        .is_err());
    }
}
