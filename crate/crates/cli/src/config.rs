//! Command-line configuration.

use clap::{Parser, Subcommand, ValueEnum};
use ternion_core::FieldSpec;

#[derive(Parser, Debug, Clone)]
#[command(name = "ternion", version, about = "Free cyclic submodules of T^2 as a smooth variety")]
pub struct Cli {
    /// Ground field: `p:<prime>` or `rational`.
    #[arg(long, global = true, default_value = "p:2")]
    pub field: FieldSpec,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for exhaustive scans (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Seed for the rational sampling suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Refuse scans with more candidates than this.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub max_candidates: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List a point set or family, sorted.
    Enumerate {
        #[arg(value_enum)]
        object: Object,
    },
    /// Run a verification suite; exit 1 if any assertion fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Classify a pair given as `{"A": {...}, "B": {...}}` (`-` reads stdin).
    Classify { pair: String },
    /// Plücker coordinates of a 3×6 matrix given as JSON rows (`-` reads stdin).
    Plucker { matrix: String },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Object {
    Variety,
    XImage,
    YImage,
    Segre,
    Cubic,
    Tube,
    DualSurface,
    Planes,
    Submodules,
}

impl Object {
    pub fn name(self) -> &'static str {
        match self {
            Object::Variety => "variety",
            Object::XImage => "x-image",
            Object::YImage => "y-image",
            Object::Segre => "segre",
            Object::Cubic => "cubic",
            Object::Tube => "tube",
            Object::DualSurface => "dual-surface",
            Object::Planes => "planes",
            Object::Submodules => "submodules",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem,
    Lemma1,
    Smooth,
    Unimodular,
    Invertibility,
    Roundtrip,
    Substructures,
    Counts,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Theorem,
        Suite::Lemma1,
        Suite::Smooth,
        Suite::Unimodular,
        Suite::Invertibility,
        Suite::Roundtrip,
        Suite::Substructures,
        Suite::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Lemma1 => "lemma1",
            Suite::Smooth => "smooth",
            Suite::Unimodular => "unimodular",
            Suite::Invertibility => "invertibility",
            Suite::Roundtrip => "roundtrip",
            Suite::Substructures => "substructures",
            Suite::Counts => "counts",
            Suite::All => "all",
        }
    }
}
