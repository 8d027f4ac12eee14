//! Effective configuration: flags override the config file, which overrides defaults.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use rattet_core::families::MembershipRule;
use rattet_core::search::{DenominatorProfile, SearchConfig, DEFAULT_TOLERANCE};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Raw,
    Realizable,
    Sporadic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    PerLength,
    Union,
    L0Only,
}

impl Profile {
    pub fn to_core(self) -> DenominatorProfile {
        match self {
            Profile::PerLength => DenominatorProfile::per_length(),
            Profile::Union => DenominatorProfile::union(),
            Profile::L0Only => DenominatorProfile::l0_only(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    PrintedCurve,
    Domain,
}

/// Keys accepted in the TOML config file; all optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub tolerance: Option<f64>,
    pub workers: Option<usize>,
    pub stage: Option<Stage>,
    pub format: Option<Format>,
    pub profile: Option<Profile>,
    pub membership: Option<Membership>,
    pub out: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

/// Everything that can change a result; its hash goes into every record.
#[derive(Clone, Debug, Serialize)]
pub struct Effective {
    pub command: String,
    pub tolerance: f64,
    pub workers: usize,
    pub stage: Stage,
    pub format: Format,
    pub profile: Profile,
    pub membership: Membership,
    pub out: PathBuf,
    /// Command-specific arguments.
    pub args: serde_json::Value,
}

/// Flag values as parsed; `None` means not given on the command line.
#[derive(Debug, Default)]
pub struct Flags {
    pub tolerance: Option<f64>,
    pub workers: Option<usize>,
    pub stage: Option<Stage>,
    pub format: Option<Format>,
    pub profile: Option<Profile>,
    pub membership: Option<Membership>,
    pub out: Option<PathBuf>,
}

pub const DEFAULT_OUT: &str = "rattet-out";

impl Effective {
    pub fn resolve(command: &str, flags: Flags, file: FileConfig, env_out: Option<PathBuf>, args: serde_json::Value) -> Self {
        Effective {
            command: command.to_string(),
            tolerance: flags.tolerance.or(file.tolerance).unwrap_or(DEFAULT_TOLERANCE),
            workers: flags.workers.or(file.workers).unwrap_or(0),
            stage: flags.stage.or(file.stage).unwrap_or(Stage::Sporadic),
            format: flags.format.or(file.format).unwrap_or(Format::Json),
            profile: flags.profile.or(file.profile).unwrap_or(Profile::PerLength),
            membership: flags.membership.or(file.membership).unwrap_or(Membership::PrintedCurve),
            out: flags.out.or(file.out).or(env_out).unwrap_or_else(|| PathBuf::from(DEFAULT_OUT)),
            args,
        }
    }

    /// Hex SHA-256 of the canonical JSON, excluding the output directory,
    /// which does not affect results.
    pub fn hash(&self) -> String {
        let mut v = serde_json::to_value(self).expect("config serializes");
        v.as_object_mut().expect("object").remove("out");
        hex::encode(Sha256::digest(v.to_string().as_bytes()))
    }

    pub fn search_config(&self) -> SearchConfig {
        SearchConfig {
            tolerance: self.tolerance,
            workers: self.workers,
            profile: self.profile.to_core(),
            membership: match self.membership {
                Membership::PrintedCurve => MembershipRule::PrintedCurve,
                Membership::Domain => MembershipRule::Domain,
            },
        }
    }
}
