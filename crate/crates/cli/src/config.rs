//! Operational knobs: brute-force cap, default engine, strictness.
//!
//! Precedence is flag over environment (`HSNUM_CAP`) over config file over
//! built-in default. The config file holds no mathematical constants.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use hsnum_core::{Method, DEFAULT_BRUTE_CAP};

/// Default config location, relative to the working directory.
pub const DEFAULT_CONFIG_PATH: &str = "hsnum.toml";

pub const CAP_ENV_VAR: &str = "HSNUM_CAP";

#[derive(Debug, Default, Deserialize)]
pub struct FileConfig {
    pub cap: Option<u64>,
    pub method: Option<String>,
    pub strict: Option<bool>,
}

/// Engine selection as exposed on the command line: the four library
/// methods plus `all`, which runs every feasible engine and compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Characters,
    Cutjoin,
    All,
}

impl MethodArg {
    pub fn parse_name(name: &str) -> Option<MethodArg> {
        match name {
            "auto" => Some(MethodArg::Auto),
            "brute" => Some(MethodArg::Brute),
            "characters" => Some(MethodArg::Characters),
            "cutjoin" => Some(MethodArg::Cutjoin),
            "all" => Some(MethodArg::All),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MethodArg::Auto => "auto",
            MethodArg::Brute => "brute",
            MethodArg::Characters => "characters",
            MethodArg::Cutjoin => "cutjoin",
            MethodArg::All => "all",
        }
    }

    /// The core method, or None for `all`.
    pub fn library_method(&self) -> Option<Method> {
        match self {
            MethodArg::Auto => Some(Method::Auto),
            MethodArg::Brute => Some(Method::Brute),
            MethodArg::Characters => Some(Method::Characters),
            MethodArg::Cutjoin => Some(Method::CutJoin),
            MethodArg::All => None,
        }
    }
}

/// Fully resolved settings for a run.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub cap: u64,
    pub method: MethodArg,
    pub strict: bool,
}

#[derive(Debug)]
pub enum ConfigError {
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, toml::de::Error),
    BadMethod(String),
    BadEnvCap(String),
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConfigError::Io(path, err) => write!(f, "cannot read config {}: {err}", path.display()),
            ConfigError::Parse(path, err) => {
                write!(f, "cannot parse config {}: {err}", path.display())
            }
            ConfigError::BadMethod(name) => write!(
                f,
                "config method '{name}' is not one of auto, brute, characters, cutjoin, all"
            ),
            ConfigError::BadEnvCap(value) => {
                write!(f, "{CAP_ENV_VAR}='{value}' is not a nonnegative integer")
            }
        }
    }
}

fn load_file(path: &Path, explicit: bool) -> Result<FileConfig, ConfigError> {
    match std::fs::read_to_string(path) {
        Ok(text) => toml::from_str(&text).map_err(|e| ConfigError::Parse(path.to_path_buf(), e)),
        Err(err) if err.kind() == std::io::ErrorKind::NotFound && !explicit => {
            Ok(FileConfig::default())
        }
        Err(err) => Err(ConfigError::Io(path.to_path_buf(), err)),
    }
}

/// Resolves cap, method, and strictness from flags, environment, and file.
pub fn resolve(
    flag_cap: Option<u64>,
    flag_method: Option<MethodArg>,
    flag_strict: bool,
    config_path: Option<&Path>,
    env_cap: Option<&str>,
) -> Result<Settings, ConfigError> {
    let file = match config_path {
        Some(path) => load_file(path, true)?,
        None => load_file(Path::new(DEFAULT_CONFIG_PATH), false)?,
    };
    let env_cap = match env_cap {
        Some(text) => Some(
            text.trim()
                .parse::<u64>()
                .map_err(|_| ConfigError::BadEnvCap(text.to_string()))?,
        ),
        None => None,
    };
    let cap = flag_cap
        .or(env_cap)
        .or(file.cap)
        .unwrap_or(DEFAULT_BRUTE_CAP);
    let method = match flag_method {
        Some(m) => m,
        None => match &file.method {
            Some(name) => {
                MethodArg::parse_name(name).ok_or_else(|| ConfigError::BadMethod(name.clone()))?
            }
            None => MethodArg::Auto,
        },
    };
    let strict = flag_strict || file.strict.unwrap_or(false);
    Ok(Settings { cap, method, strict })
}
