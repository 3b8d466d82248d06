//! Optional TOML config, located through `CHERNCERT_CONFIG`.
//!
//! ```toml
//! max_dim = 8
//!
//! [[generators]]
//! name = "my5"
//! dim = 5
//! convention = "cotangent"
//! poly = "3*c1^3*c2 - c1^5"
//! ```
//!
//! Extra generators are never used unless named in `--assume`.

use std::path::Path;

use cherncert::{ChernFunctional, Convention};
use serde::Deserialize;

pub const CONFIG_ENV: &str = "CHERNCERT_CONFIG";
pub const DEFAULT_CLI_MAX_DIM: usize = 8;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub max_dim: Option<usize>,
    #[serde(default)]
    pub generators: Vec<ExtraGenerator>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtraGenerator {
    pub name: String,
    pub dim: usize,
    pub convention: Convention,
    pub poly: String,
}

impl ExtraGenerator {
    pub fn functional(&self) -> Result<ChernFunctional, String> {
        ChernFunctional::parse(&self.poly, self.dim, self.convention)
            .map_err(|e| format!("config generator {:?}: {e}", self.name))
    }
}

impl Config {
    pub fn load_from_env() -> Result<Config, String> {
        match std::env::var_os(CONFIG_ENV) {
            None => Ok(Config::default()),
            Some(path) => Self::load(Path::new(&path)),
        }
    }

    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}
