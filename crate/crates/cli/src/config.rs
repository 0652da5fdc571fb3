//! Optional TOML configuration.
//!
//! ```toml
//! threads = 4          # worker threads; GRAPHSPARK_THREADS and --threads override
//! seed = 0             # default seed for verify and generic nullity
//! fort_limit = 16      # largest order for exhaustive fort enumeration
//! generic_bound = 100  # recombination coefficients in [-bound, bound]
//! generic_trials = 32  # recombinations tried per candidate width
//! ```

use std::path::Path;

use serde::Deserialize;

#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub threads: Option<usize>,
    pub seed: Option<u64>,
    pub fort_limit: Option<usize>,
    pub generic_bound: Option<i64>,
    pub generic_trials: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys_only() {
        let c: Config = toml::from_str("threads = 2\nseed = 9\n").unwrap();
        assert_eq!((c.threads, c.seed), (Some(2), Some(9)));
        assert!(toml::from_str::<Config>("thread = 2").is_err());
    }
}
