//! Optional TOML configuration.
//!
//! ```toml
//! [allowlist]
//! imaginary = [-1, -2, -3, -7, -11]
//! real = [2, 3, 5]
//!
//! [defaults]
//! delta_bound = 100
//! cyclotomic_bound = 100000
//! sweep_bound = 10
//! scan_limit = 100000
//! ```
//!
//! Every key is optional. Allowlist entries outside the built-in lists are
//! accepted by the ring parser, but arithmetic in such rings is only
//! guaranteed when they are norm-Euclidean.

use std::path::Path;

use coprime_ap::rings::Allowlist;
use serde::Deserialize;

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub allowlist: AllowlistOverride,
    #[serde(default)]
    pub defaults: Defaults,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AllowlistOverride {
    pub imaginary: Option<Vec<i64>>,
    pub real: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Defaults {
    pub delta_bound: u64,
    pub cyclotomic_bound: u64,
    pub sweep_bound: i64,
    pub scan_limit: u64,
}

impl Default for Defaults {
    fn default() -> Defaults {
        Defaults { delta_bound: 100, cyclotomic_bound: 100_000, sweep_bound: 10, scan_limit: 100_000 }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Config::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Config, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    pub fn allowlist(&self) -> Allowlist {
        let mut list = Allowlist::default();
        if let Some(im) = &self.allowlist.imaginary {
            list.imaginary = im.clone();
        }
        if let Some(re) = &self.allowlist.real {
            list.real = re.clone();
        }
        list
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_config_uses_defaults() {
        let c = Config::parse("").unwrap();
        assert_eq!(c, Config::default());
        assert!(c.allowlist().contains(-1));
    }

    #[test]
    fn overrides() {
        let c = Config::parse("[allowlist]\nreal = [2]\n[defaults]\nsweep_bound = 3\n").unwrap();
        assert_eq!(c.defaults.sweep_bound, 3);
        assert_eq!(c.defaults.delta_bound, 100);
        let list = c.allowlist();
        assert!(list.contains(2) && !list.contains(3) && list.contains(-7));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(Config::parse("[defaults]\nbogus = 1\n").is_err());
    }
}
