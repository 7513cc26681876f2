//! Search bounds, overridable through `NBT_WORKBENCH_LIMITS`.

use thiserror::Error;

pub const LIMITS_ENV: &str = "NBT_WORKBENCH_LIMITS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground set for exact homogeneous-set search.
    pub exhaustive: usize,
    /// Largest vertex set for the richness search.
    pub rich: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { exhaustive: 16, rich: 12 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LimitsError {
    #[error("bad limits entry {0:?}; expected key=value with key exhaustive or rich")]
    BadEntry(String),
}

impl Limits {
    /// Parses `"exhaustive=16,rich=12"`; missing keys keep their defaults.
    pub fn parse(spec: &str) -> Result<Self, LimitsError> {
        let mut limits = Limits::default();
        for entry in spec.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let bad = || LimitsError::BadEntry(entry.to_string());
            let (key, value) = entry.split_once('=').ok_or_else(bad)?;
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "exhaustive" => limits.exhaustive = value,
                "rich" => limits.rich = value,
                _ => return Err(bad()),
            }
        }
        Ok(limits)
    }

    pub fn from_env() -> Result<Self, LimitsError> {
        match std::env::var(LIMITS_ENV) {
            Ok(s) => Limits::parse(&s),
            Err(_) => Ok(Limits::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_entries() {
        assert_eq!(Limits::parse("").unwrap(), Limits::default());
        assert_eq!(Limits::parse("rich=10").unwrap(), Limits { exhaustive: 16, rich: 10 });
        assert_eq!(Limits::parse(" exhaustive = 8 , rich=4").unwrap(), Limits { exhaustive: 8, rich: 4 });
        assert!(Limits::parse("depth=3").is_err());
        assert!(Limits::parse("rich").is_err());
        assert!(Limits::parse("rich=-1").is_err());
    }
}
