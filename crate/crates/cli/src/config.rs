//! Run configuration: command line flags layered over a flat `key = value`
//! file.
//!
//! The file mirrors the long flags (`type`, `orbit`, `ideal`, `levi`,
//! `format`, `out`, `quintuples`). Blank lines and lines starting with `#`
//! are ignored. Flags given on the command line take precedence.

use std::path::{Path, PathBuf};

use clap::ValueEnum;

use crate::error::CliError;

/// Output encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Selection and output options for one run, before validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub type_label: Option<String>,
    pub orbit: Option<String>,
    pub ideal: Option<String>,
    pub levi: Option<String>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub quintuples: bool,
}

impl RunConfig {
    /// Parses the flat key-value format.
    pub fn parse(text: &str, origin: &str) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("{origin}:{}: expected `key = value`", n + 1)))?;
            let key = key.trim();
            let value = value.trim().trim_matches('"').to_string();
            match key {
                "type" => cfg.type_label = Some(value),
                "orbit" => cfg.orbit = Some(value),
                "ideal" => cfg.ideal = Some(value),
                "levi" => cfg.levi = Some(value),
                "out" => cfg.out = Some(PathBuf::from(value)),
                "format" => {
                    cfg.format = Some(Format::from_str(&value, true).map_err(|_| {
                        CliError::Config(format!("{origin}:{}: unknown format `{value}`", n + 1))
                    })?)
                }
                "quintuples" => {
                    cfg.quintuples = value.parse().map_err(|_| {
                        CliError::Config(format!("{origin}:{}: `quintuples` must be true or false", n + 1))
                    })?
                }
                other => {
                    return Err(CliError::Config(format!("{origin}:{}: unknown key `{other}`", n + 1)));
                }
            }
        }
        Ok(cfg)
    }

    /// Reads a configuration file.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Values from `self` win over those in `base`.
    pub fn over(self, base: Self) -> Self {
        Self {
            type_label: self.type_label.or(base.type_label),
            orbit: self.orbit.or(base.orbit),
            ideal: self.ideal.or(base.ideal),
            levi: self.levi.or(base.levi),
            format: self.format.or(base.format),
            out: self.out.or(base.out),
            quintuples: self.quintuples || base.quintuples,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_layers() {
        let file = RunConfig::parse("# run\ntype = E6\nformat = json\nquintuples = true\n", "cfg").unwrap();
        assert_eq!(file.type_label.as_deref(), Some("E6"));
        assert_eq!(file.format, Some(Format::Json));
        let flags = RunConfig {
            type_label: Some("F4".into()),
            ..RunConfig::default()
        };
        let merged = flags.over(file);
        assert_eq!(merged.type_label.as_deref(), Some("F4"));
        assert!(merged.quintuples);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(matches!(RunConfig::parse("colour = red", "cfg"), Err(CliError::Config(_))));
        assert!(matches!(RunConfig::parse("type E6", "cfg"), Err(CliError::Config(_))));
    }
}
