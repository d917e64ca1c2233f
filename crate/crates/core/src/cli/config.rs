//! `key = value` configuration files.

use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::engine::Severity;
use crate::rules::RULE_SET_KEYS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Xml,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "xml" => Ok(Format::Xml),
            _ => Err(format!("unknown format `{s}` (expected text, json or xml)")),
        }
    }
}

/// `none`, or the lowest severity that fails the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FailLevel(pub Option<Severity>);

impl Default for FailLevel {
    fn default() -> Self {
        FailLevel(Some(Severity::Error))
    }
}

impl FromStr for FailLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "none" {
            Ok(FailLevel(None))
        } else {
            s.parse::<Severity>()
                .map(|sev| FailLevel(Some(sev)))
                .map_err(|_| {
                    format!("unknown fail level `{s}` (expected info, warn, error or none)")
                })
        }
    }
}

/// Everything one invocation needs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub paths: Vec<PathBuf>,
    pub bundles: Vec<String>,
    pub enable: Vec<String>,
    pub disable: Vec<String>,
    pub format: Format,
    pub fail_level: FailLevel,
    pub stats: bool,
    pub keywords: Option<PathBuf>,
    pub threads: Option<usize>,
    pub keep_going: bool,
    /// Rule-set key and raw comma-separated value, in file order.
    pub rule_overrides: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: {message}")]
    BadValue { line: usize, message: String },
}

/// Settings read from a configuration file. Absent keys stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FileConfig {
    pub bundles: Option<Vec<String>>,
    pub enable: Option<Vec<String>>,
    pub disable: Option<Vec<String>>,
    pub fail_level: Option<FailLevel>,
    pub rule_overrides: Vec<(String, String)>,
}

fn words(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(str::to_owned)
        .collect()
}

impl FileConfig {
    pub fn parse(contents: &str) -> Result<FileConfig, ConfigError> {
        let mut config = FileConfig::default();
        for (i, raw) in contents.lines().enumerate() {
            let line = i + 1;
            let text = raw.split('#').next().unwrap_or("").trim();
            if text.is_empty() {
                continue;
            }
            let (key, value) = text.split_once('=').ok_or(ConfigError::Syntax { line })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "bundles" => config.bundles = Some(words(value)),
                "enable" => config.enable = Some(words(value)),
                "disable" => config.disable = Some(words(value)),
                "fail_level" => {
                    config.fail_level = Some(
                        value
                            .parse()
                            .map_err(|message| ConfigError::BadValue { line, message })?,
                    )
                }
                k if RULE_SET_KEYS.contains(&k) => {
                    config.rule_overrides.push((k.to_owned(), value.to_owned()))
                }
                _ => {
                    return Err(ConfigError::UnknownKey {
                        line,
                        key: key.to_owned(),
                    })
                }
            }
        }
        Ok(config)
    }

    /// Fills settings the command line left unset. Rule-set overrides from
    /// the file apply before those given on the command line.
    pub fn apply_to(self, run: &mut RunConfig, fail_level_given: bool) {
        if run.bundles.is_empty() {
            run.bundles = self.bundles.unwrap_or_default();
        }
        if run.enable.is_empty() {
            run.enable = self.enable.unwrap_or_default();
        }
        if run.disable.is_empty() {
            run.disable = self.disable.unwrap_or_default();
        }
        if !fail_level_given {
            if let Some(level) = self.fail_level {
                run.fail_level = level;
            }
        }
        let mut overrides = self.rule_overrides;
        overrides.append(&mut run.rule_overrides);
        run.rule_overrides = overrides;
    }
}
