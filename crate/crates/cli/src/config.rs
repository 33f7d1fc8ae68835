//! Oracle limits from a `key=value` file, the environment, and flags, in
//! increasing order of precedence.

use std::fs;
use std::path::Path;

use chordgenus::OracleConfig;

pub const LIMIT_ENV: &str = "CHORDGENUS_ORACLE_LIMIT";

#[derive(Debug)]
pub struct ConfigError(pub String);

/// Reads `oracle_limit` and `oracle_symbolic_limit` from `text`. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse(text: &str, mut config: OracleConfig) -> Result<OracleConfig, ConfigError> {
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| ConfigError(format!("line {}: expected key=value", i + 1)))?;
        let value =
            parse_limit(value.trim()).map_err(|e| ConfigError(format!("line {}: {e}", i + 1)))?;
        match key.trim() {
            "oracle_limit" => config.limit = value,
            "oracle_symbolic_limit" => config.symbolic_limit = value,
            other => {
                return Err(ConfigError(format!(
                    "line {}: unknown key `{other}`",
                    i + 1
                )))
            }
        }
    }
    Ok(config)
}

fn parse_limit(value: &str) -> Result<usize, String> {
    value
        .parse()
        .map_err(|_| format!("`{value}` is not a chord count"))
}

pub fn resolve(
    file: Option<&Path>,
    env: Option<String>,
    limit: Option<usize>,
    symbolic_limit: Option<usize>,
) -> Result<OracleConfig, ConfigError> {
    let mut config = OracleConfig::default();
    if let Some(path) = file {
        let text = fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        config = parse(&text, config)?;
    }
    if let Some(value) = env {
        config.limit =
            parse_limit(value.trim()).map_err(|e| ConfigError(format!("{LIMIT_ENV}: {e}")))?;
    }
    if let Some(v) = limit {
        config.limit = v;
    }
    if let Some(v) = symbolic_limit {
        config.symbolic_limit = v;
    }
    Ok(config)
}
