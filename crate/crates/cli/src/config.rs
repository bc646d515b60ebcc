use std::path::{Path, PathBuf};

/// Settings read from an optional `key = value` file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    pub classify_tolerance: Option<f64>,
    pub output_dir: Option<PathBuf>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Config::parse(&text)
    }

    /// Blank lines and `#` comments are ignored; unknown keys are rejected.
    pub fn parse(text: &str) -> Result<Config, String> {
        let mut config = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("config line {}: expected key = value", i + 1));
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "classify_tolerance" => {
                    let x: f64 = value
                        .parse()
                        .map_err(|_| format!("config line {}: classify_tolerance must be a number", i + 1))?;
                    if !(x.is_finite() && x >= 0.0) {
                        return Err(format!("config line {}: classify_tolerance must be non-negative", i + 1));
                    }
                    config.classify_tolerance = Some(x);
                }
                "output_dir" => config.output_dir = Some(PathBuf::from(value)),
                other => return Err(format!("config line {}: unknown key {other:?}", i + 1)),
            }
        }
        Ok(config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys() {
        let c = Config::parse("# tolerances\nclassify_tolerance = 1e-6\n\noutput_dir=out # here\n").unwrap();
        assert_eq!(c.classify_tolerance, Some(1e-6));
        assert_eq!(c.output_dir, Some(PathBuf::from("out")));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("classify_tolerance").is_err());
        assert!(Config::parse("classify_tolerance = -1").is_err());
    }
}
