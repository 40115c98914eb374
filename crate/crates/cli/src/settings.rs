//! Layered sweep settings: defaults < preset < config file < flags.
//!
//! Every layer is a flat `key = value` map; the provenance of each final
//! value is kept so it can be echoed into output headers.

use std::collections::BTreeMap;
use std::fmt;

use crate::presets;
use crate::CliError;

/// Recognised keys with their default values.
pub const DEFAULTS: &[(&str, &str)] = &[
    ("c1", "1"),
    ("c2", "0.9"),
    ("c3", "0.5"),
    ("werner", ""),
    ("w", "1"),
    ("T", "0.01:100:200"),
    ("t_scale", "log"),
    ("sides", "AI,AII,SUM"),
    ("measures", "N,D,Bmax"),
    ("oracle", "false"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Default,
    Preset(String),
    Config,
    Flag,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Default => write!(f, "default"),
            Source::Preset(name) => write!(f, "preset {name}"),
            Source::Config => write!(f, "config"),
            Source::Flag => write!(f, "flag"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Settings {
    values: BTreeMap<&'static str, (String, Source)>,
    preset: Option<String>,
}

impl Default for Settings {
    fn default() -> Self {
        let values = DEFAULTS.iter().map(|&(k, v)| (k, (v.to_string(), Source::Default))).collect();
        Self { values, preset: None }
    }
}

impl Settings {
    /// Builds the merged settings. `preset` may also come from the config
    /// file (`preset = name`); a flag wins over the file.
    pub fn resolve(
        preset_flag: Option<&str>,
        config: Option<&BTreeMap<String, String>>,
        flags: &BTreeMap<String, String>,
    ) -> Result<Self, CliError> {
        let mut s = Settings::default();
        let preset = preset_flag.map(str::to_string).or_else(|| config.and_then(|c| c.get("preset").cloned()));
        if let Some(name) = &preset {
            let p = presets::find(name).ok_or_else(|| {
                CliError::Usage(format!("unknown preset `{name}` (known: {})", presets::names().join(", ")))
            })?;
            for &(k, v) in p.values {
                s.set(k, v, Source::Preset(p.name.to_string()))?;
            }
            s.preset = Some(p.name.to_string());
        }
        if let Some(config) = config {
            for (k, v) in config.iter().filter(|(k, _)| k.as_str() != "preset") {
                s.set(k, v, Source::Config)?;
            }
        }
        for (k, v) in flags {
            s.set(k, v, Source::Flag)?;
        }
        Ok(s)
    }

    pub fn set(&mut self, key: &str, value: &str, source: Source) -> Result<(), CliError> {
        let &(k, _) = DEFAULTS
            .iter()
            .find(|(k, _)| *k == key)
            .ok_or_else(|| CliError::Usage(format!("unknown setting `{key}`")))?;
        self.values.insert(k, (value.trim().to_string(), source));
        Ok(())
    }

    pub fn get(&self, key: &str) -> &str {
        &self.values[key].0
    }

    pub fn source(&self, key: &str) -> &Source {
        &self.values[key].1
    }

    pub fn preset(&self) -> Option<&str> {
        self.preset.as_deref()
    }

    /// `(key, value, source)` in key order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &str, &Source)> {
        self.values.iter().map(|(k, (v, s))| (*k, v.as_str(), s))
    }
}

/// Parses a `key = value` config file; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key = value", lineno + 1)))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

/// Expands `v`, `v1,v2,...` or `start:stop:count`.
pub fn parse_range(s: &str, log: bool) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("bad range `{s}`: expected v, v1,v2,... or start:stop:count"));
    let parts: Vec<&str> = s.split(':').map(str::trim).collect();
    match parts.as_slice() {
        [single] => single.split(',').map(crate::parse_number).collect(),
        [lo, hi, n] => {
            let lo = crate::parse_number(lo)?;
            let hi = crate::parse_number(hi)?;
            let n: usize = n.parse().map_err(|_| bad())?;
            if n == 0 || !lo.is_finite() || !hi.is_finite() {
                return Err(bad());
            }
            if log {
                if lo <= 0.0 || hi <= 0.0 {
                    return Err(CliError::Usage(format!("log range `{s}` needs positive endpoints")));
                }
                Ok(unruh_min::dynamics::log_grid(lo, hi, n))
            } else {
                Ok(unruh_min::dynamics::linear_grid(lo, hi, n))
            }
        }
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn precedence() {
        let config = map(&[("preset", "fig1-blue"), ("w", "2"), ("c1", "0.3")]);
        let flags = map(&[("c1", "0.4")]);
        let s = Settings::resolve(None, Some(&config), &flags).unwrap();
        assert_eq!(s.preset(), Some("fig1-blue"));
        assert_eq!((s.get("c1"), s.source("c1")), ("0.4", &Source::Flag));
        assert_eq!((s.get("w"), s.source("w")), ("2", &Source::Config));
        assert_eq!(s.get("c2"), "0.85");
        assert_eq!(s.source("c2"), &Source::Preset("fig1-blue".into()));
        assert_eq!(s.source("oracle"), &Source::Default);
        let s = Settings::resolve(Some("fig1-red"), Some(&config), &flags).unwrap();
        assert_eq!(s.get("c3"), "0.5");
    }

    #[test]
    fn rejects_unknown() {
        assert!(Settings::resolve(Some("nope"), None, &BTreeMap::new()).is_err());
        assert!(Settings::resolve(None, None, &map(&[("c4", "1")])).is_err());
    }

    #[test]
    fn config_syntax() {
        let m = parse_config("# comment\n\n c1 = 0.5 # trailing\nT=1:2:3\n").unwrap();
        assert_eq!(m, map(&[("c1", "0.5"), ("T", "1:2:3")]));
        assert!(parse_config("c1 0.5").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0.5", false).unwrap(), vec![0.5]);
        assert_eq!(parse_range("0.1, 1,inf", true).unwrap(), vec![0.1, 1.0, f64::INFINITY]);
        assert_eq!(parse_range("0:1:3", false).unwrap(), vec![0.0, 0.5, 1.0]);
        let g = parse_range("0.01:100:5", true).unwrap();
        assert_eq!((g[0], g[4]), (0.01, 100.0));
        assert!((g[2] - 1.0).abs() < 1e-15);
        assert!(parse_range("0:1:3", true).is_err());
        assert!(parse_range("0:1:0", false).is_err());
        assert!(parse_range("a", false).is_err());
        assert!(parse_range("1:2", false).is_err());
    }
}
