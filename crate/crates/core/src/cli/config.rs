use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::error::Error;
use crate::scalar::{BigFloat, PrecisionContext};

pub const PRECISION_ENV: &str = "JFRAC_PRECISION_BITS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "text" => Ok(Self::Text),
            _ => Err(Error::Parse(format!("unknown format {s:?} (json, csv, text)"))),
        }
    }
}

/// Settings shared by every command. Echoed into JSON reports, so a report
/// records exactly how it was produced.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub precision_bits: u32,
    /// Kept as the string it was given in, e.g. `1e-30`.
    pub rel_tolerance: String,
    pub max_terms: usize,
    pub truncation: usize,
    pub format: Format,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            precision_bits: 256,
            rel_tolerance: "1e-30".into(),
            max_terms: 10_000,
            truncation: 25,
            format: Format::Json,
            seed: 0,
        }
    }
}

/// Values set explicitly (by a flag or a config-file line).
#[derive(Clone, Debug, Default)]
pub struct Layer {
    pub precision_bits: Option<u32>,
    pub rel_tolerance: Option<String>,
    pub max_terms: Option<usize>,
    pub truncation: Option<usize>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
}

fn parsed<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, Error> {
    v.parse().map_err(|_| Error::Parse(format!("bad value for {key}: {v:?}")))
}

impl Layer {
    /// `key = value` lines; `#` starts a comment. Keys match the JSON config
    /// field names (`N` is accepted for `truncation`).
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut out = Self::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", no + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "precision_bits" => out.precision_bits = Some(parsed(k, v)?),
                "rel_tolerance" => {
                    BigFloat::parse_decimal(v, 128)?;
                    out.rel_tolerance = Some(v.to_string());
                }
                "max_terms" => out.max_terms = Some(parsed(k, v)?),
                "truncation" | "N" => out.truncation = Some(parsed(k, v)?),
                "format" => out.format = Some(v.parse()?),
                "seed" => out.seed = Some(parsed(k, v)?),
                _ => return Err(Error::Parse(format!("config line {}: unknown key {k:?}", no + 1))),
            }
        }
        Ok(out)
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

impl RunConfig {
    /// flags > config file > `JFRAC_PRECISION_BITS` > built-in defaults.
    pub fn resolve(flags: &Layer, file: &Layer, env: &BTreeMap<String, String>) -> Result<Self, Error> {
        let mut c = Self::default();
        if let Some(v) = env.get(PRECISION_ENV) {
            c.precision_bits = parsed(PRECISION_ENV, v)?;
        }
        for l in [file, flags] {
            if let Some(v) = l.precision_bits {
                c.precision_bits = v;
            }
            if let Some(v) = &l.rel_tolerance {
                c.rel_tolerance = v.clone();
            }
            if let Some(v) = l.max_terms {
                c.max_terms = v;
            }
            if let Some(v) = l.truncation {
                c.truncation = v;
            }
            if let Some(v) = l.format {
                c.format = v;
            }
            if let Some(v) = l.seed {
                c.seed = v;
            }
        }
        if !(16..=1 << 16).contains(&c.precision_bits) {
            return Err(Error::InvalidParams(format!("precision_bits must be in 16..=65536, got {}", c.precision_bits)));
        }
        Ok(c)
    }

    pub fn context(&self) -> Result<PrecisionContext, Error> {
        let mut ctx = PrecisionContext::new(self.precision_bits).with_tolerance(BigFloat::parse_decimal(&self.rel_tolerance, 128)?);
        ctx.max_terms = self.max_terms;
        Ok(ctx)
    }
}
