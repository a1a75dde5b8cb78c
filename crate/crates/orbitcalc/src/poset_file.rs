//! Line-oriented poset files.
//!
//! ```text
//! # comment
//! group G2
//! orbit 0 special=1 pl=1
//! orbit A1 special=0 pl=1
//! cover 0 A1
//! ```
//!
//! Orbit names may contain parentheses, `+`, `,` and `:` but no whitespace.
//! `Ã` is written `A~`.

use std::fmt::Write as _;
use std::path::Path;

use orbitcalc_core::exceptional::{LabeledPoset, PosetBuilder, EXCEPTIONAL_GROUPS};

use crate::CliError;

#[derive(Debug)]
pub struct Loaded {
    pub poset: LabeledPoset,
    /// Human-readable notes on data that loaded but looks suspicious.
    pub warnings: Vec<String>,
}

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

fn flag(line: usize, token: &str, key: &str) -> Result<bool, CliError> {
    let value = token
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| err(line, format!("expected {key}=<0|1>, found {token:?}")))?;
    match value {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(err(line, format!("{key} must be 0 or 1, found {value:?}"))),
    }
}

pub fn parse_poset(text: &str) -> Result<Loaded, CliError> {
    let mut builder = PosetBuilder::new("");
    let mut group: Option<String> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or_default();
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            ["group", name] => {
                if group.is_some() {
                    return Err(err(line, "group declared twice"));
                }
                builder.set_name(name);
                group = Some(name.to_string());
            }
            ["orbit", name, a, b] => {
                let (special, pl) = if a.starts_with("special") {
                    (flag(line, a, "special")?, flag(line, b, "pl")?)
                } else {
                    (flag(line, b, "special")?, flag(line, a, "pl")?)
                };
                builder
                    .add_node(name, special, pl)
                    .map_err(|e| err(line, e.to_string()))?;
            }
            ["cover", lower, upper] => {
                builder
                    .add_cover(lower, upper)
                    .map_err(|e| err(line, e.to_string()))?;
            }
            [keyword, ..] => {
                return Err(err(
                    line,
                    format!("cannot parse {keyword:?} line: {:?}", raw.trim()),
                ));
            }
        }
    }
    let Some(group) = group else {
        return Err(err(0, "missing group line"));
    };
    let poset = builder.build()?;
    let mut warnings = Vec::new();
    if EXCEPTIONAL_GROUPS.contains(&group.as_str()) {
        for name in poset.pl_flag_mismatches() {
            warnings.push(format!(
                "orbit {name}: pl flag disagrees with the parenthesis rule for Bala-Carter labels"
            ));
        }
    }
    Ok(Loaded { poset, warnings })
}

pub fn load_poset(path: &Path) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_poset(&text)
}

/// Writes `poset` in the file format above, covers from its Hasse diagram.
pub fn write_poset(poset: &LabeledPoset) -> String {
    let mut out = String::new();
    writeln!(out, "group {}", poset.name()).unwrap();
    for n in poset.nodes() {
        writeln!(
            out,
            "orbit {} special={} pl={}",
            n.name, n.special as u8, n.pl as u8
        )
        .unwrap();
    }
    for &(a, b) in poset.covers() {
        writeln!(
            out,
            "cover {} {}",
            poset.nodes()[a].name,
            poset.nodes()[b].name
        )
        .unwrap();
    }
    out
}
