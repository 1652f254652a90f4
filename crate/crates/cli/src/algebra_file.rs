//! The TOML algebra description accepted by every command.

use std::path::Path;

use mgs_core::{AlgebraSpec, Error, Result};
use serde::Deserialize;

#[derive(Debug, Deserialize, PartialEq)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum AlgebraFile {
    #[serde(rename = "nakayama")]
    Nakayama {
        #[serde(default)]
        cyclic: bool,
        kupisch: Vec<usize>,
    },
    #[serde(rename = "typeA")]
    TypeA { orientation: String },
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Spec(e.to_string().trim_end().to_string()))
    }

    pub fn into_spec(self) -> Result<AlgebraSpec> {
        match self {
            AlgebraFile::Nakayama { cyclic, kupisch } => AlgebraSpec::nakayama(cyclic, kupisch),
            AlgebraFile::TypeA { orientation } => AlgebraSpec::type_a(&orientation),
        }
    }
}

pub fn load(path: &Path) -> Result<AlgebraSpec> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    AlgebraFile::parse(&text)
        .map_err(|e| match e {
            Error::Spec(msg) => Error::Spec(format!("{}: {msg}", path.display())),
            other => other,
        })?
        .into_spec()
}
