//! Link files: a small TOML document.
//!
//! ```toml
//! name = "WHITEHEAD"
//! linking = [[0, 0], [0, 0]]
//! coefficients = ["-3", "-5/2"]
//! ```
//!
//! `name` is optional; when present `linking` may be omitted and defaults to
//! the builtin data. Coefficients are `"p/q"`, `"p"`, `"inf"` or `"-"`
//! (unfilled). [`FramedLink::to_link_file`] prints exactly this layout, so
//! printing a parsed canonical file reproduces it byte for byte.

use serde::Deserialize;

use super::{BuiltinLink, Coefficient, FramedLink};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLinkFile {
    name: Option<String>,
    linking: Option<Vec<Vec<i64>>>,
    coefficients: Vec<String>,
}

impl FramedLink {
    pub fn from_link_file(text: &str) -> Result<Self> {
        let raw: RawLinkFile =
            toml::from_str(text).map_err(|e| Error::Parse { what: "link file", input: e.message().to_string() })?;
        let name = raw.name.as_deref().map(BuiltinLink::from_name).transpose()?;
        let linking = match (raw.linking, name) {
            (Some(l), _) => l,
            (None, Some(b)) => b.linking(),
            (None, None) => return Err(Error::InvalidLink("linking matrix required without a builtin name".into())),
        };
        let coefficients = raw.coefficients.iter().map(|s| s.parse::<Coefficient>()).collect::<Result<Vec<_>>>()?;
        let link = FramedLink { name, linking, coefficients };
        link.validate()?;
        Ok(link)
    }

    pub fn to_link_file(&self) -> String {
        let mut out = String::new();
        if let Some(b) = self.name {
            out.push_str(&format!("name = \"{}\"\n", b.name()));
        }
        let rows: Vec<String> = self
            .linking
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        out.push_str(&format!("linking = [{}]\n", rows.join(", ")));
        let coeffs: Vec<String> = self.coefficients.iter().map(|c| format!("\"{c}\"")).collect();
        out.push_str(&format!("coefficients = [{}]\n", coeffs.join(", ")));
        out
    }
}
