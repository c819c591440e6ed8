//! Lens space fillings of the Whitehead link exterior, shipped as data.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lensspace::{LensSpace, Slope};

const EMBEDDED: &str = include_str!("../../data/whitehead_lens_fillings.json");
const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FillingTableRow {
    /// `W(fixed, base + 1/k) = L(p[0]·k + p[1], q[0]·k + q[1])`.
    Twisted { fixed: i64, base: i64, p: [i64; 2], q: [i64; 2] },
    /// `W(p/q, ∞) = L(p, q)`.
    Meridian,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FillingTable {
    pub schema_version: u32,
    #[serde(default)]
    pub description: String,
    pub rows: Vec<FillingTableRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableMatch {
    pub row: usize,
    /// Recovered twist parameter, for twisted rows.
    pub k: Option<i64>,
    pub space: LensSpace,
}

impl FillingTable {
    pub fn from_json(s: &str) -> Result<Self> {
        let t: FillingTable = serde_json::from_str(s).map_err(|e| Error::FillingTable(e.to_string()))?;
        if t.schema_version != SCHEMA_VERSION {
            return Err(Error::FillingTable(format!("unsupported schema_version {}", t.schema_version)));
        }
        Ok(t)
    }

    /// The table bundled with the crate.
    pub fn embedded() -> &'static FillingTable {
        static TABLE: OnceLock<FillingTable> = OnceLock::new();
        TABLE.get_or_init(|| FillingTable::from_json(EMBEDDED).expect("embedded filling table is valid"))
    }

    /// First row describing `W(α, β)`, trying both component orders.
    pub fn lookup(&self, alpha: Slope, beta: Slope) -> Result<Option<TableMatch>> {
        for (row, r) in self.rows.iter().enumerate() {
            for (a, b) in [(alpha, beta), (beta, alpha)] {
                if let Some(m) = r.matches(a, b)? {
                    return Ok(Some(TableMatch { row, ..m }));
                }
            }
        }
        Ok(None)
    }
}

impl FillingTableRow {
    fn matches(&self, a: Slope, b: Slope) -> Result<Option<TableMatch>> {
        match *self {
            FillingTableRow::Twisted { fixed, base, p, q } => {
                if a != Slope::integer(fixed) {
                    return Ok(None);
                }
                let Some(k) = b.sub(Slope::integer(base)).recip().as_integer() else {
                    return Ok(None);
                };
                let space = LensSpace::new(p[0] * k + p[1], q[0] * k + q[1])?;
                Ok(Some(TableMatch { row: 0, k: Some(k), space }))
            }
            FillingTableRow::Meridian => {
                if !b.is_infinite() {
                    return Ok(None);
                }
                let space = LensSpace::new(a.num(), a.den())?;
                Ok(Some(TableMatch { row: 0, k: None, space }))
            }
        }
    }
}
