//! Element files: one element per line in `a1,...,an` form, blank lines
//! and `#` comments ignored.

use std::fs;
use std::io::Write;
use std::path::Path;

use rookbruhat_core::element::parse_one_line;
use rookbruhat_core::OneLine;

use crate::{Error, Result};

/// Parses element-file text. `origin` labels errors.
pub fn parse_elements(text: &str, origin: &str) -> Result<Vec<OneLine>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let x = parse_one_line(line).map_err(|source| Error::Element {
            path: origin.to_string(),
            line: k + 1,
            source,
        })?;
        out.push(x);
    }
    Ok(out)
}

pub fn read_elements(path: &Path) -> Result<Vec<OneLine>> {
    let text = fs::read_to_string(path)?;
    parse_elements(&text, &path.display().to_string())
}

pub fn write_elements<W: Write>(mut w: W, elements: impl IntoIterator<Item = OneLine>) -> Result<()> {
    for x in elements {
        writeln!(w, "{x}")?;
    }
    Ok(())
}
