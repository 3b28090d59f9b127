//! Rendering of command results as text, JSON or CSV.

use serde_json::Value;

use crate::config::Format;
use crate::error::CliError;

/// The result of one command in all three encodings.
#[derive(Clone, Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub csv_header: Vec<String>,
    pub csv_rows: Vec<Vec<String>>,
}

impl Report {
    /// Encodes the report; every encoding ends with a newline.
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                Ok(s)
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)
                    .map_err(|e| CliError::Io(std::io::Error::other(e)))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.csv_header).map_err(csv_error)?;
                for row in &self.csv_rows {
                    w.write_record(row).map_err(csv_error)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
                String::from_utf8(bytes).map_err(|e| CliError::Io(std::io::Error::other(e)))
            }
        }
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

/// Width of a string in terminal columns, ignoring combining marks.
pub fn display_width(s: &str) -> usize {
    s.chars().filter(|c| !('\u{0300}'..='\u{036F}').contains(c)).count()
}

/// Left-aligned text table with a header row and two-space gutters.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let ncols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| display_width(h)).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(ncols) {
            widths[i] = widths[i].max(display_width(cell));
        }
    }
    let line = |cells: Vec<&str>| {
        let mut out = String::new();
        for (i, cell) in cells.iter().enumerate() {
            out.push_str(cell);
            if i + 1 < cells.len() {
                out.push_str(&" ".repeat(widths[i] - display_width(cell) + 2));
            }
        }
        out.trim_end().to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}
