//! Deterministic file emission: CSV data with LF endings and fixed float
//! formatting, plus a `.meta` sidecar holding the resolved run parameters.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::CliError;

/// Floats are printed in scientific notation with 13 significant digits,
/// locale-independent.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.12e}")
}

pub struct CsvFile {
    writer: BufWriter<File>,
    rows: usize,
}

impl CsvFile {
    pub fn create(path: &Path, header: &str) -> Result<Self, CliError> {
        let file = File::create(path)
            .map_err(|e| CliError::Domain(format!("cannot create {}: {e}", path.display())))?;
        let mut writer = BufWriter::new(file);
        writer
            .write_all(header.as_bytes())
            .and_then(|_| writer.write_all(b"\n"))
            .map_err(|e| CliError::Domain(format!("write error on {}: {e}", path.display())))?;
        Ok(Self { writer, rows: 0 })
    }

    pub fn row(&mut self, fields: &[String]) -> Result<(), CliError> {
        let line = fields.join(",");
        self.writer
            .write_all(line.as_bytes())
            .and_then(|_| self.writer.write_all(b"\n"))
            .map_err(|e| CliError::Domain(format!("write error: {e}")))?;
        self.rows += 1;
        Ok(())
    }

    pub fn rows_written(&self) -> usize {
        self.rows
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        self.writer
            .flush()
            .map_err(|e| CliError::Domain(format!("flush error: {e}")))
    }
}

/// Writes `<data path>.meta` with the resolved parameters, one `key = value`
/// per line in the given order. No timestamps, so reruns are byte-identical.
pub fn write_meta(data_path: &Path, entries: &[(&str, String)]) -> Result<(), CliError> {
    let mut name = data_path.as_os_str().to_owned();
    name.push(".meta");
    let mut text = String::new();
    for (key, value) in entries {
        text.push_str(key);
        text.push_str(" = ");
        text.push_str(value);
        text.push('\n');
    }
    std::fs::write(&name, text)
        .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", data_path.display())))
}

/// Writes plain text, or prints it to stdout when no path is given.
pub fn write_text(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
