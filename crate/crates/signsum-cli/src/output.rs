//! Result formatting: 17-significant-digit decimals and the CSV row schema
//! shared by `minimax` and `table`.

use std::io::Write;
use std::path::Path;

pub const CSV_HEADER: &str = "d,n,k,method,value,seed,iterations,runtime_ms,certificate";

/// 17 significant digits; parses back to the identical f64.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone)]
pub struct ResultRow {
    pub d: usize,
    pub n: usize,
    pub k: usize,
    pub method: String,
    /// None marks a failed cell; serialized as `nan`.
    pub value: Option<f64>,
    pub seed: u64,
    pub iterations: u64,
    pub runtime_ms: u128,
    pub certificate: String,
}

impl ResultRow {
    pub fn to_csv(&self) -> String {
        let value = match self.value {
            Some(v) => fmt17(v),
            None => "nan".to_string(),
        };
        // certificates never contain commas; keep the row machine-splittable
        let certificate = self.certificate.replace(',', ";");
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.d,
            self.n,
            self.k,
            self.method,
            value,
            self.seed,
            self.iterations,
            self.runtime_ms,
            certificate
        )
    }
}

/// Appends rows, writing the header first when the file is new or empty.
pub fn append_csv(path: &Path, rows: &[ResultRow]) -> anyhow::Result<()> {
    let need_header = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let mut file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    if need_header {
        writeln!(file, "{CSV_HEADER}")?;
    }
    for row in rows {
        writeln!(file, "{}", row.to_csv())?;
    }
    Ok(())
}

/// Writes a fresh CSV with header (table output overwrites).
pub fn write_csv(path: &Path, rows: &[ResultRow]) -> anyhow::Result<()> {
    let mut body = String::from(CSV_HEADER);
    body.push('\n');
    for row in rows {
        body.push_str(&row.to_csv());
        body.push('\n');
    }
    std::fs::write(path, body)?;
    Ok(())
}
