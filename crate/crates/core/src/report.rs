//! Fixed-format numeric output for CSV files.

/// 17 significant digits in scientific notation; round-trips every `f64`.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// One CSV line from numeric fields.
pub fn csv_row(values: &[f64]) -> String {
    let mut line = values.iter().map(|&v| fmt_float(v)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}
