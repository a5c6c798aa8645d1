//! CSV export of run series and sweep summaries.

use std::fmt::Write as _;

use thiserror::Error;

use crate::experiment::{SimulationResult, SweepSummary};
use crate::real::Real;

/// Column order of a run CSV; the header line is byte-stable.
pub const RUN_HEADER: &str =
    "generation,population,avg_speed,avg_size,avg_cloning,food_remaining,clones_born,deaths";

/// Column order of a sweep summary CSV.
pub const SUMMARY_HEADER: &str = "food,trials,extinction_rate,mean_final_population,mean_speed_slope";

/// Render a run's series as CSV: the fixed header, one row per recorded
/// generation in order, reals with six fixed decimal places, `\n` endings.
pub fn write_csv<F: Real>(result: &SimulationResult<F>) -> String {
    let mut out = String::with_capacity(64 * (result.series.len() + 1));
    out.push_str(RUN_HEADER);
    out.push('\n');
    for row in &result.series {
        writeln!(
            out,
            "{},{},{:.6},{:.6},{:.6},{},{},{}",
            row.generation,
            row.population,
            row.avg_speed,
            row.avg_size,
            row.avg_cloning,
            row.food_remaining,
            row.clones_born,
            row.deaths
        )
        .expect("writing to a String cannot fail");
    }
    out
}

/// Render sweep aggregates, one row per food level.
pub fn write_summary_csv<F: Real>(summary: &SweepSummary<F>) -> String {
    let mut out = String::new();
    out.push_str(SUMMARY_HEADER);
    out.push('\n');
    for level in &summary.levels {
        writeln!(
            out,
            "{},{},{:.6},{:.6},{:.6}",
            level.food,
            level.trials,
            level.extinction_rate,
            level.mean_final_population,
            level.mean_speed_slope
        )
        .expect("writing to a String cannot fail");
    }
    out
}

/// A parsed CSV of numeric columns.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub columns: Vec<String>,
    /// Row-major cells, one `Vec<f64>` per data row.
    pub rows: Vec<Vec<f64>>,
}

impl CsvTable {
    /// Index of a named column.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }
}

/// CSV parse failures (1-based line numbers).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CsvError {
    #[error("CSV is empty: missing header line")]
    MissingHeader,
    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: '{value}' is not a number")]
    BadNumber { line: usize, value: String },
}

/// Parse a numeric CSV of the kind [`write_csv`] produces.
pub fn parse_csv(text: &str) -> Result<CsvTable, CsvError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(CsvError::MissingHeader)?;
    if header.trim().is_empty() {
        return Err(CsvError::MissingHeader);
    }
    let columns: Vec<String> = header.split(',').map(|c| c.trim().to_string()).collect();
    let mut rows = Vec::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = raw.split(',').collect();
        if cells.len() != columns.len() {
            return Err(CsvError::RaggedRow {
                line,
                expected: columns.len(),
                found: cells.len(),
            });
        }
        let mut row = Vec::with_capacity(cells.len());
        for cell in cells {
            let value: f64 = cell.trim().parse().map_err(|_| CsvError::BadNumber {
                line,
                value: cell.trim().to_string(),
            })?;
            row.push(value);
        }
        rows.push(row);
    }
    Ok(CsvTable { columns, rows })
}
