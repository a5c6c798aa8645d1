//! Configuration files, CSV export, SVG charts, and the command-line front end.

pub mod cli;
pub mod config_doc;
pub mod csv;
pub mod svg;

pub use cli::cli_main;
pub use config_doc::{parse_config, serialize_config, ConfigDocError};
pub use csv::{parse_csv, write_csv, write_summary_csv, CsvError, CsvTable};
pub use svg::{render_chart, ChartError, ChartSpec, Series};
