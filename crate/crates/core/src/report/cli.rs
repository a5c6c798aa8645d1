//! The `evosim` command-line interface.
//!
//! Exit codes: 0 success, 1 configuration/usage error, 2 I/O error.
//! Command-line flags override config-file values, which override defaults.

use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::config::{ConfigError, SimConfig};
use crate::experiment::{run_simulation, run_sweep, summarize, SimulationResult, SweepError};
use crate::report::config_doc::{parse_config, ConfigDocError};
use crate::report::csv::{parse_csv, write_csv, write_summary_csv, CsvError};
use crate::report::svg::{render_chart, ChartError, ChartSpec, Series};

#[derive(Parser)]
#[command(
    name = "evosim",
    version,
    about = "Natural-selection simulator for foraging entities",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one simulation; writes run.csv and chart.svg into the output directory
    Run {
        /// Configuration file ("key = value" lines)
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
        /// Override the seed
        #[arg(long, value_name = "N")]
        seed: Option<u64>,
        /// Override the starting food count
        #[arg(long, value_name = "N")]
        food: Option<u32>,
        /// Override the generation count
        #[arg(long, value_name = "N")]
        generations: Option<u32>,
        /// Output directory
        #[arg(long, value_name = "DIR", default_value = ".")]
        out: PathBuf,
    },
    /// Run the food sweep; writes per-run CSVs/charts and summary.csv
    Sweep {
        /// Configuration file ("key = value" lines)
        #[arg(long, value_name = "PATH")]
        config: Option<PathBuf>,
        /// Override the base seed (each run mixes in its food level and trial index)
        #[arg(long, value_name = "N")]
        seed: Option<u64>,
        /// Comma-separated starting food levels
        #[arg(long, value_name = "LIST", value_delimiter = ',', default_value = "100,200,300")]
        foods: Vec<u32>,
        /// Trials per food level (trial indices start at 0)
        #[arg(long, value_name = "N", default_value_t = 3)]
        trials: u32,
        /// Output directory
        #[arg(long, value_name = "DIR", default_value = ".")]
        out: PathBuf,
    },
    /// Re-render a chart from an existing run CSV
    Plot {
        /// Input CSV (needs a "generation" column for the x axis)
        #[arg(long = "in", value_name = "CSV")]
        input: PathBuf,
        /// Output SVG
        #[arg(long, value_name = "SVG")]
        out: PathBuf,
        /// Comma-separated column names to plot (default: every column except "generation")
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        columns: Option<Vec<String>>,
    },
}

enum CliError {
    /// Bad configuration, flags, or input content. Exit 1.
    Config(String),
    /// Filesystem failure. Exit 2.
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Io(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Io(m) => m,
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<ConfigDocError> for CliError {
    fn from(e: ConfigDocError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<CsvError> for CliError {
    fn from(e: CsvError) -> Self {
        CliError::Config(e.to_string())
    }
}

impl From<ChartError> for CliError {
    fn from(e: ChartError) -> Self {
        CliError::Config(e.to_string())
    }
}

/// Entry point taking the arguments after the program name; returns the exit code.
pub fn cli_main(args: &[String]) -> i32 {
    let argv = std::iter::once("evosim".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return 0;
            }
            eprint!("{err}");
            return 1;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Run {
            config,
            seed,
            food,
            generations,
            out,
        } => {
            let mut cfg = load_config(config.as_deref())?;
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            if let Some(food) = food {
                cfg.start_food = food;
            }
            if let Some(generations) = generations {
                cfg.generations = generations;
            }
            cfg.validate()?;
            let result = run_simulation(cfg)?;
            create_dir(&out)?;
            write_file(&out.join("run.csv"), write_csv(&result).as_bytes())?;
            let chart = render_chart(&run_chart_spec(&result))?;
            write_file(&out.join("chart.svg"), chart.as_bytes())?;
            Ok(())
        }
        Command::Sweep {
            config,
            seed,
            foods,
            trials,
            out,
        } => {
            let mut cfg = load_config(config.as_deref())?;
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            cfg.validate()?;
            let results = run_sweep(&cfg, &foods, trials)?;
            create_dir(&out)?;
            let coords = foods
                .iter()
                .flat_map(|&food| (0..trials).map(move |trial| (food, trial)));
            for ((food, trial), result) in coords.zip(&results) {
                let stem = format!("food{food}_trial{trial}");
                write_file(&out.join(format!("{stem}.csv")), write_csv(result).as_bytes())?;
                let chart = render_chart(&run_chart_spec(result))?;
                write_file(&out.join(format!("{stem}.svg")), chart.as_bytes())?;
            }
            let summary = summarize(&results);
            write_file(&out.join("summary.csv"), write_summary_csv(&summary).as_bytes())?;
            Ok(())
        }
        Command::Plot { input, out, columns } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| CliError::Io(format!("{}: {e}", input.display())))?;
            let table = parse_csv(&text)?;
            let x_col = table
                .column("generation")
                .ok_or_else(|| CliError::Config("input CSV has no 'generation' column".into()))?;
            let wanted: Vec<String> = match columns {
                Some(cols) => cols,
                None => table
                    .columns
                    .iter()
                    .filter(|c| c.as_str() != "generation")
                    .cloned()
                    .collect(),
            };
            let mut series = Vec::with_capacity(wanted.len());
            for name in wanted {
                let idx = table
                    .column(&name)
                    .ok_or_else(|| CliError::Config(format!("unknown column '{name}'")))?;
                series.push(Series {
                    name,
                    points: table
                        .rows
                        .iter()
                        .map(|row| (row[x_col] as i64, row[idx]))
                        .collect(),
                });
            }
            let title = input
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "chart".to_string());
            let spec = ChartSpec {
                title,
                x_label: "generation".into(),
                y_label: "value".into(),
                series,
                width: 900,
                height: 540,
            };
            let svg = render_chart(&spec)?;
            write_file(&out, svg.as_bytes())?;
            Ok(())
        }
    }
}

fn load_config(path: Option<&Path>) -> Result<SimConfig<f64>, CliError> {
    match path {
        None => Ok(SimConfig::default()),
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(parse_config(&text)?)
        }
    }
}

fn create_dir(path: &Path) -> Result<(), CliError> {
    fs::create_dir_all(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// The standard four-series chart for one run: trait averages and population
/// against generation.
fn run_chart_spec(result: &SimulationResult<f64>) -> ChartSpec<f64> {
    let pick = |f: fn(&crate::experiment::GenerationStats<f64>) -> f64| {
        result
            .series
            .iter()
            .map(|s| (s.generation as i64, f(s)))
            .collect::<Vec<_>>()
    };
    ChartSpec {
        title: format!(
            "food={} seed={} ({} generations)",
            result.config.start_food,
            result.seed,
            result.series.len()
        ),
        x_label: "generation".into(),
        y_label: "value".into(),
        series: vec![
            Series { name: "avg_speed".into(), points: pick(|s| s.avg_speed) },
            Series { name: "avg_size".into(), points: pick(|s| s.avg_size) },
            Series { name: "avg_cloning".into(), points: pick(|s| s.avg_cloning) },
            Series { name: "population".into(), points: pick(|s| s.population as f64) },
        ],
        width: 900,
        height: 540,
    }
}
