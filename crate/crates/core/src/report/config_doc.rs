//! Plain `key = value` configuration documents.
//!
//! One assignment per line, keys named exactly after [`SimConfig`] fields,
//! `#` starts a comment (full-line or trailing). Unspecified keys keep their
//! defaults; unknown keys are rejected. Every error carries the 1-based line
//! number it was found on.

use std::collections::HashMap;

use thiserror::Error;

use crate::config::{ConfigError, SimConfig};
use crate::real::Real;

/// Parse failures, each tied to a source line where one exists.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigDocError {
    #[error("line {line}: expected 'key = value'")]
    MalformedLine { line: usize },
    #[error("line {line}: unknown key '{key}'")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: invalid value '{value}' for {key}")]
    InvalidValue {
        line: usize,
        key: &'static str,
        value: String,
    },
    #[error("line {line}: {source}")]
    InvalidAt {
        line: usize,
        source: ConfigError,
    },
    #[error(transparent)]
    Invalid(ConfigError),
}

/// All recognized keys, in serialization order.
const KEYS: [&str; 16] = [
    "seed",
    "start_population",
    "start_food",
    "generations",
    "ticks_per_generation",
    "arena_width",
    "arena_height",
    "speed_min",
    "speed_max",
    "size_min",
    "size_max",
    "mutation_chance",
    "speed_mut_delta",
    "size_mut_delta",
    "cloning_mut_delta",
    "max_turn",
];

/// Parse a configuration document on top of the defaults, then validate.
pub fn parse_config<F: Real>(text: &str) -> Result<SimConfig<F>, ConfigDocError> {
    let mut config = SimConfig::<F>::default();
    let mut set_on: HashMap<&'static str, usize> = HashMap::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or(ConfigDocError::MalformedLine { line })?;
        let key = key.trim();
        let value = value.trim();
        let canonical = KEYS
            .iter()
            .copied()
            .find(|k| *k == key)
            .ok_or_else(|| ConfigDocError::UnknownKey {
                line,
                key: key.to_string(),
            })?;
        apply(&mut config, canonical, value, line)?;
        set_on.insert(canonical, line);
    }

    config.validate().map_err(|err| attribute(err, &set_on))?;
    Ok(config)
}

/// Render a config as a document [`parse_config`] maps back to the same values.
pub fn serialize_config<F: Real>(config: &SimConfig<F>) -> String {
    let mut out = String::new();
    for key in KEYS {
        let value = match key {
            "seed" => config.seed.to_string(),
            "start_population" => config.start_population.to_string(),
            "start_food" => config.start_food.to_string(),
            "generations" => config.generations.to_string(),
            "ticks_per_generation" => config.ticks_per_generation.to_string(),
            "arena_width" => config.arena_width.to_string(),
            "arena_height" => config.arena_height.to_string(),
            "speed_min" => config.speed_min.to_string(),
            "speed_max" => config.speed_max.to_string(),
            "size_min" => config.size_min.to_string(),
            "size_max" => config.size_max.to_string(),
            "mutation_chance" => config.mutation_chance.to_string(),
            "speed_mut_delta" => config.speed_mut_delta.to_string(),
            "size_mut_delta" => config.size_mut_delta.to_string(),
            "cloning_mut_delta" => config.cloning_mut_delta.to_string(),
            "max_turn" => config.max_turn.to_string(),
            _ => unreachable!(),
        };
        out.push_str(key);
        out.push_str(" = ");
        out.push_str(&value);
        out.push('\n');
    }
    out
}

fn apply<F: Real>(
    config: &mut SimConfig<F>,
    key: &'static str,
    value: &str,
    line: usize,
) -> Result<(), ConfigDocError> {
    let bad = || ConfigDocError::InvalidValue {
        line,
        key,
        value: value.to_string(),
    };
    match key {
        "seed" => config.seed = value.parse().map_err(|_| bad())?,
        "start_population" => config.start_population = value.parse().map_err(|_| bad())?,
        "start_food" => config.start_food = value.parse().map_err(|_| bad())?,
        "generations" => config.generations = value.parse().map_err(|_| bad())?,
        "ticks_per_generation" => config.ticks_per_generation = value.parse().map_err(|_| bad())?,
        _ => {
            let real = value
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .map(F::from_f64)
                .ok_or_else(bad)?;
            match key {
                "arena_width" => config.arena_width = real,
                "arena_height" => config.arena_height = real,
                "speed_min" => config.speed_min = real,
                "speed_max" => config.speed_max = real,
                "size_min" => config.size_min = real,
                "size_max" => config.size_max = real,
                "mutation_chance" => config.mutation_chance = real,
                "speed_mut_delta" => config.speed_mut_delta = real,
                "size_mut_delta" => config.size_mut_delta = real,
                "cloning_mut_delta" => config.cloning_mut_delta = real,
                "max_turn" => config.max_turn = real,
                _ => unreachable!(),
            }
        }
    }
    Ok(())
}

/// Point a post-merge validation error at the document line that set one of
/// the fields involved, when there is such a line.
fn attribute(err: ConfigError, set_on: &HashMap<&'static str, usize>) -> ConfigDocError {
    let fields: Vec<&'static str> = match &err {
        ConfigError::ZeroCount { field }
        | ConfigError::NotPositive { field, .. }
        | ConfigError::Negative { field, .. } => vec![field],
        ConfigError::BoundsReversed {
            min_field,
            max_field,
            ..
        } => vec![min_field, max_field],
        ConfigError::ChanceOutOfRange { .. } => vec!["mutation_chance"],
    };
    match fields.iter().find_map(|f| set_on.get(f)) {
        Some(&line) => ConfigDocError::InvalidAt { line, source: err },
        None => ConfigDocError::Invalid(err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::arb_config;
    use proptest::prelude::*;

    #[test]
    fn empty_document_yields_full_defaults() {
        let config: SimConfig<f64> = parse_config("").unwrap();
        assert_eq!(config, SimConfig::default());
        assert_eq!(config.start_population, 10);
        assert_eq!(config.generations, 50);
    }

    #[test]
    fn single_override_keeps_other_defaults() {
        let config: SimConfig<f64> = parse_config("start_food = 300\n").unwrap();
        assert_eq!(config.start_food, 300);
        assert_eq!(
            SimConfig { start_food: 300, ..SimConfig::<f64>::default() },
            config
        );
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let doc = "# a comment\n\n  seed = 9 # trailing note\n\t\n";
        let config: SimConfig<f64> = parse_config(doc).unwrap();
        assert_eq!(config.seed, 9);
    }

    #[test]
    fn bound_violation_reports_the_offending_line() {
        let err = parse_config::<f64>("# intro\nspeed_min = 5.0\n").unwrap_err();
        match err {
            ConfigDocError::InvalidAt { line, source } => {
                assert_eq!(line, 2);
                assert!(matches!(source, ConfigError::BoundsReversed { .. }));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unknown_key_reports_line() {
        let err = parse_config::<f64>("seed = 1\nspped = 2\n").unwrap_err();
        assert_eq!(
            err,
            ConfigDocError::UnknownKey { line: 2, key: "spped".into() }
        );
    }

    #[test]
    fn malformed_line_reports_line() {
        let err = parse_config::<f64>("seed 1\n").unwrap_err();
        assert_eq!(err, ConfigDocError::MalformedLine { line: 1 });
    }

    #[test]
    fn non_numeric_value_reports_line_and_key() {
        let err = parse_config::<f64>("start_food = many\n").unwrap_err();
        assert_eq!(
            err,
            ConfigDocError::InvalidValue { line: 1, key: "start_food", value: "many".into() }
        );
    }

    #[test]
    fn non_finite_reals_are_rejected() {
        assert!(parse_config::<f64>("arena_width = inf\n").is_err());
        assert!(parse_config::<f64>("speed_max = NaN\n").is_err());
    }

    #[test]
    fn later_assignment_wins() {
        let config: SimConfig<f64> = parse_config("seed = 1\nseed = 2\n").unwrap();
        assert_eq!(config.seed, 2);
    }

    proptest! {
        #[test]
        fn round_trip_preserves_every_field(cfg in arb_config()) {
            let doc = serialize_config(&cfg);
            let back: SimConfig<f64> = parse_config(&doc).unwrap();
            prop_assert_eq!(back, cfg);
        }
    }
}
