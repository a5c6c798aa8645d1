//! Run configuration: every tunable of the simulator in one validated struct.

use thiserror::Error;

use crate::real::Real;

/// All tunables for one simulation run.
///
/// Fields are public; call [`SimConfig::validate`] after hand-editing.
/// Trait bounds are configuration, not constants: the defaults bracket the
/// trait ranges the sweep experiments explore.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig<F> {
    /// Seed for the run's [`crate::RngStream`].
    pub seed: u64,
    /// Entities created at generation 0.
    pub start_population: u32,
    /// Food items scattered at the start of every generation.
    pub start_food: u32,
    /// Maximum number of generations to run.
    pub generations: u32,
    /// Movement/collection ticks per generation.
    pub ticks_per_generation: u32,
    /// Arena width in arena-units.
    pub arena_width: F,
    /// Arena height in arena-units.
    pub arena_height: F,
    /// Lower bound for the speed trait. Must be >= 0.
    pub speed_min: F,
    /// Upper bound for the speed trait.
    pub speed_max: F,
    /// Lower bound for the size trait. Must be > 0 (size sets the collection radius).
    pub size_min: F,
    /// Upper bound for the size trait.
    pub size_max: F,
    /// Probability that a clone mutates, in [0, 1].
    pub mutation_chance: F,
    /// Half-width of the uniform speed perturbation.
    pub speed_mut_delta: F,
    /// Half-width of the uniform size perturbation.
    pub size_mut_delta: F,
    /// Half-width of the uniform cloning-probability perturbation.
    pub cloning_mut_delta: F,
    /// Maximum per-tick heading change, radians.
    pub max_turn: F,
}

/// Configuration validation failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("{field} must be at least 1")]
    ZeroCount { field: &'static str },
    #[error("{field} must be a positive finite number (got {value})")]
    NotPositive { field: &'static str, value: String },
    #[error("{field} must be finite and non-negative (got {value})")]
    Negative { field: &'static str, value: String },
    #[error("{min_field} ({min_value}) exceeds {max_field} ({max_value})")]
    BoundsReversed {
        min_field: &'static str,
        min_value: String,
        max_field: &'static str,
        max_value: String,
    },
    #[error("mutation_chance must lie in [0, 1] (got {value})")]
    ChanceOutOfRange { value: String },
}

impl<F: Real> Default for SimConfig<F> {
    /// The frozen defaults used by the sweep experiments.
    fn default() -> Self {
        SimConfig {
            seed: 0,
            start_population: 10,
            start_food: 300,
            generations: 50,
            ticks_per_generation: 500,
            arena_width: F::from_f64(DEFAULT_ARENA_SIDE),
            arena_height: F::from_f64(DEFAULT_ARENA_SIDE),
            speed_min: F::from_f64(0.1),
            speed_max: F::from_f64(3.0),
            size_min: F::from_f64(1.0),
            size_max: F::from_f64(10.0),
            mutation_chance: F::from_f64(0.5),
            speed_mut_delta: F::from_f64(0.3),
            size_mut_delta: F::from_f64(1.0),
            cloning_mut_delta: F::from_f64(0.1),
            max_turn: F::FRAC_PI_4(),
        }
    }
}

/// Default arena side length, arena-units.
///
/// Calibrated once against the food-sweep experiments so that 100 starting
/// food items are scarce enough to starve most random populations while 300
/// reliably sustain one, then frozen. See `configs/default.cfg`.
pub const DEFAULT_ARENA_SIDE: f64 = 260.0;

impl<F: Real> SimConfig<F> {
    /// Check every invariant; returns the first violation found.
    ///
    /// Bound pairs may be degenerate (`min == max` pins the trait) but never
    /// reversed.
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (field, value) in [
            ("start_population", self.start_population),
            ("start_food", self.start_food),
            ("generations", self.generations),
            ("ticks_per_generation", self.ticks_per_generation),
        ] {
            if value == 0 {
                return Err(ConfigError::ZeroCount { field });
            }
        }
        for (field, value) in [
            ("arena_width", self.arena_width),
            ("arena_height", self.arena_height),
            ("size_min", self.size_min),
            ("speed_mut_delta", self.speed_mut_delta),
            ("size_mut_delta", self.size_mut_delta),
            ("cloning_mut_delta", self.cloning_mut_delta),
        ] {
            if !(value.is_finite() && value > F::zero()) {
                return Err(ConfigError::NotPositive {
                    field,
                    value: value.to_string(),
                });
            }
        }
        for (field, value) in [("speed_min", self.speed_min), ("max_turn", self.max_turn)] {
            if !(value.is_finite() && value >= F::zero()) {
                return Err(ConfigError::Negative {
                    field,
                    value: value.to_string(),
                });
            }
        }
        for (min_field, min_value, max_field, max_value) in [
            ("speed_min", self.speed_min, "speed_max", self.speed_max),
            ("size_min", self.size_min, "size_max", self.size_max),
        ] {
            if !max_value.is_finite() || min_value > max_value {
                return Err(ConfigError::BoundsReversed {
                    min_field,
                    min_value: min_value.to_string(),
                    max_field,
                    max_value: max_value.to_string(),
                });
            }
        }
        if !(self.mutation_chance >= F::zero() && self.mutation_chance <= F::one()) {
            return Err(ConfigError::ChanceOutOfRange {
                value: self.mutation_chance.to_string(),
            });
        }
        Ok(())
    }
}
