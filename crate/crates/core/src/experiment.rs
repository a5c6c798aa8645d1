//! Multi-generation runs, the food sweep, and batch summaries.

use rayon::prelude::*;
use thiserror::Error;

use crate::config::{ConfigError, SimConfig};
use crate::engine::run_generation_ticks;
use crate::lifecycle::apply_lifecycle;
use crate::real::Real;
use crate::rng::make_rng;
use crate::world::{init_population, scatter_food, Arena, Entity, World};

/// Per-generation aggregates, sampled once per generation.
///
/// `food_remaining` is measured after the tick loop and before the lifecycle;
/// `population` and the trait averages are measured after the lifecycle, so
/// row `g` describes the population entering generation `g + 1`. Averages are
/// recorded as 0 when the population is 0 (the population column in the same
/// row disambiguates).
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationStats<F> {
    pub generation: u32,
    pub population: u32,
    pub avg_speed: F,
    pub avg_size: F,
    pub avg_cloning: F,
    pub food_remaining: u32,
    pub clones_born: u32,
    pub deaths: u32,
}

/// The full time series of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult<F> {
    pub config: SimConfig<F>,
    /// The seed that actually seeded the run (equals `config.seed`).
    pub seed: u64,
    /// One row per completed generation; truncated after extinction.
    pub series: Vec<GenerationStats<F>>,
    /// First generation whose post-lifecycle population was 0, if any.
    pub extinct_at: Option<u32>,
}

/// Aggregates for one food level of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct FoodLevelSummary<F> {
    pub food: u32,
    pub trials: u32,
    /// Fraction of trials that went extinct, in [0, 1].
    pub extinction_rate: F,
    /// Mean last-recorded population (0 for extinct runs).
    pub mean_final_population: F,
    /// Mean speed trend over the runs where the trend is defined, else 0.
    pub mean_speed_slope: F,
}

/// Sweep aggregates, one entry per food level in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary<F> {
    pub levels: Vec<FoodLevelSummary<F>>,
}

/// Sweep failures carry the (food, trial) coordinate of the offending run.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SweepError {
    #[error("sweep needs at least one food level")]
    NoFoodLevels,
    #[error("sweep needs at least one trial")]
    ZeroTrials,
    #[error("run (food={food}, trial={trial}) failed: {source}")]
    Run {
        food: u32,
        trial: u32,
        source: ConfigError,
    },
}

/// Speed-trend failure: fewer than two generations had a live population.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("speed trend needs at least two generations with a live population")]
pub struct TrendUndefined;

/// Run one full simulation: seed the stream, create the population once,
/// then per generation scatter food, run the tick loop, record stats, and
/// apply the lifecycle. Stops after the first extinct generation.
///
/// The result is a pure function of the config (including its seed).
pub fn run_simulation<F: Real>(config: SimConfig<F>) -> Result<SimulationResult<F>, ConfigError> {
    config.validate()?;
    let mut rng = make_rng(config.seed);
    let arena = Arena::new(config.arena_width, config.arena_height);
    let entities = init_population(&config, &mut rng)?;
    let mut world = World::new(arena, entities, Vec::new())
        .expect("freshly generated entities satisfy world invariants");

    let mut series = Vec::with_capacity(config.generations as usize);
    let mut extinct_at = None;
    for generation in 0..config.generations {
        world.generation_index = generation;
        world.food = scatter_food(&config, &mut rng)?;
        run_generation_ticks(&mut world, &config, &mut rng);
        let food_remaining = world.food.len() as u32;
        let outcome = apply_lifecycle(&mut world, &config, &mut rng);

        let population = world.entities.len() as u32;
        let (avg_speed, avg_size, avg_cloning) = trait_means(&world.entities);
        series.push(GenerationStats {
            generation,
            population,
            avg_speed,
            avg_size,
            avg_cloning,
            food_remaining,
            clones_born: outcome.clones.len() as u32,
            deaths: outcome.deaths.len() as u32,
        });
        if outcome.extinct {
            extinct_at = Some(generation);
            break;
        }
    }

    Ok(SimulationResult {
        seed: config.seed,
        config,
        series,
        extinct_at,
    })
}

/// Combine a sweep's base seed with a run's (food, trial) coordinate.
///
/// The mixing rule `base ^ (food * 1_000_003 + trial)` is part of the public
/// contract: a whole sweep is reproducible from one base seed. Trials are
/// numbered from 0.
pub fn mix_seed(base: u64, food: u32, trial: u32) -> u64 {
    base ^ (food as u64).wrapping_mul(1_000_003).wrapping_add(trial as u64)
}

/// Run the food sweep: every `(food level, trial)` combination of
/// `base_config`, each with its own mixed seed. Results are ordered by
/// (food level, trial) regardless of execution order; trials run in parallel.
pub fn run_sweep<F: Real>(
    base_config: &SimConfig<F>,
    food_levels: &[u32],
    trials: u32,
) -> Result<Vec<SimulationResult<F>>, SweepError> {
    if food_levels.is_empty() {
        return Err(SweepError::NoFoodLevels);
    }
    if trials == 0 {
        return Err(SweepError::ZeroTrials);
    }
    let runs: Vec<(u32, u32)> = food_levels
        .iter()
        .flat_map(|&food| (0..trials).map(move |trial| (food, trial)))
        .collect();
    runs.par_iter()
        .map(|&(food, trial)| {
            let config = SimConfig {
                start_food: food,
                seed: mix_seed(base_config.seed, food, trial),
                ..base_config.clone()
            };
            run_simulation(config).map_err(|source| SweepError::Run { food, trial, source })
        })
        .collect()
}

/// Ordinary least-squares slope of `avg_speed` against generation index,
/// restricted to generations with a live population.
pub fn speed_trend_slope<F: Real>(series: &[GenerationStats<F>]) -> Result<F, TrendUndefined> {
    let live: Vec<(F, F)> = series
        .iter()
        .filter(|s| s.population > 0)
        .map(|s| (F::from_usize(s.generation as usize), s.avg_speed))
        .collect();
    if live.len() < 2 {
        return Err(TrendUndefined);
    }
    let n = F::from_usize(live.len());
    let mean_x = live.iter().map(|&(x, _)| x).sum::<F>() / n;
    let mean_y = live.iter().map(|&(_, y)| y).sum::<F>() / n;
    let mut cov = F::zero();
    let mut var = F::zero();
    for &(x, y) in &live {
        cov = cov + (x - mean_x) * (y - mean_y);
        var = var + (x - mean_x) * (x - mean_x);
    }
    Ok(cov / var)
}

/// Aggregate sweep results by food level.
///
/// Extinction rate is the fraction of runs with `extinct_at` set; the final
/// population of an extinct run counts as 0; the mean speed slope averages
/// [`speed_trend_slope`] over the runs where it is defined (0 when none is).
pub fn summarize<F: Real>(results: &[SimulationResult<F>]) -> SweepSummary<F> {
    let mut by_food: std::collections::BTreeMap<u32, Vec<&SimulationResult<F>>> =
        std::collections::BTreeMap::new();
    for result in results {
        by_food.entry(result.config.start_food).or_default().push(result);
    }
    let levels = by_food
        .into_iter()
        .map(|(food, runs)| {
            let trials = runs.len();
            let extinct = runs.iter().filter(|r| r.extinct_at.is_some()).count();
            let final_pop_sum: F = runs
                .iter()
                .map(|r| F::from_usize(r.series.last().map_or(0, |s| s.population as usize)))
                .sum();
            let slopes: Vec<F> = runs
                .iter()
                .filter_map(|r| speed_trend_slope(&r.series).ok())
                .collect();
            let mean_speed_slope = if slopes.is_empty() {
                F::zero()
            } else {
                slopes.iter().copied().sum::<F>() / F::from_usize(slopes.len())
            };
            FoodLevelSummary {
                food,
                trials: trials as u32,
                extinction_rate: F::from_usize(extinct) / F::from_usize(trials),
                mean_final_population: final_pop_sum / F::from_usize(trials),
                mean_speed_slope,
            }
        })
        .collect();
    SweepSummary { levels }
}

fn trait_means<F: Real>(entities: &[Entity<F>]) -> (F, F, F) {
    if entities.is_empty() {
        return (F::zero(), F::zero(), F::zero());
    }
    let n = F::from_usize(entities.len());
    let mut speed = F::zero();
    let mut size = F::zero();
    let mut cloning = F::zero();
    for e in entities {
        speed = speed + e.traits.speed;
        size = size + e.traits.size;
        cloning = cloning + e.traits.cloning;
    }
    (speed / n, size / n, cloning / n)
}
