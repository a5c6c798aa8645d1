//! evosim — a deterministic, seed-reproducible simulator of natural selection
//! among asexually cloning foraging entities.
//!
//! Entities with heritable speed, size, and cloning-probability traits random-walk
//! across a bounded arena collecting food. At the end of each generation an entity
//! survives iff it collected at least its survival cost, and sufficiently fed
//! survivors may produce one mutated clone. The crate also ships the food-sweep
//! experiment runner and the CSV/SVG reporting used to inspect runs.
//!
//! All simulation math is generic over the scalar type via [`Real`]; the `*64`
//! aliases below fix `f64`, which is what the CLI and the test suite use.

pub mod config;
pub mod engine;
pub mod experiment;
pub mod lifecycle;
pub mod real;
pub mod report;
pub mod rng;
pub mod world;

#[cfg(test)]
pub(crate) mod test_support;

pub use config::SimConfig;
pub use real::Real;
pub use rng::{RngStream, UnitRng};
pub use world::{Arena, Entity, FoodItem, Traits, Vec2, World};

/// Double-precision aliases; the CLI, experiments, and acceptance tests run on these.
pub type SimConfig64 = config::SimConfig<f64>;
pub type Traits64 = world::Traits<f64>;
pub type Entity64 = world::Entity<f64>;
pub type World64 = world::World<f64>;
pub type GenerationStats64 = experiment::GenerationStats<f64>;
pub type SimulationResult64 = experiment::SimulationResult<f64>;
pub type SweepSummary64 = experiment::SweepSummary<f64>;

/// Single-precision aliases for memory-constrained embedding.
pub type SimConfig32 = config::SimConfig<f32>;
pub type Traits32 = world::Traits<f32>;
pub type Entity32 = world::Entity<f32>;
pub type World32 = world::World<f32>;
