//! Domain types and world initialization.

use thiserror::Error;

use crate::config::{ConfigError, SimConfig};
use crate::real::Real;
use crate::rng::UnitRng;

/// 2D point or displacement in arena coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2<F> {
    pub x: F,
    pub y: F,
}

impl<F: Real> Vec2<F> {
    pub fn new(x: F, y: F) -> Self {
        Vec2 { x, y }
    }

    /// Squared Euclidean distance to `other`.
    #[inline]
    pub fn dist_sq(self, other: Self) -> F {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }
}

/// Axis-aligned arena rectangle anchored at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arena<F> {
    pub width: F,
    pub height: F,
}

impl<F: Real> Arena<F> {
    pub fn new(width: F, height: F) -> Self {
        Arena { width, height }
    }

    /// Closed containment: boundary points count as inside.
    #[inline]
    pub fn contains(&self, p: Vec2<F>) -> bool {
        p.x >= F::zero() && p.x <= self.width && p.y >= F::zero() && p.y <= self.height
    }
}

/// The evolvable genome: speed, size, and cloning probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Traits<F> {
    /// Arena-units per tick before size drag.
    pub speed: F,
    /// Arena-units; also sets the collection radius (`size / 2`).
    pub size: F,
    /// Probability in [0, 1] that a clone-eligible survivor reproduces.
    pub cloning: F,
}

impl<F: Real> Traits<F> {
    pub fn new(speed: F, size: F, cloning: F) -> Self {
        Traits { speed, size, cloning }
    }
}

/// A positioned agent. `food_collected` resets to 0 at the start of each
/// generation and only increases within one.
#[derive(Debug, Clone, PartialEq)]
pub struct Entity<F> {
    /// Unique across the entire run; never reused after death.
    pub id: u64,
    pub pos: Vec2<F>,
    /// Radians in [0, 2π).
    pub heading: F,
    pub traits: Traits<F>,
    /// Food items collected this generation.
    pub food_collected: u32,
}

impl<F: Real> Entity<F> {
    pub fn new(id: u64, pos: Vec2<F>, heading: F, traits: Traits<F>) -> Self {
        Entity {
            id,
            pos,
            heading,
            traits,
            food_collected: 0,
        }
    }
}

/// An uncollected food item. Ids are unique within a generation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoodItem<F> {
    pub id: u32,
    pub pos: Vec2<F>,
}

/// Arena, live entities, and the current generation's uncollected food.
///
/// `entities` and `food` stay sorted by ascending id; the tick loop and the
/// lifecycle depend on that order for reproducible RNG consumption.
#[derive(Debug, Clone, PartialEq)]
pub struct World<F> {
    pub arena: Arena<F>,
    pub entities: Vec<Entity<F>>,
    pub food: Vec<FoodItem<F>>,
    pub generation_index: u32,
    next_entity_id: u64,
}

/// World assembly failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorldError {
    #[error("entity ids must be strictly increasing in list order")]
    EntityIdsNotAscending,
    #[error("food ids must be strictly increasing in list order")]
    FoodIdsNotAscending,
    #[error("entity {id} lies outside the arena")]
    EntityOutsideArena { id: u64 },
    #[error("food item {id} lies outside the arena")]
    FoodOutsideArena { id: u32 },
}

impl<F: Real> World<F> {
    /// Assemble a world from parts, checking the ordering and containment
    /// invariants. Fresh entity ids continue after the largest id present.
    pub fn new(
        arena: Arena<F>,
        entities: Vec<Entity<F>>,
        food: Vec<FoodItem<F>>,
    ) -> Result<Self, WorldError> {
        if !entities.windows(2).all(|w| w[0].id < w[1].id) {
            return Err(WorldError::EntityIdsNotAscending);
        }
        if !food.windows(2).all(|w| w[0].id < w[1].id) {
            return Err(WorldError::FoodIdsNotAscending);
        }
        if let Some(e) = entities.iter().find(|e| !arena.contains(e.pos)) {
            return Err(WorldError::EntityOutsideArena { id: e.id });
        }
        if let Some(f) = food.iter().find(|f| !arena.contains(f.pos)) {
            return Err(WorldError::FoodOutsideArena { id: f.id });
        }
        let next_entity_id = entities.last().map_or(0, |e| e.id + 1);
        Ok(World {
            arena,
            entities,
            food,
            generation_index: 0,
            next_entity_id,
        })
    }

    pub fn population(&self) -> usize {
        self.entities.len()
    }

    /// Next never-used entity id.
    pub(crate) fn fresh_entity_id(&mut self) -> u64 {
        let id = self.next_entity_id;
        self.next_entity_id += 1;
        id
    }
}

/// Create the starting population.
///
/// Exactly `start_population` entities with ids `0..n`. Per entity the RNG is
/// consumed in this fixed order: speed, size, cloning, x, y, heading. Traits
/// are uniform over their configured bounds (cloning over [0, 1]), positions
/// uniform over the arena, headings uniform over [0, 2π).
pub fn init_population<F: Real>(
    config: &SimConfig<F>,
    rng: &mut impl UnitRng<F>,
) -> Result<Vec<Entity<F>>, ConfigError> {
    config.validate()?;
    let n = config.start_population as u64;
    let mut entities = Vec::with_capacity(n as usize);
    for id in 0..n {
        let speed = rng.range(config.speed_min, config.speed_max);
        let size = rng.range(config.size_min, config.size_max);
        let cloning = rng.range(F::zero(), F::one());
        let x = rng.range(F::zero(), config.arena_width);
        let y = rng.range(F::zero(), config.arena_height);
        let heading = rng.range(F::zero(), F::TAU());
        entities.push(Entity::new(
            id,
            Vec2::new(x, y),
            heading,
            Traits::new(speed, size, cloning),
        ));
    }
    Ok(entities)
}

/// Scatter the generation's food uniformly over the arena.
///
/// Exactly `start_food` items with ids `0..m`; two draws per item, x then y.
pub fn scatter_food<F: Real>(
    config: &SimConfig<F>,
    rng: &mut impl UnitRng<F>,
) -> Result<Vec<FoodItem<F>>, ConfigError> {
    config.validate()?;
    let mut food = Vec::with_capacity(config.start_food as usize);
    for id in 0..config.start_food {
        let x = rng.range(F::zero(), config.arena_width);
        let y = rng.range(F::zero(), config.arena_height);
        food.push(FoodItem {
            id,
            pos: Vec2::new(x, y),
        });
    }
    Ok(food)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::make_rng;
    use crate::test_support::arb_config;
    use proptest::prelude::*;

    fn defaults() -> SimConfig<f64> {
        SimConfig::default()
    }

    #[test]
    fn default_population_has_ten_entities_within_bounds() {
        let cfg = defaults();
        let mut rng = make_rng(7);
        let pop = init_population(&cfg, &mut rng).unwrap();
        assert_eq!(pop.len(), 10);
        for (i, e) in pop.iter().enumerate() {
            assert_eq!(e.id, i as u64);
            assert_eq!(e.food_collected, 0);
            assert!(e.traits.speed >= cfg.speed_min && e.traits.speed <= cfg.speed_max);
            assert!(e.traits.size >= cfg.size_min && e.traits.size <= cfg.size_max);
            assert!(e.traits.cloning >= 0.0 && e.traits.cloning <= 1.0);
            assert!(e.pos.x >= 0.0 && e.pos.x < cfg.arena_width);
            assert!(e.pos.y >= 0.0 && e.pos.y < cfg.arena_height);
            assert!(e.heading >= 0.0 && e.heading < std::f64::consts::TAU);
        }
    }

    #[test]
    fn degenerate_speed_interval_pins_speed() {
        let cfg = SimConfig {
            speed_min: 2.0,
            speed_max: 2.0,
            ..defaults()
        };
        let mut rng = make_rng(3);
        let pop = init_population(&cfg, &mut rng).unwrap();
        assert!(pop.iter().all(|e| e.traits.speed == 2.0));
    }

    #[test]
    fn init_population_is_deterministic() {
        let cfg = defaults();
        let a = init_population(&cfg, &mut make_rng(42)).unwrap();
        let b = init_population(&cfg, &mut make_rng(42)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn init_population_rejects_zero_population() {
        let cfg = SimConfig {
            start_population: 0,
            ..defaults()
        };
        assert!(matches!(
            init_population(&cfg, &mut make_rng(0)),
            Err(ConfigError::ZeroCount { field: "start_population" })
        ));
    }

    #[test]
    fn per_entity_draw_order_is_speed_size_cloning_x_y_heading() {
        let cfg = defaults();
        let mut raw = make_rng(11);
        let u: Vec<f64> = (0..6).map(|_| UnitRng::<f64>::unit(&mut raw)).collect();
        let expected = Entity::new(
            0,
            Vec2::new(u[3] * cfg.arena_width, u[4] * cfg.arena_height),
            u[5] * std::f64::consts::TAU,
            Traits::new(
                cfg.speed_min + u[0] * (cfg.speed_max - cfg.speed_min),
                cfg.size_min + u[1] * (cfg.size_max - cfg.size_min),
                u[2],
            ),
        );
        let pop = init_population(&cfg, &mut make_rng(11)).unwrap();
        assert_eq!(pop[0], expected);
    }

    #[test]
    fn scatter_food_produces_exact_count_inside_arena() {
        let cfg = SimConfig {
            start_food: 300,
            ..defaults()
        };
        let mut rng = make_rng(5);
        let food = scatter_food(&cfg, &mut rng).unwrap();
        assert_eq!(food.len(), 300);
        for (i, f) in food.iter().enumerate() {
            assert_eq!(f.id, i as u32);
            assert!(f.pos.x >= 0.0 && f.pos.x < cfg.arena_width);
            assert!(f.pos.y >= 0.0 && f.pos.y < cfg.arena_height);
        }
    }

    #[test]
    fn scatter_food_single_item_and_determinism() {
        let cfg = SimConfig {
            start_food: 1,
            ..defaults()
        };
        let a = scatter_food(&cfg, &mut make_rng(9)).unwrap();
        let b = scatter_food(&cfg, &mut make_rng(9)).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a, b);
    }

    #[test]
    fn scatter_food_rejects_zero_food() {
        let cfg = SimConfig {
            start_food: 0,
            ..defaults()
        };
        assert!(matches!(
            scatter_food(&cfg, &mut make_rng(0)),
            Err(ConfigError::ZeroCount { field: "start_food" })
        ));
    }

    #[test]
    fn world_new_rejects_unsorted_ids() {
        let arena = Arena::new(10.0, 10.0);
        let t = Traits::new(1.0, 1.0, 0.5);
        let e = |id| Entity::new(id, Vec2::new(1.0, 1.0), 0.0, t);
        assert!(matches!(
            World::new(arena, vec![e(1), e(0)], vec![]),
            Err(WorldError::EntityIdsNotAscending)
        ));
    }

    #[test]
    fn world_new_rejects_out_of_arena_positions() {
        let arena = Arena::new(10.0, 10.0);
        let t = Traits::new(1.0, 1.0, 0.5);
        let e = Entity::new(0, Vec2::new(11.0, 1.0), 0.0, t);
        assert!(matches!(
            World::new(arena, vec![e], vec![]),
            Err(WorldError::EntityOutsideArena { id: 0 })
        ));
    }

    #[test]
    fn fresh_ids_continue_after_largest() {
        let arena = Arena::new(10.0, 10.0);
        let t = Traits::new(1.0, 1.0, 0.5);
        let e = |id| Entity::new(id, Vec2::new(1.0, 1.0), 0.0, t);
        let mut w = World::new(arena, vec![e(0), e(7)], vec![]).unwrap();
        assert_eq!(w.fresh_entity_id(), 8);
        assert_eq!(w.fresh_entity_id(), 9);
    }

    proptest! {
        #[test]
        fn generated_values_respect_bounds(cfg in arb_config(), seed in 0u64..1000) {
            let mut rng = make_rng(seed);
            let pop = init_population(&cfg, &mut rng).unwrap();
            prop_assert_eq!(pop.len(), cfg.start_population as usize);
            for e in &pop {
                prop_assert!(e.traits.speed >= cfg.speed_min && e.traits.speed <= cfg.speed_max);
                prop_assert!(e.traits.size >= cfg.size_min && e.traits.size <= cfg.size_max);
                prop_assert!(e.traits.cloning >= 0.0 && e.traits.cloning <= 1.0);
                prop_assert!(e.pos.x >= 0.0 && e.pos.x < cfg.arena_width);
                prop_assert!(e.pos.y >= 0.0 && e.pos.y < cfg.arena_height);
            }
            let food = scatter_food(&cfg, &mut rng).unwrap();
            prop_assert_eq!(food.len(), cfg.start_food as usize);
            for f in &food {
                prop_assert!(f.pos.x >= 0.0 && f.pos.x < cfg.arena_width);
                prop_assert!(f.pos.y >= 0.0 && f.pos.y < cfg.arena_height);
            }
        }
    }
}
