//! The per-generation tick loop: movement and food collection.

use crate::config::SimConfig;
use crate::real::Real;
use crate::rng::UnitRng;
use crate::world::{Entity, Traits, World};

/// One entity picking up one food item at a given tick (1-based).
///
/// The event log exists so conservation can be audited: within a generation
/// every `food_id` appears in at most one event.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollectionEvent {
    pub tick: u32,
    pub entity_id: u64,
    pub food_id: u32,
}

/// Step length in arena-units per tick: `speed * 10 / (10 + size)`.
///
/// Strictly increasing in speed and strictly decreasing in size, so a large
/// collection radius is paid for with slower travel.
#[inline]
pub fn movement_step<F: Real>(traits: &Traits<F>) -> F {
    let ten = F::from_f64(10.0);
    traits.speed * (ten / (ten + traits.size))
}

/// Advance one entity by one tick. Consumes exactly one RNG draw.
///
/// The heading is perturbed by a uniform angle in [-max_turn, +max_turn],
/// the position advances by [`movement_step`] along the new heading, and
/// positions leaving the arena are reflected (mirrored across the boundary
/// with the corresponding heading component negated).
pub fn step_entity<F: Real>(
    entity: &mut Entity<F>,
    config: &SimConfig<F>,
    rng: &mut impl UnitRng<F>,
) {
    let turn = rng.symmetric(config.max_turn);
    let mut heading = wrap_angle(entity.heading + turn);
    let step = movement_step(&entity.traits);

    let (sin, cos) = heading.sin_cos();
    let (x, flip_x) = reflect(entity.pos.x + step * cos, config.arena_width);
    let (y, flip_y) = reflect(entity.pos.y + step * sin, config.arena_height);
    if flip_x {
        heading = F::PI() - heading;
    }
    if flip_y {
        heading = -heading;
    }

    entity.pos.x = x;
    entity.pos.y = y;
    entity.heading = wrap_angle(heading);
}

/// Fold `coord` back into [0, limit] by mirror reflection.
///
/// Returns the folded coordinate and whether the travel direction along this
/// axis ended up negated (odd number of wall bounces). The unfolded position
/// maps onto a triangle wave of period `2 * limit`: the rising half keeps the
/// direction, the falling half flips it.
fn reflect<F: Real>(coord: F, limit: F) -> (F, bool) {
    if coord >= F::zero() && coord <= limit {
        return (coord, false);
    }
    let period = limit + limit;
    let mut q = coord % period;
    if q < F::zero() {
        q = q + period;
    }
    if q <= limit {
        (q, false)
    } else {
        (period - q, true)
    }
}

/// Wrap an angle into [0, 2π).
fn wrap_angle<F: Real>(angle: F) -> F {
    let tau = F::TAU();
    let mut a = angle % tau;
    if a < F::zero() {
        a = a + tau;
    }
    // `angle % tau` can round to tau itself for tiny negative inputs.
    if a >= tau {
        a = F::zero();
    }
    a
}

/// Resolve collections for the current positions. Consumes one RNG draw per
/// contested food item (two or more candidates) and none otherwise.
///
/// Food items are visited in ascending id order. A candidate is an entity
/// whose center lies within `size / 2` of the item; a sole candidate collects
/// outright, and a contested item goes to `candidates[floor(u * k)]`.
pub fn collect_food<F: Real>(
    world: &mut World<F>,
    tick: u32,
    rng: &mut impl UnitRng<F>,
) -> Vec<CollectionEvent> {
    let mut events = Vec::new();
    let half = F::from_f64(0.5);
    let radius_sq: Vec<F> = world
        .entities
        .iter()
        .map(|e| {
            let r = e.traits.size * half;
            r * r
        })
        .collect();

    let mut candidates: Vec<usize> = Vec::new();
    for item in &world.food {
        candidates.clear();
        for (idx, e) in world.entities.iter().enumerate() {
            if e.pos.dist_sq(item.pos) <= radius_sq[idx] {
                candidates.push(idx);
            }
        }
        let winner = match candidates.len() {
            0 => continue,
            1 => candidates[0],
            k => candidates[rng.index(k)],
        };
        world.entities[winner].food_collected += 1;
        events.push(CollectionEvent {
            tick,
            entity_id: world.entities[winner].id,
            food_id: item.id,
        });
    }
    if !events.is_empty() {
        // Events are in ascending food-id order, so a binary search suffices.
        world
            .food
            .retain(|f| events.binary_search_by_key(&f.id, |e| e.food_id).is_err());
    }
    events
}

/// Run one generation's tick loop: each tick moves every entity in ascending
/// id order, then resolves collections once. Exits early once all food is
/// gone. Returns the generation's collection log.
pub fn run_generation_ticks<F: Real>(
    world: &mut World<F>,
    config: &SimConfig<F>,
    rng: &mut impl UnitRng<F>,
) -> Vec<CollectionEvent> {
    let mut events = Vec::new();
    for tick in 1..=config.ticks_per_generation {
        for entity in &mut world.entities {
            step_entity(entity, config, rng);
        }
        events.extend(collect_food(world, tick, rng));
        if world.food.is_empty() {
            break;
        }
    }
    events
}
