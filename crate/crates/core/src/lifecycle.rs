//! End-of-generation judgment: survival, cloning, and mutation.

use crate::config::SimConfig;
use crate::real::Real;
use crate::rng::UnitRng;
use crate::world::{Entity, Traits, World};

/// What one generation's judgment produced.
///
/// `world.entities` after [`apply_lifecycle`] equals `survivors ++ clones`.
#[derive(Debug, Clone, PartialEq)]
pub struct LifecycleOutcome<F> {
    /// Entities that met their survival cost, food counter reset.
    pub survivors: Vec<Entity<F>>,
    /// Newly created clones, in parent order.
    pub clones: Vec<Entity<F>>,
    /// Ids of entities that starved.
    pub deaths: Vec<u64>,
    /// True when nothing remains alive.
    pub extinct: bool,
}

/// Food an entity must collect in one generation to stay alive:
/// `(5 + size) * (5 + speed) * (1 + cloning) / 36`.
///
/// Strictly increasing in every trait, so stronger bodies are more expensive
/// to keep fed.
#[inline]
pub fn survival_cost<F: Real>(traits: &Traits<F>) -> F {
    let five = F::from_f64(5.0);
    let thirty_six = F::from_f64(36.0);
    (five + traits.size) * (five + traits.speed) * (F::one() + traits.cloning) / thirty_six
}

/// True iff the entity collected at least its survival cost (ties live).
#[inline]
pub fn survives<F: Real>(entity: &Entity<F>) -> bool {
    F::from_usize(entity.food_collected as usize) >= survival_cost(&entity.traits)
}

/// True iff the entity collected at least twice its survival cost: one
/// life's worth for itself and one for a potential clone.
#[inline]
pub fn can_attempt_clone<F: Real>(entity: &Entity<F>) -> bool {
    let two = F::from_f64(2.0);
    F::from_usize(entity.food_collected as usize) >= two * survival_cost(&entity.traits)
}

/// Derive a clone's traits from its parent.
///
/// Draw `u1`; with probability `mutation_chance` the clone mutates, otherwise
/// it inherits the parent traits verbatim (one draw consumed). A mutation
/// picks exactly one trait via `floor(u2 * 3)` (speed, size, cloning), adds a
/// uniform perturbation in `[-delta, +delta]`, and clamps to the trait's
/// bounds (`[0, 1]` for cloning); three draws consumed in total.
pub fn mutate<F: Real>(
    parent_traits: &Traits<F>,
    config: &SimConfig<F>,
    rng: &mut impl UnitRng<F>,
) -> Traits<F> {
    if rng.unit() >= config.mutation_chance {
        return *parent_traits;
    }
    let mut traits = *parent_traits;
    match rng.index(3) {
        0 => {
            let nudge = rng.symmetric(config.speed_mut_delta);
            traits.speed = clamp(traits.speed + nudge, config.speed_min, config.speed_max);
        }
        1 => {
            let nudge = rng.symmetric(config.size_mut_delta);
            traits.size = clamp(traits.size + nudge, config.size_min, config.size_max);
        }
        _ => {
            let nudge = rng.symmetric(config.cloning_mut_delta);
            traits.cloning = clamp(traits.cloning + nudge, F::zero(), F::one());
        }
    }
    traits
}

#[inline]
fn clamp<F: Real>(value: F, lo: F, hi: F) -> F {
    value.max(lo).min(hi)
}

/// Judge the generation and install the next population.
///
/// Entities are processed in ascending id order. Non-survivors are recorded
/// as deaths. Each survivor that clears the cloning threshold draws one
/// uniform `u` and produces exactly one clone iff `u < traits.cloning`; the
/// clone starts at the parent's position and heading with mutated traits and
/// a fresh id. Survivors keep position and heading; every food counter is
/// reset. `world.entities` becomes `survivors ++ clones`.
pub fn apply_lifecycle<F: Real>(
    world: &mut World<F>,
    config: &SimConfig<F>,
    rng: &mut impl UnitRng<F>,
) -> LifecycleOutcome<F> {
    let population = std::mem::take(&mut world.entities);
    let mut survivors = Vec::with_capacity(population.len());
    let mut clones = Vec::new();
    let mut deaths = Vec::new();

    for entity in population {
        if !survives(&entity) {
            deaths.push(entity.id);
            continue;
        }
        if can_attempt_clone(&entity) && rng.unit() < entity.traits.cloning {
            let traits = mutate(&entity.traits, config, rng);
            let mut clone = Entity::new(world.fresh_entity_id(), entity.pos, entity.heading, traits);
            clone.food_collected = 0;
            clones.push(clone);
        }
        let mut survivor = entity;
        survivor.food_collected = 0;
        survivors.push(survivor);
    }

    let extinct = survivors.is_empty() && clones.is_empty();
    world.entities = survivors.iter().chain(clones.iter()).cloned().collect();
    LifecycleOutcome {
        survivors,
        clones,
        deaths,
        extinct,
    }
}
