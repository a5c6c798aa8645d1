//! Unit-test helpers: scripted draw sources and config strategies.

use std::collections::VecDeque;

use proptest::prelude::*;

use crate::config::SimConfig;
use crate::real::Real;
use crate::rng::UnitRng;

/// Replays a fixed queue of unit draws; panics when the script runs dry so a
/// test that consumes more draws than it declared fails loudly.
pub struct ScriptedRng {
    draws: VecDeque<f64>,
}

impl ScriptedRng {
    pub fn new(draws: impl IntoIterator<Item = f64>) -> Self {
        ScriptedRng {
            draws: draws.into_iter().collect(),
        }
    }

    pub fn remaining(&self) -> usize {
        self.draws.len()
    }
}

impl<F: Real> UnitRng<F> for ScriptedRng {
    fn unit(&mut self) -> F {
        let u = self.draws.pop_front().expect("scripted draws exhausted");
        assert!((0.0..1.0).contains(&u), "scripted draw {u} outside [0,1)");
        F::from_f64(u)
    }
}

/// Wraps another source and counts draws consumed.
pub struct CountingRng<R> {
    pub inner: R,
    pub draws: usize,
}

impl<R> CountingRng<R> {
    pub fn new(inner: R) -> Self {
        CountingRng { inner, draws: 0 }
    }
}

impl<F: Real, R: UnitRng<F>> UnitRng<F> for CountingRng<R> {
    fn unit(&mut self) -> F {
        self.draws += 1;
        self.inner.unit()
    }
}

/// Random valid f64 configs, kept small enough for fast property tests.
pub fn arb_config() -> impl Strategy<Value = SimConfig<f64>> {
    (
        any::<u64>(),
        1u32..20,
        1u32..40,
        (0.1f64..3.0, 0.0f64..4.0),
        (0.5f64..5.0, 0.0f64..8.0),
        20.0f64..120.0,
        20.0f64..120.0,
        0.0f64..=1.0,
    )
        .prop_map(
            |(seed, pop, food, (smin, sextra), (zmin, zextra), w, h, chance)| SimConfig {
                seed,
                start_population: pop,
                start_food: food,
                generations: 5,
                ticks_per_generation: 20,
                arena_width: w,
                arena_height: h,
                speed_min: smin,
                speed_max: smin + sextra,
                size_min: zmin,
                size_max: zmin + zextra,
                mutation_chance: chance,
                ..SimConfig::default()
            },
        )
}
