//! Seeded random fields. Trial `n` of a run with seed `s` draws from ChaCha8
//! stream `n` of key `s`, so results do not depend on how trials are scheduled.

use fracfield_core::fields::{CurrentDensity, FourPotential};
use fracfield_core::grid::{Grid, ScalarField};
use fracfield_core::maxwell::VectorField3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Independent uniform samples in `[-1, 1)`.
pub fn scalar(grid: Grid, rng: &mut impl Rng) -> ScalarField {
    ScalarField::from_fn(grid, |_| rng.gen_range(-1.0..1.0))
}

pub fn vector(grid: Grid, rng: &mut impl Rng) -> VectorField3 {
    let components = std::array::from_fn(|_| scalar(grid, rng));
    VectorField3::new(components).expect("components share one grid")
}

pub fn potential(grid: Grid, rng: &mut impl Rng) -> FourPotential {
    let components = std::array::from_fn(|_| scalar(grid, rng));
    FourPotential::new(components).expect("components share one grid")
}

pub fn current(grid: Grid, rng: &mut impl Rng) -> CurrentDensity {
    let rho = scalar(grid, rng);
    CurrentDensity::new(rho, vector(grid, rng).into_components()).expect("components share one grid")
}

/// Random potential that vanishes on every boundary point of the grid.
pub fn compact_potential(grid: Grid, rng: &mut impl Rng) -> FourPotential {
    potential(grid, rng).map_components(|_, c| {
        let mut c = c.clone();
        for (k, v) in c.data_mut().iter_mut().enumerate() {
            if grid.on_boundary(grid.multi_index(k)) {
                *v = 0.0;
            }
        }
        c
    })
}
