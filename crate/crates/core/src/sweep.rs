//! Seeded batches of independent experiments.
//!
//! Experiment `i` of a batch draws from its own ChaCha stream keyed by
//! `(seed, i)`, so results do not depend on scheduling. With the `parallel`
//! feature the batch runs on rayon; otherwise, or with [`Mode::Sequential`],
//! it runs in order on the calling thread.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Parallel,
    Sequential,
}

impl Default for Mode {
    fn default() -> Mode {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// RNG of experiment `index` in a batch seeded with `seed`.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Runs `f(i, rng_i)` for `i < n`; results come back in index order.
pub fn run<T, F>(mode: Mode, seed: u64, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut ChaCha8Rng) -> T + Sync + Send,
{
    let one = |i: usize| f(i, &mut rng_for(seed, i as u64));
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(one).collect()
        }
        _ => (0..n).map(one).collect(),
    }
}

/// Maps `f` over `items`, in order.
pub fn map<I, T, F>(mode: Mode, items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}
