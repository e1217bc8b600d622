use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{Color, PointSet};

/// `n` distinct points drawn uniformly from `[0..grid_n]²`, sorted by
/// `(x, y)`, each red with probability `red_fraction`. The same seed always
/// gives the same instance.
pub fn random_instance(n: usize, grid_n: u32, red_fraction: f64, seed: u64) -> Result<PointSet> {
    let side = grid_n as usize + 1;
    let cells = side * side;
    if n > cells {
        return Err(Error::Argument(format!(
            "{n} points do not fit in a {side}x{side} grid"
        )));
    }
    if !(0.0..=1.0).contains(&red_fraction) {
        return Err(Error::Argument(format!(
            "red fraction {red_fraction} is not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells: Vec<usize> = sample(&mut rng, cells, n).into_vec();
    cells.sort_unstable();
    let pts: Vec<_> = cells
        .into_iter()
        .map(|c| {
            let color = if rng.gen_bool(red_fraction) {
                Color::Red
            } else {
                Color::Blue
            };
            ((c / side) as i64, (c % side) as i64, color)
        })
        .collect();
    PointSet::from_ints(&pts)
}
