//! Seeded random connected graphs for the sampled suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wcds_core::Graph;

pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_INSTANCES: usize = 20;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random spanning tree on shuffled labels plus each remaining pair with probability 1/2.
pub fn connected_graph<R: Rng>(rng: &mut R, order: usize) -> Graph {
    let mut labels: Vec<usize> = (1..=order).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..order {
        let parent = labels[rng.gen_range(0..k)];
        edges.push((parent, labels[k]));
    }
    for u in 1..=order {
        for v in u + 1..=order {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(order, edges).expect("labels are in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs_are_connected_and_reproducible() {
        let mut a = rng(DEFAULT_SEED);
        let mut b = rng(DEFAULT_SEED);
        for order in 1..=8 {
            let g = connected_graph(&mut a, order);
            assert!(g.is_connected());
            assert_eq!(g.order(), order);
            assert_eq!(g, connected_graph(&mut b, order));
        }
    }
}
