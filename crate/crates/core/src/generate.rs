//! Seeded random matroids of every representation, for exhaustive checks
//! and demos.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::matroid::{Matroid, Representation};
use crate::subsets::SubsetMask;

/// Representation kinds produced by [`random_matroid`], in rotation order.
pub const KINDS: [&str; 5] = ["uniform", "gf2", "graphic", "partition", "explicit"];

pub fn random_uniform<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    let k = rng.gen_range(0..=n);
    Matroid::uniform(n, k).expect("k <= n")
}

/// A random binary matrix with 1 to 4 rows.
pub fn random_gf2<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    let rows = rng.gen_range(1..=4);
    let mask = SubsetMask::full(n).bits();
    let rows = (0..rows).map(|_| rng.gen::<u32>() & mask).collect();
    Matroid::gf2(n, rows).expect("rows fit")
}

/// `n` random edges, loops and parallel edges allowed, on at most 6 vertices.
pub fn random_graphic<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    let vertices = rng.gen_range(1..=6);
    let edges = (0..n)
        .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
        .collect();
    Matroid::new(n, Representation::Graphic { vertices, edges }).expect("valid edges")
}

pub fn random_partition<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    let parts = rng.gen_range(1..=n.max(1));
    let mut elements: Vec<usize> = (0..n).collect();
    elements.shuffle(rng);
    let mut blocks = vec![SubsetMask::EMPTY; parts];
    for (i, e) in elements.into_iter().enumerate() {
        // The first `parts` elements seed one block each.
        let slot = if i < parts { i } else { rng.gen_range(0..parts) };
        blocks[slot] = blocks[slot].with(e);
    }
    blocks.retain(|b| !b.is_empty());
    let capacities = blocks.iter().map(|b| rng.gen_range(0..=b.len())).collect();
    Matroid::partition(n, blocks, capacities).expect("blocks partition the universe")
}

/// The independent sets of another random matroid, as an explicit family.
pub fn random_explicit<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    let source = match rng.gen_range(0..3) {
        0 => random_gf2(rng, n),
        1 => random_graphic(rng, n),
        _ => random_partition(rng, n),
    };
    Matroid::from_family(n, source.independent_sets()).expect("independent sets of a matroid")
}

/// Kind `index % 5` from [`KINDS`] on a random universe of `min_n..=max_n` elements.
pub fn random_matroid<R: Rng>(rng: &mut R, index: usize, min_n: usize, max_n: usize) -> Matroid {
    let n = rng.gen_range(min_n..=max_n);
    match index % KINDS.len() {
        0 => random_uniform(rng, n),
        1 => random_gf2(rng, n),
        2 => random_graphic(rng, n),
        3 => random_partition(rng, n),
        _ => random_explicit(rng, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kinds_rotate() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..10 {
            let m = random_matroid(&mut rng, i, 1, 6);
            assert_eq!(m.representation().kind(), KINDS[i % 5]);
            assert!(m.universe_size() >= 1 && m.universe_size() <= 6);
        }
    }

    #[test]
    fn empty_universe() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for i in 0..5 {
            assert_eq!(random_matroid(&mut rng, i, 0, 0).full_rank(), 0);
        }
    }
}
