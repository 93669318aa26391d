//! Exhaustive checks of the matroid operators against brute-force oracles
//! on seeded random matroids of every representation.

use matred::dependence::{
    com_family, consistent_sets, is_congruence, is_consistent_by_definition,
    is_consistent_by_deletion, is_dense, min_closure_subsets, reducts, reducts_by_definition,
    reducts_via_transversals, theta_from_matroid,
};
use matred::generate::random_matroid;
use matred::hyperplanes::FlatLattice;
use matred::matroid::validate_closure_axioms;
use matred::subsets::{max_family, power_set};
use matred::{Matroid, Representation, SetFamily, SubsetMask, WeightVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn matroids(seed: u64, count: usize, max_n: usize) -> Vec<Matroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|i| random_matroid(&mut rng, i, 0, max_n)).collect()
}

fn subsets(m: &Matroid) -> Vec<SubsetMask> {
    power_set(m.universe_size()).unwrap().collect()
}

/// Largest independent subset of `x`, by enumeration.
fn rank_oracle(m: &Matroid, x: SubsetMask) -> usize {
    x.subsets().filter(|y| m.is_independent(*y)).map(SubsetMask::len).max().unwrap()
}

/// Row reduction of the submatrix on columns `x`; independent iff the
/// row rank equals |x|.
fn gf2_oracle(rows: &[u32], x: SubsetMask) -> bool {
    let mut rows: Vec<u32> = rows.iter().map(|r| r & x.bits()).collect();
    let mut rank = 0;
    for col in x.iter() {
        if let Some(p) = (rank..rows.len()).find(|&i| rows[i] & (1 << col) != 0) {
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && *r & (1 << col) != 0 {
                    *r ^= pivot;
                }
            }
            rank += 1;
        }
    }
    rank == x.len()
}

/// A forest has |E| = |V| - components.
fn forest_oracle(vertices: usize, edges: &[(usize, usize)], x: SubsetMask) -> bool {
    let mut seen = vec![false; vertices];
    let mut components = 0;
    for start in 0..vertices {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for e in x.iter() {
                let (a, b) = edges[e];
                let other = if a == v { b } else if b == v { a } else { continue };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
    }
    x.len() == vertices - components
}

#[test]
fn independence_matches_representation_oracles() {
    for m in matroids(1, 60, 8) {
        for x in subsets(&m) {
            let expected = match m.representation() {
                Representation::Gf2Linear { rows } => gf2_oracle(rows, x),
                Representation::Graphic { vertices, edges } => forest_oracle(*vertices, edges, x),
                Representation::Uniform { k } => x.len() <= *k,
                Representation::Partition { blocks, capacities } => blocks
                    .iter()
                    .zip(capacities)
                    .all(|(b, c)| (x & *b).len() <= *c),
                Representation::ExplicitFamily(f) => f.contains(x),
            };
            assert_eq!(m.is_independent(x), expected, "{:?} on {x}", m.representation());
        }
    }
}

#[test]
fn independence_axioms_hold() {
    for m in matroids(2, 60, 7) {
        let all = subsets(&m);
        assert!(m.is_independent(SubsetMask::EMPTY));
        for &i in all.iter().filter(|x| m.is_independent(**x)) {
            assert!(i.subsets().all(|s| m.is_independent(s)));
            for &j in all.iter().filter(|x| m.is_independent(**x) && x.len() > i.len()) {
                assert!((j - i).iter().any(|e| m.is_independent(i.with(e))), "I3 for {i}, {j}");
            }
        }
    }
}

#[test]
fn rank_properties() {
    for m in matroids(3, 60, 8) {
        let all = subsets(&m);
        for &x in &all {
            let r = m.rank(x);
            assert_eq!(r, rank_oracle(&m, x));
            assert!(r <= x.len());
            assert_eq!(m.rank(m.closure(x)), r);
            for e in 0..m.universe_size() {
                assert!(m.rank(x.with(e)) >= r);
            }
        }
        // Submodularity on a sample of pairs.
        for (i, &x) in all.iter().enumerate().step_by(3) {
            for &y in all.iter().skip(i % 5).step_by(7) {
                assert!(m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y));
            }
        }
    }
}

#[test]
fn closure_axioms_and_bases() {
    for m in matroids(4, 40, 10) {
        let n = m.universe_size();
        assert_eq!(validate_closure_axioms(n, |x| m.closure(x)).unwrap(), None);
        for x in power_set(n).unwrap() {
            assert_eq!(m.independent_via_closure(x), m.is_independent(x));
        }
        let bases = m.bases();
        assert!(bases.iter().all(|b| b.len() == m.full_rank()));
        assert!(!bases.is_empty());
    }
}

#[test]
fn ranks_agree_above_table_size() {
    // n = 17 skips the rank table; compare against a tabulated restriction
    // on the first 16 elements.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let edges: Vec<(usize, usize)> = (0..17).map(|_| (rng.gen_range(0..6), rng.gen_range(0..6))).collect();
    let big = Matroid::graphic(6, edges.clone()).unwrap();
    let small = Matroid::graphic(6, edges[..16].to_vec()).unwrap();
    for _ in 0..500 {
        let x = SubsetMask::from_bits(rng.gen::<u32>() & 0xffff);
        assert_eq!(big.rank(x), small.rank(x));
        assert_eq!(big.closure(x) & SubsetMask::full(16), small.closure(x));
    }
}

#[test]
fn restrictions_are_matroids() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for m in matroids(6, 30, 7) {
        let x = SubsetMask::from_bits(rng.gen::<u32>()) & SubsetMask::full(m.universe_size());
        let r = m.restriction(x);
        let family = r.independent_sets();
        let expected: Vec<SubsetMask> = x.subsets().filter(|s| m.is_independent(*s)).collect();
        assert_eq!(family.members(), {
            let mut e = expected.clone();
            e.sort_by(SubsetMask::canonical_cmp);
            e
        });
        // I1-I3 via the validating constructor.
        Matroid::from_family(m.universe_size(), family).unwrap();
    }
}

#[test]
fn greedy_is_optimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in matroids(7, 30, 8) {
        let n = m.universe_size();
        for _ in 0..20 {
            let w = WeightVector::new((0..n).map(|_| rng.gen_range(-5..=10) as f64).collect()).unwrap();
            let g = m.greedy_max_weight_base(&w).unwrap();
            let best = m.bases().iter().map(|b| w.total(b)).fold(f64::NEG_INFINITY, f64::max);
            assert!(m.bases().contains(g.base));
            assert_eq!(g.weight, best);
        }
    }
}

#[test]
fn hyperplane_characterizations() {
    for m in matroids(8, 40, 9) {
        let lattice = FlatLattice::new(&m).unwrap();
        let full = m.full_rank();
        for h in lattice.hyperplanes() {
            assert!(lattice.flats().contains(h));
            assert_eq!(m.rank(h) + 1, full);
        }
        assert!(lattice.hyperplanes().is_antichain());
        assert!(lattice.flats().contains(m.ground()));
        for x in subsets(&m) {
            assert_eq!(lattice.closure_via_hyperplanes(x), m.closure(x));
            assert_eq!(
                lattice.hyperplanes_containing(x),
                lattice.hyperplanes_containing(m.closure(x))
            );
            if m.is_closed(x) && m.rank(x) < full {
                let hs = lattice.flat_as_hyperplane_intersection(x).unwrap();
                assert!(hs.len() >= full - m.rank(x));
                assert_eq!(hs.iter().fold(m.ground(), |a, b| a & b), x);
            }
        }
        for a in lattice.flats() {
            for b in lattice.flats() {
                assert!(lattice.flats().contains(a & b));
            }
        }
    }
}

#[test]
fn closure_leq_is_a_preorder() {
    for m in matroids(9, 20, 6) {
        let lattice = FlatLattice::new(&m).unwrap();
        let all = subsets(&m);
        for &x in &all {
            assert!(lattice.closure_leq(x, x));
            for &y in all.iter().step_by(3) {
                if !lattice.closure_leq(x, y) {
                    continue;
                }
                for &z in all.iter().step_by(5) {
                    if lattice.closure_leq(y, z) {
                        assert!(lattice.closure_leq(x, z));
                    }
                }
            }
        }
    }
}

#[test]
fn dependence_space_of_a_matroid() {
    for m in matroids(10, 40, 10) {
        let space = theta_from_matroid(&m);
        assert!(is_congruence(space.theta()).unwrap().holds);
        assert_eq!(consistent_sets(&space).unwrap(), m.independent_sets());
        let lattice = FlatLattice::new(&m).unwrap();
        assert!(is_dense(lattice.hyperplanes(), &space).unwrap().holds);
        for x in subsets(&m) {
            assert_eq!(is_consistent_by_deletion(&space, x), is_consistent_by_definition(&space, x));
        }
    }
}

#[test]
fn reduct_routes_agree() {
    for m in matroids(11, 40, 8) {
        let space = theta_from_matroid(&m);
        let hyperplanes = FlatLattice::new(&m).unwrap().hyperplanes().clone();
        for x in subsets(&m) {
            let red = reducts(&space, x);
            let bases = m.restriction(x).bases();
            assert_eq!(red, bases);
            assert_eq!(min_closure_subsets(&m, x), bases);
            let trans = reducts_via_transversals(&hyperplanes, x);
            assert_eq!(trans, bases);
            assert!(trans.is_antichain());
            let com = com_family(&hyperplanes, x);
            assert!(trans.iter().all(|t| t.is_subset_of(com.union())));
            for y in red.iter() {
                assert!(y.is_subset_of(x));
                assert_eq!(m.closure(y), m.closure(x));
                assert!(y.subsets().filter(|z| *z != y).all(|z| m.closure(z) != m.closure(x)));
            }
        }
    }
}

#[test]
fn reducts_of_bases_family_matches_max_independent() {
    // Sanity link between the two ends: reducts of the ground set are the bases.
    for m in matroids(12, 20, 8) {
        let space = theta_from_matroid(&m);
        assert_eq!(
            reducts_by_definition(&space, m.ground()),
            max_family(&m.independent_sets())
        );
    }
}

#[test]
fn explicit_rank_scan_matches_table() {
    // Same family, one above the rank-table cap, so the scan path is used.
    let base = Matroid::uniform(17, 2).unwrap();
    let family = SetFamily::new(17, power_set(17).unwrap().filter(|x| x.len() <= 2)).unwrap();
    let explicit = Matroid::from_family(17, family).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let x = SubsetMask::from_bits(rng.gen::<u32>() & 0x1ffff);
        assert_eq!(explicit.rank(x), base.rank(x));
    }
}
