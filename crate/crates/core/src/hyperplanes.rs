//! Flats and hyperplanes of a matroid, and closure computed from the
//! hyperplanes that contain a set.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subsets::{check_universe, SetFamily, SubsetMask};

/// Largest universe for which flats are enumerated.
pub const FLAT_ENUMERATION_MAX: usize = 20;

/// Every flat of a matroid together with its hyperplanes.
#[derive(Debug, Clone)]
pub struct FlatLattice {
    matroid: Matroid,
    flats: SetFamily,
    hyperplanes: SetFamily,
}

impl FlatLattice {
    pub fn new(matroid: &Matroid) -> Result<Self> {
        let flats = closed_sets(matroid)?;
        let target = matroid.full_rank().checked_sub(1);
        let hyperplanes: Vec<SubsetMask> = flats
            .iter()
            .filter(|f| Some(matroid.rank(*f)) == target)
            .collect();
        Ok(FlatLattice {
            matroid: matroid.clone(),
            hyperplanes: SetFamily::from_canonical(matroid.universe_size(), hyperplanes),
            flats,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn flats(&self) -> &SetFamily {
        &self.flats
    }

    pub fn hyperplanes(&self) -> &SetFamily {
        &self.hyperplanes
    }

    /// Hyperplanes containing `set`.
    pub fn hyperplanes_containing(&self, set: SubsetMask) -> SetFamily {
        SetFamily::from_canonical(
            self.matroid.universe_size(),
            self.hyperplanes.iter().filter(|h| set.is_subset_of(*h)).collect(),
        )
    }

    /// The ground set when `set` has full rank, otherwise the intersection
    /// of all hyperplanes containing it.
    pub fn closure_via_hyperplanes(&self, set: SubsetMask) -> SubsetMask {
        let ground = self.matroid.ground();
        let set = set & ground;
        if self.matroid.rank(set) == self.matroid.full_rank() {
            return ground;
        }
        self.hyperplanes
            .iter()
            .filter(|h| set.is_subset_of(*h))
            .fold(ground, |acc, h| acc & h)
    }

    /// The hyperplanes whose intersection is the flat `set`.
    pub fn flat_as_hyperplane_intersection(&self, set: SubsetMask) -> Result<SetFamily> {
        if !self.matroid.is_closed(set) {
            return Err(Error::NotAFlat { set });
        }
        if self.matroid.rank(set) == self.matroid.full_rank() {
            return Err(Error::FullRankFlat { set });
        }
        Ok(self.hyperplanes_containing(set))
    }

    /// Whether cl(X) ⊆ cl(Y).
    ///
    /// Evaluated both by comparing closures and by checking that every
    /// hyperplane containing `y` also contains `x`; the two must agree.
    pub fn closure_leq(&self, x: SubsetMask, y: SubsetMask) -> bool {
        let by_closure = self.matroid.closure(x).is_subset_of(self.matroid.closure(y));
        let by_hyperplanes = self
            .hyperplanes
            .iter()
            .all(|h| !y.is_subset_of(h) || x.is_subset_of(h));
        assert_eq!(
            by_closure, by_hyperplanes,
            "closure containment and hyperplane test disagree for {x}, {y}"
        );
        by_closure
    }
}

/// All closed sets, canonical order.
pub fn closed_sets(matroid: &Matroid) -> Result<SetFamily> {
    check_universe(matroid.universe_size(), FLAT_ENUMERATION_MAX)?;
    let flats: Vec<SubsetMask> = matroid.ground().subsets().map(|x| matroid.closure(x)).collect();
    Ok(SetFamily::from_unsorted(matroid.universe_size(), flats))
}

/// Closed sets of rank one less than the ground set.
pub fn hyperplanes(matroid: &Matroid) -> Result<SetFamily> {
    Ok(FlatLattice::new(matroid)?.hyperplanes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subsets::power_set;

    fn s(labels: &[usize]) -> SubsetMask {
        SubsetMask::from_labels(labels.iter().copied())
    }

    fn fam(n: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(n, sets.iter().map(|x| s(x))).unwrap()
    }

    fn example() -> Matroid {
        Matroid::from_family(3, fam(3, &[&[], &[1], &[2], &[3], &[1, 2], &[2, 3]])).unwrap()
    }

    #[test]
    fn example_flats_and_hyperplanes() {
        let m = example();
        assert_eq!(closed_sets(&m).unwrap(), fam(3, &[&[], &[2], &[1, 3], &[1, 2, 3]]));
        assert_eq!(hyperplanes(&m).unwrap(), fam(3, &[&[2], &[1, 3]]));
        assert_eq!(hyperplanes(&m).unwrap().to_string(), "[{2};{1,3}]");
    }

    #[test]
    fn free_and_uniform_flats() {
        let free = Matroid::free(2).unwrap();
        assert_eq!(closed_sets(&free).unwrap().len(), 4);
        let u = Matroid::uniform(4, 2).unwrap();
        assert_eq!(
            closed_sets(&u).unwrap(),
            fam(4, &[&[], &[1], &[2], &[3], &[4], &[1, 2, 3, 4]])
        );
        assert_eq!(hyperplanes(&u).unwrap(), fam(4, &[&[1], &[2], &[3], &[4]]));
    }

    #[test]
    fn rank_zero_has_no_hyperplanes() {
        let m = Matroid::from_family(2, fam(2, &[&[]])).unwrap();
        let lattice = FlatLattice::new(&m).unwrap();
        assert!(lattice.hyperplanes().is_empty());
        assert_eq!(lattice.closure_via_hyperplanes(SubsetMask::EMPTY), SubsetMask::full(2));
    }

    #[test]
    fn example_closure_via_hyperplanes() {
        let lattice = FlatLattice::new(&example()).unwrap();
        assert_eq!(lattice.closure_via_hyperplanes(s(&[1])), s(&[1, 3]));
        assert_eq!(lattice.closure_via_hyperplanes(s(&[1, 2])), s(&[1, 2, 3]));
        for x in power_set(3).unwrap() {
            assert_eq!(lattice.closure_via_hyperplanes(x), lattice.matroid().closure(x));
        }
    }

    #[test]
    fn example_flat_intersections() {
        let lattice = FlatLattice::new(&example()).unwrap();
        assert_eq!(lattice.flat_as_hyperplane_intersection(s(&[2])).unwrap(), fam(3, &[&[2]]));
        let all = lattice.flat_as_hyperplane_intersection(SubsetMask::EMPTY).unwrap();
        assert_eq!(all, fam(3, &[&[2], &[1, 3]]));
        assert_eq!(all.iter().fold(SubsetMask::full(3), |a, b| a & b), SubsetMask::EMPTY);
        assert!(matches!(
            lattice.flat_as_hyperplane_intersection(SubsetMask::full(3)),
            Err(Error::FullRankFlat { .. })
        ));
        assert!(matches!(
            lattice.flat_as_hyperplane_intersection(s(&[3])),
            Err(Error::NotAFlat { .. })
        ));
    }

    #[test]
    fn example_closure_leq() {
        let lattice = FlatLattice::new(&example()).unwrap();
        assert!(lattice.closure_leq(s(&[1]), s(&[3])));
        assert!(!lattice.closure_leq(s(&[2]), s(&[1])));
        for x in power_set(3).unwrap() {
            assert!(lattice.closure_leq(x, x));
        }
    }

    #[test]
    fn restricted_lattice() {
        let r = example().restriction(s(&[1, 3]));
        let lattice = FlatLattice::new(&r).unwrap();
        assert_eq!(lattice.flats(), &fam(3, &[&[], &[1, 3]]));
        assert_eq!(lattice.hyperplanes(), &fam(3, &[&[]]));
    }
}
