//! Matroids over a small ground set: independence, rank, closure, bases,
//! restriction, closure-axiom validation and the weighted greedy base.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, IndependenceAxiom, Result};
use crate::subsets::{check_universe, max_family, SetFamily, SubsetMask, MAX_UNIVERSE};

/// Ranks are tabulated for every subset at construction up to this size.
pub const RANK_TABLE_MAX: usize = 16;

/// Largest universe [`validate_closure_axioms`] will scan.
pub const CLOSURE_AXIOM_MAX: usize = 12;

/// How the independent sets of a matroid are described.
#[derive(Debug, Clone, PartialEq)]
pub enum Representation {
    /// The complete list of independent sets.
    ExplicitFamily(SetFamily),
    /// Every set of at most `k` elements is independent.
    Uniform { k: usize },
    /// Column vectors of a binary matrix; `rows[i]` has bit `j` set when
    /// entry (i, j) is 1.
    Gf2Linear { rows: Vec<u32> },
    /// Element `i` is edge `edges[i]`; a set is independent iff its edges
    /// form a forest. Vertices are 0-based.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    /// At most `capacities[i]` elements may come from `blocks[i]`.
    Partition {
        blocks: Vec<SubsetMask>,
        capacities: Vec<usize>,
    },
}

impl Representation {
    pub fn kind(&self) -> &'static str {
        match self {
            Representation::ExplicitFamily(_) => "explicit",
            Representation::Uniform { .. } => "uniform",
            Representation::Gf2Linear { .. } => "gf2",
            Representation::Graphic { .. } => "graphic",
            Representation::Partition { .. } => "partition",
        }
    }
}

#[derive(Debug)]
struct Inner {
    n: usize,
    repr: Representation,
    /// Membership bitmap for explicit families, indexed by mask bits.
    members: Vec<u64>,
    /// Matrix columns as row bitvectors, for `Gf2Linear`.
    columns: Vec<u64>,
    /// `rank_table[mask]` for every mask when `n <= RANK_TABLE_MAX`.
    rank_table: Option<Vec<u8>>,
}

/// A matroid on `{0, .., n-1}`, possibly restricted to a ground set.
///
/// Restriction keeps the original element indices: a restricted matroid
/// answers queries about subsets of the whole universe by intersecting
/// them with its ground set. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
    ground: SubsetMask,
}

impl Matroid {
    /// Validates the representation and builds the matroid.
    ///
    /// Explicit families are checked against I1 to I3.
    pub fn new(n: usize, repr: Representation) -> Result<Self> {
        check_universe(n, MAX_UNIVERSE)?;
        let mut members = Vec::new();
        let mut columns = Vec::new();
        match &repr {
            Representation::ExplicitFamily(family) => {
                if family.universe_size() != n {
                    return Err(Error::InvalidRepresentation(format!(
                        "family over universe {} used for a matroid on {n} elements",
                        family.universe_size()
                    )));
                }
                members = vec![0u64; (1usize << n).div_ceil(64)];
                for m in family {
                    let b = m.bits() as usize;
                    members[b / 64] |= 1 << (b % 64);
                }
                check_independence_axioms(family, |s| {
                    let b = s.bits() as usize;
                    members[b / 64] & (1 << (b % 64)) != 0
                })?;
            }
            Representation::Uniform { k } => {
                if *k > n {
                    return Err(Error::InvalidRepresentation(format!(
                        "uniform rank {k} exceeds n = {n}"
                    )));
                }
            }
            Representation::Gf2Linear { rows } => {
                if rows.len() > 64 {
                    return Err(Error::InvalidRepresentation(format!(
                        "{} rows given, at most 64 supported",
                        rows.len()
                    )));
                }
                let full = SubsetMask::full(n).bits();
                if let Some(i) = rows.iter().position(|r| r & !full != 0) {
                    return Err(Error::InvalidRepresentation(format!(
                        "row {} has more than {n} columns",
                        i + 1
                    )));
                }
                columns = (0..n)
                    .map(|j| {
                        rows.iter()
                            .enumerate()
                            .filter(|(_, r)| *r & (1 << j) != 0)
                            .fold(0u64, |acc, (i, _)| acc | (1 << i))
                    })
                    .collect();
            }
            Representation::Graphic { vertices, edges } => {
                if edges.len() != n {
                    return Err(Error::InvalidRepresentation(format!(
                        "{} edges given for n = {n}",
                        edges.len()
                    )));
                }
                if let Some(i) = edges.iter().position(|&(u, v)| u >= *vertices || v >= *vertices) {
                    return Err(Error::InvalidRepresentation(format!(
                        "edge {} references a vertex outside 1..={vertices}",
                        i + 1
                    )));
                }
            }
            Representation::Partition { blocks, capacities } => {
                if blocks.len() != capacities.len() {
                    return Err(Error::InvalidRepresentation(
                        "one capacity is required per block".into(),
                    ));
                }
                let mut seen = SubsetMask::EMPTY;
                for b in blocks {
                    if b.is_empty() || !b.fits(n) {
                        return Err(Error::InvalidRepresentation(format!(
                            "block {b} is empty or outside the universe"
                        )));
                    }
                    if b.intersects(seen) {
                        return Err(Error::InvalidRepresentation(format!(
                            "block {b} overlaps an earlier block"
                        )));
                    }
                    seen = seen | *b;
                }
                if seen != SubsetMask::full(n) {
                    return Err(Error::InvalidRepresentation(format!(
                        "blocks do not cover {}",
                        SubsetMask::full(n) - seen
                    )));
                }
            }
        }
        let mut inner = Inner {
            n,
            repr,
            members,
            columns,
            rank_table: None,
        };
        if n <= RANK_TABLE_MAX {
            inner.rank_table = Some(tabulate_ranks(&inner));
        }
        Ok(Matroid {
            inner: Arc::new(inner),
            ground: SubsetMask::full(n),
        })
    }

    /// The matroid whose independent sets are exactly `family`.
    pub fn from_family(n: usize, family: SetFamily) -> Result<Self> {
        Self::new(n, Representation::ExplicitFamily(family))
    }

    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        Self::new(n, Representation::Uniform { k })
    }

    /// Every subset independent.
    pub fn free(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    pub fn gf2(n: usize, rows: Vec<u32>) -> Result<Self> {
        Self::new(n, Representation::Gf2Linear { rows })
    }

    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(edges.len(), Representation::Graphic { vertices, edges })
    }

    pub fn partition(n: usize, blocks: Vec<SubsetMask>, capacities: Vec<usize>) -> Result<Self> {
        Self::new(n, Representation::Partition { blocks, capacities })
    }

    /// Size of the label universe, not of the ground set.
    pub fn universe_size(&self) -> usize {
        self.inner.n
    }

    /// The ground set; the whole universe unless restricted.
    pub fn ground(&self) -> SubsetMask {
        self.ground
    }

    pub fn representation(&self) -> &Representation {
        &self.inner.repr
    }

    pub fn is_restricted(&self) -> bool {
        self.ground != SubsetMask::full(self.inner.n)
    }

    pub fn is_independent(&self, set: SubsetMask) -> bool {
        debug_assert!(set.fits(self.inner.n));
        set.is_subset_of(self.ground) && self.inner.independent(set)
    }

    pub fn rank(&self, set: SubsetMask) -> usize {
        let set = set & self.ground;
        match &self.inner.rank_table {
            Some(t) => t[set.bits() as usize] as usize,
            None => self.inner.rank_uncached(set),
        }
    }

    /// Rank of the ground set.
    pub fn full_rank(&self) -> usize {
        self.rank(self.ground)
    }

    /// All elements whose addition leaves the rank unchanged.
    pub fn closure(&self, set: SubsetMask) -> SubsetMask {
        let set = set & self.ground;
        let r = self.rank(set);
        let mut cl = set;
        for e in (self.ground - set).iter() {
            if self.rank(set.with(e)) == r {
                cl = cl.with(e);
            }
        }
        cl
    }

    pub fn is_closed(&self, set: SubsetMask) -> bool {
        self.closure(set) == set
    }

    /// Independent subsets of the ground set, canonical order.
    pub fn independent_sets(&self) -> SetFamily {
        let n = self.inner.n;
        match &self.inner.repr {
            Representation::ExplicitFamily(f) if !self.is_restricted() => f.clone(),
            Representation::ExplicitFamily(f) => {
                SetFamily::from_canonical(n, f.iter().filter(|m| m.is_subset_of(self.ground)).collect())
            }
            _ => SetFamily::from_canonical(
                n,
                self.ground.subsets().filter(|s| self.inner.independent(*s)).collect(),
            ),
        }
    }

    /// Maximal independent sets.
    pub fn bases(&self) -> SetFamily {
        max_family(&self.independent_sets())
    }

    /// The matroid on `set` whose independent sets are those of `self`
    /// contained in `set`. Element indices are unchanged.
    pub fn restriction(&self, set: SubsetMask) -> Matroid {
        debug_assert!(set.fits(self.inner.n));
        Matroid {
            inner: Arc::clone(&self.inner),
            ground: set & self.ground,
        }
    }

    /// Independence decided through the closure operator: no element of
    /// `set` lies in the closure of the others.
    pub fn independent_via_closure(&self, set: SubsetMask) -> bool {
        set.is_subset_of(self.ground)
            && set.iter().all(|x| !self.closure(set.without(x)).contains(x))
    }

    /// Picks elements by descending weight (ties by ascending index),
    /// keeping each one that leaves the set independent.
    ///
    /// Negative weights are not skipped, so the result is always a base.
    pub fn greedy_max_weight_base(&self, weights: &WeightVector) -> Result<GreedyBase> {
        if weights.len() != self.inner.n {
            return Err(Error::WeightArityMismatch {
                expected: self.inner.n,
                got: weights.len(),
            });
        }
        let w = weights.as_slice();
        let mut order: Vec<usize> = self.ground.iter().collect();
        order.sort_by(|&a, &b| w[b].total_cmp(&w[a]).then(a.cmp(&b)));
        let mut base = SubsetMask::EMPTY;
        for e in order {
            if self.is_independent(base.with(e)) {
                base = base.with(e);
            }
        }
        Ok(GreedyBase {
            base,
            weight: weights.total(base),
        })
    }
}

impl Inner {
    fn independent(&self, set: SubsetMask) -> bool {
        match &self.repr {
            Representation::ExplicitFamily(_) => {
                let b = set.bits() as usize;
                self.members[b / 64] & (1 << (b % 64)) != 0
            }
            Representation::Uniform { k } => set.len() <= *k,
            Representation::Gf2Linear { .. } => {
                let mut basis = [0u64; 64];
                set.iter().all(|j| insert_gf2(&mut basis, self.columns[j]))
            }
            Representation::Graphic { vertices, edges } => {
                let mut dsu = DisjointSets::new(*vertices);
                set.iter().all(|e| {
                    let (u, v) = edges[e];
                    dsu.union(u, v)
                })
            }
            Representation::Partition { blocks, capacities } => blocks
                .iter()
                .zip(capacities)
                .all(|(b, &c)| (set & *b).len() <= c),
        }
    }

    fn rank_uncached(&self, set: SubsetMask) -> usize {
        match &self.repr {
            Representation::ExplicitFamily(f) => f
                .iter()
                .filter(|m| m.is_subset_of(set))
                .map(SubsetMask::len)
                .max()
                .unwrap_or(0),
            Representation::Uniform { k } => set.len().min(*k),
            _ => {
                let mut acc = SubsetMask::EMPTY;
                for e in set.iter() {
                    if self.independent(acc.with(e)) {
                        acc = acc.with(e);
                    }
                }
                acc.len()
            }
        }
    }
}

/// rank(X) = |X| when X is independent, otherwise the largest rank of X - {x}.
fn tabulate_ranks(inner: &Inner) -> Vec<u8> {
    let size = 1usize << inner.n;
    let mut table = vec![0u8; size];
    for bits in 1..size {
        let set = SubsetMask::from_bits(bits as u32);
        table[bits] = if inner.independent(set) {
            set.len() as u8
        } else {
            set.iter()
                .map(|x| table[set.without(x).bits() as usize])
                .max()
                .unwrap_or(0)
        };
    }
    table
}

/// Reduces `v` against `basis` (indexed by leading bit); returns false if
/// it reduced to zero.
fn insert_gf2(basis: &mut [u64; 64], mut v: u64) -> bool {
    while v != 0 {
        let lead = 63 - v.leading_zeros() as usize;
        if basis[lead] == 0 {
            basis[lead] = v;
            return true;
        }
        v ^= basis[lead];
    }
    false
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn check_independence_axioms(family: &SetFamily, contains: impl Fn(SubsetMask) -> bool) -> Result<()> {
    if !contains(SubsetMask::EMPTY) {
        return Err(Error::AxiomViolation {
            axiom: IndependenceAxiom::I1,
            witness: vec![SubsetMask::EMPTY],
            detail: "{} is not independent".into(),
        });
    }
    // Closure under single-element deletion gives I2 by induction.
    for m in family {
        for e in m.iter() {
            let sub = m.without(e);
            if !contains(sub) {
                return Err(Error::AxiomViolation {
                    axiom: IndependenceAxiom::I2,
                    witness: vec![m, sub],
                    detail: format!("{m} is independent but its subset {sub} is not"),
                });
            }
        }
    }
    // Under I2 it suffices to augment from sets one element larger.
    for small in family {
        for big in family.iter().filter(|b| b.len() == small.len() + 1) {
            if !(big - small).iter().any(|e| contains(small.with(e))) {
                return Err(Error::AxiomViolation {
                    axiom: IndependenceAxiom::I3,
                    witness: vec![small, big],
                    detail: format!("{small} cannot be augmented from {big}"),
                });
            }
        }
    }
    Ok(())
}

/// One weight per element.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if let Some(index) = weights.iter().position(|w| !w.is_finite()) {
            return Err(Error::NonFiniteWeight { index });
        }
        Ok(WeightVector(weights))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn total(&self, set: SubsetMask) -> f64 {
        set.iter().map(|e| self.0[e]).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreedyBase {
    pub base: SubsetMask,
    pub weight: f64,
}

/// One of the four closure axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureAxiom {
    /// X ⊆ cl(X)
    Cl1,
    /// X ⊆ Y implies cl(X) ⊆ cl(Y)
    Cl2,
    /// cl(cl(X)) = cl(X)
    Cl3,
    /// Exchange: y ∈ cl(X ∪ {x}) - cl(X) implies x ∈ cl(X ∪ {y})
    Cl4,
}

impl fmt::Display for ClosureAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClosureAxiom::Cl1 => "CL1",
            ClosureAxiom::Cl2 => "CL2",
            ClosureAxiom::Cl3 => "CL3",
            ClosureAxiom::Cl4 => "CL4",
        };
        f.write_str(s)
    }
}

/// First failing closure axiom with the sets that exhibit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureViolation {
    NotExtensive { set: SubsetMask, closure: SubsetMask },
    NotMonotone { smaller: SubsetMask, larger: SubsetMask },
    NotIdempotent { set: SubsetMask, closure: SubsetMask, reclosure: SubsetMask },
    NoExchange { set: SubsetMask, x: usize, y: usize },
}

impl ClosureViolation {
    pub fn axiom(&self) -> ClosureAxiom {
        match self {
            ClosureViolation::NotExtensive { .. } => ClosureAxiom::Cl1,
            ClosureViolation::NotMonotone { .. } => ClosureAxiom::Cl2,
            ClosureViolation::NotIdempotent { .. } => ClosureAxiom::Cl3,
            ClosureViolation::NoExchange { .. } => ClosureAxiom::Cl4,
        }
    }
}

impl fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureViolation::NotExtensive { set, closure } => {
                write!(f, "CL1: X={set} but cl(X)={closure}")
            }
            ClosureViolation::NotMonotone { smaller, larger } => {
                write!(f, "CL2: {smaller} ⊆ {larger} but closures are not nested")
            }
            ClosureViolation::NotIdempotent {
                set,
                closure,
                reclosure,
            } => write!(f, "CL3: X={set}, cl(X)={closure}, cl(cl(X))={reclosure}"),
            ClosureViolation::NoExchange { set, x, y } => write!(
                f,
                "CL4: X={set}, x={}, y={}: y ∈ cl(X ∪ {{x}}) - cl(X) but x ∉ cl(X ∪ {{y}})",
                x + 1,
                y + 1
            ),
        }
    }
}

/// Checks CL1 to CL4 over every subset of `{0, .., n-1}`, axiom by axiom.
///
/// Returns `Ok(None)` when all hold, otherwise the first violation found.
/// Monotonicity is checked along single-element extensions, which implies
/// it for all nested pairs.
pub fn validate_closure_axioms<F>(n: usize, cl: F) -> Result<Option<ClosureViolation>>
where
    F: Fn(SubsetMask) -> SubsetMask,
{
    check_universe(n, CLOSURE_AXIOM_MAX)?;
    let size = 1usize << n;
    let table: Vec<SubsetMask> = (0..size)
        .map(|b| cl(SubsetMask::from_bits(b as u32)))
        .collect();
    let at = |s: SubsetMask| table[s.bits() as usize];
    let all = || crate::subsets::power_set(n).expect("checked above");

    for set in all() {
        if !set.is_subset_of(at(set)) || !at(set).fits(n) {
            return Ok(Some(ClosureViolation::NotExtensive {
                set,
                closure: at(set),
            }));
        }
    }
    for set in all() {
        for e in (SubsetMask::full(n) - set).iter() {
            let larger = set.with(e);
            if !at(set).is_subset_of(at(larger)) {
                return Ok(Some(ClosureViolation::NotMonotone { smaller: set, larger }));
            }
        }
    }
    for set in all() {
        let c = at(set);
        if at(c) != c {
            return Ok(Some(ClosureViolation::NotIdempotent {
                set,
                closure: c,
                reclosure: at(c),
            }));
        }
    }
    for set in all() {
        let base = at(set);
        for x in (SubsetMask::full(n) - set).iter() {
            for y in (at(set.with(x)) - base).iter() {
                if !at(set.with(y)).contains(x) {
                    return Ok(Some(ClosureViolation::NoExchange { set, x, y }));
                }
            }
        }
    }
    Ok(None)
}
