//! Dependence spaces: congruences on the power set, consistent sets,
//! reducts, and families that are dense in a congruence.
//!
//! A congruence is held as a kernel function mapping each subset to a
//! comparable [`ClassKey`]; two subsets are related iff their keys are
//! equal. For a matroid the key of `X` is its closure.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hyperplanes::FlatLattice;
use crate::matroid::Matroid;
use crate::subsets::{check_universe, min_family, power_set, SetFamily, SubsetMask};

/// Cap for exhaustive union-compatibility checks.
pub const CONGRUENCE_CHECK_MAX: usize = 10;
/// Cap for density checks.
pub const DENSITY_CHECK_MAX: usize = 12;
/// Cap for enumerating all consistent sets or kernel classes.
pub const ENUMERATION_MAX: usize = 20;
/// Cap for the full theorem suite.
pub const VERIFY_SUITE_MAX: usize = 8;

/// Identifies a kernel class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassKey {
    /// A canonical set, e.g. a closure.
    Set(SubsetMask),
    /// Indices of the family members containing the subset, as a bitset.
    Members(Box<[u64]>),
    /// A label from an explicit table.
    Label(u32),
}

/// Where a congruence came from.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    FromMatroidClosure,
    FromFamilyGamma(SetFamily),
    Explicit,
}

#[derive(Debug, Clone)]
enum Kernel {
    Closure(Matroid),
    Gamma(SetFamily),
    Table(Arc<[u32]>),
}

/// An equivalence relation on the subsets of `{0, .., n-1}`, given by a kernel.
///
/// Construction does not check compatibility with unions; see
/// [`is_congruence`] and [`DependenceSpace::new`].
#[derive(Debug, Clone)]
pub struct Congruence {
    universe_size: usize,
    kernel: Kernel,
}

impl Congruence {
    /// Relates subsets with equal closure.
    pub fn from_matroid(matroid: &Matroid) -> Self {
        Congruence {
            universe_size: matroid.universe_size(),
            kernel: Kernel::Closure(matroid.clone()),
        }
    }

    /// Relates subsets contained in exactly the same members of `family`.
    pub fn gamma(family: &SetFamily) -> Self {
        Congruence {
            universe_size: family.universe_size(),
            kernel: Kernel::Gamma(family.clone()),
        }
    }

    /// `labels[mask]` is the class label of `mask`.
    pub fn from_table(n: usize, labels: Vec<u32>) -> Result<Self> {
        check_universe(n, ENUMERATION_MAX)?;
        if labels.len() != 1 << n {
            return Err(Error::InvalidRepresentation(format!(
                "kernel table has {} entries, expected {}",
                labels.len(),
                1usize << n
            )));
        }
        Ok(Congruence {
            universe_size: n,
            kernel: Kernel::Table(labels.into()),
        })
    }

    /// Tabulates `label` over every subset.
    pub fn from_fn(n: usize, label: impl Fn(SubsetMask) -> u32) -> Result<Self> {
        check_universe(n, ENUMERATION_MAX)?;
        let labels = (0..1u32 << n).map(|b| label(SubsetMask::from_bits(b))).collect();
        Self::from_table(n, labels)
    }

    /// Each subset in its own class.
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, SubsetMask::bits)
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn provenance(&self) -> Provenance {
        match &self.kernel {
            Kernel::Closure(_) => Provenance::FromMatroidClosure,
            Kernel::Gamma(f) => Provenance::FromFamilyGamma(f.clone()),
            Kernel::Table(_) => Provenance::Explicit,
        }
    }

    pub fn key(&self, set: SubsetMask) -> ClassKey {
        match &self.kernel {
            Kernel::Closure(m) => ClassKey::Set(m.closure(set)),
            Kernel::Gamma(family) => {
                let mut words = vec![0u64; family.len().div_ceil(64)];
                for (i, h) in family.iter().enumerate() {
                    if set.is_subset_of(h) {
                        words[i / 64] |= 1 << (i % 64);
                    }
                }
                ClassKey::Members(words.into_boxed_slice())
            }
            Kernel::Table(t) => ClassKey::Label(t[set.bits() as usize]),
        }
    }

    pub fn related(&self, a: SubsetMask, b: SubsetMask) -> bool {
        self.key(a) == self.key(b)
    }

    /// The classes of the relation, each in canonical order, ordered by
    /// their first member.
    pub fn classes(&self) -> Result<Vec<SetFamily>> {
        check_universe(self.universe_size, ENUMERATION_MAX)?;
        let mut index: HashMap<ClassKey, usize> = HashMap::new();
        let mut classes: Vec<Vec<SubsetMask>> = Vec::new();
        for x in power_set(self.universe_size)? {
            let slot = *index.entry(self.key(x)).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[slot].push(x);
        }
        Ok(classes
            .into_iter()
            .map(|c| SetFamily::from_canonical(self.universe_size, c))
            .collect())
    }

    /// Every related ordered pair, grouped class by class.
    pub fn pairs(&self) -> Result<Vec<(SubsetMask, SubsetMask)>> {
        Ok(self
            .classes()?
            .iter()
            .flat_map(|c| {
                c.members()
                    .iter()
                    .flat_map(move |a| c.members().iter().map(move |b| (*a, *b)))
            })
            .collect())
    }
}

/// A congruence on the subsets of a ground set: related sets stay related
/// under union with related sets.
#[derive(Debug, Clone)]
pub struct DependenceSpace {
    theta: Congruence,
}

impl DependenceSpace {
    /// Checks union compatibility exhaustively before accepting `theta`.
    pub fn new(theta: Congruence) -> Result<Self> {
        let report = is_congruence(&theta)?;
        if !report.holds {
            return Err(Error::InvalidRepresentation(format!(
                "not a congruence: {}",
                report.witness.map(|w| w.to_string()).unwrap_or_default()
            )));
        }
        Ok(DependenceSpace { theta })
    }

    /// The space of subsets related by equal closure.
    pub fn from_matroid(matroid: &Matroid) -> Self {
        DependenceSpace {
            theta: Congruence::from_matroid(matroid),
        }
    }

    pub fn theta(&self) -> &Congruence {
        &self.theta
    }

    pub fn universe_size(&self) -> usize {
        self.theta.universe_size
    }
}

/// The dependence space of a matroid.
pub fn theta_from_matroid(matroid: &Matroid) -> DependenceSpace {
    DependenceSpace::from_matroid(matroid)
}

/// Names of the checks a [`TheoremReport`] can carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// A kernel is compatible with unions.
    Congruence,
    /// A family's Γ relation equals a congruence.
    Density,
    /// Equal closure is a congruence.
    ClosureCongruence,
    /// Consistent sets are exactly the independent sets.
    ConsistentAreIndependent,
    /// Every base of M|X has the closure of X.
    BaseClosure,
    /// Reducts of X are the bases of M|X.
    ReductsAreBases,
    /// Reducts are the minimal Y ⊆ X with cl(Y) = cl(X).
    ReductsByMinClosure,
    /// The hyperplanes are dense in the closure congruence.
    HyperplanesDense,
    /// Reducts are the minimal transversals of the nonempty X - H.
    ReductsByTransversals,
}

impl TheoremId {
    /// The checks run by [`verify_paper_theorems`], in report order.
    pub const SUITE: [TheoremId; 7] = [
        TheoremId::ClosureCongruence,
        TheoremId::ConsistentAreIndependent,
        TheoremId::BaseClosure,
        TheoremId::ReductsAreBases,
        TheoremId::ReductsByMinClosure,
        TheoremId::HyperplanesDense,
        TheoremId::ReductsByTransversals,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Congruence => "congruence",
            TheoremId::Density => "density",
            TheoremId::ClosureCongruence => "closure-congruence",
            TheoremId::ConsistentAreIndependent => "consistent-are-independent",
            TheoremId::BaseClosure => "base-closure",
            TheoremId::ReductsAreBases => "reducts-are-bases",
            TheoremId::ReductsByMinClosure => "reducts-by-min-closure",
            TheoremId::HyperplanesDense => "hyperplanes-dense",
            TheoremId::ReductsByTransversals => "reducts-by-transversals",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Named sets and families making up a counterexample.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Witness {
    pub sets: Vec<(&'static str, SubsetMask)>,
    pub families: Vec<(&'static str, SetFamily)>,
}

impl Witness {
    fn sets(sets: Vec<(&'static str, SubsetMask)>) -> Self {
        Witness {
            sets,
            families: Vec::new(),
        }
    }

    pub fn set(&self, name: &str) -> Option<SubsetMask> {
        self.sets.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str(" ")
            }
        };
        for (name, s) in &self.sets {
            sep(f)?;
            write!(f, "{name}={s}")?;
        }
        for (name, fam) in &self.families {
            sep(f)?;
            write!(f, "{name}={fam}")?;
        }
        Ok(())
    }
}

/// Outcome of one exhaustive check.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub holds: bool,
    /// Present exactly when `holds` is false.
    pub witness: Option<Witness>,
}

impl TheoremReport {
    fn pass(theorem: TheoremId) -> Self {
        TheoremReport {
            theorem,
            holds: true,
            witness: None,
        }
    }

    fn fail(theorem: TheoremId, witness: Witness) -> Self {
        TheoremReport {
            theorem,
            holds: false,
            witness: Some(witness),
        }
    }

    fn relabel(self, theorem: TheoremId) -> Self {
        TheoremReport { theorem, ..self }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{} HOLDS", self.theorem),
            Some(w) => write!(f, "{} FAILS {w}", self.theorem),
        }
    }
}

/// Whether the kernel is compatible with unions.
///
/// Checks `key(A ∪ {b}) = key(rep(A) ∪ {b})` for every subset `A`, element
/// `b` and class representative `rep(A)`. Compatibility with single
/// elements extends to arbitrary unions by induction, so this settles the
/// four-set condition. A counterexample names `A1 = rep(A)`, `A2 = A` and
/// `B1 = B2 = {b}`.
pub fn is_congruence(theta: &Congruence) -> Result<TheoremReport> {
    let n = theta.universe_size;
    check_universe(n, CONGRUENCE_CHECK_MAX)?;
    let keys: Vec<ClassKey> = (0..1u32 << n)
        .map(|b| theta.key(SubsetMask::from_bits(b)))
        .collect();
    let key = |s: SubsetMask| &keys[s.bits() as usize];
    let mut reps: HashMap<&ClassKey, SubsetMask> = HashMap::new();
    for a in power_set(n)? {
        let rep = *reps.entry(key(a)).or_insert(a);
        if rep == a {
            continue;
        }
        for b in 0..n {
            let single = SubsetMask::singleton(b);
            if key(a | single) != key(rep | single) {
                return Ok(TheoremReport::fail(
                    TheoremId::Congruence,
                    Witness::sets(vec![("A1", rep), ("A2", a), ("B1", single), ("B2", single)]),
                ));
            }
        }
    }
    Ok(TheoremReport::pass(TheoremId::Congruence))
}

/// No single deletion stays in the class of `set`.
pub fn is_consistent_by_deletion(space: &DependenceSpace, set: SubsetMask) -> bool {
    let k = space.theta.key(set);
    set.iter().all(|x| space.theta.key(set.without(x)) != k)
}

/// No proper subset lies in the class of `set`.
pub fn is_consistent_by_definition(space: &DependenceSpace, set: SubsetMask) -> bool {
    let k = space.theta.key(set);
    set.subsets()
        .filter(|y| *y != set)
        .all(|y| space.theta.key(y) != k)
}

/// Whether `set` is minimal in its class. Both characterizations are
/// evaluated and must agree.
pub fn is_consistent(space: &DependenceSpace, set: SubsetMask) -> bool {
    let fast = is_consistent_by_deletion(space, set);
    let definitional = is_consistent_by_definition(space, set);
    assert_eq!(
        fast, definitional,
        "deletion test and minimality disagree on {set}"
    );
    fast
}

/// Every consistent subset, canonical order.
pub fn consistent_sets(space: &DependenceSpace) -> Result<SetFamily> {
    let n = space.universe_size();
    check_universe(n, ENUMERATION_MAX)?;
    let members = power_set(n)?
        .filter(|x| is_consistent_by_deletion(space, *x))
        .collect();
    Ok(SetFamily::from_canonical(n, members))
}

/// Consistent `Y ⊆ X` related to `X`.
pub fn reducts_by_definition(space: &DependenceSpace, set: SubsetMask) -> SetFamily {
    let k = space.theta.key(set);
    let members = set
        .subsets()
        .filter(|y| space.theta.key(*y) == k && is_consistent_by_deletion(space, *y))
        .collect();
    SetFamily::from_canonical(space.universe_size(), members)
}

/// Minimal `Y ⊆ X` related to `X`.
pub fn reducts_by_min_class(space: &DependenceSpace, set: SubsetMask) -> SetFamily {
    let k = space.theta.key(set);
    let related = set.subsets().filter(|y| space.theta.key(*y) == k).collect();
    min_family(&SetFamily::from_canonical(space.universe_size(), related))
}

/// The reducts of `set`, computed from the definition and as the minimal
/// related subsets; the two must agree.
pub fn reducts(space: &DependenceSpace, set: SubsetMask) -> SetFamily {
    let by_definition = reducts_by_definition(space, set);
    let by_min = reducts_by_min_class(space, set);
    assert_eq!(by_definition, by_min, "reduct routes disagree on {set}");
    by_definition
}

/// The congruence relating sets contained in the same members of `family`.
pub fn gamma_of_family(family: &SetFamily) -> Congruence {
    Congruence::gamma(family)
}

/// Whether `family` induces the same partition of the power set as the space.
///
/// A counterexample is a pair classified differently by the two relations.
pub fn is_dense(family: &SetFamily, space: &DependenceSpace) -> Result<TheoremReport> {
    let n = space.universe_size();
    check_universe(n, DENSITY_CHECK_MAX)?;
    let gamma = Congruence::gamma(family);
    let mut by_gamma: HashMap<ClassKey, (SubsetMask, ClassKey)> = HashMap::new();
    let mut by_theta: HashMap<ClassKey, (SubsetMask, ClassKey)> = HashMap::new();
    for x in power_set(n)? {
        let g = gamma.key(x);
        let t = space.theta.key(x);
        let (gy, gt) = by_gamma.entry(g.clone()).or_insert((x, t.clone()));
        if *gt != t {
            return Ok(TheoremReport::fail(
                TheoremId::Density,
                Witness::sets(vec![("X", *gy), ("Y", x)]),
            ));
        }
        let (ty, tg) = by_theta.entry(t).or_insert((x, g.clone()));
        if *tg != g {
            return Ok(TheoremReport::fail(
                TheoremId::Density,
                Witness::sets(vec![("X", *ty), ("Y", x)]),
            ));
        }
    }
    Ok(TheoremReport::pass(TheoremId::Density))
}

/// The nonempty differences `X - H` over members `H` of `family`.
pub fn com_family(family: &SetFamily, set: SubsetMask) -> SetFamily {
    let diffs = family
        .iter()
        .map(|h| set - h)
        .filter(|d| !d.is_empty())
        .collect();
    SetFamily::from_unsorted(family.universe_size(), diffs)
}

/// Minimal subsets of `set` meeting every member of [`com_family`].
///
/// Minimal transversals of subsets of `set` never use elements outside
/// it, so candidates are drawn from `set` only.
pub fn reducts_via_transversals(family: &SetFamily, set: SubsetMask) -> SetFamily {
    let com = com_family(family, set);
    let hitting = set
        .subsets()
        .filter(|b| com.iter().all(|t| b.intersects(t)))
        .collect();
    min_family(&SetFamily::from_canonical(family.universe_size(), hitting))
}

/// Minimal `Y ⊆ X` with `cl(Y) = cl(X)`, straight from the closure operator.
pub fn min_closure_subsets(matroid: &Matroid, set: SubsetMask) -> SetFamily {
    let target = matroid.closure(set);
    let same = set
        .subsets()
        .filter(|y| matroid.closure(*y) == target)
        .collect();
    min_family(&SetFamily::from_canonical(matroid.universe_size(), same))
}

/// Runs every check in [`TheoremId::SUITE`] exhaustively over all subsets.
pub fn verify_paper_theorems(matroid: &Matroid) -> Result<Vec<TheoremReport>> {
    let n = matroid.universe_size();
    check_universe(n, VERIFY_SUITE_MAX)?;
    let space = DependenceSpace::from_matroid(matroid);
    let lattice = FlatLattice::new(matroid)?;
    let hyperplanes = lattice.hyperplanes();

    let mut reports = Vec::with_capacity(TheoremId::SUITE.len());
    reports.push(is_congruence(space.theta())?.relabel(TheoremId::ClosureCongruence));

    let consistent = consistent_sets(&space)?;
    let independent = matroid.independent_sets();
    reports.push(if consistent == independent {
        TheoremReport::pass(TheoremId::ConsistentAreIndependent)
    } else {
        TheoremReport::fail(
            TheoremId::ConsistentAreIndependent,
            Witness {
                sets: Vec::new(),
                families: vec![("consistent", consistent), ("independent", independent)],
            },
        )
    });

    let mut base_closure = None;
    let mut are_bases = None;
    let mut min_closure = None;
    let mut transversals = None;
    for x in power_set(n)? {
        let restricted_bases = matroid.restriction(x).bases();
        let closure = matroid.closure(x);
        if base_closure.is_none() {
            if let Some(b) = restricted_bases.iter().find(|b| matroid.closure(*b) != closure) {
                base_closure = Some(Witness::sets(vec![("X", x), ("B", b)]));
            }
        }
        if are_bases.is_none() {
            let red = reducts_by_definition(&space, x);
            if red != restricted_bases {
                are_bases = Some(family_witness(x, "reducts", red, &restricted_bases));
            }
        }
        if min_closure.is_none() {
            let by_closure = min_closure_subsets(matroid, x);
            let by_class = reducts_by_min_class(&space, x);
            if by_closure != restricted_bases {
                min_closure = Some(family_witness(x, "min-closure", by_closure, &restricted_bases));
            } else if by_class != restricted_bases {
                min_closure = Some(family_witness(x, "min-class", by_class, &restricted_bases));
            }
        }
        if transversals.is_none() {
            let t = reducts_via_transversals(hyperplanes, x);
            if t != restricted_bases {
                transversals = Some(family_witness(x, "transversals", t, &restricted_bases));
            }
        }
    }
    let report = |id, w: Option<Witness>| match w {
        None => TheoremReport::pass(id),
        Some(w) => TheoremReport::fail(id, w),
    };
    reports.push(report(TheoremId::BaseClosure, base_closure));
    reports.push(report(TheoremId::ReductsAreBases, are_bases));
    reports.push(report(TheoremId::ReductsByMinClosure, min_closure));
    reports.push(is_dense(hyperplanes, &space)?.relabel(TheoremId::HyperplanesDense));
    reports.push(report(TheoremId::ReductsByTransversals, transversals));
    Ok(reports)
}

fn family_witness(x: SubsetMask, name: &'static str, got: SetFamily, bases: &SetFamily) -> Witness {
    Witness {
        sets: vec![("X", x)],
        families: vec![(name, got), ("restriction-bases", bases.clone())],
    }
}
