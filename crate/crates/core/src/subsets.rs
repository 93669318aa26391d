//! Subsets of a small ground set as bitmasks, and canonical families of them.
//!
//! Elements are 0-based internally and rendered 1-based: the set holding
//! elements 0 and 2 displays as `{1,3}`. Families render as
//! `[{1};{3}]` in canonical order (cardinality, then numeric value).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// Largest ground set any operation accepts.
pub const MAX_UNIVERSE: usize = 24;

/// An element of the ground set, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    /// Label used in rendered output.
    pub fn label(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

pub(crate) fn check_universe(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::UniverseTooLarge { n, max })
    } else {
        Ok(())
    }
}

/// A subset of `{0, .., n-1}` stored as a bit vector.
///
/// The mask does not carry its universe; callers validate with
/// [`SubsetMask::fits`] against the universe they work in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole universe of size `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_UNIVERSE);
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < MAX_UNIVERSE);
        SubsetMask(1 << e)
    }

    /// Builds a mask from 0-based indices.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(SubsetMask::EMPTY, |acc, e| acc.with(e))
    }

    /// Builds a mask from 1-based labels, as written in fixtures.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        SubsetMask::from_indices(labels.into_iter().map(|l| l - 1))
    }

    pub fn fits(self, n: usize) -> bool {
        self.0 & !SubsetMask::full(n).0 == 0
    }

    pub(crate) fn check_fits(self, n: usize) -> Result<()> {
        if self.fits(n) {
            Ok(())
        } else {
            Err(Error::SetOutOfRange { set: self, n })
        }
    }

    pub fn contains(self, e: usize) -> bool {
        e < 32 && self.0 & (1 << e) != 0
    }

    #[must_use]
    pub fn with(self, e: usize) -> Self {
        SubsetMask(self.0 | (1 << e))
    }

    #[must_use]
    pub fn without(self, e: usize) -> Self {
        SubsetMask(self.0 & !(1 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: SubsetMask) -> bool {
        self != other && self.is_subset_of(other)
    }

    pub fn intersects(self, other: SubsetMask) -> bool {
        self.0 & other.0 != 0
    }

    /// Element indices in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in canonical order.
    pub fn subsets(self) -> Subsets {
        let positions: Vec<usize> = self.iter().collect();
        Subsets {
            inner: PowerSet::unchecked(positions.len()),
            positions,
        }
    }

    /// Canonical ordering: cardinality first, then numeric value.
    pub fn canonical_cmp(&self, other: &SubsetMask) -> Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }

    fn scatter(self, positions: &[usize]) -> SubsetMask {
        SubsetMask::from_indices(self.iter().map(|i| positions[i]))
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !rhs.0)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e + 1)?;
        }
        f.write_str("}")
    }
}

/// Iterator over the element indices of a mask.
#[derive(Debug, Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// All subsets of a universe in canonical order.
///
/// Within one cardinality the next mask is produced with Gosper's hack,
/// which walks the masks of a fixed popcount in increasing numeric order.
#[derive(Debug, Clone)]
pub struct PowerSet {
    n: usize,
    size: usize,
    next: Option<u64>,
}

impl PowerSet {
    fn unchecked(n: usize) -> Self {
        PowerSet {
            n,
            size: 0,
            next: Some(0),
        }
    }
}

impl Iterator for PowerSet {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let v = self.next?;
        let limit = 1u64 << self.n;
        let mut succ = if v == 0 {
            limit
        } else {
            let c = v & v.wrapping_neg();
            let r = v + c;
            (((r ^ v) >> 2) / c) | r
        };
        if succ >= limit {
            self.size += 1;
            succ = if self.size <= self.n {
                (1u64 << self.size) - 1
            } else {
                limit
            };
        }
        self.next = (succ < limit).then_some(succ);
        Some(SubsetMask(v as u32))
    }
}

/// Every subset of `{0, .., n-1}`, each exactly once, in canonical order.
pub fn power_set(n: usize) -> Result<PowerSet> {
    check_universe(n, MAX_UNIVERSE)?;
    Ok(PowerSet::unchecked(n))
}

/// Subsets of a fixed mask in canonical order.
#[derive(Debug, Clone)]
pub struct Subsets {
    inner: PowerSet,
    positions: Vec<usize>,
}

impl Iterator for Subsets {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        self.inner.next().map(|m| m.scatter(&self.positions))
    }
}

/// A deduplicated family of subsets in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    universe_size: usize,
    members: Vec<SubsetMask>,
}

impl SetFamily {
    pub fn empty(universe_size: usize) -> Self {
        SetFamily {
            universe_size,
            members: Vec::new(),
        }
    }

    /// Sorts and deduplicates `members`; fails if one does not fit the universe.
    pub fn new<I: IntoIterator<Item = SubsetMask>>(universe_size: usize, members: I) -> Result<Self> {
        check_universe(universe_size, MAX_UNIVERSE)?;
        let members: Vec<SubsetMask> = members.into_iter().collect();
        for m in &members {
            m.check_fits(universe_size)?;
        }
        Ok(Self::from_unsorted(universe_size, members))
    }

    pub(crate) fn from_unsorted(universe_size: usize, mut members: Vec<SubsetMask>) -> Self {
        members.sort_by(SubsetMask::canonical_cmp);
        members.dedup();
        SetFamily {
            universe_size,
            members,
        }
    }

    /// Members must already be canonical and deduplicated.
    pub(crate) fn from_canonical(universe_size: usize, members: Vec<SubsetMask>) -> Self {
        debug_assert!(members
            .windows(2)
            .all(|w| w[0].canonical_cmp(&w[1]) == Ordering::Less));
        SetFamily {
            universe_size,
            members,
        }
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::iter::Copied<std::slice::Iter<'_, SubsetMask>> {
        self.members.iter().copied()
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        self.members
            .binary_search_by(|m| m.canonical_cmp(&set))
            .is_ok()
    }

    /// True if no member contains another.
    pub fn is_antichain(&self) -> bool {
        self.members.iter().enumerate().all(|(i, a)| {
            self.members[i + 1..]
                .iter()
                .all(|b| !a.is_subset_of(*b) && !b.is_subset_of(*a))
        })
    }

    /// Union of all members.
    pub fn union(&self) -> SubsetMask {
        self.iter().fold(SubsetMask::EMPTY, |a, b| a | b)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = SubsetMask;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, SubsetMask>>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("]")
    }
}

/// Members of `family` that contain no other member.
pub fn min_family(family: &SetFamily) -> SetFamily {
    // Canonical order puts every proper subset before its supersets.
    let mut kept: Vec<SubsetMask> = Vec::new();
    for m in family.iter() {
        if !kept.iter().any(|k| k.is_subset_of(m)) {
            kept.push(m);
        }
    }
    SetFamily::from_canonical(family.universe_size, kept)
}

/// Members of `family` contained in no other member.
pub fn max_family(family: &SetFamily) -> SetFamily {
    let mut kept: Vec<SubsetMask> = Vec::new();
    for m in family.iter().rev() {
        if !kept.iter().any(|k| m.is_subset_of(*k)) {
            kept.push(m);
        }
    }
    kept.reverse();
    SetFamily::from_canonical(family.universe_size, kept)
}

/// Parses `{a,b,c}` with 1-based labels. Whitespace is ignored.
///
/// Errors carry the 1-based column within `text`.
pub fn parse_set(text: &str, n: usize) -> Result<SubsetMask> {
    let mut chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).peekable();
    let err = |col: usize, message: String| Error::Parse {
        line: 1,
        column: col + 1,
        message,
    };
    match chars.next() {
        Some((_, '{')) => {}
        Some((i, c)) => return Err(err(i, format!("expected '{{', found '{c}'"))),
        None => return Err(err(0, "expected a set".into())),
    }
    let mut mask = SubsetMask::EMPTY;
    let mut expect_item = true;
    let mut closed = false;
    while let Some((i, c)) = chars.next() {
        match c {
            '}' => {
                if expect_item && !mask.is_empty() {
                    return Err(err(i, "trailing comma".into()));
                }
                closed = true;
                if let Some((j, c)) = chars.next() {
                    return Err(err(j, format!("unexpected '{c}' after set")));
                }
                break;
            }
            ',' if !expect_item => expect_item = true,
            d if d.is_ascii_digit() && expect_item => {
                let mut value = d.to_digit(10).unwrap() as usize;
                while let Some(&(_, d)) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        value = value.saturating_mul(10).saturating_add(v as usize);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if value == 0 || value > n {
                    return Err(err(i, format!("element {value} outside 1..={n}")));
                }
                mask = mask.with(value - 1);
                expect_item = false;
            }
            c => return Err(err(i, format!("unexpected '{c}'"))),
        }
    }
    if !closed {
        return Err(err(text.len(), "missing '}'".into()));
    }
    Ok(mask)
}

/// Parses `{..};{..};..` (optionally wrapped in `[`..`]`) into a family.
pub fn parse_family(text: &str, n: usize) -> Result<SetFamily> {
    let trimmed = text.trim();
    let (body, offset) = match trimmed.strip_prefix('[') {
        Some(rest) => match rest.strip_suffix(']') {
            Some(inner) => (inner, text.find('[').unwrap() + 1),
            None => {
                return Err(Error::Parse {
                    line: 1,
                    column: text.len() + 1,
                    message: "missing ']'".into(),
                })
            }
        },
        None => (text, 0),
    };
    let mut members = Vec::new();
    if body.trim().is_empty() {
        return SetFamily::new(n, members);
    }
    let mut start = 0;
    for piece in body.split(';') {
        let set = parse_set(piece, n).map_err(|e| match e {
            Error::Parse { column, message, .. } => Error::Parse {
                line: 1,
                column: column + offset + start,
                message,
            },
            other => other,
        })?;
        members.push(set);
        start += piece.len() + 1;
    }
    SetFamily::new(n, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(n, sets.iter().map(|s| SubsetMask::from_labels(s.iter().copied()))).unwrap()
    }

    /// Pairwise-inclusion scan, independent of the canonical-order shortcut.
    fn min_oracle(f: &SetFamily) -> Vec<SubsetMask> {
        f.iter()
            .filter(|x| !f.iter().any(|y| y.is_proper_subset_of(*x)))
            .collect()
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(SubsetMask::from_indices([0, 2]).to_string(), "{1,3}");
        assert_eq!(SubsetMask::EMPTY.to_string(), "{}");
        assert_eq!(fam(3, &[&[1, 3], &[2]]).to_string(), "[{2};{1,3}]");
        assert_eq!(SetFamily::empty(3).to_string(), "[]");
    }

    #[test]
    fn min_family_examples() {
        assert_eq!(min_family(&fam(3, &[&[1], &[3], &[1, 3]])), fam(3, &[&[1], &[3]]));
        assert_eq!(min_family(&SetFamily::empty(3)), SetFamily::empty(3));
        let f = fam(3, &[&[1], &[3], &[1, 3], &[2, 3]]);
        assert_eq!(min_family(&f).members(), min_oracle(&f).as_slice());
        assert_eq!(min_family(&f), fam(3, &[&[1], &[3]]));
    }

    #[test]
    fn max_family_examples() {
        let indep = fam(3, &[&[], &[1], &[2], &[3], &[1, 2], &[2, 3]]);
        assert_eq!(max_family(&indep), fam(3, &[&[1, 2], &[2, 3]]));
        assert_eq!(max_family(&fam(3, &[&[1]])), fam(3, &[&[1]]));
        let all = SetFamily::new(3, power_set(3).unwrap()).unwrap();
        assert_eq!(max_family(&all), fam(3, &[&[1, 2, 3]]));
    }

    #[test]
    fn power_set_small() {
        assert_eq!(power_set(0).unwrap().collect::<Vec<_>>(), vec![SubsetMask::EMPTY]);
        let two: Vec<String> = power_set(2).unwrap().map(|m| m.to_string()).collect();
        assert_eq!(two, ["{}", "{1}", "{2}", "{1,2}"]);
        assert_eq!(power_set(3).unwrap().count(), 8);
        assert!(matches!(
            power_set(25),
            Err(Error::UniverseTooLarge { n: 25, max: 24 })
        ));
    }

    #[test]
    fn power_set_is_canonical_and_complete() {
        for n in 0..=10 {
            let all: Vec<SubsetMask> = power_set(n).unwrap().collect();
            assert_eq!(all.len(), 1 << n);
            assert!(all.windows(2).all(|w| w[0].canonical_cmp(&w[1]) == Ordering::Less));
            assert!(all.iter().all(|m| m.fits(n)));
        }
    }

    #[test]
    fn subsets_of_mask() {
        let m = SubsetMask::from_labels([2, 4]);
        let subs: Vec<String> = m.subsets().map(|s| s.to_string()).collect();
        assert_eq!(subs, ["{}", "{2}", "{4}", "{2,4}"]);
    }

    #[test]
    fn parse_sets() {
        assert_eq!(parse_set(" { 1 , 3 } ", 3).unwrap(), SubsetMask::from_labels([1, 3]));
        assert_eq!(parse_set("{}", 3).unwrap(), SubsetMask::EMPTY);
        assert!(matches!(parse_set("{4}", 3), Err(Error::Parse { column: 2, .. })));
        assert!(parse_set("{1,}", 3).is_err());
        assert!(parse_set("{1", 3).is_err());
        assert!(parse_set("1}", 3).is_err());
        assert!(parse_set("{1}x", 3).is_err());
        assert!(parse_set("{0}", 3).is_err());
        assert_eq!(
            parse_family("[{2};{1,3}]", 3).unwrap(),
            fam(3, &[&[2], &[1, 3]])
        );
        assert_eq!(parse_family("{};{1}", 3).unwrap().len(), 2);
        assert!(parse_family("[]", 3).unwrap().is_empty());
    }

    #[test]
    fn family_rejects_out_of_range() {
        assert!(SetFamily::new(2, [SubsetMask::from_labels([3])]).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn family_strategy() -> impl Strategy<Value = SetFamily> {
            (0usize..=6).prop_flat_map(|n| {
                proptest::collection::vec(0u32..(1 << n), 0..20).prop_map(move |v| {
                    SetFamily::new(n, v.into_iter().map(SubsetMask::from_bits)).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn min_max_are_idempotent_antichains(f in family_strategy()) {
                let mn = min_family(&f);
                let mx = max_family(&f);
                prop_assert!(mn.is_antichain());
                prop_assert!(mx.is_antichain());
                prop_assert_eq!(min_family(&mn), mn.clone());
                prop_assert_eq!(max_family(&mx), mx.clone());
                prop_assert!(mn.iter().all(|m| f.contains(m)));
                prop_assert!(mx.iter().all(|m| f.contains(m)));
                let oracle = min_oracle(&f);
                prop_assert_eq!(mn.members(), oracle.as_slice());
            }

            #[test]
            fn display_parse_roundtrip(f in family_strategy()) {
                let n = f.universe_size();
                prop_assert_eq!(parse_family(&f.to_string(), n).unwrap(), f);
            }
        }
    }
}
