//! Subsets of `[n]` as bitmasks and families of them in canonical form.
//!
//! Element `i ∈ [n]` (1-based) is bit `i - 1` of a [`SubsetMask`]. A
//! [`Family`] keeps its members strictly sorted by mask value, so two
//! families are equal exactly when their member lists are.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground-set size.
pub const MAX_GROUND: usize = 20;

/// The ground set `[n]`, `1 ≤ n ≤ 20`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSet(u8);

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_GROUND).contains(&n) {
            return Err(Error::Domain(format!("ground set size {n} outside 1..={MAX_GROUND}")));
        }
        Ok(GroundSet(n as u8))
    }

    /// Number of elements `n`.
    #[inline]
    pub fn size(self) -> usize {
        self.0 as usize
    }

    /// Number of subsets, `2^n`.
    #[inline]
    pub fn universe_len(self) -> usize {
        1usize << self.0
    }

    /// The mask of `[n]` itself.
    #[inline]
    pub fn full(self) -> SubsetMask {
        SubsetMask(((1u64 << self.0) - 1) as u32)
    }

    #[inline]
    pub fn contains_mask(self, mask: SubsetMask) -> bool {
        (mask.0 as usize) < self.universe_len()
    }

    /// Rejects masks with bits at or above `n`.
    pub fn check(self, mask: SubsetMask) -> Result<()> {
        if self.contains_mask(mask) {
            Ok(())
        } else {
            Err(Error::Domain(format!("subset {mask} is not contained in [{}]", self.0)))
        }
    }

    /// All subsets of `[n]` in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        (0..self.universe_len() as u32).map(SubsetMask)
    }
}

/// A subset of `[n]`; bit `i - 1` is set iff `i` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{i}` for a 1-based element `i`.
    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&i));
        SubsetMask(1 << (i - 1))
    }

    /// Builds a mask from 1-based element labels. Labels must lie in
    /// `1..=MAX_GROUND`; repeated labels are rejected.
    pub fn from_elements(elements: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &i in elements {
            if !(1..=MAX_GROUND).contains(&i) {
                return Err(Error::Domain(format!("element {i} outside 1..={MAX_GROUND}")));
            }
            let bit = 1u32 << (i - 1);
            if bits & bit != 0 {
                return Err(Error::Parse(format!("element {i} repeated within a set")));
            }
            bits |= bit;
        }
        Ok(SubsetMask(bits))
    }

    /// 1-based elements in increasing order.
    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// 1-based elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i + 1)
        })
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & other.0 == self.0
    }

    #[inline]
    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    /// Every subset of `self`, each exactly once, starting from `self`
    /// itself and ending with the empty set.
    pub fn submasks(self) -> Submasks {
        Submasks {
            whole: self.0,
            next: Some(self.0),
        }
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the submasks of a mask, in decreasing numeric order.
#[derive(Clone, Debug)]
pub struct Submasks {
    whole: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        self.next = if cur == 0 { None } else { Some((cur - 1) & self.whole) };
        Some(SubsetMask(cur))
    }
}

/// A family `F ⊆ 2^[n]` in canonical form.
///
/// Members are strictly increasing by mask value. A membership bitset over
/// all `2^n` subsets backs the `contains` queries used by the interval and
/// cube routines.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family {
    ground: GroundSet,
    members: Vec<SubsetMask>,
    index: Vec<u64>,
}

impl Family {
    /// Builds a family from arbitrary masks. Duplicates and out-of-range
    /// masks are rejected.
    pub fn new(ground: GroundSet, members: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        let mut members: Vec<SubsetMask> = members.into_iter().collect();
        for &m in &members {
            ground.check(m)?;
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!("duplicate member {}", w[0])));
        }
        Ok(Self::from_sorted(ground, members))
    }

    /// Builds a family from masks, silently merging duplicates.
    pub fn from_masks(ground: GroundSet, members: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        let mut members: Vec<SubsetMask> = members.into_iter().collect();
        for &m in &members {
            ground.check(m)?;
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self::from_sorted(ground, members))
    }

    /// Members must already be strictly increasing and in range.
    pub(crate) fn from_sorted(ground: GroundSet, members: Vec<SubsetMask>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let mut index = vec![0u64; ground.universe_len().div_ceil(64)];
        for m in &members {
            let b = m.0 as usize;
            index[b >> 6] |= 1 << (b & 63);
        }
        Family { ground, members, index }
    }

    /// Builds the family whose members are the set bits of `selector`:
    /// subset with mask `s` is a member iff bit `s` of `selector` is set.
    /// Requires `n ≤ 6`.
    pub fn from_selector(ground: GroundSet, selector: u64) -> Self {
        debug_assert!(ground.universe_len() <= 64);
        let members = (0..ground.universe_len() as u32)
            .filter(|&s| selector >> s & 1 == 1)
            .map(SubsetMask)
            .collect();
        Self::from_sorted(ground, members)
    }

    pub fn empty(ground: GroundSet) -> Self {
        Self::from_sorted(ground, Vec::new())
    }

    /// `2^[n]`.
    pub fn power_set(ground: GroundSet) -> Self {
        Self::from_sorted(ground, ground.subsets().collect())
    }

    /// The interval `[lower, upper]` as a family; empty when `lower ⊄ upper`.
    pub fn interval(ground: GroundSet, lower: SubsetMask, upper: SubsetMask) -> Result<Self> {
        ground.check(lower)?;
        ground.check(upper)?;
        if !lower.is_subset_of(upper) {
            return Ok(Self::empty(ground));
        }
        let free = upper.difference(lower);
        let mut members: Vec<SubsetMask> = free.submasks().map(|d| lower.union(d)).collect();
        members.sort_unstable();
        Ok(Self::from_sorted(ground, members))
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn contains(&self, mask: SubsetMask) -> bool {
        let b = mask.0 as usize;
        b < self.ground.universe_len() && self.index[b >> 6] >> (b & 63) & 1 == 1
    }

    pub fn contains_empty(&self) -> bool {
        self.contains(SubsetMask::EMPTY)
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.members.iter().copied()
    }

    fn same_ground(&self, other: &Family) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "ground sets differ: [{}] vs [{}]",
                self.ground.size(),
                other.ground.size()
            )))
        }
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        self.same_ground(other)?;
        let mut members: Vec<SubsetMask> = self.iter().chain(other.iter()).collect();
        members.sort_unstable();
        members.dedup();
        Ok(Self::from_sorted(self.ground, members))
    }

    pub fn intersection(&self, other: &Family) -> Result<Family> {
        self.same_ground(other)?;
        let members = self.iter().filter(|&m| other.contains(m)).collect();
        Ok(Self::from_sorted(self.ground, members))
    }

    pub fn difference(&self, other: &Family) -> Result<Family> {
        self.same_ground(other)?;
        let members = self.iter().filter(|&m| !other.contains(m)).collect();
        Ok(Self::from_sorted(self.ground, members))
    }

    /// `F ∪ {set}`.
    pub fn with(&self, set: SubsetMask) -> Result<Family> {
        self.ground.check(set)?;
        if self.contains(set) {
            return Ok(self.clone());
        }
        let mut members = self.members.clone();
        let at = members.partition_point(|&m| m < set);
        members.insert(at, set);
        Ok(Self::from_sorted(self.ground, members))
    }

    /// `F ∖ {set}`.
    pub fn without(&self, set: SubsetMask) -> Family {
        let members = self.iter().filter(|&m| m != set).collect();
        Self::from_sorted(self.ground, members)
    }

    /// Whether the whole interval `[lower, upper]` lies in the family.
    /// Returns `false` when `lower ⊄ upper`. Masks outside the ground set
    /// are never members, so this never fails.
    pub fn contains_interval(&self, lower: SubsetMask, upper: SubsetMask) -> bool {
        if !lower.is_subset_of(upper) {
            return false;
        }
        upper
            .difference(lower)
            .submasks()
            .all(|d| self.contains(lower.union(d)))
    }

    /// Checked form of [`Family::contains_interval`]: both masks must lie in
    /// the ground set.
    pub fn interval_contained(&self, lower: SubsetMask, upper: SubsetMask) -> Result<bool> {
        self.ground.check(lower)?;
        self.ground.check(upper)?;
        Ok(self.contains_interval(lower, upper))
    }

    /// Closed under pairwise unions. Vacuous for families with fewer than
    /// two members.
    pub fn is_union_closed(&self) -> bool {
        self.members
            .iter()
            .enumerate()
            .all(|(k, &a)| self.members[k + 1..].iter().all(|&b| self.contains(a.union(b))))
    }

    /// Every non-empty member `A` has a root: some `i ∈ A` with
    /// `[{i}, A] ⊆ F`.
    pub fn is_simply_rooted(&self) -> bool {
        self.iter()
            .filter(|a| !a.is_empty())
            .all(|a| a.iter().any(|i| self.contains_interval(SubsetMask::singleton(i), a)))
    }

    /// `2^[n] ∖ F`.
    pub fn complement(&self) -> Family {
        let members = self.ground.subsets().filter(|&m| !self.contains(m)).collect();
        Self::from_sorted(self.ground, members)
    }

    /// `φ(A)`: the union of all subsets of `A` outside the family.
    ///
    /// Only defined for simply rooted families and members `A`; anything
    /// else is a precondition error.
    pub fn phi(&self, set: SubsetMask) -> Result<SubsetMask> {
        self.ground.check(set)?;
        if !self.contains(set) {
            return Err(Error::Precondition(format!("{set} is not a member of the family")));
        }
        if !self.is_simply_rooted() {
            return Err(Error::Precondition("family is not simply rooted".into()));
        }
        Ok(self.phi_unchecked(set))
    }

    /// `φ(A)` without the membership and simple-rootedness checks.
    pub(crate) fn phi_unchecked(&self, set: SubsetMask) -> SubsetMask {
        set.submasks()
            .filter(|&b| !self.contains(b))
            .fold(SubsetMask::EMPTY, SubsetMask::union)
    }

    /// The roots of `A`: all `i ∈ A` with `[{i}, A] ⊆ F`.
    pub fn roots(&self, set: SubsetMask) -> Result<SubsetMask> {
        self.ground.check(set)?;
        if set.is_empty() {
            return Err(Error::Precondition("roots are undefined for the empty set".into()));
        }
        Ok(self.roots_unchecked(set))
    }

    pub(crate) fn roots_unchecked(&self, set: SubsetMask) -> SubsetMask {
        set.iter()
            .filter(|&i| self.contains_interval(SubsetMask::singleton(i), set))
            .fold(SubsetMask::EMPTY, |acc, i| acc.union(SubsetMask::singleton(i)))
    }

    /// `F_A = {B ∈ F : [B, A] ⊆ F}`.
    pub fn subfamily_at(&self, set: SubsetMask) -> Result<Family> {
        self.ground.check(set)?;
        if !self.contains(set) {
            return Err(Error::Precondition(format!("{set} is not a member of the family")));
        }
        let mut members: Vec<SubsetMask> = set.submasks().filter(|&b| self.contains_interval(b, set)).collect();
        members.sort_unstable();
        Ok(Self::from_sorted(self.ground, members))
    }

    /// `m(F)`, the largest member cardinality.
    pub fn max_cardinality(&self) -> Result<usize> {
        self.iter()
            .map(SubsetMask::len)
            .max()
            .ok_or_else(|| Error::Precondition("empty family has no maximum cardinality".into()))
    }

    /// Parses the family JSON format `{"n": 3, "sets": [[], [1], [1,3]]}`.
    pub fn from_json(text: &str) -> Result<Family> {
        let raw: FamilyJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Family::try_from(raw)
    }

    /// Serializes to the family JSON format, members in canonical order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&FamilyJson::from(self)).expect("family JSON is always serializable")
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family[n={}]", self.ground.size())?;
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// Wire form of a family.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

impl From<&Family> for FamilyJson {
    fn from(family: &Family) -> Self {
        FamilyJson {
            n: family.ground.size(),
            sets: family.iter().map(SubsetMask::elements).collect(),
        }
    }
}

impl TryFrom<FamilyJson> for Family {
    type Error = Error;

    fn try_from(raw: FamilyJson) -> Result<Family> {
        let ground = GroundSet::new(raw.n)?;
        let mut masks = Vec::with_capacity(raw.sets.len());
        for set in &raw.sets {
            if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > ground.size()) {
                return Err(Error::Domain(format!("element {bad} outside [{}]", ground.size())));
            }
            masks.push(SubsetMask::from_elements(set)?);
        }
        Family::new(ground, masks).map_err(|e| match e {
            Error::Domain(msg) if msg.starts_with("duplicate") => Error::Parse(msg),
            other => other,
        })
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = FamilyJson::deserialize(deserializer)?;
        Family::try_from(raw).map_err(serde::de::Error::custom)
    }
}
