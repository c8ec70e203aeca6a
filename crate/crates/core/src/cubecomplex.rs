//! Interval cubes `[A, B]` and the graded set of cubes `C(F)` of a family.
//!
//! A cube `[A, B]` with `A ⊆ B` stands for the face of `[0,1]^n` whose
//! coordinate `i` is `{1}` for `i ∈ A`, `[0,1]` for `i ∈ B ∖ A` and `{0}`
//! otherwise. Its dimension is `|B ∖ A|`.

use std::fmt::{self, Write as _};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::setfamily::{Family, GroundSet, SubsetMask};

/// The interval `[lower, upper]`; always satisfies `lower ⊆ upper`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cube {
    lower: SubsetMask,
    upper: SubsetMask,
}

impl Cube {
    pub fn new(lower: SubsetMask, upper: SubsetMask) -> Result<Cube> {
        if lower.is_subset_of(upper) {
            Ok(Cube { lower, upper })
        } else {
            Err(Error::Domain(format!("[{lower}, {upper}] has lower ⊄ upper")))
        }
    }

    /// The degenerate cube `[set, set]`.
    pub fn vertex(set: SubsetMask) -> Cube {
        Cube { lower: set, upper: set }
    }

    #[inline]
    pub fn lower(self) -> SubsetMask {
        self.lower
    }

    #[inline]
    pub fn upper(self) -> SubsetMask {
        self.upper
    }

    /// Coordinates spanning a full unit interval, `B ∖ A`.
    #[inline]
    pub fn free(self) -> SubsetMask {
        self.upper.difference(self.lower)
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.free().len()
    }

    /// `other ⊆ self` as intervals.
    pub fn contains(self, other: Cube) -> bool {
        self.lower.is_subset_of(other.lower) && other.upper.is_subset_of(self.upper)
    }

    /// The `2k` codimension-one faces, as `(coordinate, top face, bottom face)`
    /// per free coordinate in increasing order: `[A ∪ {i}, B]` and `[A, B ∖ {i}]`.
    pub fn facets(self) -> impl Iterator<Item = (usize, Cube, Cube)> {
        self.free().iter().map(move |i| {
            let bit = SubsetMask::singleton(i);
            (
                i,
                Cube {
                    lower: self.lower.union(bit),
                    upper: self.upper,
                },
                Cube {
                    lower: self.lower,
                    upper: self.upper.difference(bit),
                },
            )
        })
    }

    /// Corners of the cube (its 0-dimensional faces).
    pub fn corners(self) -> impl Iterator<Item = SubsetMask> {
        let lower = self.lower;
        self.free().submasks().map(move |d| lower.union(d))
    }
}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Cube {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Cube", 2)?;
        s.serialize_field("lower", &self.lower.elements())?;
        s.serialize_field("upper", &self.upper.elements())?;
        s.end()
    }
}

/// `[A,B] ∩ [C,D] = [A ∪ C, B ∩ D]`, or `None` when that interval is empty.
pub fn cube_intersect(c1: Cube, c2: Cube) -> Option<Cube> {
    let lower = c1.lower.union(c2.lower);
    let upper = c1.upper.intersection(c2.upper);
    lower.is_subset_of(upper).then_some(Cube { lower, upper })
}

/// One coordinate of a realized cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extent {
    /// `{0}`
    Point0,
    /// `{1}`
    Point1,
    /// `[0, 1]`
    Full,
}

impl Extent {
    pub fn intersect(self, other: Extent) -> Option<Extent> {
        use Extent::*;
        match (self, other) {
            (Full, x) | (x, Full) => Some(x),
            (Point0, Point0) => Some(Point0),
            (Point1, Point1) => Some(Point1),
            (Point0, Point1) | (Point1, Point0) => None,
        }
    }
}

/// A product `I_1 × ... × I_n` of coordinate extents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealizedCube {
    pub intervals: Vec<Extent>,
}

impl RealizedCube {
    pub fn dim(&self) -> usize {
        self.intervals.iter().filter(|&&e| e == Extent::Full).count()
    }
}

/// Geometric realization of `[A, B]` in `R^n`.
pub fn realize(cube: Cube, ground: GroundSet) -> RealizedCube {
    let intervals = (1..=ground.size())
        .map(|i| {
            if cube.lower.contains(i) {
                Extent::Point1
            } else if cube.upper.contains(i) {
                Extent::Full
            } else {
                Extent::Point0
            }
        })
        .collect();
    RealizedCube { intervals }
}

/// Coordinate-wise intersection; `None` if some coordinate pairs `{0}` with `{1}`.
///
/// Both cubes must live in the same `R^n`.
pub fn realized_intersect(r1: &RealizedCube, r2: &RealizedCube) -> Option<RealizedCube> {
    assert_eq!(
        r1.intervals.len(),
        r2.intervals.len(),
        "realized cubes from different ambient dimensions"
    );
    let intervals = r1
        .intervals
        .iter()
        .zip(&r2.intervals)
        .map(|(a, b)| a.intersect(*b))
        .collect::<Option<Vec<_>>>()?;
    Some(RealizedCube { intervals })
}

/// A graded set of cubes over `[n]`.
///
/// Grade `k` holds the `k`-dimensional cubes sorted by `(lower, upper)`;
/// that order fixes the row and column indices of the boundary matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicalComplex {
    ground: GroundSet,
    grades: Vec<Vec<Cube>>,
}

impl CubicalComplex {
    /// Collects arbitrary cubes into a graded set. Duplicates merge; the
    /// result need not be face-closed.
    pub fn from_cubes(ground: GroundSet, cubes: impl IntoIterator<Item = Cube>) -> Result<Self> {
        let mut grades = vec![Vec::new(); ground.size() + 1];
        for c in cubes {
            ground.check(c.upper)?;
            grades[c.dim()].push(c);
        }
        for g in &mut grades {
            g.sort_unstable();
            g.dedup();
        }
        Ok(CubicalComplex { ground, grades })
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// Cubes of dimension `k`, in basis order. Empty beyond `n`.
    pub fn grade(&self, k: usize) -> &[Cube] {
        self.grades.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn grades(&self) -> &[Vec<Cube>] {
        &self.grades
    }

    /// `(|C_0|, ..., |C_n|)`.
    pub fn cube_counts(&self) -> Vec<usize> {
        self.grades.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.grades.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.iter().all(Vec::is_empty)
    }

    /// Highest non-empty grade.
    pub fn top_dim(&self) -> Option<usize> {
        self.grades.iter().rposition(|g| !g.is_empty())
    }

    /// Position of `cube` within its grade.
    pub fn index_of(&self, cube: Cube) -> Option<usize> {
        self.grades.get(cube.dim())?.binary_search(&cube).ok()
    }

    pub fn contains(&self, cube: Cube) -> bool {
        self.index_of(cube).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = Cube> + '_ {
        self.grades.iter().flatten().copied()
    }

    /// Every facet of every listed cube is listed.
    pub fn is_face_closed(&self) -> bool {
        self.first_missing_facet().is_none()
    }

    pub(crate) fn first_missing_facet(&self) -> Option<(Cube, Cube)> {
        self.iter().find_map(|c| {
            c.facets().find_map(|(_, top, bottom)| {
                if !self.contains(top) {
                    Some((c, top))
                } else if !self.contains(bottom) {
                    Some((c, bottom))
                } else {
                    None
                }
            })
        })
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::Domain("complexes over different ground sets".into()))
        }
    }

    /// Graded union.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Self::from_cubes(self.ground, self.iter().chain(other.iter()))
    }

    /// Graded intersection.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        Self::from_cubes(self.ground, self.iter().filter(|&c| other.contains(c)))
    }

    /// Wavefront OBJ text for `n ≤ 3`.
    ///
    /// One `v` line per vertex, one `l` line per edge, one `f` quad per
    /// square, and for each solid cube a `g` group holding its six faces.
    /// Everything follows basis order.
    pub fn to_obj(&self) -> Result<String> {
        let n = self.ground.size();
        if n > 3 {
            return Err(Error::Domain(format!("OBJ export needs n ≤ 3, got n = {n}")));
        }
        let vertices = self.grade(0);
        let vertex_id = |set: SubsetMask| -> Result<usize> {
            vertices
                .binary_search(&Cube::vertex(set))
                .map(|k| k + 1)
                .map_err(|_| Error::Integrity(format!("vertex {set} missing from complex")))
        };
        let mut out = String::new();
        writeln!(out, "# cubical set over [{n}]").unwrap();
        writeln!(out, "# cube counts {:?}", self.cube_counts()).unwrap();
        for v in vertices {
            let coords: Vec<&str> = (1..=3)
                .map(|i| if v.lower.contains(i) { "1.0" } else { "0.0" })
                .collect();
            writeln!(out, "v {}", coords.join(" ")).unwrap();
        }
        for e in self.grade(1) {
            writeln!(out, "l {} {}", vertex_id(e.lower)?, vertex_id(e.upper)?).unwrap();
        }
        let quad = |out: &mut String, sq: Cube| -> Result<()> {
            let (i, j) = {
                let mut it = sq.free().iter();
                (it.next().unwrap(), it.next().unwrap())
            };
            let a = sq.lower;
            let (si, sj) = (SubsetMask::singleton(i), SubsetMask::singleton(j));
            writeln!(
                out,
                "f {} {} {} {}",
                vertex_id(a)?,
                vertex_id(a.union(si))?,
                vertex_id(a.union(si).union(sj))?,
                vertex_id(a.union(sj))?
            )
            .unwrap();
            Ok(())
        };
        for &sq in self.grade(2) {
            quad(&mut out, sq)?;
        }
        for (k, &solid) in self.grade(3).iter().enumerate() {
            writeln!(out, "g cube{k}").unwrap();
            for (_, top, bottom) in solid.facets() {
                quad(&mut out, bottom)?;
                quad(&mut out, top)?;
            }
        }
        Ok(out)
    }
}

/// The set of cubes `C(F)`: every interval `[A, B]` contained in `F`.
///
/// For each member `A` the free sets `D ⊆ [n] ∖ A` are grown one coordinate
/// at a time. `[A, A ∪ D]` is kept iff `A ∪ D ∈ F` and every lower facet
/// `[A, A ∪ D ∖ {d}]` was kept at the previous level.
pub fn cubes(family: &Family) -> CubicalComplex {
    let ground = family.ground();
    let n = ground.size();
    let full = ground.full().bits();
    let mut grades: Vec<Vec<Cube>> = vec![Vec::new(); n + 1];
    let mut level: Vec<u32> = Vec::new();
    let mut next: Vec<u32> = Vec::new();

    for lower in family.iter() {
        let free = full & !lower.bits();
        grades[0].push(Cube::vertex(lower));
        level.clear();
        level.push(0);
        let mut k = 0;
        while !level.is_empty() && k < n {
            next.clear();
            for &d in &level {
                let bitlen = 32 - d.leading_zeros();
                let above = free & !((1u64 << bitlen) - 1) as u32;
                let mut cand = above;
                while cand != 0 {
                    let b = cand & cand.wrapping_neg();
                    cand &= cand - 1;
                    let e = d | b;
                    if !family.contains(SubsetMask(lower.bits() | e)) {
                        continue;
                    }
                    // e ∖ {b} = d is known; check the remaining lower facets.
                    let mut rest = d;
                    let mut ok = true;
                    while rest != 0 {
                        let x = rest & rest.wrapping_neg();
                        rest &= rest - 1;
                        if level.binary_search(&(e & !x)).is_err() {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        next.push(e);
                    }
                }
            }
            next.sort_unstable();
            k += 1;
            for &e in &next {
                grades[k].push(Cube {
                    lower,
                    upper: SubsetMask(lower.bits() | e),
                });
            }
            std::mem::swap(&mut level, &mut next);
        }
    }
    for g in &mut grades {
        g.sort_unstable();
    }
    CubicalComplex { ground, grades }
}

/// `C_k(F)`, the `k`-dimensional cubes of `F`.
pub fn cubes_by_dim(family: &Family, k: usize) -> Result<Vec<Cube>> {
    let n = family.ground().size();
    if k > n {
        return Err(Error::Domain(format!("dimension {k} outside 0..={n}")));
    }
    Ok(cubes(family).grades.swap_remove(k))
}

/// Inclusion-maximal cubes of `C(F)`, highest dimension first and basis
/// order within a dimension.
pub fn maximal_cubes(family: &Family) -> Vec<Cube> {
    maximal_cubes_of(&cubes(family))
}

/// Inclusion-maximal cubes of a face-closed complex. A cube is maximal iff
/// none of its one-step enlargements `[A ∖ {i}, B]`, `[A, B ∪ {i}]` is present.
pub fn maximal_cubes_of(complex: &CubicalComplex) -> Vec<Cube> {
    let full = complex.ground().full();
    let mut out = Vec::new();
    for grade in complex.grades.iter().rev() {
        for &c in grade {
            let grow_down = c.lower.iter().map(|i| Cube {
                lower: c.lower.difference(SubsetMask::singleton(i)),
                upper: c.upper,
            });
            let grow_up = full.difference(c.upper).iter().map(|i| Cube {
                lower: c.lower,
                upper: c.upper.union(SubsetMask::singleton(i)),
            });
            if !grow_down.chain(grow_up).any(|d| complex.contains(d)) {
                out.push(c);
            }
        }
    }
    out
}

/// `{A ⊊ [n] : A ∩ [k] ≠ ∅}`, the family whose cubical set is the union of
/// the cubes `[{i}, [n] ∖ {j}]` over `1 ≤ i ≤ k`, `j ≠ i`.
pub fn lemma_family(n: usize, k: usize) -> Result<Family> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::Domain(format!("need n ≥ 2 and 1 ≤ k < n, got n = {n}, k = {k}")));
    }
    let ground = GroundSet::new(n)?;
    let head = SubsetMask((1u32 << k) - 1);
    let full = ground.full();
    let members = ground
        .subsets()
        .filter(|&a| a != full && !a.intersection(head).is_empty())
        .collect();
    Ok(Family::from_sorted(ground, members))
}

/// Splitting of `F` at a member `A` of maximum cardinality into
/// `F ∖ {A}` and `F_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxDecomposition {
    /// The chosen `A`: smallest mask among members of maximum size.
    pub apex: SubsetMask,
    /// `F ∖ {A}`.
    pub rest: Family,
    /// `F_A`.
    pub star: Family,
}

pub fn decompose_at_max(family: &Family) -> Result<MaxDecomposition> {
    let top = family.max_cardinality()?;
    let apex = family
        .iter()
        .find(|a| a.len() == top)
        .expect("a member of maximum cardinality exists");
    Ok(MaxDecomposition {
        apex,
        rest: family.without(apex),
        star: family.subfamily_at(apex)?,
    })
}
