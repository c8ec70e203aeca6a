//! Cubical sets built from families of subsets of `[n] = {1, ..., n}`.
//!
//! Every family `F ⊆ 2^[n]` determines a set of cubes `C(F)`: the intervals
//! `[A, B] = {C : A ⊆ C ⊆ B}` that lie entirely inside `F`. Realizing each
//! interval as a face of the unit cube `[0,1]^n` gives a cubical set `X(F)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`setfamily`] - bitmask subsets, canonical families and the family-level
//!   predicates (union-closed, simply rooted, roots, `φ`, `F_A`).
//! * [`cubecomplex`] - interval cubes, enumeration of `C(F)`, maximal cubes,
//!   intersections, realization in `R^n` and OBJ export.
//! * [`homology`] - integer boundary matrices, Smith normal form, Betti
//!   numbers, torsion and the acyclicity verdict.
//! * [`verify`] - exhaustive and seeded-random sweeps that check the
//!   structural identities over whole classes of families.

pub mod cubecomplex;
pub mod homology;
pub mod setfamily;
pub mod verify;

mod error;

pub use cubecomplex::{
    cube_intersect, cubes, cubes_by_dim, decompose_at_max, lemma_family, maximal_cubes, realize, realized_intersect,
    Cube, CubicalComplex, Extent, MaxDecomposition, RealizedCube,
};
pub use error::{Error, Result};
pub use homology::{
    boundary_matrix, euler_from_cube_counts, euler_without_empty, homology_of, per_set_alternating_sum,
    smith_normal_form, HomologyReport, IntegerMatrix, SnfResult,
};
pub use setfamily::{Family, GroundSet, SubsetMask};
pub use verify::{CheckReport, EnumMode, EnumSpec, Failure, Predicate};
