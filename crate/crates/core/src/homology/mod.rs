//! Integer cubical homology of `C(F)`.
//!
//! Boundary signs come from the product rule: for a cube with free
//! coordinates `i_1 < ... < i_k`, the `j`-th coordinate contributes
//! `(-1)^(j-1)` on the top face `[A ∪ {i_j}, B]` and the opposite sign on
//! the bottom face `[A, B ∖ {i_j}]`.

mod matrix;
mod snf;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::cubecomplex::{cubes, CubicalComplex};
use crate::error::{Error, Result};
use crate::setfamily::{Family, SubsetMask};

pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SnfResult};

/// Matrix of `∂_k : C_k → C_{k-1}` in basis order (rows are `(k-1)`-cubes,
/// columns are `k`-cubes).
pub fn boundary_matrix(complex: &CubicalComplex, k: usize) -> Result<IntegerMatrix> {
    let n = complex.ground().size();
    if !(1..=n).contains(&k) {
        return Err(Error::Domain(format!("boundary degree {k} outside 1..={n}")));
    }
    let sources = complex.grade(k);
    let targets = complex.grade(k - 1);
    let mut m = IntegerMatrix::zeros(targets.len(), sources.len());
    for (col, &cube) in sources.iter().enumerate() {
        for (j, (_, top, bottom)) in cube.facets().enumerate() {
            let sign: i64 = if j % 2 == 0 { 1 } else { -1 };
            for (face, s) in [(top, sign), (bottom, -sign)] {
                let row = targets
                    .binary_search(&face)
                    .map_err(|_| Error::Integrity(format!("face {face} of {cube} is not in the complex")))?;
                *m.get_mut(row, col) += s;
            }
        }
    }
    Ok(m)
}

/// Homology of a cubical set together with the derived verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    /// `b_0, ..., b_n`.
    pub betti: Vec<usize>,
    /// Invariant factors `> 1` of `H_k`, per degree.
    pub torsion: Vec<Vec<BigInt>>,
    /// `|C_0|, ..., |C_n|`.
    pub cube_counts: Vec<usize>,
    pub euler_from_cubes: i64,
    pub euler_from_betti: i64,
    pub connected: bool,
    pub nonempty: bool,
    pub acyclic: bool,
}

impl HomologyReport {
    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report is serializable")
    }
}

/// Invariant factors that fit in a `u64` are written as JSON numbers,
/// anything larger as a decimal string.
struct Factors<'a>(&'a [BigInt]);

impl Serialize for Factors<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for d in self.0 {
            match d.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&d.to_string())?,
            }
        }
        seq.end()
    }
}

impl Serialize for HomologyReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let torsion: Vec<Factors<'_>> = self.torsion.iter().map(|t| Factors(t)).collect();
        let mut s = serializer.serialize_struct("HomologyReport", 6)?;
        s.serialize_field("betti", &self.betti)?;
        s.serialize_field("torsion", &torsion)?;
        s.serialize_field("euler", &self.euler_from_cubes)?;
        s.serialize_field("connected", &self.connected)?;
        s.serialize_field("acyclic", &self.acyclic)?;
        s.serialize_field("cube_counts", &self.cube_counts)?;
        s.end()
    }
}

/// Homology of `X(F)`.
pub fn homology_of(family: &Family) -> HomologyReport {
    homology_of_complex(&cubes(family)).expect("C(F) is face-closed")
}

/// Homology of an arbitrary face-closed complex.
pub fn homology_of_complex(complex: &CubicalComplex) -> Result<HomologyReport> {
    let n = complex.ground().size();
    let counts = complex.cube_counts();
    let top = complex.top_dim().unwrap_or(0);

    // snfs[k] describes ∂_k; degrees 0 and above the top grade are zero maps.
    let mut snfs: Vec<Option<SnfResult>> = vec![None; n + 2];
    for (k, slot) in snfs.iter_mut().enumerate().take(top + 1).skip(1) {
        *slot = Some(smith_normal_form(&boundary_matrix(complex, k)?));
    }
    let rank = |k: usize| snfs[k].as_ref().map_or(0, |s| s.rank);

    let betti: Vec<usize> = (0..=n).map(|k| counts[k] - rank(k) - rank(k + 1)).collect();
    let torsion: Vec<Vec<BigInt>> = (0..=n)
        .map(|k| snfs[k + 1].as_ref().map_or_else(Vec::new, SnfResult::torsion))
        .collect();
    let euler_from_cubes = alternating_sum(&counts);
    let euler_from_betti = alternating_sum(&betti);

    let nonempty = !complex.is_empty();
    let connected = betti[0] <= 1;
    let acyclic = nonempty
        && connected
        && betti[0] == 1
        && betti[1..].iter().all(|&b| b == 0)
        && torsion.iter().all(Vec::is_empty);
    Ok(HomologyReport {
        betti,
        torsion,
        cube_counts: counts,
        euler_from_cubes,
        euler_from_betti,
        connected,
        nonempty,
        acyclic,
    })
}

fn alternating_sum(values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(k, &v)| if k % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

/// `Σ_k (-1)^k |C_k(F)|`.
pub fn euler_from_cube_counts(family: &Family) -> i64 {
    alternating_sum(&cubes(family).cube_counts())
}

/// `Σ_k (-1)^k |{[C, A] ∈ C_k(F)}|`: the alternating count of cubes whose
/// top set is `A`.
pub fn per_set_alternating_sum(family: &Family, set: SubsetMask) -> Result<i64> {
    family.ground().check(set)?;
    if set.is_empty() || !family.contains(set) {
        return Err(Error::Precondition(format!(
            "{set} must be a non-empty member of the family"
        )));
    }
    Ok(set
        .submasks()
        .filter(|&c| family.contains_interval(c, set))
        .map(|c| if (set.len() - c.len()).is_multiple_of(2) { 1 } else { -1 })
        .sum())
}

/// Euler characteristic of `X(F)` for a non-empty simply rooted family
/// without `∅`, computed from root data alone: `1 - Σ_k (-1)^k c_k` where
/// `c_0 = 1` and `c_k` counts the `k`-sets all of whose elements are roots.
pub fn euler_without_empty(family: &Family) -> Result<i64> {
    if family.is_empty() {
        return Err(Error::Precondition("family is empty".into()));
    }
    if family.contains_empty() {
        return Err(Error::Precondition("family contains the empty set".into()));
    }
    if !family.is_simply_rooted() {
        return Err(Error::Precondition("family is not simply rooted".into()));
    }
    let n = family.ground().size();
    let mut c = vec![0usize; n + 1];
    c[0] = 1;
    for a in family.iter() {
        if family.roots_unchecked(a) == a {
            c[a.len()] += 1;
        }
    }
    Ok(1 - alternating_sum(&c))
}
