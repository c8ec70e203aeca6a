//! Report assembly for the `rooted-cubes` command line.

use rooted_cubes::{
    cubecomplex::maximal_cubes_of, cubes, euler_without_empty, homology::homology_of_complex, Cube, Family,
    HomologyReport, Result,
};
use serde::Serialize;

/// Root data of one member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootEntry {
    pub set: Vec<usize>,
    pub phi: Vec<usize>,
    /// `None` for the empty set.
    pub roots: Option<Vec<usize>>,
}

/// Everything `analyze` prints about one family.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub family: Family,
    pub union_closed: bool,
    pub simply_rooted: bool,
    pub contains_empty: bool,
    pub max_cardinality: Option<usize>,
    pub cube_counts: Vec<usize>,
    pub maximal_cubes: Vec<Cube>,
    pub homology: HomologyReport,
    /// Present when the family is simply rooted.
    pub roots: Option<Vec<RootEntry>>,
    /// Present for non-empty simply rooted families without `∅`.
    pub euler_without_empty: Option<i64>,
}

pub fn analyze(family: &Family) -> Result<AnalysisReport> {
    let complex = cubes(family);
    let simply_rooted = family.is_simply_rooted();
    let roots = if simply_rooted {
        let mut table = Vec::with_capacity(family.len());
        for a in family.iter() {
            table.push(RootEntry {
                set: a.elements(),
                phi: family.phi(a)?.elements(),
                roots: if a.is_empty() {
                    None
                } else {
                    Some(family.roots(a)?.elements())
                },
            });
        }
        Some(table)
    } else {
        None
    };
    let euler_without_empty = if simply_rooted && !family.is_empty() && !family.contains_empty() {
        Some(euler_without_empty(family)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        family: family.clone(),
        union_closed: family.is_union_closed(),
        simply_rooted,
        contains_empty: family.contains_empty(),
        max_cardinality: family.max_cardinality().ok(),
        cube_counts: complex.cube_counts(),
        maximal_cubes: maximal_cubes_of(&complex),
        homology: homology_of_complex(&complex)?,
        roots,
        euler_without_empty,
    })
}
