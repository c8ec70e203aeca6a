//! Exhaustive and seeded-random verification sweeps.
//!
//! Each `check_*` function maps a per-family predicate over a stream of
//! families and collects the ones that violate it into a [`CheckReport`].

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cubecomplex::{cube_intersect, cubes, decompose_at_max, lemma_family, realize, realized_intersect, Cube};
use crate::error::{Error, Result};
use crate::homology::{
    boundary_matrix, euler_from_cube_counts, euler_without_empty, homology_of, per_set_alternating_sum,
};
use crate::setfamily::{Family, GroundSet, SubsetMask};

/// Largest `n` for exhaustive enumeration.
pub const EXHAUSTIVE_MAX_N: usize = 4;
/// Largest `n` for the randomized checks that compute cube sets.
pub const RANDOM_CHECK_MAX_N: usize = 6;
/// Member probabilities of the randomized sweeps, in order.
pub const SWEEP_DENSITIES: [f64; 3] = [0.5, 0.2, 0.8];

/// Which families an enumeration keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    All,
    SimplyRooted,
    UnionClosed,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EnumMode {
    /// Every family over `[n]` once, in increasing selector order.
    Exhaustive,
    /// `samples` families; each subset is drawn independently with
    /// `member_probability`.
    Random {
        samples: usize,
        seed: u64,
        member_probability: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnumSpec {
    pub n: usize,
    pub require_empty_member: bool,
    pub predicate: Predicate,
    pub mode: EnumMode,
}

impl EnumSpec {
    pub fn exhaustive(n: usize, require_empty_member: bool, predicate: Predicate) -> Self {
        EnumSpec {
            n,
            require_empty_member,
            predicate,
            mode: EnumMode::Exhaustive,
        }
    }

    pub fn random(
        n: usize,
        require_empty_member: bool,
        predicate: Predicate,
        samples: usize,
        seed: u64,
        member_probability: f64,
    ) -> Self {
        EnumSpec {
            n,
            require_empty_member,
            predicate,
            mode: EnumMode::Random {
                samples,
                seed,
                member_probability,
            },
        }
    }

    fn validate(&self) -> Result<GroundSet> {
        let ground = GroundSet::new(self.n)?;
        match self.mode {
            EnumMode::Exhaustive if self.n > EXHAUSTIVE_MAX_N => Err(Error::Domain(format!(
                "exhaustive enumeration is capped at n = {EXHAUSTIVE_MAX_N}, got {}",
                self.n
            ))),
            EnumMode::Random {
                member_probability: p, ..
            } if !(0.0..=1.0).contains(&p) => Err(Error::Domain(format!("member probability {p} outside [0, 1]"))),
            _ => Ok(ground),
        }
    }
}

/// Stream of families described by an [`EnumSpec`].
///
/// In random mode the predicate is enforced by projecting each sample onto
/// the class: `UnionClosed` takes the union closure and `SimplyRooted`
/// keeps the largest simply rooted subfamily. `∅` is added afterwards when
/// required; neither property depends on it.
pub struct FamilyStream {
    ground: GroundSet,
    spec: EnumSpec,
    state: StreamState,
}

enum StreamState {
    Exhaustive {
        next: u64,
        end: u64,
    },
    Random {
        rng: Box<ChaCha8Rng>,
        remaining: usize,
        p: f64,
    },
}

pub fn enumerate_families(spec: &EnumSpec) -> Result<FamilyStream> {
    let ground = spec.validate()?;
    let state = match spec.mode {
        EnumMode::Exhaustive => {
            let free_bits = ground.universe_len() - usize::from(spec.require_empty_member);
            StreamState::Exhaustive {
                next: 0,
                end: 1u64 << free_bits,
            }
        }
        EnumMode::Random {
            samples,
            seed,
            member_probability,
        } => StreamState::Random {
            rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
            remaining: samples,
            p: member_probability,
        },
    };
    Ok(FamilyStream {
        ground,
        spec: *spec,
        state,
    })
}

impl Iterator for FamilyStream {
    type Item = Family;

    fn next(&mut self) -> Option<Family> {
        let ground = self.ground;
        let spec = self.spec;
        match &mut self.state {
            StreamState::Exhaustive { next, end } => {
                while *next < *end {
                    let counter = *next;
                    *next += 1;
                    let selector = if spec.require_empty_member {
                        counter << 1 | 1
                    } else {
                        counter
                    };
                    let family = Family::from_selector(ground, selector);
                    let keep = match spec.predicate {
                        Predicate::All => true,
                        Predicate::SimplyRooted => family.is_simply_rooted(),
                        Predicate::UnionClosed => family.is_union_closed(),
                    };
                    if keep {
                        return Some(family);
                    }
                }
                None
            }
            StreamState::Random { rng, remaining, p } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                let mut inside: Vec<bool> = (0..ground.universe_len()).map(|_| rng.random_bool(*p)).collect();
                match spec.predicate {
                    Predicate::All => {}
                    Predicate::UnionClosed => union_closure_in_place(ground, &mut inside),
                    Predicate::SimplyRooted => simply_rooted_core_in_place(ground, &mut inside),
                }
                if spec.require_empty_member {
                    inside[0] = true;
                }
                let members = (0..inside.len() as u32)
                    .filter(|&s| inside[s as usize])
                    .map(SubsetMask)
                    .collect();
                Some(Family::from_sorted(ground, members))
            }
        }
    }
}

/// `S` is in the union closure iff `S` is the union of the members below
/// it. The unions below every `S` are accumulated by a subset-sum pass.
fn union_closure_in_place(ground: GroundSet, inside: &mut [bool]) {
    let size = ground.universe_len();
    let mut below: Vec<u32> = (0..size as u32)
        .map(|s| if inside[s as usize] { s } else { 0 })
        .collect();
    for i in 0..ground.size() {
        let bit = 1usize << i;
        for s in 0..size {
            if s & bit != 0 {
                below[s] |= below[s ^ bit];
            }
        }
    }
    for s in 1..size {
        inside[s] = below[s] == s as u32;
    }
}

/// Keeps the largest simply rooted subfamily. `roots[S]` holds the elements
/// `i` with `[{i}, S]` inside the kept family; subsets precede supersets in
/// numeric order.
fn simply_rooted_core_in_place(ground: GroundSet, inside: &mut [bool]) {
    let size = ground.universe_len();
    let mut roots = vec![0u32; size];
    for s in 1..size {
        let mut candidate = s as u32;
        let mut rest = s as u32;
        while rest != 0 {
            let j = rest & rest.wrapping_neg();
            rest &= rest - 1;
            candidate &= roots[s ^ j as usize] | j;
        }
        if inside[s] && candidate != 0 {
            roots[s] = candidate;
        } else {
            inside[s] = false;
        }
    }
}

/// One violating family and what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub family: Family,
    pub detail: String,
}

impl Serialize for Failure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Failure", 2)?;
        s.serialize_field("family", &self.family)?;
        s.serialize_field("detail", &self.detail)?;
        s.end()
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check_name: String,
    pub n: usize,
    pub families_tested: usize,
    /// Sorted canonically.
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report is serializable")
    }
}

impl Serialize for CheckReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CheckReport", 5)?;
        s.serialize_field("check", &self.check_name)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("tested", &self.families_tested)?;
        s.serialize_field("failures", &self.failures)?;
        s.serialize_field("elapsed_ms", &(self.elapsed.as_millis() as u64))?;
        s.end()
    }
}

/// Applies `check` to each family; `Some(detail)` marks a failure.
fn run_check(
    name: &str,
    n: usize,
    families: impl IntoIterator<Item = Family>,
    mut check: impl FnMut(&Family) -> Option<String>,
) -> CheckReport {
    run_items(name, n, families, |family| {
        check(&family).map(|detail| Failure { family, detail })
    })
}

fn run_items<T>(
    name: &str,
    n: usize,
    items: impl IntoIterator<Item = T>,
    mut check: impl FnMut(T) -> Option<Failure>,
) -> CheckReport {
    let start = Instant::now();
    let mut tested = 0;
    let mut failures = Vec::new();
    for item in items {
        tested += 1;
        failures.extend(check(item));
    }
    failures.sort();
    CheckReport {
        check_name: name.to_string(),
        n,
        families_tested: tested,
        failures,
        elapsed: start.elapsed(),
    }
}

fn require_range(n: usize, lo: usize, hi: usize) -> Result<()> {
    if (lo..=hi).contains(&n) {
        Ok(())
    } else {
        Err(Error::Domain(format!("n = {n} outside {lo}..={hi} for this check")))
    }
}

/// Simply rooted families over `[n]` that contain `∅`.
fn rooted_with_empty(n: usize) -> Result<FamilyStream> {
    require_range(n, 1, EXHAUSTIVE_MAX_N)?;
    enumerate_families(&EnumSpec::exhaustive(n, true, Predicate::SimplyRooted))
}

/// The three density sweeps over random families, `samples` each.
fn density_sweeps(n: usize, samples: usize, seed: u64, predicate: Predicate) -> Result<impl Iterator<Item = Family>> {
    let streams = SWEEP_DENSITIES
        .iter()
        .enumerate()
        .map(|(k, &p)| enumerate_families(&EnumSpec::random(n, false, predicate, samples, sweep_seed(seed, k), p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(streams.into_iter().flatten())
}

fn sweep_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_add((k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn acyclicity_detail(family: &Family) -> Option<String> {
    let h = homology_of(family);
    (!h.acyclic).then(|| {
        format!(
            "not acyclic: betti {:?}, torsion {:?}, nonempty {}",
            h.betti,
            h.torsion
                .iter()
                .map(|t| t.iter().map(ToString::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            h.nonempty
        )
    })
}

/// Acyclicity of `X(F)` over an arbitrary enumeration.
pub fn check_acyclicity(spec: &EnumSpec) -> Result<CheckReport> {
    let families = enumerate_families(spec)?;
    Ok(run_check("acyclicity", spec.n, families, acyclicity_detail))
}

/// `X(F)` is acyclic for every simply rooted `F ∋ ∅` over `[n]`.
pub fn check_theorem1(n: usize) -> Result<CheckReport> {
    Ok(run_check("theorem1", n, rooted_with_empty(n)?, acyclicity_detail))
}

/// `Σ (-1)^k |C_k(F)| = 1` for every simply rooted `F ∋ ∅`.
pub fn check_corollary_eq1(n: usize) -> Result<CheckReport> {
    Ok(run_check("corollary1", n, rooted_with_empty(n)?, |f| {
        let chi = euler_from_cube_counts(f);
        (chi != 1).then(|| format!("alternating cube count {chi} != 1"))
    }))
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, j| acc * (n - j) as i64 / (j + 1) as i64)
}

/// Subsets of `A` of size `size` that meet `A ∖ φ(A)`, i.e. the members of
/// `F_A` of that size: `C(|A|, size) - C(|φ(A)|, size)`. When `φ(A) = ∅`,
/// `F_A` is the whole interval `[∅, A]` and nothing is subtracted.
pub fn rooted_subset_count(set_len: usize, phi: SubsetMask, size: usize) -> i64 {
    let excluded = if phi.is_empty() { 0 } else { binomial(phi.len(), size) };
    binomial(set_len, size) - excluded
}

/// Per-set alternating sums vanish, with the cube counts matched against
/// `F_A` and against `C(|A|, |A|-k) - C(|φ(A)|, |A|-k)`.
pub fn check_lemma_per_set(n: usize) -> Result<CheckReport> {
    Ok(run_check("lemma-per-set", n, rooted_with_empty(n)?, |f| {
        let complex = cubes(f);
        for a in f.iter().filter(|a| !a.is_empty()) {
            let sum = match per_set_alternating_sum(f, a) {
                Ok(s) => s,
                Err(e) => return Some(format!("A = {a}: {e}")),
            };
            if sum != 0 {
                return Some(format!("A = {a}: alternating sum {sum} != 0"));
            }
            let phi = f.phi_unchecked(a);
            let star = match f.subfamily_at(a) {
                Ok(s) => s,
                Err(e) => return Some(format!("A = {a}: {e}")),
            };
            for k in 0..=a.len() {
                let with_top = complex.grade(k).iter().filter(|c| c.upper() == a).count() as i64;
                let in_star = star.iter().filter(|b| b.len() == a.len() - k).count() as i64;
                let formula = rooted_subset_count(a.len(), phi, a.len() - k);
                if with_top != in_star || with_top != formula {
                    return Some(format!(
                        "A = {a}, k = {k}: cubes with top A {with_top}, F_A sets {in_star}, binomial count {formula}"
                    ));
                }
            }
        }
        None
    }))
}

/// `roots(A) = A ∖ φ(A)` for every simply rooted `F` (with or without `∅`).
pub fn check_prop_roots_phi(n: usize) -> Result<CheckReport> {
    require_range(n, 1, EXHAUSTIVE_MAX_N)?;
    let families = enumerate_families(&EnumSpec::exhaustive(n, false, Predicate::SimplyRooted))?;
    Ok(run_check("prop-roots", n, families, |f| {
        f.iter().filter(|a| !a.is_empty()).find_map(|a| {
            let roots = f.roots_unchecked(a);
            let phi = f.phi_unchecked(a);
            (roots != a.difference(phi)).then(|| format!("A = {a}: roots {roots} but A ∖ φ(A) = {}", a.difference(phi)))
        })
    }))
}

/// `F_A` is the union of the root intervals `[{i}, A]` when `φ(A) ≠ ∅`, and
/// the full interval `[∅, A]` when `φ(A) = ∅`.
pub fn check_prop_fa(n: usize) -> Result<CheckReport> {
    Ok(run_check("prop-fa", n, rooted_with_empty(n)?, |f| {
        f.iter()
            .find_map(|a| fa_detail(f, a).unwrap_or_else(|e| Some(format!("A = {a}: {e}"))))
    }))
}

fn fa_detail(f: &Family, a: SubsetMask) -> Result<Option<String>> {
    let ground = f.ground();
    let star = f.subfamily_at(a)?;
    let phi = f.phi_unchecked(a);
    let expected = if phi.is_empty() {
        Family::interval(ground, SubsetMask::EMPTY, a)?
    } else {
        let roots = f.roots_unchecked(a);
        let pieces = roots.iter().flat_map(|i| {
            let lower = SubsetMask::singleton(i);
            a.difference(lower).submasks().map(move |d| lower.union(d))
        });
        Family::from_masks(ground, pieces)?
    };
    Ok((star != expected).then(|| {
        format!(
            "A = {a}, φ(A) = {phi}: F_A = {:?} but expected {:?}",
            star.members(),
            expected.members()
        )
    }))
}

/// `X({A ⊊ [n] : A ∩ [k] ≠ ∅})` is acyclic for `2 ≤ n ≤ n_max`, `1 ≤ k < n`.
pub fn check_lemma33(n_max: usize) -> Result<CheckReport> {
    require_range(n_max, 2, RANDOM_CHECK_MAX_N)?;
    let families = (2..=n_max)
        .flat_map(|n| (1..n).map(move |k| lemma_family(n, k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(run_check("lemma33", n_max, families, |f| {
        acyclicity_detail(f).map(|d| {
            let n = f.ground().size();
            let k = (1..n)
                .find(|&k| lemma_family(n, k).ok().as_ref() == Some(f))
                .unwrap_or(0);
            format!("n = {n}, k = {k}: {d}")
        })
    }))
}

/// Every ordered pair of cubes in `[0,1]^n`: realized intersection agrees
/// with the interval intersection formula, empty exactly when it is empty.
fn realization_mismatch(ground: GroundSet) -> Option<String> {
    let all: Vec<Cube> = ground
        .subsets()
        .flat_map(|a| {
            ground
                .full()
                .difference(a)
                .submasks()
                .map(move |d| Cube::new(a, a.union(d)).expect("a ⊆ a ∪ d"))
        })
        .collect();
    let realized: Vec<_> = all.iter().map(|&c| realize(c, ground)).collect();
    for (i, &c) in all.iter().enumerate() {
        for (j, &d) in all.iter().enumerate() {
            let geometric = realized_intersect(&realized[i], &realized[j]);
            let combinatorial = cube_intersect(c, d).map(|e| realize(e, ground));
            if geometric != combinatorial {
                return Some(format!(
                    "{c} ∩ {d}: realized {geometric:?} vs interval {combinatorial:?}"
                ));
            }
        }
    }
    None
}

fn intersection_detail(f: &Family, g: &Family) -> Result<Option<String>> {
    let ground = f.ground();
    let both = f.intersection(g)?;
    let (cf, cg, cboth) = (cubes(f), cubes(g), cubes(&both));
    let meet = cf.intersection(&cg)?;
    if meet != cboth {
        return Ok(Some(format!(
            "C(F) ∩ C(G) has counts {:?} but C(F ∩ G) has {:?}",
            meet.cube_counts(),
            cboth.cube_counts()
        )));
    }
    let rg: Vec<_> = cg.iter().map(|d| (d, realize(d, ground))).collect();
    for c in cf.iter() {
        let rc = realize(c, ground);
        for (d, rd) in &rg {
            let geometric = realized_intersect(&rc, rd);
            let interval = cube_intersect(c, *d);
            if geometric != interval.map(|e| realize(e, ground)) {
                return Ok(Some(format!("{c} ∩ {d}: realization disagrees with [A ∪ C, B ∩ D]")));
            }
            if let Some(e) = interval {
                if !cboth.contains(e) {
                    return Ok(Some(format!("{c} ∩ {d} = {e} is not a cube of F ∩ G")));
                }
            }
        }
    }
    // Conversely each cube of F ∩ G is its own pairwise intersection.
    let stray = cboth.iter().find(|&e| !cf.contains(e) || !cg.contains(e));
    Ok(stray.map(|e| format!("{e} ∈ C(F ∩ G) missing from C(F) or C(G)")))
}

/// `C(F) ∩ C(G) = C(F ∩ G)` and the realization form of
/// `X(F) ∩ X(G) = X(F ∩ G)` on random pairs; for `n ≤ 4` also the
/// realization identity over all cube pairs of `[0,1]^n`.
pub fn check_intersections(n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    require_range(n, 1, RANDOM_CHECK_MAX_N)?;
    let ground = GroundSet::new(n)?;
    let firsts = density_sweeps(n, samples, seed, Predicate::All)?;
    let seconds = density_sweeps(n, samples, seed ^ 0x5151_5151_5151_5151, Predicate::All)?;
    let mut report = run_items("intersections", n, firsts.zip(seconds), |(f, g)| {
        let detail = intersection_detail(&f, &g).unwrap_or_else(|e| Some(e.to_string()));
        detail.map(|d| Failure {
            detail: format!("with G = {g}: {d}"),
            family: f,
        })
    });
    if n <= EXHAUSTIVE_MAX_N {
        if let Some(detail) = realization_mismatch(ground) {
            report.failures.push(Failure {
                family: Family::power_set(ground),
                detail,
            });
            report.failures.sort();
        }
    }
    Ok(report)
}

/// `F` union-closed iff `2^[n] ∖ F` simply rooted: exhaustive for `n ≤ 3`,
/// density sweeps of `samples` families each for `4 ≤ n ≤ 6`.
pub fn check_duality(n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    require_range(n, 1, RANDOM_CHECK_MAX_N)?;
    let families: Box<dyn Iterator<Item = Family>> = if n <= 3 {
        Box::new(enumerate_families(&EnumSpec::exhaustive(n, false, Predicate::All))?)
    } else {
        Box::new(density_sweeps(n, samples, seed, Predicate::All)?)
    };
    Ok(run_check("duality", n, families, |f| {
        let uc = f.is_union_closed();
        let sr = f.complement().is_simply_rooted();
        (uc != sr).then(|| format!("union-closed {uc} but complement simply rooted {sr}"))
    }))
}

/// Splitting at a maximum member `A`: `C(F) = C(F ∖ {A}) ∪ C(F_A)`,
/// `C((F ∖ {A}) ∩ F_A) = C(F_A ∖ {A})`, `X(F_A)` acyclic, and the union
/// of acyclic pieces with acyclic overlap is acyclic.
pub fn check_decomposition(n: usize) -> Result<CheckReport> {
    let families = rooted_with_empty(n)?.filter(|f| f.len() >= 2);
    Ok(run_check("decomposition", n, families, |f| {
        let d = match decompose_at_max(f) {
            Ok(d) => d,
            Err(e) => return Some(e.to_string()),
        };
        let whole = cubes(f);
        let (rest, star) = (cubes(&d.rest), cubes(&d.star));
        let joined = match rest.union(&star) {
            Ok(c) => c,
            Err(e) => return Some(e.to_string()),
        };
        if joined != whole {
            return Some(format!("A = {}: C(F ∖ {{A}}) ∪ C(F_A) != C(F)", d.apex));
        }
        let overlap = match d.rest.intersection(&d.star) {
            Ok(o) => o,
            Err(e) => return Some(e.to_string()),
        };
        if overlap != d.star.without(d.apex) {
            return Some(format!("A = {}: (F ∖ {{A}}) ∩ F_A != F_A ∖ {{A}}", d.apex));
        }
        let star_minus_apex = d.star.without(d.apex);
        if cubes(&overlap) != cubes(&star_minus_apex) {
            return Some(format!("A = {}: C(F ∖ {{A}} ∩ F_A) != C(F_A ∖ {{A}})", d.apex));
        }
        if let Some(detail) = acyclicity_detail(&d.star) {
            return Some(format!("A = {}: F_A {detail}", d.apex));
        }
        let pieces_acyclic = homology_of(&d.rest).acyclic && homology_of(&overlap).acyclic;
        if pieces_acyclic && !homology_of(f).acyclic {
            return Some(format!(
                "A = {}: acyclic pieces and overlap but F is not acyclic",
                d.apex
            ));
        }
        None
    }))
}

/// Independent component count of the 1-skeleton.
struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
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

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Number of connected components of the graph on `F` whose edges are the
/// 1-cubes `[A, A ∪ {i}] ⊆ F`.
pub fn component_count(family: &Family) -> usize {
    let members = family.members();
    let mut dsu = DisjointSet::new(members.len());
    let mut components = members.len();
    for (k, &a) in members.iter().enumerate() {
        for i in family.ground().full().difference(a).iter() {
            let b = a.union(SubsetMask::singleton(i));
            if let Ok(j) = members.binary_search(&b) {
                if dsu.union(k, j) {
                    components -= 1;
                }
            }
        }
    }
    components
}

/// `∂_k ∘ ∂_{k+1} = 0`, Euler–Poincaré, and `b_0` against a union-find
/// component count, on density sweeps of random families.
pub fn check_chain_complex(n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    require_range(n, 1, RANDOM_CHECK_MAX_N)?;
    let families = density_sweeps(n, samples, seed, Predicate::All)?;
    Ok(run_check("chain-complex", n, families, |f| {
        let complex = cubes(f);
        let top = complex.top_dim().unwrap_or(0);
        for k in 1..top {
            let product = boundary_matrix(&complex, k)
                .and_then(|lower| boundary_matrix(&complex, k + 1).map(|upper| lower.mul(&upper)));
            match product {
                Ok(p) if p.is_zero() => {}
                Ok(_) => return Some(format!("∂_{k} ∘ ∂_{} != 0", k + 1)),
                Err(e) => return Some(e.to_string()),
            }
        }
        let h = homology_of(f);
        if h.euler_from_cubes != h.euler_from_betti {
            return Some(format!(
                "Euler from cubes {} but from Betti numbers {}",
                h.euler_from_cubes, h.euler_from_betti
            ));
        }
        let components = component_count(f);
        (h.betti[0] != components).then(|| format!("b_0 = {} but {components} components", h.betti[0]))
    }))
}

/// Root-count Euler formula agrees with the cube count for every non-empty
/// simply rooted `F ∌ ∅`.
pub fn check_euler_without_empty(n: usize) -> Result<CheckReport> {
    require_range(n, 1, EXHAUSTIVE_MAX_N)?;
    let families = enumerate_families(&EnumSpec::exhaustive(n, false, Predicate::SimplyRooted))?
        .filter(|f| !f.is_empty() && !f.contains_empty());
    Ok(run_check(
        "euler-without-empty",
        n,
        families,
        |f| match euler_without_empty(f) {
            Ok(v) => {
                let chi = euler_from_cube_counts(f);
                (v != chi).then(|| format!("root formula {v} but cube count {chi}"))
            }
            Err(e) => Some(e.to_string()),
        },
    ))
}

/// Check names accepted by [`run_named`], in the order `all` runs them.
pub const CHECK_NAMES: [&str; 11] = [
    "theorem1",
    "corollary1",
    "lemma-per-set",
    "prop-roots",
    "prop-fa",
    "lemma33",
    "intersections",
    "duality",
    "decomposition",
    "chain-complex",
    "euler-without-empty",
];

/// Dispatches a check by name. `samples` and `seed` feed the randomized
/// checks and are ignored elsewhere.
pub fn run_named(name: &str, n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    match name {
        "theorem1" => check_theorem1(n),
        "corollary1" => check_corollary_eq1(n),
        "lemma-per-set" => check_lemma_per_set(n),
        "prop-roots" => check_prop_roots_phi(n),
        "prop-fa" => check_prop_fa(n),
        "lemma33" => check_lemma33(n),
        "intersections" => check_intersections(n, samples, seed),
        "duality" => check_duality(n, samples, seed),
        "decomposition" => check_decomposition(n),
        "chain-complex" => check_chain_complex(n, samples, seed),
        "euler-without-empty" => check_euler_without_empty(n),
        other => Err(Error::Domain(format!("unknown check '{other}'"))),
    }
}
