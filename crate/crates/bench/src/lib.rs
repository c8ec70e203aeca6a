//! Inputs shared by the benchmarks.

use rooted_cubes::verify::{enumerate_families, EnumSpec, Predicate};
use rooted_cubes::{Family, GroundSet};

pub fn power_set(n: usize) -> Family {
    Family::power_set(GroundSet::new(n).expect("n in range"))
}

/// Seeded random simply rooted families containing the empty set.
pub fn rooted_samples(n: usize, count: usize, density: f64) -> Vec<Family> {
    enumerate_families(&EnumSpec::random(n, true, Predicate::SimplyRooted, count, 17, density))
        .expect("valid spec")
        .collect()
}
