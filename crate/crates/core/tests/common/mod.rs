//! Oracles shared by the integration tests. They work on plain `u32`
//! masks and small integer matrices and share no code with the library.

#![allow(dead_code)]

use rooted_cubes::{Family, GroundSet, IntegerMatrix, SubsetMask};

pub fn family(n: usize, sets: &[&[usize]]) -> Family {
    let ground = GroundSet::new(n).unwrap();
    let masks = sets.iter().map(|s| SubsetMask::from_elements(s).unwrap());
    Family::new(ground, masks).unwrap()
}

pub fn f1() -> Family {
    family(3, &[&[], &[1], &[2], &[1, 3], &[2, 3], &[1, 2, 3]])
}

pub fn f2() -> Family {
    family(3, &[&[1], &[2], &[3], &[1, 2], &[1, 3], &[2, 3]])
}

pub fn f3() -> Family {
    family(3, &[&[], &[1], &[2], &[3], &[1, 3]])
}

/// Family from the bits of `selector`: bit `s` set means mask `s` is a member.
pub fn family_from_bits(n: usize, selector: u64) -> Family {
    let ground = GroundSet::new(n).unwrap();
    let masks = (0..1u32 << n).filter(|&s| selector >> s & 1 == 1).map(SubsetMask);
    Family::new(ground, masks).unwrap()
}

/// All pairs `(A, B)`, `A ⊆ B`, with every `C` between them in the family,
/// grouped by `|B| - |A|`. Scans the whole power set for each pair.
pub fn brute_cubes(f: &Family) -> Vec<Vec<(u32, u32)>> {
    let n = f.ground().size();
    let member: Vec<bool> = (0..1u32 << n).map(|s| f.contains(SubsetMask(s))).collect();
    let mut grades = vec![Vec::new(); n + 1];
    for a in 0..1u32 << n {
        for b in 0..1u32 << n {
            if a & !b != 0 {
                continue;
            }
            let inside = (0..1u32 << n)
                .filter(|&c| a & !c == 0 && c & !b == 0)
                .all(|c| member[c as usize]);
            if inside {
                grades[(b & !a).count_ones() as usize].push((a, b));
            }
        }
    }
    for g in &mut grades {
        g.sort_unstable();
    }
    grades
}

/// Brute-force simply rooted test straight from the definition.
pub fn brute_simply_rooted(f: &Family) -> bool {
    f.iter().filter(|a| a.0 != 0).all(|a| {
        (0..32).filter(|i| a.0 >> i & 1 == 1).any(|i| {
            let root = 1u32 << i;
            (0..=a.0)
                .filter(|&c| c & !a.0 == 0 && c & root != 0)
                .all(|c| f.contains(SubsetMask(c)))
        })
    })
}

pub fn brute_union_closed(f: &Family) -> bool {
    f.iter().all(|a| f.iter().all(|b| f.contains(SubsetMask(a.0 | b.0))))
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        size => (0..size)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Invariant factors as quotients `d_k / d_{k-1}` of the determinantal
/// divisors, `d_k` being the gcd of all `k × k` minors. Stops at the first
/// `k` whose minors all vanish, so the length is the rank.
pub fn determinantal_factors(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut factors = Vec::new();
    let mut previous = 1i128;
    for k in 1..=rows.min(cols) {
        let mut d = 0i128;
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                    .collect();
                d = gcd(d, det(&minor));
            }
        }
        if d == 0 {
            break;
        }
        factors.push(d / previous);
        previous = d;
    }
    factors
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn inverse_mod(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// Rank over `GF(2^61 - 1)` by Gaussian elimination.
pub fn rank_mod_prime(m: &IntegerMatrix) -> usize {
    // Boundary entries are small; going through the decimal form keeps the
    // oracle free of the library's big-integer type.
    let reduce = |v: String| v.parse::<i64>().expect("small entry").rem_euclid(PRIME as i64) as u64;
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(|v| reduce(v.to_string())).collect())
        .collect();
    let cols = m.cols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = inverse_mod(a[rank][c]);
        let pivot = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let factor = mul_mod(row[c], inv);
                for (x, &y) in row.iter_mut().zip(&pivot).skip(c) {
                    *x = (*x + PRIME - mul_mod(factor, y)) % PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}
