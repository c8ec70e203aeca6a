//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntegerMatrix;

/// Diagonal of the Smith normal form: `d_1 | d_2 | ... | d_r`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// Factors greater than one: the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| *d > &BigInt::from(1))
            .cloned()
            .collect()
    }
}

/// Invariant factors and rank of `m`.
///
/// Pivots on the nonzero entry of least absolute value (ties: lowest row,
/// then lowest column), clears its row and column by Euclidean steps,
/// re-pivoting whenever a remainder survives, and finally enforces
/// `d_t | a_ij` on the trailing block by folding an offending row into the
/// pivot row.
pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_in_block(&a, t) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        loop {
            if clear_cross(&mut a, t) {
                continue;
            }
            // Row t and column t are zero apart from the pivot.
            match find_indivisible(&a, t) {
                Some(r) => a.add_row(t, r, t),
                None => break,
            }
        }
        factors.push(a.get(t, t).abs());
        t += 1;
    }
    SnfResult {
        rank: factors.len(),
        invariant_factors: factors,
    }
}

/// Nonzero entry of least absolute value in the block `[t.., t..]`.
fn smallest_in_block(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for r in t..a.rows() {
        for c in t..a.cols() {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| &mag < b) {
                let one = mag == BigInt::from(1);
                best = Some((r, c, mag));
                if one && r == t {
                    return best.map(|(r, c, _)| (r, c));
                }
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

/// One reduction pass over row `t` and column `t`. Returns `true` if some
/// remainder was left behind, in which case the smallest surviving entry of
/// the cross has been swapped into the pivot position.
fn clear_cross(a: &mut IntegerMatrix, t: usize) -> bool {
    let pivot = a.get(t, t).clone();
    let mut dirty = false;
    for r in t + 1..a.rows() {
        if a.get(r, t).is_zero() {
            continue;
        }
        let q = a.get(r, t).div_floor(&pivot);
        a.sub_row_multiple(r, t, &q, t);
        dirty |= !a.get(r, t).is_zero();
    }
    for c in t + 1..a.cols() {
        if a.get(t, c).is_zero() {
            continue;
        }
        let q = a.get(t, c).div_floor(&pivot);
        a.sub_col_multiple(c, t, &q, t);
        dirty |= !a.get(t, c).is_zero();
    }
    if !dirty {
        return false;
    }
    // Move the smallest nonzero entry of the cross to (t, t).
    let mut best = (t, t, a.get(t, t).abs());
    for r in t + 1..a.rows() {
        let v = a.get(r, t);
        if !v.is_zero() && v.abs() < best.2 {
            best = (r, t, v.abs());
        }
    }
    for c in t + 1..a.cols() {
        let v = a.get(t, c);
        if !v.is_zero() && v.abs() < best.2 {
            best = (t, c, v.abs());
        }
    }
    a.swap_rows(t, best.0);
    a.swap_cols(t, best.1);
    true
}

/// A row of the trailing block holding an entry the pivot does not divide.
fn find_indivisible(a: &IntegerMatrix, t: usize) -> Option<usize> {
    let pivot = a.get(t, t);
    (t + 1..a.rows()).find(|&r| {
        (t + 1..a.cols()).any(|c| {
            let v = a.get(r, c);
            !v.is_zero() && !v.is_multiple_of(pivot)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        let r = smith_normal_form(&IntegerMatrix::from_rows(rows));
        assert_eq!(r.rank, r.invariant_factors.len());
        r.invariant_factors.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn identity() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(factors(&id), vec![1, 1, 1]);
    }

    #[test]
    fn diagonal_coprime() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn dense_two_by_two() {
        assert_eq!(factors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        let empty = smith_normal_form(&IntegerMatrix::zeros(0, 4));
        assert_eq!(empty.rank, 0);
        assert!(empty.invariant_factors.is_empty());
    }

    #[test]
    fn negative_entries_and_torsion() {
        let r = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2], vec![-2]]));
        assert_eq!(r.torsion(), vec![BigInt::from(2)]);
        let r = smith_normal_form(&IntegerMatrix::from_rows(&[vec![-4, 6], vec![6, -9]]));
        assert!(r.torsion().is_empty());
        assert_eq!(factors(&[vec![-4, 6], vec![6, -9]]), vec![1]);
    }

    #[test]
    fn rectangular() {
        assert_eq!(factors(&[vec![4, 6, 10]]), vec![2]);
        assert_eq!(factors(&[vec![4], vec![6], vec![10]]), vec![2]);
        assert_eq!(
            factors(&[vec![6, 0, 0], vec![0, 10, 0], vec![0, 0, 15]]),
            vec![1, 30, 30]
        );
    }
}
