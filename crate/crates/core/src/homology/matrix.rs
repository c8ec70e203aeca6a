use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned().map(Into::into));
        }
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        self.entries[r * self.cols + c] = value.into();
    }

    #[inline]
    pub(crate) fn get_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Matrix product; panics on a dimension mismatch.
    pub fn mul(&self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[target] -= factor * row[source]` over columns `from..`.
    pub(crate) fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt, from: usize) {
        for c in from..self.cols {
            let s = &self.entries[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            self.entries[target * self.cols + c] -= delta;
        }
    }

    /// `col[target] -= factor * col[source]` over rows `from..`.
    pub(crate) fn sub_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt, from: usize) {
        for r in from..self.rows {
            let s = &self.entries[r * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let delta = factor * s;
            self.entries[r * self.cols + target] -= delta;
        }
    }

    /// `row[target] += row[source]` over columns `from..`.
    pub(crate) fn add_row(&mut self, target: usize, source: usize, from: usize) {
        for c in from..self.cols {
            let s = self.entries[source * self.cols + c].clone();
            self.entries[target * self.cols + c] += s;
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
