//! Prime fields GF(p) and matrices over them.
//!
//! A subspace of GF(p)^n is represented by the reduced row echelon form of any
//! spanning matrix, with zero rows removed. Two subspaces are equal exactly
//! when these canonical matrices are equal.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_modulus(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!(
            "field order {p} is not prime; only prime fields GF(p) are supported"
        )))
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero in GF({p})");
    // a^(p-2) mod p
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GFElement {
    value: u32,
    modulus: u32,
}

impl GFElement {
    pub fn new(value: i64, modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self::reduced(value, modulus))
    }

    fn reduced(value: i64, modulus: u32) -> Self {
        GFElement {
            value: value.rem_euclid(modulus as i64) as u32,
            modulus,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        (!self.is_zero()).then(|| GFElement {
            value: inv_mod(self.value, self.modulus),
            modulus: self.modulus,
        })
    }

    /// Division; `None` when dividing by zero.
    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        rhs.inverse().map(|inv| self * inv)
    }
}

impl fmt::Debug for GFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Add for GFElement {
    type Output = GFElement;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        GFElement {
            value: ((self.value as u64 + rhs.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

impl Sub for GFElement {
    type Output = GFElement;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for GFElement {
    type Output = GFElement;
    fn neg(self) -> Self {
        GFElement {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for GFElement {
    type Output = GFElement;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        GFElement {
            value: ((self.value as u64 * rhs.value as u64) % self.modulus as u64) as u32,
            modulus: self.modulus,
        }
    }
}

impl Div for GFElement {
    type Output = GFElement;
    /// Panics on division by zero; see [`GFElement::checked_div`].
    fn div(self, rhs: Self) -> Self {
        self.checked_div(rhs).expect("division by zero in GF(p)")
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GFMatrix {
    modulus: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl fmt::Debug for GFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.modulus)?;
        f.debug_list().entries(self.row_slices()).finish()
    }
}

impl GFMatrix {
    /// Builds a matrix from integer entries, reducing each into `[0, p)`.
    pub fn new(modulus: u32, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        check_modulus(modulus)?;
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        Ok(GFMatrix {
            modulus,
            rows,
            cols,
            entries: entries
                .iter()
                .map(|&v| v.rem_euclid(modulus as i64) as u32)
                .collect(),
        })
    }

    pub fn from_rows(modulus: u32, cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParameters(format!("ragged rows, expected {cols} columns")));
        }
        GFMatrix::new(modulus, rows.len(), cols, &flat)
    }

    /// The `0 x cols` matrix, i.e. the zero subspace.
    pub fn empty(modulus: u32, cols: usize) -> Result<Self> {
        GFMatrix::new(modulus, 0, cols, &[])
    }

    pub(crate) fn from_raw(modulus: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        GFMatrix {
            modulus,
            rows,
            cols,
            entries,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> GFElement {
        GFElement {
            value: self.entries[r * self.cols + c],
            modulus: self.modulus,
        }
    }

    pub fn raw_entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn row_slices(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |r| &self.entries[r * self.cols..(r + 1) * self.cols])
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        self.row_slices().map(<[u32]>::to_vec).collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &GFMatrix) -> GFMatrix {
        assert_eq!(self.cols, other.cols, "stacking matrices of different widths");
        assert_eq!(self.modulus, other.modulus, "stacking matrices over different fields");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        GFMatrix::from_raw(self.modulus, self.rows + other.rows, self.cols, entries)
    }

    /// Reduced row echelon form with zero rows removed.
    pub fn rref(&self) -> GFMatrix {
        let p = self.modulus as u64;
        let cols = self.cols;
        let mut m: Vec<Vec<u64>> = self
            .row_slices()
            .map(|r| r.iter().map(|&v| v as u64).collect())
            .collect();
        let mut pivot_row = 0;
        for col in 0..cols {
            let Some(found) = (pivot_row..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(pivot_row, found);
            let inv = inv_mod(m[pivot_row][col] as u32, self.modulus) as u64;
            for v in m[pivot_row].iter_mut() {
                *v = *v * inv % p;
            }
            let pivot = m[pivot_row].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == pivot_row || row[col] == 0 {
                    continue;
                }
                let factor = row[col];
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v = (*v + p - factor * pv % p) % p;
                }
            }
            pivot_row += 1;
            if pivot_row == m.len() {
                break;
            }
        }
        m.truncate(pivot_row);
        let entries = m.into_iter().flatten().map(|v| v as u32).collect();
        GFMatrix::from_raw(self.modulus, pivot_row, cols, entries)
    }

    /// True iff `self` is in canonical form: pivots equal 1 in strictly
    /// increasing columns, zero elsewhere in pivot columns, no zero rows.
    pub fn is_rref(&self) -> bool {
        let mut last_pivot: Option<usize> = None;
        for r in 0..self.rows {
            let row = &self.entries[r * self.cols..(r + 1) * self.cols];
            let Some(pc) = row.iter().position(|&v| v != 0) else {
                return false;
            };
            if row[pc] != 1 || last_pivot.is_some_and(|lp| pc <= lp) {
                return false;
            }
            if (0..self.rows).any(|other| other != r && self.entries[other * self.cols + pc] != 0) {
                return false;
            }
            last_pivot = Some(pc);
        }
        true
    }

    pub fn rank(&self) -> usize {
        self.rref().rows
    }

    /// Pivot column of each row; only meaningful on an RREF matrix.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.row_slices()
            .map(|row| row.iter().position(|&v| v != 0).expect("zero row in canonical form"))
            .collect()
    }

    /// Canonical basis of `{v : row · v = 0 for every row}`.
    pub fn annihilator(&self) -> GFMatrix {
        let p = self.modulus as u64;
        let reduced = self.rref();
        let pivots = reduced.pivot_columns();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut entries = Vec::with_capacity(free.len() * self.cols);
        for &f in &free {
            let mut v = vec![0u32; self.cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = reduced.entries[r * self.cols + f] as u64;
                v[pc] = ((p - coeff) % p) as u32;
            }
            entries.extend(v);
        }
        GFMatrix::from_raw(self.modulus, free.len(), self.cols, entries).rref()
    }

    /// Canonical form of the intersection of the two row spaces.
    pub fn intersect(&self, other: &GFMatrix) -> GFMatrix {
        let dual_sum = self.annihilator().stack(&other.annihilator());
        dual_sum.annihilator()
    }

    /// Canonical form of the sum of the two row spaces.
    pub fn span_with(&self, other: &GFMatrix) -> GFMatrix {
        self.stack(other).rref()
    }

    /// Whether the row space of `other` is contained in that of `self`.
    pub fn row_space_contains(&self, other: &GFMatrix) -> bool {
        self.stack(other).rank() == self.rank()
    }
}
