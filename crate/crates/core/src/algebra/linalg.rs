//! Exact linear algebra over the rationals.
//!
//! Everything here works on dense vectors of [`Rational`]s. Orthogonal
//! projections use Gram–Schmidt without normalisation, so every intermediate
//! quantity stays rational.

use std::ops::{Add, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// A vector in `Q^X`, indexed by the canonical vertex order of a lattice.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FunctionVector(Vec<Rational>);

impl FunctionVector {
    pub fn new(values: Vec<Rational>) -> Self {
        FunctionVector(values)
    }

    pub fn zeros(len: usize) -> Self {
        FunctionVector(vec![Rational::zero(); len])
    }

    pub fn ones(len: usize) -> Self {
        FunctionVector(vec![Rational::one(); len])
    }

    /// 0/1 vector from a membership mask.
    pub fn indicator(mask: &[bool]) -> Self {
        FunctionVector(
            mask.iter()
                .map(|&b| if b { Rational::one() } else { Rational::zero() })
                .collect(),
        )
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> Self {
        FunctionVector(values.into_iter().map(Rational::from).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn dot(&self, other: &FunctionVector) -> Rational {
        assert_eq!(self.len(), other.len(), "inner product of vectors of different length");
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scaled(&self, c: &Rational) -> FunctionVector {
        if c.is_zero() {
            return FunctionVector::zeros(self.len());
        }
        FunctionVector(self.0.iter().map(|v| v * c).collect())
    }

    /// `self += c * x`
    pub fn axpy(&mut self, c: &Rational, x: &FunctionVector) {
        assert_eq!(self.len(), x.len(), "axpy on vectors of different length");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&x.0) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// Pointwise product.
    pub fn hadamard(&self, other: &FunctionVector) -> FunctionVector {
        assert_eq!(self.len(), other.len(), "pointwise product of vectors of different length");
        FunctionVector(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    /// Index of the first entry where the vectors differ.
    pub fn first_difference(&self, other: &FunctionVector) -> Option<usize> {
        self.0.iter().zip(&other.0).position(|(a, b)| a != b)
    }
}

impl Add for &FunctionVector {
    type Output = FunctionVector;
    fn add(self, rhs: &FunctionVector) -> FunctionVector {
        assert_eq!(self.len(), rhs.len());
        FunctionVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &FunctionVector {
    type Output = FunctionVector;
    fn sub(self, rhs: &FunctionVector) -> FunctionVector {
        assert_eq!(self.len(), rhs.len());
        FunctionVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                actual: bad.len(),
            });
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &FunctionVector) -> Result<FunctionVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok(FunctionVector::new(
            (0..self.rows)
                .map(|i| {
                    let mut acc = Rational::zero();
                    for (a, b) in self.row(i).iter().zip(v.values()) {
                        if !a.is_zero() && !b.is_zero() {
                            acc += a * b;
                        }
                    }
                    acc
                })
                .collect(),
        ))
    }

    /// `self - c * I`; panics if not square.
    pub fn minus_scalar_identity(&self, c: &Rational) -> RationalMatrix {
        assert_eq!(self.rows, self.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = out.get(i, i) - c;
            out.set(i, i, v);
        }
        out
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &RationalMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// First `(row, col)` where the matrices differ.
    pub fn first_difference(&self, other: &RationalMatrix) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Dense integer CSV, one row per line. Fails if an entry is not an integer.
    pub fn to_integer_csv(&self) -> Result<String> {
        let mut out = String::new();
        for i in 0..self.rows {
            let mut fields = Vec::with_capacity(self.cols);
            for v in self.row(i) {
                let n = v
                    .to_integer()
                    .ok_or_else(|| Error::Unsupported(format!("non-integer entry {v} in CSV export")))?;
                fields.push(n.to_string());
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

/// Which subspace a basis spans, for reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisLabel {
    /// Span of the indicator vectors of one lattice level.
    Lambda(usize),
    /// Orthogonal complement of the previous level's span inside this one.
    Eigen(usize),
    Unlabeled,
}

#[derive(Clone, Debug)]
struct Orthogonalized {
    vectors: Vec<FunctionVector>,
    /// The same vectors as primitive integer vectors, and their squared norms.
    ints: Vec<Vec<BigInt>>,
    norms_sq: Vec<BigInt>,
}

impl Orthogonalized {
    fn new() -> Self {
        Orthogonalized {
            vectors: Vec::new(),
            ints: Vec::new(),
            norms_sq: Vec::new(),
        }
    }

    /// Pushes the primitive direction of `r` unless `r` is zero.
    fn push(&mut self, r: FunctionVector) -> bool {
        let ints = primitive(&r);
        let n: BigInt = ints.iter().map(|x| x * x).sum();
        if n.is_zero() {
            return false;
        }
        self.vectors.push(FunctionVector(ints.iter().cloned().map(Rational::from).collect()));
        self.ints.push(ints);
        self.norms_sq.push(n);
        true
    }

    /// Orthogonal projection onto the span, in integer arithmetic over a
    /// common denominator.
    fn project(&self, f: &FunctionVector) -> FunctionVector {
        let (num, den) = clear_denominators_with(f);
        let mut terms = Vec::new();
        let mut common = BigInt::one();
        for (g, n) in self.ints.iter().zip(&self.norms_sq) {
            let mut t = BigInt::zero();
            for (a, b) in num.iter().zip(g) {
                if !a.is_zero() && !b.is_zero() {
                    t += a * b;
                }
            }
            if !t.is_zero() {
                common = common.lcm(n);
                terms.push((t, g, n));
            }
        }
        let mut acc = vec![BigInt::zero(); f.len()];
        for (t, g, n) in terms {
            let m = t * (&common / n);
            for (a, b) in acc.iter_mut().zip(g) {
                if !b.is_zero() {
                    *a += &m * b;
                }
            }
        }
        let total = common * den;
        FunctionVector(
            acc.into_iter()
                .map(|a| if a.is_zero() { Rational::zero() } else { Rational::new(a, total.clone()) })
                .collect(),
        )
    }

    fn residual(&self, v: &FunctionVector) -> FunctionVector {
        if self.ints.is_empty() {
            return v.clone();
        }
        v - &self.project(v)
    }
}

/// `f = num / den` with integer `num` and positive integer `den`.
pub(crate) fn clear_denominators_with(f: &FunctionVector) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for x in f.values() {
        if !x.is_zero() && !x.denom().is_one() {
            den = den.lcm(x.denom());
        }
    }
    let num = f
        .values()
        .iter()
        .map(|x| if x.is_zero() { BigInt::zero() } else { x.numer() * (&den / x.denom()) })
        .collect();
    (num, den)
}

/// The positive multiple of `v` with coprime integer entries. Projections
/// only depend on the direction of each orthogonal vector, and small integer
/// entries keep the exact arithmetic cheap.
fn primitive(v: &FunctionVector) -> Vec<BigInt> {
    let (num, _) = clear_denominators_with(v);
    let gcd = num.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if gcd.is_zero() || gcd.is_one() {
        return num;
    }
    num.into_iter().map(|x| x / &gcd).collect()
}

fn orthogonalize(vectors: &[FunctionVector]) -> Orthogonalized {
    let mut out = Orthogonalized::new();
    for v in vectors {
        let r = out.residual(v);
        assert!(out.push(r), "orthogonalizing a dependent family");
    }
    out
}

/// An ordered, linearly independent list of vectors of a common length,
/// together with (lazily computed) Gram–Schmidt data for exact projection.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    ambient: usize,
    label: BasisLabel,
    vectors: Vec<FunctionVector>,
    ortho: OnceLock<Orthogonalized>,
}

impl SubspaceBasis {
    pub fn empty(ambient: usize, label: BasisLabel) -> Self {
        SubspaceBasis {
            ambient,
            label,
            vectors: Vec::new(),
            ortho: OnceLock::new(),
        }
    }

    /// Wraps vectors already known to be independent, after checking it.
    pub fn from_independent(ambient: usize, vectors: Vec<FunctionVector>, label: BasisLabel) -> Result<Self> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                actual: bad.len(),
            });
        }
        let mut ortho = Orthogonalized::new();
        for (i, v) in vectors.iter().enumerate() {
            if !ortho.push(ortho.residual(v)) {
                return Err(Error::verification(
                    "linear independence",
                    format!("vector {i} lies in the span of the preceding ones"),
                ));
            }
        }
        Ok(SubspaceBasis {
            ambient,
            label,
            vectors,
            ortho: OnceLock::from(ortho),
        })
    }

    /// Greedy maximal independent subset of `candidates`, in order. Stops
    /// early once `limit` vectors have been accepted. Returns the basis and the
    /// positions of the accepted candidates.
    pub fn extract<I>(ambient: usize, candidates: I, label: BasisLabel, limit: Option<usize>) -> Result<(Self, Vec<usize>)>
    where
        I: IntoIterator<Item = FunctionVector>,
    {
        let limit = limit.unwrap_or(ambient).min(ambient);
        let mut ortho = Orthogonalized::new();
        let mut kept = Vec::new();
        let mut positions = Vec::new();
        for (i, v) in candidates.into_iter().enumerate() {
            if kept.len() == limit {
                break;
            }
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    actual: v.len(),
                });
            }
            if !ortho.push(ortho.residual(&v)) {
                continue;
            }
            kept.push(v);
            positions.push(i);
        }
        Ok((
            SubspaceBasis {
                ambient,
                label,
                vectors: kept,
                ortho: OnceLock::from(ortho),
            },
            positions,
        ))
    }

    /// For families whose independence is structural (e.g. kernel vectors
    /// read off an RREF); orthogonalisation is deferred until first projection.
    pub(crate) fn from_structurally_independent(ambient: usize, vectors: Vec<FunctionVector>, label: BasisLabel) -> Self {
        SubspaceBasis {
            ambient,
            label,
            vectors,
            ortho: OnceLock::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn label(&self) -> BasisLabel {
        self.label
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[FunctionVector] {
        &self.vectors
    }

    fn ortho(&self) -> &Orthogonalized {
        self.ortho.get_or_init(|| orthogonalize(&self.vectors))
    }

    /// Mutually orthogonal vectors spanning the same space.
    pub fn orthogonal_vectors(&self) -> &[FunctionVector] {
        &self.ortho().vectors
    }

    /// Exact orthogonal projection of `f` onto the span.
    pub fn project(&self, f: &FunctionVector) -> Result<FunctionVector> {
        if f.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                actual: f.len(),
            });
        }
        if self.dim() == self.ambient {
            return Ok(f.clone());
        }
        Ok(self.ortho().project(f))
    }

    /// Whether `f` lies in the span (its projection is itself).
    pub fn contains(&self, f: &FunctionVector) -> Result<bool> {
        Ok(&self.project(f)? == f)
    }
}

/// Orthogonal projection of `f` onto `span(basis)`.
pub fn project_onto_span(f: &FunctionVector, basis: &SubspaceBasis) -> Result<FunctionVector> {
    basis.project(f)
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division not exact");
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Exact rank over the rationals of a family of equal-length vectors.
pub fn rational_rank(vectors: &[FunctionVector]) -> usize {
    if let Some(first) = vectors.first() {
        assert!(vectors.iter().all(|v| v.len() == first.len()), "rank of vectors of different length");
    }
    bareiss_rank(vectors.iter().map(|v| clear_denominators_with(v).0).collect())
}

/// Reduced row echelon form over the rationals; returns the reduced rows
/// (zero rows dropped) and their pivot columns.
pub fn rational_rref(matrix: &RationalMatrix) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let cols = matrix.cols();
    let mut m: Vec<Vec<Rational>> = (0..matrix.rows()).map(|i| matrix.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut().skip(c) {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for j in c..cols {
                if !pivot[j].is_zero() {
                    row[j] -= &(&factor * &pivot[j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Exact basis of `{v : matrix * v = 0}`; empty when the kernel is trivial.
pub fn nullspace_basis(matrix: &RationalMatrix) -> SubspaceBasis {
    let cols = matrix.cols();
    let (reduced, pivots) = rational_rref(matrix);
    let mut basis = Vec::new();
    let mut next_pivot = 0;
    for free in 0..cols {
        if pivots.get(next_pivot) == Some(&free) {
            next_pivot += 1;
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in reduced.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[pc] = -&row[free];
            }
        }
        basis.push(FunctionVector::new(v));
    }
    SubspaceBasis::from_structurally_independent(cols, basis, BasisLabel::Unlabeled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fv(values: &[i64]) -> FunctionVector {
        FunctionVector::from_integers(values.iter().copied())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rational_rank(&[FunctionVector::ones(4)]), 1);
        let v = fv(&[1, -2, 3]);
        assert_eq!(rational_rank(&[v.clone(), v.scaled(&Rational::from(2))]), 1);
        assert_eq!(rational_rank(&[]), 0);
        assert_eq!(rational_rank(&[FunctionVector::zeros(3)]), 0);
        let half = FunctionVector::new(vec![Rational::new(1, 2), Rational::new(1, 3)]);
        assert_eq!(rational_rank(&[half, fv(&[3, 2])]), 1);
    }

    #[test]
    fn projection_examples() {
        let ones = FunctionVector::ones(4);
        let span_ones = SubspaceBasis::from_independent(4, vec![ones.clone()], BasisLabel::Unlabeled).unwrap();
        assert_eq!(project_onto_span(&ones, &span_ones).unwrap(), ones);
        let empty = SubspaceBasis::empty(4, BasisLabel::Unlabeled);
        assert!(project_onto_span(&fv(&[1, 2, 3, 4]), &empty).unwrap().is_zero());
        let err = project_onto_span(&fv(&[1, 2]), &span_ones).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 4, actual: 2 });
        let p = project_onto_span(&fv(&[1, 0, 0, 0]), &span_ones).unwrap();
        assert_eq!(p, FunctionVector::new(vec![Rational::new(1, 4); 4]));
    }

    #[test]
    fn dependent_family_rejected() {
        let v = fv(&[1, 1, 0]);
        let res = SubspaceBasis::from_independent(3, vec![v.clone(), v], BasisLabel::Unlabeled);
        assert!(matches!(res, Err(Error::Verification { .. })));
    }

    #[test]
    fn extract_keeps_first_independent() {
        let (b, pos) = SubspaceBasis::extract(
            3,
            vec![fv(&[1, 0, 0]), fv(&[2, 0, 0]), fv(&[0, 1, 0]), fv(&[1, 1, 0]), fv(&[0, 0, 1])],
            BasisLabel::Unlabeled,
            None,
        )
        .unwrap();
        assert_eq!(pos, vec![0, 2, 4]);
        assert_eq!(b.dim(), 3);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace_basis(&RationalMatrix::identity(3)).dim(), 0);
        assert_eq!(nullspace_basis(&RationalMatrix::zeros(2, 2)).dim(), 2);
        let m = RationalMatrix::from_rows(vec![vec![Rational::from(1), Rational::from(2), Rational::from(3)]]).unwrap();
        let k = nullspace_basis(&m);
        assert_eq!(k.dim(), 2);
        for v in k.vectors() {
            assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn integer_csv() {
        let m = RationalMatrix::identity(2);
        assert_eq!(m.to_integer_csv().unwrap(), "1,0\n0,1\n");
        let mut h = RationalMatrix::identity(1);
        h.set(0, 0, Rational::new(1, 2));
        assert!(h.to_integer_csv().is_err());
    }

    fn arb_vectors() -> impl Strategy<Value = Vec<FunctionVector>> {
        (1usize..6, 1usize..6).prop_flat_map(|(count, len)| {
            proptest::collection::vec(
                proptest::collection::vec((-3i64..=3, 1i64..=3), len)
                    .prop_map(|v| FunctionVector::new(v.into_iter().map(|(a, b)| Rational::new(a, b)).collect())),
                count,
            )
        })
    }

    /// Column-major elimination over Q on the transpose: an independent route to the rank.
    fn rank_by_columns(vectors: &[FunctionVector]) -> usize {
        let len = vectors[0].len();
        let transposed = RationalMatrix::from_fn(len, vectors.len(), |i, j| vectors[j].get(i).clone());
        rational_rref(&transposed).1.len()
    }

    proptest! {
        #[test]
        fn rank_agrees_across_elimination_orders(vs in arb_vectors()) {
            prop_assert_eq!(rational_rank(&vs), rank_by_columns(&vs));
        }

        #[test]
        fn projection_is_idempotent_linear_and_orthogonal(vs in arb_vectors(), coeffs in proptest::collection::vec(-4i64..=4, 2)) {
            let len = vs[0].len();
            let (f, rest) = vs.split_last().unwrap();
            let (basis, _) = SubspaceBasis::extract(len, rest.iter().cloned(), BasisLabel::Unlabeled, None).unwrap();
            let g = &vs[0];
            let p = basis.project(f).unwrap();
            prop_assert_eq!(basis.project(&p).unwrap(), p.clone());
            let resid = f - &p;
            for b in basis.vectors() {
                prop_assert!(resid.dot(b).is_zero());
            }
            let (a, c) = (Rational::from(coeffs[0]), Rational::from(coeffs[1]));
            let mut combo = f.scaled(&a);
            combo.axpy(&c, g);
            let mut expected = p.scaled(&a);
            expected.axpy(&c, &basis.project(g).unwrap());
            prop_assert_eq!(basis.project(&combo).unwrap(), expected);
        }

        #[test]
        fn nullspace_vectors_are_annihilated(vs in arb_vectors()) {
            let m = RationalMatrix::from_rows(vs.iter().map(|v| v.values().to_vec()).collect()).unwrap();
            let k = nullspace_basis(&m);
            prop_assert_eq!(k.dim() + rational_rank(&vs), m.cols());
            for v in k.vectors() {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
        }
    }
}
