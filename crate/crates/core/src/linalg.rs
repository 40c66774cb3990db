//! Exact linear algebra over the rationals.
//!
//! Dense matrices are used for the small chain-level maps of a dual graph;
//! sparse vectors keyed by `u64` (typically a wedge-monomial bitmask) are used
//! for exterior powers, where the ambient dimension is large but the vectors
//! touched by a nilpotent operator are short.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Dense matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut span = Subspace::new();
        for r in 0..self.rows {
            span.insert(SparseVec::from_dense(self.row(r)));
        }
        span.dim()
    }

    /// Entries rendered as exact rationals, row by row.
    pub fn string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.string_rows()).finish()
    }
}

/// Sparse rational vector; no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct SparseVec(BTreeMap<u64, Rational>);

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(key: u64) -> Self {
        let mut v = Self::new();
        v.0.insert(key, Rational::one());
        v
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self(
            values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i as u64, v.clone()))
                .collect(),
        )
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (&k, v) in &self.0 {
            out[k as usize] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, key: u64) -> Option<&Rational> {
        self.0.get(&key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.0.iter().map(|(&k, v)| (k, v))
    }

    pub fn leading(&self) -> Option<(u64, &Rational)> {
        self.0.iter().next().map(|(&k, v)| (k, v))
    }

    pub fn add_term(&mut self, key: u64, value: Rational) {
        if value.is_zero() {
            return;
        }
        match self.0.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &SparseVec, factor: &Rational) {
        if factor.is_zero() {
            return;
        }
        for (&k, v) in &other.0 {
            self.add_term(k, v * factor);
        }
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.0.clear();
            return;
        }
        for v in self.0.values_mut() {
            *v *= factor;
        }
    }

    pub fn into_inner(self) -> BTreeMap<u64, Rational> {
        self.0
    }
}

impl FromIterator<(u64, Rational)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (u64, Rational)>>(iter: T) -> Self {
        let mut v = SparseVec::new();
        for (k, x) in iter {
            v.add_term(k, x);
        }
        v
    }
}

/// A subspace kept in row-echelon form: each basis row has leading entry 1
/// at a distinct pivot key.
#[derive(Clone, Default, Debug)]
pub struct Subspace {
    rows: Vec<SparseVec>,
    pivots: BTreeMap<u64, usize>,
}

impl Subspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn spanned_by<I: IntoIterator<Item = SparseVec>>(vectors: I) -> Self {
        let mut s = Self::new();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Reduce `v` against the echelon rows. Returns the remainder and the
    /// coefficients (by basis row index) that were subtracted.
    pub fn reduce(&self, mut v: SparseVec) -> (SparseVec, BTreeMap<usize, Rational>) {
        let mut coeffs = BTreeMap::new();
        while let Some((lead, value)) = v.leading() {
            let Some(&row) = self.pivots.get(&lead) else { break };
            let factor = value.clone();
            v.add_scaled(&self.rows[row], &-factor.clone());
            coeffs.insert(row, factor);
        }
        (v, coeffs)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).0.is_zero()
    }

    /// Inserts `v`, returning whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let (mut rem, _) = self.reduce(v);
        let Some((lead, value)) = rem.leading() else {
            return false;
        };
        let inv = value.recip();
        rem.scale(&inv);
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(rem);
        true
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<BTreeMap<usize, Rational>> {
        let (rem, coeffs) = self.reduce(v.clone());
        rem.is_zero().then_some(coeffs)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = int_matrix(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(determinant(m), BigInt::from(4));
        let singular = int_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(determinant(singular), BigInt::zero());
        let needs_swap = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(needs_swap), BigInt::from(-1));
        assert_eq!(determinant(Vec::new()), BigInt::one());
    }

    #[test]
    fn subspace_membership_and_coordinates() {
        let a = SparseVec::from_dense(&[rat(1), rat(1), rat(0)]);
        let b = SparseVec::from_dense(&[rat(0), rat(1), rat(1)]);
        let s = Subspace::spanned_by([a.clone(), b.clone()]);
        assert_eq!(s.dim(), 2);
        let mut c = a.clone();
        c.add_scaled(&b, &rat(3));
        assert!(s.contains(&c));
        assert!(!s.contains(&SparseVec::unit(0)));
        let coords = s.coordinates(&c).unwrap();
        let mut rebuilt = SparseVec::new();
        for (i, x) in coords {
            rebuilt.add_scaled(&s.basis()[i], &x);
        }
        assert_eq!(rebuilt, c);
    }

    #[test]
    fn rank_of_dense_matrix() {
        let m = Matrix::from_rows(vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
        assert_eq!(Matrix::identity(3).mul(&m), m);
    }
}
