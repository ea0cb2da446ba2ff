//! Exact rational operators on `(C^d)^{⊗n}`.
//!
//! Storage is row-sparse: every operator built in this crate is a
//! combination of a few permutation or diagram matrices, so rows hold at
//! most a handful of nonzeros. Zero entries are never stored, which keeps
//! structural equality meaningful.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    dim: usize,
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn zeros(dim: usize) -> Self {
        SparseMatrix {
            dim,
            rows: vec![BTreeMap::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.rows[i].insert(i, Rational::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.rows[row].get(&col).copied().unwrap_or_else(Rational::zero)
    }

    /// Adds `value` to entry `(row, col)`, dropping the entry if it cancels.
    pub fn add_to(&mut self, row: usize, col: usize, value: Rational) {
        if value.is_zero() {
            return;
        }
        let r = &mut self.rows[row];
        let slot = r.entry(col).or_insert_with(Rational::zero);
        *slot += value;
        if slot.is_zero() {
            r.remove(&col);
        }
    }

    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.rows[row].iter().map(|(&c, &v)| (c, v))
    }

    /// All nonzero entries as `(row, col, value)`, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Rational)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&j, &v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn scaled(&self, factor: Rational) -> Self {
        if factor.is_zero() {
            return Self::zeros(self.dim);
        }
        SparseMatrix {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|(&c, &v)| (c, v * factor)).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for (i, j, v) in self.entries() {
            t.rows[j].insert(i, v);
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries().all(|(i, j, v)| self.get(j, i) == v)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn add_matrix(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            out.add_to(i, j, v);
        }
        Ok(out)
    }

    /// In-place `self += factor · other`.
    pub fn add_scaled(&mut self, other: &Self, factor: Rational) -> Result<()> {
        self.check_dim(other)?;
        for (i, j, v) in other.entries() {
            self.add_to(i, j, v * factor);
        }
        Ok(())
    }

    pub fn sub_matrix(&self, other: &Self) -> Result<Self> {
        self.add_matrix(&other.scaled(-Rational::one()))
    }

    pub fn mul_matrix(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zeros(self.dim);
        for (i, row) in self.rows.iter().enumerate() {
            let acc = &mut out.rows[i];
            for (&k, &a) in row {
                for (&j, &b) in &other.rows[k] {
                    *acc.entry(j).or_insert_with(Rational::zero) += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
        }
        Ok(out)
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul_matrix(other)?.sub_matrix(&other.mul_matrix(self)?)
    }

    pub fn max_abs_f64(&self) -> f64 {
        self.entries()
            .map(|(_, _, v)| to_f64(v).abs())
            .fold(0.0, f64::max)
    }

    /// Dense row-major copy in floating point.
    pub fn to_dense_f64(&self) -> Vec<f64> {
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for (i, j, v) in self.entries() {
            out[i * n + j] = to_f64(v);
        }
        out
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::SizeMismatch(format!(
                "matrix dimensions {} and {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}, nnz={})", self.dim, self.dim, self.nnz())
    }
}

pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// An exact operator on `n` sites of local dimension `d`.
///
/// Basis states `|x_0 x_1 … x_{n−1}⟩` are indexed in base `d` with site 0
/// as the most significant digit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SiteOperator {
    sites: usize,
    local_dim: usize,
    matrix: SparseMatrix,
}

/// A two-site operator, acting on `C^d ⊗ C^d`.
pub type PairOperator = SiteOperator;

impl SiteOperator {
    pub fn new(sites: usize, local_dim: usize, matrix: SparseMatrix) -> Result<Self> {
        let expected = local_dim.checked_pow(sites as u32).ok_or_else(|| {
            Error::SizeMismatch(format!("{local_dim}^{sites} overflows"))
        })?;
        if matrix.dim() != expected {
            return Err(Error::SizeMismatch(format!(
                "matrix of dimension {} cannot act on {sites} sites of dimension {local_dim}",
                matrix.dim()
            )));
        }
        Ok(SiteOperator {
            sites,
            local_dim,
            matrix,
        })
    }

    pub fn zeros(sites: usize, local_dim: usize) -> Self {
        let dim = local_dim.pow(sites as u32);
        SiteOperator {
            sites,
            local_dim,
            matrix: SparseMatrix::zeros(dim),
        }
    }

    pub fn identity(sites: usize, local_dim: usize) -> Self {
        let dim = local_dim.pow(sites as u32);
        SiteOperator {
            sites,
            local_dim,
            matrix: SparseMatrix::identity(dim),
        }
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn local_dim(&self) -> usize {
        self.local_dim
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SparseMatrix {
        self.matrix
    }

    pub fn trace(&self) -> Rational {
        self.matrix.trace()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.matrix.get(row, col)
    }

    pub fn scaled(&self, factor: Rational) -> Self {
        SiteOperator {
            matrix: self.matrix.scaled(factor),
            sites: self.sites,
            local_dim: self.local_dim,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix.is_symmetric()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_idempotent(&self) -> bool {
        self.matrix
            .mul_matrix(&self.matrix)
            .map(|sq| sq == self.matrix)
            .unwrap_or(false)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.with_matrix(self.matrix.add_matrix(&other.matrix)?))
    }

    /// In-place `self += factor · other`.
    pub fn add_scaled(&mut self, other: &Self, factor: Rational) -> Result<()> {
        self.check_shape(other)?;
        self.matrix.add_scaled(&other.matrix, factor)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.with_matrix(self.matrix.sub_matrix(&other.matrix)?))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.with_matrix(self.matrix.mul_matrix(&other.matrix)?))
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(self.with_matrix(self.matrix.commutator(&other.matrix)?))
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.commutator(other)?.is_zero())
    }

    /// `Tr[self · other]` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Result<Rational> {
        self.check_shape(other)?;
        let mut acc = Rational::zero();
        for (i, k, a) in self.matrix.entries() {
            let b = other.matrix.get(k, i);
            if !b.is_zero() {
                acc += a * b;
            }
        }
        Ok(acc)
    }

    /// Digits of basis index `index`, site 0 first.
    pub fn digits(&self, index: usize) -> Vec<usize> {
        index_to_digits(index, self.sites, self.local_dim)
    }

    pub(crate) fn with_matrix(&self, matrix: SparseMatrix) -> Self {
        SiteOperator {
            matrix,
            sites: self.sites,
            local_dim: self.local_dim,
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.sites != other.sites || self.local_dim != other.local_dim {
            return Err(Error::SizeMismatch(format!(
                "operators on ({}, d={}) and ({}, d={})",
                self.sites, self.local_dim, other.sites, other.local_dim
            )));
        }
        Ok(())
    }
}

impl Add for &SiteOperator {
    type Output = SiteOperator;
    fn add(self, rhs: Self) -> SiteOperator {
        self.try_add(rhs).expect("operator shapes differ")
    }
}

impl Sub for &SiteOperator {
    type Output = SiteOperator;
    fn sub(self, rhs: Self) -> SiteOperator {
        self.try_sub(rhs).expect("operator shapes differ")
    }
}

impl Mul for &SiteOperator {
    type Output = SiteOperator;
    fn mul(self, rhs: Self) -> SiteOperator {
        self.try_mul(rhs).expect("operator shapes differ")
    }
}

impl Neg for &SiteOperator {
    type Output = SiteOperator;
    fn neg(self) -> SiteOperator {
        self.scaled(-Rational::one())
    }
}

pub fn index_to_digits(mut index: usize, sites: usize, d: usize) -> Vec<usize> {
    let mut digits = vec![0; sites];
    for k in (0..sites).rev() {
        digits[k] = index % d;
        index /= d;
    }
    digits
}

pub fn digits_to_index(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}
