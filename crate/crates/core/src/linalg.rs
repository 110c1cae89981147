//! Dense complex vectors and square matrices.
//!
//! Both types hold double precision complex values. Constructors that take
//! caller data validate length and finiteness; internal builders (`from_fn`,
//! `zeros`) trust their input.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

#[inline]
pub(crate) fn wrap(i: isize, n: usize) -> usize {
    i.rem_euclid(n as isize) as usize
}

fn check_finite(data: &[C64]) -> Result<()> {
    match data
        .iter()
        .position(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        Some(p) => Err(Error::NonFinite(p)),
        None => Ok(()),
    }
}

/// Length-N complex vector.
#[derive(Clone, PartialEq)]
pub struct ComplexVec {
    data: Vec<C64>,
}

impl ComplexVec {
    pub fn new(data: Vec<C64>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::EmptyDimension);
        }
        check_finite(&data)?;
        Ok(Self { data })
    }

    pub fn from_real(data: &[f64]) -> Result<Self> {
        Self::new(data.iter().map(|&r| C64::new(r, 0.0)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        Self {
            data: vec![C64::new(0.0, 0.0); n],
        }
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> C64) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        Self {
            data: (0..n).map(f).collect(),
        }
    }

    /// Unit vector e_k.
    pub fn unit(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k, bound: n });
        }
        Ok(Self::from_fn(n, |i| {
            C64::new(if i == k { 1.0 } else { 0.0 }, 0.0)
        }))
    }

    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_| C64::new(1.0, 0.0))
    }

    pub(crate) fn from_vec_unchecked(data: Vec<C64>) -> Self {
        debug_assert!(!data.is_empty());
        Self { data }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    /// Always false: a valid vector has at least one entry.
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, C64> {
        self.data.iter()
    }

    pub fn conj(&self) -> Self {
        Self::from_vec_unchecked(self.data.iter().map(|z| z.conj()).collect())
    }

    /// Pointwise product `self .* other`.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        same_len(self.len(), other.len())?;
        Ok(Self::from_vec_unchecked(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a * b)
                .collect(),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_len(self.len(), other.len())?;
        Ok(Self::from_vec_unchecked(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_len(self.len(), other.len())?;
        Ok(Self::from_vec_unchecked(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn scale(&self, s: C64) -> Self {
        Self::from_vec_unchecked(self.data.iter().map(|z| z * s).collect())
    }

    /// Keeps only the real parts.
    pub fn re(&self) -> Self {
        Self::from_vec_unchecked(self.data.iter().map(|z| C64::new(z.re, 0.0)).collect())
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.data.iter().all(|z| z.im.abs() <= tol)
    }
}

impl Index<usize> for ComplexVec {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.data[i]
    }
}

impl IndexMut<usize> for ComplexVec {
    fn index_mut(&mut self, i: usize) -> &mut C64 {
        &mut self.data[i]
    }
}

impl fmt::Debug for ComplexVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.data).finish()
    }
}

pub(crate) fn same_len(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

/// N×N complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMat {
    n: usize,
    data: Vec<C64>,
}

impl ComplexMat {
    /// Builds a matrix from row-major data of length `n * n`.
    pub fn new(n: usize, data: Vec<C64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        if data.len() != n * n {
            return Err(Error::Length {
                expected: n * n,
                found: data.len(),
            });
        }
        check_finite(&data)?;
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Length {
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Self::new(n, data)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        Self {
            n,
            data: vec![C64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| C64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Outer product `u vᵀ` (no conjugation).
    pub fn outer(u: &ComplexVec, v: &ComplexVec) -> Result<Self> {
        same_len(u.len(), v.len())?;
        Ok(Self::from_fn(u.len(), |i, j| u[i] * v[j]))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> ComplexVec {
        ComplexVec::from_vec_unchecked(self.data[i * self.n..(i + 1) * self.n].to_vec())
    }

    pub fn col(&self, j: usize) -> ComplexVec {
        ComplexVec::from_fn(self.n, |i| self[(i, j)])
    }

    pub fn set_row(&mut self, i: usize, row: &ComplexVec) -> Result<()> {
        same_len(self.n, row.len())?;
        self.data[i * self.n..(i + 1) * self.n].copy_from_slice(row.as_slice());
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_len(self.n, other.n)?;
        Ok(Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_len(self.n, other.n)?;
        Ok(Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        same_len(self.n, other.n)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, x: &ComplexVec) -> Result<ComplexVec> {
        same_len(self.n, x.len())?;
        Ok(ComplexVec::from_fn(self.n, |i| {
            self.data[i * self.n..(i + 1) * self.n]
                .iter()
                .zip(x.iter())
                .map(|(a, b)| a * b)
                .sum()
        }))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius inner product `⟨self, other⟩ = tr(other* self)`.
    pub fn frobenius_inner(&self, other: &Self) -> Result<C64> {
        same_len(self.n, other.n)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b.conj())
            .sum())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.data.iter().all(|z| z.im.abs() <= tol)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[C64]> {
        self.data.chunks(self.n)
    }
}

impl Index<(usize, usize)> for ComplexMat {
    type Output = C64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for ComplexMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for row in self.rows() {
            list.entry(&row);
        }
        list.finish()
    }
}
