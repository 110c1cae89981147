//! Mask matrices and the cyclic convolution / combination constructions.
//!
//! Column `τ` of a mask matrix `C` is the filter mask active at time `τ`.
//! With all indices taken mod N:
//!
//! * `conv(C)(i,j) = C(i-j, j)`, inverse `C(i,j) = conv(C)(i+j, j)`
//! * `comb(C)(i,j) = C(i-j, i)`, inverse `C(i,j) = comb(C)(j, j-i)`
//!
//! Every construction here is a permutation of entry positions, so the
//! round trips are exact.

use std::ops::Deref;

use crate::error::Result;
use crate::linalg::{same_len, wrap, ComplexMat, ComplexVec, C64};

/// Read access to the entries of an N×N mask, materialized or not.
pub trait MaskEntries {
    fn dim(&self) -> usize;
    fn entry(&self, i: usize, j: usize) -> C64;
}

/// Square matrix whose column `τ` is the mask applied at time `τ`.
#[derive(Clone, Debug, PartialEq)]
pub struct MaskMatrix(ComplexMat);

impl MaskMatrix {
    pub fn new(mat: ComplexMat) -> Self {
        Self(mat)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn as_mat(&self) -> &ComplexMat {
        &self.0
    }

    pub fn into_inner(self) -> ComplexMat {
        self.0
    }

    /// True when every column equals the first one.
    pub fn is_stationary(&self, tol: f64) -> bool {
        let n = self.n();
        (0..n).all(|i| (1..n).all(|j| (self.0[(i, j)] - self.0[(i, 0)]).norm() <= tol))
    }
}

impl Deref for MaskMatrix {
    type Target = ComplexMat;
    fn deref(&self) -> &ComplexMat {
        &self.0
    }
}

impl From<ComplexMat> for MaskMatrix {
    fn from(m: ComplexMat) -> Self {
        Self(m)
    }
}

impl MaskEntries for MaskMatrix {
    fn dim(&self) -> usize {
        self.0.n()
    }
    #[inline]
    fn entry(&self, i: usize, j: usize) -> C64 {
        self.0[(i, j)]
    }
}

impl MaskEntries for ComplexMat {
    fn dim(&self) -> usize {
        self.n()
    }
    #[inline]
    fn entry(&self, i: usize, j: usize) -> C64 {
        self[(i, j)]
    }
}

#[inline]
fn idx(a: usize, b: usize, sign: isize, n: usize) -> usize {
    wrap(a as isize + sign * b as isize, n)
}

/// Row-major permutation `out(i,j) = m(src(i,j))`.
fn remap(m: &ComplexMat, src: impl Fn(usize, usize) -> (usize, usize)) -> ComplexMat {
    ComplexMat::from_fn(m.n(), |i, j| m[src(i, j)])
}

pub fn conv_matrix(c: &ComplexMat) -> ComplexMat {
    let n = c.n();
    remap(c, |i, j| (idx(i, j, -1, n), j))
}

pub fn comb_matrix(c: &ComplexMat) -> ComplexMat {
    let n = c.n();
    remap(c, |i, j| (idx(i, j, -1, n), i))
}

pub fn conv_unmatrix(m: &ComplexMat) -> MaskMatrix {
    let n = m.n();
    MaskMatrix(remap(m, |i, j| (idx(i, j, 1, n), j)))
}

pub fn comb_unmatrix(m: &ComplexMat) -> MaskMatrix {
    let n = m.n();
    MaskMatrix(remap(m, |i, j| (j, idx(j, i, -1, n))))
}

/// `comb(C)(i,j) = conv(C)(2i-j, i)`, reading `m` as `conv(C)`.
pub fn conv_to_comb(m: &ComplexMat) -> ComplexMat {
    let n = m.n();
    remap(m, |i, j| (idx(2 * i, j, -1, n), i))
}

/// `conv(C)(i,j) = comb(C)(j, 2j-i)`, reading `m` as `comb(C)`.
pub fn comb_to_conv(m: &ComplexMat) -> ComplexMat {
    let n = m.n();
    remap(m, |i, j| (j, idx(2 * j, i, -1, n)))
}

/// Mask matrix `c 1ᵀ` of a time-invariant filter.
pub fn stationary_mask(c: &ComplexVec) -> MaskMatrix {
    MaskMatrix(ComplexMat::from_fn(c.len(), |i, _| c[i]))
}

/// `y(t) = Σ_τ C(t-τ, τ) x(τ)`, O(N²) without building `conv(C)`.
pub fn apply_conv<M: MaskEntries + ?Sized>(c: &M, x: &ComplexVec) -> Result<ComplexVec> {
    let n = c.dim();
    same_len(n, x.len())?;
    Ok(ComplexVec::from_fn(n, |t| {
        let mut acc = C64::new(0.0, 0.0);
        for tau in 0..n {
            acc += c.entry(idx(t, tau, -1, n), tau) * x[tau];
        }
        acc
    }))
}

/// `y(t) = Σ_τ C(t-τ, t) x(τ)`, O(N²) without building `comb(C)`.
pub fn apply_comb<M: MaskEntries + ?Sized>(c: &M, x: &ComplexVec) -> Result<ComplexVec> {
    let n = c.dim();
    same_len(n, x.len())?;
    Ok(ComplexVec::from_fn(n, |t| {
        let mut acc = C64::new(0.0, 0.0);
        for tau in 0..n {
            acc += c.entry(idx(t, tau, -1, n), t) * x[tau];
        }
        acc
    }))
}

/// True when entry `(i,j)` depends only on `(i-j) mod N`.
pub fn is_circulant(m: &ComplexMat, tol: f64) -> bool {
    let n = m.n();
    (0..n).all(|i| (0..n).all(|j| (m[(i, j)] - m[(idx(i, j, -1, n), 0)]).norm() <= tol))
}
