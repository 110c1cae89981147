//! Fourier-domain frequency response of a mask matrix.
//!
//! `F = V* Cᵀ V* = (1/N) DFT2(Cᵀ)` and back `C = IDFT2(N F)ᵀ`. Under this
//! map `V* conv(C) V = comb(F)` and `V* comb(C) V = conv(F)`.

use std::ops::Deref;

use crate::dft::{dft, dft2, idft, idft2};
use crate::error::Result;
use crate::linalg::{same_len, wrap, ComplexMat, ComplexVec, C64};
use crate::mask::{comb_matrix, MaskMatrix};

pub const DEFAULT_SYMMETRY_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct FreqResponse(ComplexMat);

impl FreqResponse {
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
}

impl Deref for FreqResponse {
    type Target = ComplexMat;
    fn deref(&self) -> &ComplexMat {
        &self.0
    }
}

impl From<ComplexMat> for FreqResponse {
    fn from(m: ComplexMat) -> Self {
        Self(m)
    }
}

pub fn freq_response(c: &MaskMatrix) -> FreqResponse {
    let n = c.n() as f64;
    FreqResponse(dft2(&c.transpose()).scale(C64::new(1.0 / n, 0.0)))
}

pub fn mask_from_freq(f: &FreqResponse) -> MaskMatrix {
    let n = f.n() as f64;
    MaskMatrix::new(idft2(&f.scale(C64::new(n, 0.0))).transpose())
}

/// `M(i,j) = conj(M(-i,-j))` for every entry, within `tol` absolute.
pub fn has_fourier_conjugate_symmetry(m: &ComplexMat, tol: f64) -> bool {
    let n = m.n();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let mirror = m[(wrap(-(i as isize), n), wrap(-(j as isize), n))];
            (m[(i, j)] - mirror.conj()).norm() <= tol
        })
    })
}

/// Filters `x` through `conv(C)` by working in the Fourier domain:
/// `idft(comb(F) · dft(x))`.
pub fn dft_domain_filter(f: &FreqResponse, x: &ComplexVec) -> Result<ComplexVec> {
    same_len(f.n(), x.len())?;
    let spectrum = comb_matrix(f).matvec(&dft(x))?;
    Ok(idft(&spectrum))
}
