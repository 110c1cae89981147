//! Fast paths for rank-one masks `C = c d*`.
//!
//! Both operators reduce to a circulant product sandwiched between pointwise
//! multiplications, so each application costs three length-N transforms:
//!
//! * `comb(C) x = conj(d) .* idft(dft(c) .* dft(x))`
//! * `conv(C) x = idft(dft(conj(d) .* x) .* dft(c))`
//!
//! and the frequency response is the outer product
//! `F = (1/N) dft(conj(d)) dft(c)ᵀ`.

use crate::dft::{dft, idft};
use crate::error::{Error, Result};
use crate::freq::FreqResponse;
use crate::linalg::{same_len, wrap, ComplexMat, ComplexVec, C64};
use crate::mask::{MaskEntries, MaskMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct RankOneMask {
    c: ComplexVec,
    d: ComplexVec,
}

impl RankOneMask {
    pub fn new(c: ComplexVec, d: ComplexVec) -> Result<Self> {
        same_len(c.len(), d.len())?;
        Ok(Self { c, d })
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn c(&self) -> &ComplexVec {
        &self.c
    }

    pub fn d(&self) -> &ComplexVec {
        &self.d
    }
}

impl MaskEntries for RankOneMask {
    fn dim(&self) -> usize {
        self.c.len()
    }
    #[inline]
    fn entry(&self, i: usize, j: usize) -> C64 {
        self.c[i] * self.d[j].conj()
    }
}

/// Materializes `c d*`.
pub fn rank1_dense(m: &RankOneMask) -> MaskMatrix {
    MaskMatrix::new(ComplexMat::from_fn(m.n(), |i, j| m.entry(i, j)))
}

pub fn rank1_comb_apply(m: &RankOneMask, x: &ComplexVec) -> Result<ComplexVec> {
    same_len(m.n(), x.len())?;
    let filtered = idft(&dft(&m.c).hadamard(&dft(x))?);
    m.d.conj().hadamard(&filtered)
}

pub fn rank1_conv_apply(m: &RankOneMask, x: &ComplexVec) -> Result<ComplexVec> {
    same_len(m.n(), x.len())?;
    let weighted = m.d.conj().hadamard(x)?;
    Ok(idft(&dft(&weighted).hadamard(&dft(&m.c))?))
}

/// Transforms of both factors, enough to read any entry of `F`, `comb(F)`
/// or `conv(F)` in O(1) without materializing them.
#[derive(Clone, Debug)]
pub struct RankOneSpectrum {
    /// `dft(conj(d))`
    left: ComplexVec,
    /// `dft(c)`
    right: ComplexVec,
}

impl RankOneSpectrum {
    pub fn new(m: &RankOneMask) -> Self {
        Self {
            left: dft(&m.d.conj()),
            right: dft(&m.c),
        }
    }

    pub fn n(&self) -> usize {
        self.left.len()
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        for index in [i, j] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, bound: n });
            }
        }
        Ok(())
    }

    fn scaled(&self, row: usize, col: usize) -> C64 {
        self.left[row] * self.right[col] / self.n() as f64
    }

    /// `F(i,j)`.
    pub fn freq_entry(&self, i: usize, j: usize) -> Result<C64> {
        self.check(i, j)?;
        Ok(self.scaled(i, j))
    }

    /// `comb(F)(i,j) = (1/N) dft(conj d)(i-j) dft(c)(i)`.
    pub fn comb_entry(&self, i: usize, j: usize) -> Result<C64> {
        self.check(i, j)?;
        Ok(self.scaled(wrap(i as isize - j as isize, self.n()), i))
    }

    /// `conv(F)(i,j) = (1/N) dft(conj d)(i-j) dft(c)(j)`.
    pub fn conv_entry(&self, i: usize, j: usize) -> Result<C64> {
        self.check(i, j)?;
        Ok(self.scaled(wrap(i as isize - j as isize, self.n()), j))
    }
}

pub fn rank1_freq_response(m: &RankOneMask) -> FreqResponse {
    let s = RankOneSpectrum::new(m);
    FreqResponse::new(ComplexMat::from_fn(m.n(), |i, j| s.scaled(i, j)))
}

/// One entry of `comb(F)`; recomputes the factor transforms on each call.
/// Use [`RankOneSpectrum`] when sampling many entries.
pub fn rank1_comb_f_entry(m: &RankOneMask, i: usize, j: usize) -> Result<C64> {
    RankOneSpectrum::new(m).comb_entry(i, j)
}

/// One entry of `conv(F)`; see [`rank1_comb_f_entry`].
pub fn rank1_conv_f_entry(m: &RankOneMask, i: usize, j: usize) -> Result<C64> {
    RankOneSpectrum::new(m).conv_entry(i, j)
}
