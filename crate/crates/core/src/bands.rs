//! Frequency-band decomposition of a mask matrix.
//!
//! Band `k` collects rows `k` and `N-k` of the frequency response `F`
//! (a single row for `k = 0` and, for even `N`, `k = N/2`). Its time-domain
//! mask `C_k` is the projection of `C` onto the span of the matching Fourier
//! exponentials:
//!
//! ```text
//! C_k = (1/N) Σ_{r ∈ {k, N-k}} C exp_r exp_r*
//! ```
//!
//! The band masks are mutually orthogonal in the Frobenius inner product and
//! sum to `C`. Each band filters a signal with two or three length-N
//! transforms, and all bands together share one forward transform of the input.

use crate::dft::{dft, flip, fourier_exponential, idft, shift};
use crate::error::{Error, Result};
use crate::freq::{freq_response, mask_from_freq, FreqResponse, DEFAULT_SYMMETRY_TOL};
use crate::linalg::{same_len, ComplexMat, ComplexVec, C64};
use crate::mask::MaskMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BandKind {
    /// `k = 0`
    Constant,
    /// `0 < k < N/2`, rows `k` and `N-k`
    Paired,
    /// `k = N/2` for even `N`
    Alternating,
}

pub fn band_count(n: usize) -> usize {
    n / 2 + 1
}

fn kind_of(n: usize, k: usize) -> Result<BandKind> {
    if k > n / 2 {
        return Err(Error::IndexOutOfRange {
            index: k,
            bound: band_count(n),
        });
    }
    Ok(if k == 0 {
        BandKind::Constant
    } else if 2 * k == n {
        BandKind::Alternating
    } else {
        BandKind::Paired
    })
}

/// Rows of `F` owned by band `k`.
fn band_rows(n: usize, k: usize) -> Vec<usize> {
    if k == 0 || 2 * k == n {
        vec![k]
    } else {
        vec![k, n - k]
    }
}

/// The conjugate mirror `conj(J f)` a real mask requires of row `N-k`.
fn mirror_of(f: &ComplexVec) -> ComplexVec {
    flip(f).conj()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Band {
    k: usize,
    row: ComplexVec,
    /// Row `N-k` for paired bands.
    mirror: Option<ComplexVec>,
}

impl Band {
    /// Band `k` from its row `f_k`. Paired bands get the implied mirror row
    /// `conj(J f_k)`, i.e. the band of a real mask.
    pub fn new(k: usize, row: ComplexVec) -> Result<Self> {
        let mirror = match kind_of(row.len(), k)? {
            BandKind::Paired => Some(mirror_of(&row)),
            _ => None,
        };
        Ok(Self { k, row, mirror })
    }

    /// Paired band with an explicit row `N-k`.
    pub fn with_mirror(k: usize, row: ComplexVec, mirror: ComplexVec) -> Result<Self> {
        same_len(row.len(), mirror.len())?;
        if kind_of(row.len(), k)? != BandKind::Paired {
            return Err(Error::Validation(format!(
                "band {k} of dimension {} is a single-row band",
                row.len()
            )));
        }
        Ok(Self {
            k,
            row,
            mirror: Some(mirror),
        })
    }

    pub fn zero(n: usize, k: usize) -> Result<Self> {
        Self::new(k, ComplexVec::zeros(n))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.row.len()
    }

    pub fn kind(&self) -> BandKind {
        kind_of(self.n(), self.k).expect("validated at construction")
    }

    /// Row `f_k` of `F`.
    pub fn row(&self) -> &ComplexVec {
        &self.row
    }

    pub fn mirror(&self) -> Option<&ComplexVec> {
        self.mirror.as_ref()
    }

    /// Whether the band could come from a real mask: the mirror row equals
    /// `conj(J f_k)`, or for single-row bands `f_k = conj(J f_k)`.
    pub fn satisfies_mirror_constraint(&self, tol: f64) -> bool {
        let target = mirror_of(&self.row);
        let other = self.mirror.as_ref().unwrap_or(&self.row);
        other.max_abs_diff(&target) <= tol
    }

    /// The sparse matrix `F_k`: zero except the band's rows.
    pub fn freq_matrix(&self) -> FreqResponse {
        let n = self.n();
        let mut m = ComplexMat::zeros(n);
        m.set_row(self.k, &self.row).expect("row length is n");
        if let Some(mirror) = &self.mirror {
            m.set_row(n - self.k, mirror).expect("row length is n");
        }
        FreqResponse::new(m)
    }
}

/// `F_k`: `F` with every row outside band `k` zeroed.
pub fn extract_band(f: &FreqResponse, k: usize) -> Result<ComplexMat> {
    Ok(band_of(f, k)?.freq_matrix().into_inner())
}

/// Band `k` read off a frequency response.
pub fn band_of(f: &FreqResponse, k: usize) -> Result<Band> {
    let n = f.n();
    match kind_of(n, k)? {
        BandKind::Paired => Band::with_mirror(k, f.row(k), f.row(n - k)),
        _ => Band::new(k, f.row(k)),
    }
}

/// `idft(f) exp_kᵀ`: the mask whose response is the single row `f` at `k`.
fn single_row_mask(f: &ComplexVec, k: usize) -> ComplexMat {
    let n = f.len();
    let column = idft(f);
    let phase = fourier_exponential(n, k).expect("k < n");
    ComplexMat::from_fn(n, |i, j| column[i] * phase[j])
}

/// Time-domain mask `C_k` of a band.
pub fn band_mask(b: &Band) -> MaskMatrix {
    let m = match b.kind() {
        BandKind::Constant | BandKind::Alternating => single_row_mask(&b.row, b.k),
        BandKind::Paired if b.satisfies_mirror_constraint(DEFAULT_SYMMETRY_TOL) => {
            let half = single_row_mask(&b.row, b.k);
            ComplexMat::from_fn(b.n(), |i, j| C64::new(2.0 * half[(i, j)].re, 0.0))
        }
        BandKind::Paired => return mask_from_freq(&b.freq_matrix()),
    };
    MaskMatrix::new(m)
}

/// `C_k` computed directly from `C` by projecting onto the band's
/// exponentials.
pub fn band_mask_projection(c: &MaskMatrix, k: usize) -> Result<MaskMatrix> {
    let n = c.n();
    kind_of(n, k)?;
    let mut out = ComplexMat::zeros(n);
    let inv_n = 1.0 / n as f64;
    for r in band_rows(n, k) {
        let e = fourier_exponential(n, r)?;
        let ce = c.matvec(&e)?;
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += ce[i] * e[j].conj() * inv_n;
            }
        }
    }
    Ok(MaskMatrix::new(out))
}

/// `Σ_r idft(shift(X, r) .* f_r)` over the band's rows, given `X = dft(x)`.
fn filter_spectrum(b: &Band, spectrum: &ComplexVec, real_input: bool) -> ComplexVec {
    let n = b.n();
    let term =
        |r: usize, f: &ComplexVec| idft(&shift(spectrum, r).hadamard(f).expect("lengths checked"));
    match (b.kind(), &b.mirror) {
        (BandKind::Paired, Some(mirror)) => {
            if real_input && b.satisfies_mirror_constraint(DEFAULT_SYMMETRY_TOL) {
                term(b.k, &b.row).re().scale(C64::new(2.0, 0.0))
            } else {
                term(b.k, &b.row)
                    .add(&term(n - b.k, mirror))
                    .expect("lengths checked")
            }
        }
        _ => term(b.k, &b.row),
    }
}

/// `conv(C_k) x` in O(N log N) for power-of-two N.
pub fn band_filter(b: &Band, x: &ComplexVec) -> Result<ComplexVec> {
    same_len(b.n(), x.len())?;
    Ok(filter_spectrum(b, &dft(x), x.is_real(0.0)))
}

/// All bands of a mask, `k = 0 ..= N/2` in ascending order.
#[derive(Clone, Debug, PartialEq)]
pub struct BandDecomposition {
    n: usize,
    bands: Vec<Band>,
}

impl BandDecomposition {
    /// Collects bands of dimension `n`; any band index not supplied is zero.
    pub fn new(n: usize, bands: Vec<Band>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDimension);
        }
        let mut slots: Vec<Option<Band>> = vec![None; band_count(n)];
        for b in bands {
            same_len(n, b.n())?;
            let k = b.k;
            if slots[k].replace(b).is_some() {
                return Err(Error::Validation(format!("band {k} supplied twice")));
            }
        }
        let bands = slots
            .into_iter()
            .enumerate()
            .map(|(k, b)| b.map_or_else(|| Band::zero(n, k), Ok))
            .collect::<Result<_>>()?;
        Ok(Self { n, bands })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    /// Reassembles the full frequency response from the bands.
    pub fn freq_response(&self) -> FreqResponse {
        let mut m = ComplexMat::zeros(self.n);
        for b in &self.bands {
            m = m.add(&b.freq_matrix()).expect("same dimension");
        }
        FreqResponse::new(m)
    }

    /// `Σ_k C_k`.
    pub fn reconstruct(&self) -> MaskMatrix {
        let mut sum = ComplexMat::zeros(self.n);
        for b in &self.bands {
            sum = sum.add(&band_mask(b)).expect("same dimension");
        }
        MaskMatrix::new(sum)
    }
}

pub fn decompose(c: &MaskMatrix) -> BandDecomposition {
    let f = freq_response(c);
    let bands = (0..band_count(c.n()))
        .map(|k| band_of(&f, k).expect("k within range"))
        .collect();
    BandDecomposition { n: c.n(), bands }
}

/// `Σ_k band_filter(b_k, x)`, accumulated in ascending `k`.
pub fn full_band_filter(bands: &BandDecomposition, x: &ComplexVec) -> Result<ComplexVec> {
    same_len(bands.n, x.len())?;
    let spectrum = dft(x);
    let real_input = x.is_real(0.0);
    let mut acc = ComplexVec::zeros(bands.n);
    for b in &bands.bands {
        acc = acc.add(&filter_spectrum(b, &spectrum, real_input))?;
    }
    Ok(acc)
}
