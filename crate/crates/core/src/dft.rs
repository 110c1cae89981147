//! Discrete Fourier transforms with unnormalized forward and `1/N`-scaled
//! inverse conventions.
//!
//! * `dft(x)(j)  = Σ_k x(k) e^{-2πijk/N}`
//! * `idft(X)(k) = (1/N) Σ_j X(j) e^{2πijk/N}`
//! * `dft2` / `idft2` apply the 1-D transforms along rows then columns; the
//!   inverse carries `1/N²` overall.
//!
//! Power-of-two lengths go through an iterative radix-2 decimation-in-time
//! FFT; all other lengths use direct summation, which is also exposed as
//! [`dft_naive`] / [`idft_naive`] for oracle comparisons.

use std::cell::Cell;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{wrap, ComplexMat, ComplexVec, C64};

thread_local! {
    static TRANSFORMS: Cell<u64> = const { Cell::new(0) };
}

/// Number of 1-D transforms (forward or inverse, fast or naive) executed on
/// the current thread since it started.
pub fn transform_count() -> u64 {
    TRANSFORMS.with(|c| c.get())
}

fn bump() {
    TRANSFORMS.with(|c| c.set(c.get() + 1));
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    fn sign(self) -> f64 {
        match self {
            Direction::Forward => -1.0,
            Direction::Inverse => 1.0,
        }
    }
}

fn naive(x: &[C64], dir: Direction) -> Vec<C64> {
    let n = x.len();
    let step = dir.sign() * 2.0 * PI / n as f64;
    // Twiddles indexed by (j*k) mod n keep the phase argument small.
    let twiddles: Vec<C64> = (0..n)
        .map(|m| C64::from_polar(1.0, step * m as f64))
        .collect();
    (0..n)
        .map(|j| {
            x.iter()
                .enumerate()
                .map(|(k, &v)| v * twiddles[(j * k) % n])
                .sum()
        })
        .collect()
}

/// In-place iterative radix-2 DIT. `buf.len()` must be a power of two.
fn radix2(buf: &mut [C64], dir: Direction) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    if n <= 1 {
        return;
    }
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            buf.swap(i, j);
        }
    }
    let step = dir.sign() * 2.0 * PI / n as f64;
    let twiddles: Vec<C64> = (0..n / 2)
        .map(|m| C64::from_polar(1.0, step * m as f64))
        .collect();
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = twiddles[k * stride];
                let a = buf[start + k];
                let b = buf[start + k + half] * w;
                buf[start + k] = a + b;
                buf[start + k + half] = a - b;
            }
        }
        len <<= 1;
    }
}

fn transform(x: &[C64], dir: Direction) -> Vec<C64> {
    bump();
    let n = x.len();
    let mut out = if n.is_power_of_two() {
        let mut buf = x.to_vec();
        radix2(&mut buf, dir);
        buf
    } else {
        naive(x, dir)
    };
    if dir == Direction::Inverse {
        let s = 1.0 / n as f64;
        out.iter_mut().for_each(|z| *z *= s);
    }
    out
}

pub fn dft(x: &ComplexVec) -> ComplexVec {
    ComplexVec::from_vec_unchecked(transform(x.as_slice(), Direction::Forward))
}

pub fn idft(x: &ComplexVec) -> ComplexVec {
    ComplexVec::from_vec_unchecked(transform(x.as_slice(), Direction::Inverse))
}

/// Direct O(N²) summation of the forward transform, for any length.
pub fn dft_naive(x: &ComplexVec) -> ComplexVec {
    bump();
    ComplexVec::from_vec_unchecked(naive(x.as_slice(), Direction::Forward))
}

/// Direct O(N²) summation of the inverse transform, for any length.
pub fn idft_naive(x: &ComplexVec) -> ComplexVec {
    bump();
    let s = 1.0 / x.len() as f64;
    ComplexVec::from_vec_unchecked(
        naive(x.as_slice(), Direction::Inverse)
            .into_iter()
            .map(|z| z * s)
            .collect(),
    )
}

fn transform2(m: &ComplexMat, dir: Direction) -> ComplexMat {
    let n = m.n();
    let mut rows: Vec<C64> = Vec::with_capacity(n * n);
    for row in m.rows() {
        rows.extend(transform(row, dir));
    }
    let mut out = ComplexMat::zeros(n);
    let mut col = vec![C64::new(0.0, 0.0); n];
    for j in 0..n {
        for i in 0..n {
            col[i] = rows[i * n + j];
        }
        for (i, z) in transform(&col, dir).into_iter().enumerate() {
            out[(i, j)] = z;
        }
    }
    out
}

/// `G(p,q) = Σ_m Σ_n C(m,n) e^{-2πipm/N} e^{-2πiqn/N}`.
pub fn dft2(c: &ComplexMat) -> ComplexMat {
    transform2(c, Direction::Forward)
}

/// Inverse of [`dft2`], scaled by `1/N²`.
pub fn idft2(g: &ComplexMat) -> ComplexMat {
    transform2(g, Direction::Inverse)
}

/// `exp_j(k) = e^{2πijk/n}`.
pub fn fourier_exponential(n: usize, j: usize) -> Result<ComplexVec> {
    if n == 0 {
        return Err(Error::EmptyDimension);
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, bound: n });
    }
    Ok(ComplexVec::from_fn(n, |k| unit_root(n, (j * k) % n)))
}

/// `e^{2πi m/n}`, with the exact values at quarter turns.
pub(crate) fn unit_root(n: usize, m: usize) -> C64 {
    let m = m % n;
    if (4 * m).is_multiple_of(n) {
        return match 4 * m / n {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        };
    }
    C64::from_polar(1.0, 2.0 * PI * m as f64 / n as f64)
}

/// The flip operator `J`: `x_0 ↦ x_0`, `x_k ↦ x_{N-k}`.
pub fn flip(x: &ComplexVec) -> ComplexVec {
    let n = x.len();
    ComplexVec::from_fn(n, |k| x[wrap(-(k as isize), n)])
}

/// Cyclic shift `y(j) = x(j - k)`.
pub fn shift(x: &ComplexVec, k: usize) -> ComplexVec {
    let n = x.len();
    ComplexVec::from_fn(n, |j| x[wrap(j as isize - k as isize, n)])
}

/// Unitary Fourier matrix `V = (1/√n)[e^{2πijk/n}]`.
pub fn fourier_matrix(n: usize) -> Result<ComplexMat> {
    if n == 0 {
        return Err(Error::EmptyDimension);
    }
    let s = 1.0 / (n as f64).sqrt();
    Ok(ComplexMat::from_fn(n, |k, j| unit_root(n, (j * k) % n) * s))
}
