//! Checks the structural identities of a mask matrix against dense oracles.

use crate::bands::{band_count, band_filter, band_mask, band_mask_projection, band_of};
use crate::dft::fourier_matrix;
use crate::error::Result;
use crate::freq::{
    dft_domain_filter, freq_response, has_fourier_conjugate_symmetry, mask_from_freq,
};
use crate::linalg::{same_len, ComplexMat, ComplexVec};
use crate::mask::{
    apply_conv, comb_matrix, comb_to_conv, comb_unmatrix, conv_matrix, conv_to_comb, conv_unmatrix,
    MaskMatrix,
};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Measured error, or 0 for exact checks that passed.
    pub error: f64,
}

impl Check {
    fn exact(name: &'static str, passed: bool) -> Self {
        Self {
            name,
            passed,
            error: if passed { 0.0 } else { f64::INFINITY },
        }
    }

    fn within(name: &'static str, error: f64, bound: f64) -> Self {
        Self {
            name,
            passed: error <= bound,
            error,
        }
    }
}

fn frob_diff(a: &ComplexMat, b: &ComplexMat) -> f64 {
    a.sub(b)
        .map(|d| d.frobenius_norm())
        .unwrap_or(f64::INFINITY)
}

/// Runs every identity on `c`, using `x` as the probe signal. Tolerances are
/// relative: matrix checks scale by `max(1, ‖C‖_F)`, signal checks by
/// `max(1, ‖y‖)`.
pub fn verify_mask(c: &MaskMatrix, x: &ComplexVec, tol: f64) -> Result<Vec<Check>> {
    same_len(c.n(), x.len())?;
    let n = c.n();
    let scale = c.frobenius_norm().max(1.0);
    let conv = conv_matrix(c);
    let comb = comb_matrix(c);
    let f = freq_response(c);
    let v = fourier_matrix(n)?;
    let v_star = v.adjoint();
    let mut checks = vec![
        Check::exact("conv round trip", conv_unmatrix(&conv) == *c),
        Check::exact("comb round trip", comb_unmatrix(&comb) == *c),
        Check::exact("conv to comb remap", conv_to_comb(&conv) == comb),
        Check::exact("comb to conv remap", comb_to_conv(&comb) == conv),
    ];

    let lhs = v_star.matmul(&conv)?.matmul(&v)?;
    checks.push(Check::within(
        "V* conv(C) V = comb(F)",
        frob_diff(&lhs, &comb_matrix(&f)),
        tol * scale,
    ));
    let lhs = v_star.matmul(&comb)?.matmul(&v)?;
    checks.push(Check::within(
        "V* comb(C) V = conv(F)",
        frob_diff(&lhs, &conv_matrix(&f)),
        tol * scale,
    ));
    let triple = v_star.matmul(&c.transpose())?.matmul(&v_star)?;
    checks.push(Check::within(
        "F = V* C^T V*",
        frob_diff(&triple, &f),
        tol * scale,
    ));
    checks.push(Check::within(
        "mask from frequency response",
        frob_diff(&mask_from_freq(&f), c),
        tol * scale,
    ));

    let projections = (0..band_count(n))
        .map(|k| band_mask_projection(c, k))
        .collect::<Result<Vec<_>>>()?;
    let mut sum = ComplexMat::zeros(n);
    let mut closed_form_err: f64 = 0.0;
    for (k, p) in projections.iter().enumerate() {
        sum = sum.add(p)?;
        closed_form_err = closed_form_err.max(frob_diff(&band_mask(&band_of(&f, k)?), p));
    }
    checks.push(Check::within(
        "band reconstruction",
        frob_diff(&sum, c),
        tol * scale,
    ));
    checks.push(Check::within(
        "band closed forms",
        closed_form_err,
        tol * scale,
    ));

    let energy = c.frobenius_norm().powi(2);
    let mut cross: f64 = 0.0;
    for (k, a) in projections.iter().enumerate() {
        for b in &projections[k + 1..] {
            cross = cross.max(a.frobenius_inner(b)?.norm());
        }
    }
    checks.push(Check::within(
        "band orthogonality",
        cross,
        tol * energy.max(1.0),
    ));
    let band_energy: f64 = projections.iter().map(|p| p.frobenius_norm().powi(2)).sum();
    checks.push(Check::within(
        "band energy",
        (band_energy - energy).abs(),
        tol * energy.max(1.0),
    ));

    let symmetric = has_fourier_conjugate_symmetry(&f, tol * scale);
    checks.push(Check::exact(
        "real mask iff conjugate-symmetric response",
        symmetric == c.is_real(1e-12 * scale),
    ));
    let agree = has_fourier_conjugate_symmetry(&comb_matrix(&f), tol * scale) == symmetric
        && has_fourier_conjugate_symmetry(&conv_matrix(&f), tol * scale) == symmetric;
    checks.push(Check::exact("symmetry of F, comb(F), conv(F) agree", agree));

    let dense = apply_conv(c, x)?;
    let yscale = dense.norm().max(1.0);
    let mut banded = ComplexVec::zeros(n);
    for k in 0..band_count(n) {
        banded = banded.add(&band_filter(&band_of(&f, k)?, x)?)?;
    }
    checks.push(Check::within(
        "band filters sum to conv(C) x",
        banded.sub(&dense)?.norm(),
        tol * yscale,
    ));
    checks.push(Check::within(
        "Fourier-domain filter equals conv(C) x",
        dft_domain_filter(&f, x)?.sub(&dense)?.norm(),
        tol * yscale,
    ));
    Ok(checks)
}

pub fn render_report(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status}  {:<45} err={:.3e}\n", c.name, c.error));
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    out.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
    out
}
