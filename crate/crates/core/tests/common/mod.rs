//! Worked fixtures and random generators shared by the integration tests.
#![allow(dead_code)]

use nsfilter::linalg::{ComplexMat, ComplexVec, C64};
use nsfilter::mask::MaskMatrix;
use rand::Rng;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn real_mat(rows: &[&[f64]]) -> ComplexMat {
    ComplexMat::from_real_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn cmat(rows: Vec<Vec<C64>>) -> ComplexMat {
    ComplexMat::from_rows(rows).unwrap()
}

pub fn cvec(v: &[C64]) -> ComplexVec {
    ComplexVec::new(v.to_vec()).unwrap()
}

pub fn rvec(v: &[f64]) -> ComplexVec {
    ComplexVec::from_real(v).unwrap()
}

pub mod ex43 {
    use super::*;

    pub fn f() -> ComplexMat {
        cmat(vec![
            vec![c(1., 0.), c(2., -1.), c(1., 0.), c(2., 1.)],
            vec![c(-1., 2.), c(1., -4.), c(-1., 0.), c(3., 1.)],
            vec![c(3., 0.), c(1., -1.), c(2., 0.), c(1., 1.)],
            vec![c(-1., -2.), c(3., -1.), c(-1., 0.), c(1., 4.)],
        ])
    }

    pub fn c_mask() -> ComplexMat {
        real_mat(&[
            &[4.25, 0.25, 2.25, -0.75],
            &[3.75, -0.25, -1.25, -0.25],
            &[-2.75, -3.75, 3.25, 1.25],
            &[-3.25, -2.25, 1.75, 1.75],
        ])
    }

    pub fn conv_c() -> ComplexMat {
        real_mat(&[
            &[4.25, -2.25, 3.25, -0.25],
            &[3.75, 0.25, 1.75, 1.25],
            &[-2.75, -0.25, 2.25, 1.75],
            &[-3.25, -3.75, -1.25, -0.75],
        ])
    }

    /// F_0, F_1, F_2 (the blank (3,3) entry of F_2 read as 0).
    pub fn f_bands() -> [ComplexMat; 3] {
        let z = c(0., 0.);
        [
            cmat(vec![
                vec![c(1., 0.), c(2., -1.), c(1., 0.), c(2., 1.)],
                vec![z; 4],
                vec![z; 4],
                vec![z; 4],
            ]),
            cmat(vec![
                vec![z; 4],
                vec![c(-1., 2.), c(1., -4.), c(-1., 0.), c(3., 1.)],
                vec![z; 4],
                vec![c(-1., -2.), c(3., -1.), c(-1., 0.), c(1., 4.)],
            ]),
            cmat(vec![
                vec![z; 4],
                vec![z; 4],
                vec![c(3., 0.), c(1., -1.), c(2., 0.), c(1., 1.)],
                vec![z; 4],
            ]),
        ]
    }

    pub fn comb_f_bands() -> [ComplexMat; 3] {
        let z = c(0., 0.);
        [
            cmat(vec![
                vec![c(1., 0.), c(2., -1.), c(1., 0.), c(2., 1.)],
                vec![z, c(2., -1.), z, z],
                vec![z, z, c(1., 0.), z],
                vec![z, z, z, c(2., -1.)],
            ]),
            cmat(vec![
                vec![z, c(-1., -2.), z, c(-1., 2.)],
                vec![c(1., -4.), z, c(3., -1.), z],
                vec![z, c(-1., 0.), z, c(-1., 0.)],
                vec![c(1., 4.), z, c(3., 1.), z],
            ]),
            cmat(vec![
                vec![z, z, c(3., 0.), z],
                vec![z, z, z, c(1., -1.)],
                vec![c(2., 0.), z, z, z],
                vec![z, c(1., 1.), z, z],
            ]),
        ]
    }

    pub fn c_bands() -> [ComplexMat; 3] {
        [
            real_mat(&[&[1.5; 4], &[0.5; 4], &[-0.5; 4], &[-0.5; 4]]),
            real_mat(&[
                &[1.0, 0.5, -1.0, -0.5],
                &[2.5, 0.0, -2.5, 0.0],
                &[-3.0, -2.5, 3.0, 2.5],
                &[-2.5, -2.0, 2.5, 2.0],
            ]),
            real_mat(&[
                &[1.75, -1.75, 1.75, -1.75],
                &[0.75, -0.75, 0.75, -0.75],
                &[0.75, -0.75, 0.75, -0.75],
                &[-0.25, 0.25, -0.25, 0.25],
            ]),
        ]
    }

    pub fn conv_c_bands() -> [ComplexMat; 3] {
        [
            real_mat(&[
                &[1.5, -0.5, -0.5, 0.5],
                &[0.5, 1.5, -0.5, -0.5],
                &[-0.5, 0.5, 1.5, -0.5],
                &[-0.5, -0.5, 0.5, 1.5],
            ]),
            real_mat(&[
                &[1.0, -2.0, 3.0, 0.0],
                &[2.5, 0.5, 2.5, 2.5],
                &[-3.0, 0.0, -1.0, 2.0],
                &[-2.5, -2.5, -2.5, -0.5],
            ]),
            real_mat(&[
                &[1.75, 0.25, 0.75, -0.75],
                &[0.75, -1.75, -0.25, -0.75],
                &[0.75, -0.75, 1.75, 0.25],
                &[-0.25, -0.75, 0.75, -1.75],
            ]),
        ]
    }
}

pub mod ex44 {
    use super::*;

    pub fn f1() -> ComplexMat {
        ComplexMat::from_fn(6, |i, _| c(if i == 1 || i == 5 { 1. } else { 0. }, 0.))
    }

    pub fn c1() -> ComplexMat {
        let mut m = ComplexMat::zeros(6);
        m.set_row(0, &rvec(&[2., 1., -1., -2., -1., 1.])).unwrap();
        m
    }

    pub fn conv_c1() -> ComplexMat {
        let d = [2., 1., -1., -2., -1., 1.];
        ComplexMat::from_fn(6, |i, j| c(if i == j { d[i] } else { 0. }, 0.))
    }

    pub fn comb_f1() -> ComplexMat {
        real_mat(&[
            &[0., 1., 0., 0., 0., 1.],
            &[1., 0., 1., 0., 0., 0.],
            &[0., 1., 0., 1., 0., 0.],
            &[0., 0., 1., 0., 1., 0.],
            &[0., 0., 0., 1., 0., 1.],
            &[1., 0., 0., 0., 1., 0.],
        ])
    }
}

pub mod ex46 {
    use super::*;

    pub fn f0() -> ComplexVec {
        cvec(&[
            c(1., 0.),
            c(2., 1.),
            c(3., -1.),
            c(0., 1.),
            c(2., 0.),
            c(0., -1.),
            c(3., 1.),
            c(2., -1.),
        ])
    }

    pub fn f1() -> ComplexVec {
        cvec(&[
            c(2., 3.),
            c(1., 0.),
            c(2., 0.),
            c(0., -1.),
            c(0., 1.),
            c(3., 0.),
            c(-1., -1.),
            c(-1., 0.),
        ])
    }

    pub fn f2() -> ComplexVec {
        cvec(&[
            c(0., -1.),
            c(0., 1.),
            c(1., 0.),
            c(4., 0.),
            c(0., -1.),
            c(2., 1.),
            c(2., 1.),
            c(-1., 0.),
        ])
    }

    pub fn x() -> ComplexVec {
        rvec(&[1., -2., 3., 1., 1., 0., -2., 1.])
    }

    pub fn components() -> [ComplexVec; 3] {
        [
            rvec(&[
                1.4608, -0.5895, 1.8750, 2.3750, 4.2892, -5.6605, -3.1250, 2.3750,
            ]),
            rvec(&[
                -3.9142, 0.1893, -1.5858, -2.0074, -11.4142, 2.3107, -3.0858, -7.6642,
            ]),
            rvec(&[
                -1.3107, 5.9372, -7.4393, 2.9372, 5.8107, -8.4372, 2.9393, -8.4372,
            ]),
        ]
    }

    pub fn total() -> ComplexVec {
        rvec(&[
            -3.7641, 5.5371, -7.1501, 3.3048, -1.3143, -11.7871, -3.2714, -13.7264,
        ])
    }

    pub fn comb_f() -> ComplexMat {
        let z = c(0., 0.);
        let i = |v: f64| c(0., v);
        cmat(vec![
            vec![c(1., 0.), c(2., -3.), i(1.), z, z, z, i(-1.), c(2., 3.)],
            vec![c(1., 0.), c(2., 1.), c(-1., 0.), c(-1., 0.), z, z, z, i(1.)],
            vec![
                c(1., 0.),
                c(2., 0.),
                c(3., -1.),
                c(-1., 1.),
                c(2., -1.),
                z,
                z,
                z,
            ],
            vec![z, c(4., 0.), i(-1.), i(1.), c(3., 0.), c(2., -1.), z, z],
            vec![z, z, i(-1.), i(1.), c(2., 0.), i(-1.), i(1.), z],
            vec![z, z, z, c(2., 1.), c(3., 0.), i(-1.), i(1.), c(4., 0.)],
            vec![
                c(1., 0.),
                z,
                z,
                z,
                c(2., 1.),
                c(-1., -1.),
                c(3., 1.),
                c(2., 0.),
            ],
            vec![
                c(1., 0.),
                i(-1.),
                z,
                z,
                z,
                c(-1., 0.),
                c(-1., 0.),
                c(2., -1.),
            ],
        ])
    }

    pub fn conv_c() -> ComplexMat {
        real_mat(&[
            &[
                5.1250, 0.5695, -0.1250, -1.9660, 0.1250, -3.3195, 3.3750, 1.2160,
            ],
            &[
                -0.9660, 2.0821, 1.7160, -1.2286, 1.0089, 2.0821, -2.6731, 0.3928,
            ],
            &[
                -1.6250, -1.1124, -0.8750, -0.0518, -1.1250, 1.3624, 2.1250, 0.3018,
            ],
            &[
                1.3624, -1.1428, -0.1376, 0.4608, -1.1982, -0.2286, -0.1124, 0.5821,
            ],
            &[
                0.1250, -0.4053, -1.6250, -0.4053, 2.1250, 0.6553, -0.1250, 0.6553,
            ],
            &[
                2.2160, 0.6679, -1.4660, -3.1428, -0.7589, 0.6679, 1.9231, -0.5214,
            ],
            &[
                -0.1250, 0.4482, 0.1250, -0.9053, -1.6250, 0.8018, 0.1250, 0.1553,
            ],
            &[
                -1.1124, 0.4786, -2.6124, -0.8321, -1.5518, 2.3928, 2.3624, 3.2892,
            ],
        ])
    }
}

pub fn rand_c64(rng: &mut impl Rng) -> C64 {
    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn rand_vec(rng: &mut impl Rng, n: usize) -> ComplexVec {
    ComplexVec::from_fn(n, |_| rand_c64(rng))
}

pub fn rand_real_vec(rng: &mut impl Rng, n: usize) -> ComplexVec {
    ComplexVec::from_fn(n, |_| c(rng.gen_range(-1.0..1.0), 0.0))
}

pub fn rand_mat(rng: &mut impl Rng, n: usize) -> ComplexMat {
    ComplexMat::from_fn(n, |_, _| rand_c64(rng))
}

pub fn rand_real_mask(rng: &mut impl Rng, n: usize) -> MaskMatrix {
    MaskMatrix::new(ComplexMat::from_fn(n, |_, _| {
        c(rng.gen_range(-1.0..1.0), 0.0)
    }))
}

pub fn rel_frob(a: &ComplexMat, b: &ComplexMat) -> f64 {
    a.sub(b).unwrap().frobenius_norm() / b.frobenius_norm().max(1.0)
}

pub fn rel_vec(a: &ComplexVec, b: &ComplexVec) -> f64 {
    a.sub(b).unwrap().norm() / b.norm().max(1.0)
}
