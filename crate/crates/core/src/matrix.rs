//! Small complex 2×2 matrices: Pauli algebra and the closed-form exponential.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Row-major complex 2×2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub const ZERO: Mat2 = Mat2([[ZERO, ZERO], [ZERO, ZERO]]);
    pub const IDENTITY: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn sigma_x() -> Self {
        Mat2::real(0.0, 1.0, 1.0, 0.0)
    }

    pub fn sigma_y() -> Self {
        Mat2::new(ZERO, -I, I, ZERO)
    }

    pub fn sigma_z() -> Self {
        Mat2::real(1.0, 0.0, 0.0, -1.0)
    }

    pub fn scale(self, s: Complex64) -> Self {
        let m = self.0;
        Mat2([[m[0][0] * s, m[0][1] * s], [m[1][0] * s, m[1][1] * s]])
    }

    pub fn scale_re(self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn adjoint(&self) -> Self {
        let m = self.0;
        Mat2([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn commutator(self, other: Mat2) -> Self {
        self * other - other * self
    }

    /// Frobenius inner product `tr(A† B)`.
    pub fn inner(&self, other: &Mat2) -> Complex64 {
        let mut acc = ZERO;
        for i in 0..2 {
            for j in 0..2 {
                acc += self.0[i][j].conj() * other.0[i][j];
            }
        }
        acc
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner(self).re.sqrt()
    }

    pub fn distance(&self, other: &Mat2) -> f64 {
        (*self - *other).frobenius_norm()
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Kronecker product `self ⊗ other` as a 4×4 matrix, basis order (00, 01, 10, 11).
    pub fn kron(&self, other: &Mat2) -> [[Complex64; 4]; 4] {
        let mut out = [[ZERO; 4]; 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out[2 * i + k][2 * j + l] = self.0[i][j] * other.0[k][l];
                    }
                }
            }
        }
        out
    }

    /// Matrix exponential.
    ///
    /// Splits `A = (tr A / 2) I + N` with `N` traceless, so `N² = -det(N) I` and
    /// `exp(N) = cosh(s) I + sinh(s)/s N` with `s² = -det N`. Near `s = 0` the
    /// ratio `sinh(s)/s` is replaced by its Taylor series.
    pub fn exp(&self) -> Mat2 {
        let half_trace = self.trace() * 0.5;
        let traceless = *self - Mat2::IDENTITY.scale(half_trace);
        let s2 = -traceless.det();
        let (cosh_s, sinhc_s) = if s2.norm() < 1e-10 {
            // Series through s⁴; the first omitted term is O(s⁶) < 1e-30.
            (
                ONE + s2 / 2.0 + s2 * s2 / 24.0,
                ONE + s2 / 6.0 + s2 * s2 / 120.0,
            )
        } else {
            let s = s2.sqrt();
            (s.cosh(), s.sinh() / s)
        };
        (Mat2::IDENTITY.scale(cosh_s) + traceless.scale(sinhc_s)).scale(half_trace.exp())
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (self.0, rhs.0);
        Mat2([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        self + (-rhs)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale_re(-1.0)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (self.0, rhs.0);
        Mat2([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }
}
