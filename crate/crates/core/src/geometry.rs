//! Schwarzschild exterior: metric, static tetrad, Christoffel symbols and the
//! spin connection of the static frame.
//!
//! Coordinate components use the order `(t, r, θ, φ)` (see [`coord`]). Local
//! frame components use `(t, r, φ, θ)` (see [`frame`]), so that the equatorial
//! reduction `(t, r, φ)` occupies the first three frame slots. The frame metric
//! is `η = diag(-1, +1, +1, +1)`.

use crate::connection::ConnectionForm;
use crate::error::{Error, Result};

/// Coordinate indices.
pub mod coord {
    pub const T: usize = 0;
    pub const R: usize = 1;
    pub const THETA: usize = 2;
    pub const PHI: usize = 3;
}

/// Local (tetrad) indices.
pub mod frame {
    pub const T: usize = 0;
    pub const R: usize = 1;
    pub const PHI: usize = 2;
    pub const THETA: usize = 3;
}

/// Diagonal of the frame metric η.
pub const ETA: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

pub type Matrix4 = [[f64; 4]; 4];
pub type Vector4 = [f64; 4];

/// Physical configuration of the spacetime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzschildParams {
    /// Schwarzschild radius `2GM/c²`.
    pub r_s: f64,
    /// Speed of light.
    pub c: f64,
}

impl SchwarzschildParams {
    pub fn new(r_s: f64, c: f64) -> Result<Self> {
        if !(r_s.is_finite() && r_s >= 0.0) {
            return Err(Error::InvalidParams(format!("r_s must be finite and >= 0, got {r_s}")));
        }
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::InvalidParams(format!("c must be finite and > 0, got {c}")));
        }
        Ok(Self { r_s, c })
    }

    /// Geometric units (`c = 1`).
    pub fn with_radius(r_s: f64) -> Result<Self> {
        Self::new(r_s, 1.0)
    }

    /// Minkowski space in spherical coordinates.
    pub fn flat() -> Self {
        Self { r_s: 0.0, c: 1.0 }
    }

    /// Lapse factor `B(r) = 1 - r_s / r`.
    pub fn lapse(&self, r: f64) -> f64 {
        1.0 - self.r_s / r
    }

    /// `dB/dr = r_s / r²`.
    pub fn lapse_derivative(&self, r: f64) -> f64 {
        self.r_s / (r * r)
    }

    /// Rejects radii on or inside the horizon (and non-positive radii).
    pub fn check_exterior(&self, r: f64) -> Result<()> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidParams(format!("radius must be finite and > 0, got {r}")));
        }
        if r <= self.r_s {
            return Err(Error::HorizonViolation { r, r_s: self.r_s });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint {
    pub t: f64,
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

impl SpacetimePoint {
    pub fn new(t: f64, r: f64, theta: f64, phi: f64) -> Self {
        Self { t, r, theta, phi }
    }

    /// Point in the plane `θ = π/2`.
    pub fn equatorial(t: f64, r: f64, phi: f64) -> Self {
        Self::new(t, r, std::f64::consts::FRAC_PI_2, phi)
    }

    pub fn coords(&self) -> Vector4 {
        [self.t, self.r, self.theta, self.phi]
    }

    pub fn from_coords(x: Vector4) -> Self {
        Self::new(x[0], x[1], x[2], x[3])
    }

    fn validate(&self, params: &SchwarzschildParams) -> Result<()> {
        params.check_exterior(self.r)?;
        if !(self.theta > 0.0 && self.theta < std::f64::consts::PI) {
            return Err(Error::InvalidParams(format!(
                "polar angle must lie in (0, π), got {}",
                self.theta
            )));
        }
        Ok(())
    }
}

/// Static orthonormal frame `Θ^a = e^a_μ dx^μ` and its inverse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TetradFrame {
    /// `e[a][μ] = e^a_μ`.
    pub e: Matrix4,
    /// `e_inv[μ][a] = e^μ_a`.
    pub e_inv: Matrix4,
}

impl TetradFrame {
    /// Frame components `V^a = e^a_μ V^μ` of a coordinate vector.
    pub fn to_frame(&self, v: &Vector4) -> Vector4 {
        let mut out = [0.0; 4];
        for (a, row) in self.e.iter().enumerate() {
            out[a] = (0..4).map(|mu| row[mu] * v[mu]).sum();
        }
        out
    }

    /// Coordinate components `V^μ = e^μ_a V^a` of a frame vector.
    pub fn to_coords(&self, v: &Vector4) -> Vector4 {
        let mut out = [0.0; 4];
        for (mu, row) in self.e_inv.iter().enumerate() {
            out[mu] = (0..4).map(|a| row[a] * v[a]).sum();
        }
        out
    }

    /// `g_μν = e^a_μ e^b_ν η_ab`.
    pub fn reconstruct_metric(&self) -> Matrix4 {
        let mut g = [[0.0; 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                g[mu][nu] = (0..4).map(|a| ETA[a] * self.e[a][mu] * self.e[a][nu]).sum();
            }
        }
        g
    }
}

/// `Γ^ν_{μβ}` stored as `gamma[ν][μ][β]`, symmetric in the lower pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Christoffels {
    gamma: [[[f64; 4]; 4]; 4],
}

impl Christoffels {
    fn zero() -> Self {
        Self { gamma: [[[0.0; 4]; 4]; 4] }
    }

    fn set(&mut self, upper: usize, mu: usize, beta: usize, value: f64) {
        self.gamma[upper][mu][beta] = value;
        self.gamma[upper][beta][mu] = value;
    }

    /// `Γ^upper_{mu beta}`.
    pub fn get(&self, upper: usize, mu: usize, beta: usize) -> f64 {
        self.gamma[upper][mu][beta]
    }

    pub fn as_array(&self) -> &[[[f64; 4]; 4]; 4] {
        &self.gamma
    }
}

pub fn metric_at(params: &SchwarzschildParams, p: &SpacetimePoint) -> Result<Matrix4> {
    p.validate(params)?;
    let b = params.lapse(p.r);
    let sin = p.theta.sin();
    let mut g = [[0.0; 4]; 4];
    g[coord::T][coord::T] = -b * params.c * params.c;
    g[coord::R][coord::R] = 1.0 / b;
    g[coord::THETA][coord::THETA] = p.r * p.r;
    g[coord::PHI][coord::PHI] = p.r * p.r * sin * sin;
    Ok(g)
}

/// Inverse metric `g^μν` (diagonal).
pub fn inverse_metric_at(params: &SchwarzschildParams, p: &SpacetimePoint) -> Result<Matrix4> {
    let g = metric_at(params, p)?;
    let mut inv = [[0.0; 4]; 4];
    for mu in 0..4 {
        inv[mu][mu] = 1.0 / g[mu][mu];
    }
    Ok(inv)
}

pub fn tetrad_at(params: &SchwarzschildParams, p: &SpacetimePoint) -> Result<TetradFrame> {
    p.validate(params)?;
    let sqrt_b = params.lapse(p.r).sqrt();
    let r_sin = p.r * p.theta.sin();
    let mut e = [[0.0; 4]; 4];
    let mut e_inv = [[0.0; 4]; 4];
    let entries = [
        (frame::T, coord::T, params.c * sqrt_b),
        (frame::R, coord::R, 1.0 / sqrt_b),
        (frame::PHI, coord::PHI, r_sin),
        (frame::THETA, coord::THETA, p.r),
    ];
    for (a, mu, value) in entries {
        e[a][mu] = value;
        e_inv[mu][a] = 1.0 / value;
    }
    Ok(TetradFrame { e, e_inv })
}

/// `∂_μ e^ν_b` of the inverse tetrad, stored as `[μ][ν][b]`.
pub fn inverse_tetrad_gradient(
    params: &SchwarzschildParams,
    p: &SpacetimePoint,
) -> Result<[[[f64; 4]; 4]; 4]> {
    p.validate(params)?;
    let r = p.r;
    let b = params.lapse(r);
    let db = params.lapse_derivative(r);
    let (sin, cos) = p.theta.sin_cos();
    let mut d = [[[0.0; 4]; 4]; 4];
    d[coord::R][coord::T][frame::T] = -db / (2.0 * params.c * b * b.sqrt());
    d[coord::R][coord::R][frame::R] = db / (2.0 * b.sqrt());
    d[coord::R][coord::PHI][frame::PHI] = -1.0 / (r * r * sin);
    d[coord::THETA][coord::PHI][frame::PHI] = -cos / (r * sin * sin);
    d[coord::R][coord::THETA][frame::THETA] = -1.0 / (r * r);
    Ok(d)
}

/// Closed-form Christoffel symbols of the Schwarzschild metric.
pub fn christoffels_at(params: &SchwarzschildParams, p: &SpacetimePoint) -> Result<Christoffels> {
    use coord::{PHI, R, T, THETA};
    p.validate(params)?;
    let r = p.r;
    let c2 = params.c * params.c;
    let b = params.lapse(r);
    let db = params.lapse_derivative(r);
    let (sin, cos) = p.theta.sin_cos();

    let mut g = Christoffels::zero();
    g.set(T, T, R, db / (2.0 * b));
    g.set(R, T, T, c2 * b * db / 2.0);
    g.set(R, R, R, -db / (2.0 * b));
    g.set(R, THETA, THETA, -r * b);
    g.set(R, PHI, PHI, -r * b * sin * sin);
    g.set(THETA, R, THETA, 1.0 / r);
    g.set(THETA, PHI, PHI, -sin * cos);
    g.set(PHI, R, PHI, 1.0 / r);
    g.set(PHI, THETA, PHI, cos / sin);
    Ok(g)
}

/// Spin connection of the static tetrad.
///
/// Evaluates `ω_μ^a_b = e^a_ν (∂_μ e^ν_b + Γ^ν_{μλ} e^λ_b)`, the solution of
/// `dΘ^a + ω^a_b ∧ Θ^b = 0`, and stores it lowered with η.
pub fn spin_connection_at(
    params: &SchwarzschildParams,
    p: &SpacetimePoint,
) -> Result<ConnectionForm> {
    let tetrad = tetrad_at(params, p)?;
    let gamma = christoffels_at(params, p)?;
    let grad = inverse_tetrad_gradient(params, p)?;

    let mut mixed = [[[0.0; 4]; 4]; 4];
    for mu in 0..4 {
        for a in 0..4 {
            for b in 0..4 {
                let mut acc = 0.0;
                for nu in 0..4 {
                    let e_a_nu = tetrad.e[a][nu];
                    if e_a_nu == 0.0 {
                        continue;
                    }
                    let mut inner = grad[mu][nu][b];
                    for lambda in 0..4 {
                        inner += gamma.get(nu, mu, lambda) * tetrad.e_inv[lambda][b];
                    }
                    acc += e_a_nu * inner;
                }
                mixed[mu][a][b] = acc;
            }
        }
    }
    Ok(ConnectionForm::from_mixed(mixed, *p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn max_diff(a: &Matrix4, b: &Matrix4) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((a[i][j] - b[i][j]).abs());
            }
        }
        m
    }

    #[test]
    fn flat_metric_is_spherical() {
        let g = metric_at(&SchwarzschildParams::flat(), &SpacetimePoint::equatorial(0.0, 2.0, 0.0)).unwrap();
        assert_eq!(g[0][0], -1.0);
        assert_eq!(g[1][1], 1.0);
        assert_eq!(g[2][2], 4.0);
        assert_eq!(g[3][3], 4.0);
    }

    #[test]
    fn metric_at_two_schwarzschild_radii() {
        let rs = 0.75;
        let params = SchwarzschildParams::with_radius(rs).unwrap();
        let g = metric_at(&params, &SpacetimePoint::equatorial(0.0, 2.0 * rs, 0.0)).unwrap();
        assert!((g[0][0] + 0.5).abs() < 1e-15);
        assert!((g[1][1] - 2.0).abs() < 1e-15);
        assert!((g[2][2] - 4.0 * rs * rs).abs() < 1e-15);
        assert!((g[3][3] - 4.0 * rs * rs).abs() < 1e-15);
    }

    #[test]
    fn horizon_and_negative_radius_rejected() {
        let params = SchwarzschildParams::with_radius(1.0).unwrap();
        let at = |r| SpacetimePoint::equatorial(0.0, r, 0.0);
        assert_eq!(
            metric_at(&params, &at(1.0)),
            Err(Error::HorizonViolation { r: 1.0, r_s: 1.0 })
        );
        assert!(matches!(metric_at(&params, &at(0.5)), Err(Error::HorizonViolation { .. })));
        assert!(matches!(
            metric_at(&SchwarzschildParams::flat(), &at(0.0)),
            Err(Error::InvalidParams(_))
        ));
        assert!(tetrad_at(&params, &at(0.9)).is_err());
        assert!(christoffels_at(&params, &at(1.0)).is_err());
        assert!(spin_connection_at(&params, &at(1.0)).is_err());
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(SchwarzschildParams::new(-1.0, 1.0).is_err());
        assert!(SchwarzschildParams::new(1.0, 0.0).is_err());
        assert!(SchwarzschildParams::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn tetrad_reconstructs_metric() {
        for &rs in &[0.0, 1.0, 2.5] {
            let params = SchwarzschildParams::new(rs, 1.3).unwrap();
            for &ratio in &[1.1, 1.5, 2.0, 3.0, 10.0] {
                for &theta in &[FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4] {
                    let r = if rs == 0.0 { ratio } else { ratio * rs };
                    let p = SpacetimePoint::new(0.3, r, theta, 1.1);
                    let tetrad = tetrad_at(&params, &p).unwrap();
                    let g = metric_at(&params, &p).unwrap();
                    assert!(max_diff(&tetrad.reconstruct_metric(), &g) <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn tetrad_inverse_is_exact() {
        let params = SchwarzschildParams::with_radius(1.0).unwrap();
        let tetrad = tetrad_at(&params, &SpacetimePoint::new(0.0, 3.7, 1.0, 0.0)).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let prod: f64 = (0..4).map(|mu| tetrad.e[a][mu] * tetrad.e_inv[mu][b]).sum();
                let expected = if a == b { 1.0 } else { 0.0 };
                assert!((prod - expected).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn flat_tetrad_is_identity_in_frame_order() {
        let tetrad = tetrad_at(&SchwarzschildParams::flat(), &SpacetimePoint::equatorial(0.0, 1.0, 0.0)).unwrap();
        assert_eq!(tetrad.e[frame::T][coord::T], 1.0);
        assert_eq!(tetrad.e[frame::R][coord::R], 1.0);
        assert_eq!(tetrad.e[frame::PHI][coord::PHI], 1.0);
        assert_eq!(tetrad.e[frame::THETA][coord::THETA], 1.0);
    }

    #[test]
    fn tetrad_at_three_schwarzschild_radii() {
        let params = SchwarzschildParams::with_radius(1.0).unwrap();
        let tetrad = tetrad_at(&params, &SpacetimePoint::equatorial(0.0, 3.0, 0.0)).unwrap();
        assert!((tetrad.e[frame::T][coord::T] - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((tetrad.e[frame::R][coord::R] - 1.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn christoffel_closed_forms() {
        use coord::{PHI, R, T};
        let flat = christoffels_at(&SchwarzschildParams::flat(), &SpacetimePoint::equatorial(0.0, 2.0, 0.0)).unwrap();
        assert_eq!(flat.get(R, PHI, PHI), -2.0);

        let params = SchwarzschildParams::with_radius(1.0).unwrap();
        let r = 4.0;
        let g = christoffels_at(&params, &SpacetimePoint::equatorial(0.0, r, 0.0)).unwrap();
        assert!((g.get(R, PHI, PHI) + (r - 1.0)).abs() < 1e-14);
        let b = params.lapse(r);
        assert!((g.get(T, T, R) - 1.0 / (2.0 * r * r * b)).abs() < 1e-15);
    }

    #[test]
    fn christoffels_symmetric_in_lower_indices() {
        let params = SchwarzschildParams::with_radius(1.0).unwrap();
        let g = christoffels_at(&params, &SpacetimePoint::new(0.0, 2.2, 0.7, 0.0)).unwrap();
        for nu in 0..4 {
            for mu in 0..4 {
                for beta in 0..4 {
                    assert_eq!(g.get(nu, mu, beta), g.get(nu, beta, mu));
                }
            }
        }
    }

    #[test]
    fn spin_connection_values() {
        use frame::{PHI as FPHI, R as FR, T as FT, THETA as FTHETA};
        let params = SchwarzschildParams::with_radius(1.0).unwrap();
        let r = 2.5;
        let p = SpacetimePoint::equatorial(0.0, r, 0.0);
        let omega = spin_connection_at(&params, &p).unwrap();
        assert!((omega.mixed(coord::T, FT, FR) - 1.0 / (2.0 * r * r)).abs() < 1e-15);
        assert!(omega.mixed(coord::PHI, FTHETA, FPHI).abs() < 1e-15);

        let flat = spin_connection_at(&SchwarzschildParams::flat(), &p).unwrap();
        assert!((flat.mixed(coord::PHI, FR, FPHI) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn spin_connection_is_antisymmetric() {
        let params = SchwarzschildParams::new(1.0, 2.0).unwrap();
        let omega = spin_connection_at(&params, &SpacetimePoint::new(0.0, 1.7, 0.4, 2.0)).unwrap();
        for mu in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    assert_eq!(omega.lowered(mu, a, b), -omega.lowered(mu, b, a));
                }
            }
        }
    }
}
