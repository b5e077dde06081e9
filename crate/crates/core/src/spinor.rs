//! Fermi-Walker transport of spinors along a circular orbit.
//!
//! The `2+1` Clifford algebra is realized by `γ⁰ = σ³`, `γ¹ = iσ¹`,
//! `γ² = iσ²` with Lorentz generators `Σ^{ab} = (i/2)[γ^a, γ^b]`. Along the
//! orbit the transport operator is the ordered exponential of
//! `(i/4) Ω_{μab} Σ^{ab} dx^μ`. Because the Fermi-Walker connection is constant
//! on the orbit it collapses to `Ξ = exp(iΓ/2) = cos(α/2) + i (Γ/α) sin(α/2)`,
//! where `α` is the Wigner rotation angle.
//!
//! Two routes are provided and checked against each other:
//! [`closed_form_operator`] evaluates the closed form from
//! [`transport_generator`], and [`ordered_exponential`] multiplies per-step
//! exponentials of the connection assembled by [`crate::connection`].
//! [`fermi_walker_vector_transport`] integrates the classical vector law and
//! recovers the same angle as a gyroscope precession.

use num_complex::Complex64;

use crate::connection::total_connection_at;
use crate::error::{Error, Result};
use crate::geometry::{christoffels_at, coord, frame, metric_at, tetrad_at, SchwarzschildParams, Vector4};
use crate::kinematics::{circular_kinematics, CircularWorldline, Orientation};
use crate::matrix::Mat2;

/// Below this `|α|` the closed form switches to its series.
pub const SMALL_ANGLE: f64 = 1e-8;

/// Orientation of the orbit whose transport operator is `exp(+iΓ/2)` with
/// `Γ = [[-η₂, -η₁], [η₁, η₂]]`.
pub const REFERENCE_ORIENTATION: Orientation = Orientation::Decreasing;

/// Dirac matrices of the `2+1` reduction and their commutators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinGeneratorSet {
    pub gamma: [Mat2; 3],
    /// `sigma[a][b] = Σ^{ab}`.
    pub sigma: [[Mat2; 3]; 3],
}

impl SpinGeneratorSet {
    /// Diagonal metric of the Clifford algebra, read off from `(γ^a)² = g^{aa} I`.
    ///
    /// For these matrices it is `diag(+1, -1, -1)`, the negative of the frame
    /// metric restricted to `(t, r, φ)`.
    pub fn clifford_metric(&self) -> [f64; 3] {
        let mut g = [0.0; 3];
        for (a, gamma) in self.gamma.iter().enumerate() {
            g[a] = (*gamma * *gamma).0[0][0].re;
        }
        g
    }

    /// `(i/4) Ω_{ab} Σ^{ab}` for a frame-index 2-form given in mixed form
    /// `Ω^a_b`, lowered with the Clifford metric.
    ///
    /// With this lowering the spinor current `ψ̄ γ^a ψ` is carried exactly like
    /// a Fermi-Walker transported vector.
    pub fn spinor_image(&self, mixed: &[[f64; 3]; 3]) -> Mat2 {
        let metric = self.clifford_metric();
        let mut acc = Mat2::ZERO;
        for a in 0..3 {
            for b in 0..3 {
                let coefficient = metric[a] * mixed[a][b];
                if coefficient != 0.0 {
                    acc = acc + self.sigma[a][b].scale_re(coefficient);
                }
            }
        }
        acc.scale(Complex64::new(0.0, 0.25))
    }
}

pub fn spin_generators() -> SpinGeneratorSet {
    let i = Complex64::new(0.0, 1.0);
    let gamma = [Mat2::sigma_z(), Mat2::sigma_x().scale(i), Mat2::sigma_y().scale(i)];
    let mut sigma = [[Mat2::ZERO; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            sigma[a][b] = gamma[a].commutator(gamma[b]).scale(Complex64::new(0.0, 0.5));
        }
    }
    SpinGeneratorSet { gamma, sigma }
}

/// Generator `Γ` of the transport operator for one orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransportGenerator {
    pub matrix: Mat2,
    /// Boost weight `η₁ = β Φ sinh ξ cosh ξ √B`.
    pub eta1: f64,
    /// Rotation weight `η₂ = β Φ cosh² ξ √B`.
    pub eta2: f64,
    /// Signed Wigner angle; `α² = η₂² - η₁²`.
    pub alpha: f64,
    /// `β = 1 - r_s / (2 r B)`.
    pub beta: f64,
    pub rapidity: f64,
}

impl TransportGenerator {
    /// `Γ/α`, undefined when `α = 0`.
    pub fn direction(&self) -> Option<Mat2> {
        (self.alpha != 0.0).then(|| self.matrix.scale_re(1.0 / self.alpha))
    }

    /// Generator of the inverse transport, `Γ → -Γ`.
    pub fn inverse(&self) -> Self {
        Self {
            matrix: -self.matrix,
            eta1: -self.eta1,
            eta2: -self.eta2,
            ..*self
        }
    }
}

/// `2×2` spin transformation accumulated along an orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransportOperator {
    pub matrix: Mat2,
    /// Rotation angle carried by the operator. Signed for the closed form;
    /// the ordered product reports the magnitude it tracked.
    pub alpha: f64,
    pub rapidity: f64,
}

impl TransportOperator {
    /// `max |Ξ†Ξ - I|`.
    pub fn unitarity_defect(&self) -> f64 {
        (self.matrix.adjoint() * self.matrix - Mat2::IDENTITY).max_abs()
    }
}

/// Wigner rotation angle `α = Φ √B cosh ξ [1 - r_s / (2 r B)]`.
///
/// Negative for `r < 1.5 r_s`, where the precession reverses.
pub fn wigner_angle(params: &SchwarzschildParams, w: &CircularWorldline) -> Result<f64> {
    params.check_exterior(w.r)?;
    let b = params.lapse(w.r);
    let beta = 1.0 - params.r_s / (2.0 * w.r * b);
    Ok(w.azimuth * b.sqrt() * w.rapidity.cosh() * beta)
}

/// Assembles `Γ` for the orbit `w`.
///
/// For [`REFERENCE_ORIENTATION`] this is `[[-η₂, -η₁], [η₁, η₂]]`, so that
/// `Γ/α = -cosh ξ σ³ - i sinh ξ σ²`. Reversing the orbit reverses the
/// rotation part only, since the radial boost does not depend on the sense of
/// motion: `Γ/α = +cosh ξ σ³ - i sinh ξ σ²`.
pub fn transport_generator(
    params: &SchwarzschildParams,
    w: &CircularWorldline,
) -> Result<TransportGenerator> {
    params.check_exterior(w.r)?;
    let b = params.lapse(w.r);
    let sqrt_b = b.sqrt();
    let beta = 1.0 - params.r_s / (2.0 * w.r * b);
    let (sinh, cosh) = (w.rapidity.sinh(), w.rapidity.cosh());
    let eta1 = beta * w.azimuth * sinh * cosh * sqrt_b;
    let eta2 = beta * w.azimuth * cosh * cosh * sqrt_b;
    let rotation_sign = if w.orientation == REFERENCE_ORIENTATION { 1.0 } else { -1.0 };
    let matrix = Mat2::real(-rotation_sign * eta2, -eta1, eta1, rotation_sign * eta2);
    Ok(TransportGenerator {
        matrix,
        eta1,
        eta2,
        alpha: wigner_angle(params, w)?,
        beta,
        rapidity: w.rapidity,
    })
}

/// `Ξ = cos(α/2) I + i (Γ/α) sin(α/2)`.
pub fn closed_form_operator(gen: &TransportGenerator) -> TransportOperator {
    let i = Complex64::new(0.0, 1.0);
    let alpha = gen.alpha;
    let matrix = if alpha.abs() < SMALL_ANGLE {
        // I + iΓ/2 + (iΓ/2)²/2 with Γ² = α² I
        Mat2::IDENTITY + gen.matrix.scale(i * 0.5) - Mat2::IDENTITY.scale_re(alpha * alpha / 8.0)
    } else {
        let half = 0.5 * alpha;
        Mat2::IDENTITY.scale_re(half.cos()) + gen.matrix.scale(i * (half.sin() / alpha))
    };
    TransportOperator { matrix, alpha, rapidity: gen.rapidity }
}

/// Path-ordered product of per-step exponentials along the orbit.
///
/// The orbit is parameterized by the swept azimuth with
/// `dt/dφ = r / (c √B tanh ξ)`. Each of the `n_steps` segments contributes
/// `exp[(i/4) Ω_{μab} Σ^{ab} Δx^μ]` with `Ω` evaluated at the segment midpoint,
/// and later segments multiply from the left.
///
/// For a static worldline (`ξ = 0`) the time leg is omitted: there the
/// Fermi-Walker connection has no time component, and the coordinate time per
/// unit azimuth diverges only as `1/ξ` while that component vanishes as `ξ²`.
pub fn ordered_exponential(
    params: &SchwarzschildParams,
    w: &CircularWorldline,
    n_steps: usize,
) -> Result<TransportOperator> {
    if n_steps == 0 {
        return Err(Error::NonPositiveSteps);
    }
    let kin = circular_kinematics(params, w)?;
    let generators = spin_generators();
    let d_phi = w.azimuth / n_steps as f64;
    let d_t = w.time_per_azimuth(params).map_or(0.0, |rate| rate * d_phi);
    let sign = w.orientation.sign();
    let mut dx = [0.0; 4];
    dx[coord::T] = d_t;
    dx[coord::PHI] = sign * d_phi;

    let mut product = Mat2::IDENTITY;
    let mut tracker = AngleTracker::default();
    for k in 0..n_steps {
        let s = k as f64 + 0.5;
        let p = w.point(s * d_t, sign * s * d_phi);
        let omega = total_connection_at(params, &p, &kin)?.equatorial();
        let contracted = omega.along(&dx);
        let mut mixed = [[0.0; 3]; 3];
        for a in 0..3 {
            for b in 0..3 {
                mixed[a][b] = crate::geometry::ETA[a] * contracted[a][b];
            }
        }
        let step = generators.spinor_image(&mixed).exp();
        product = step * product;
        tracker.observe(&product);
    }
    Ok(TransportOperator {
        matrix: product,
        alpha: tracker.angle(),
        rapidity: w.rapidity,
    })
}

/// Follows the rotation angle of a growing product `Ξ_k = cos(θ_k/2) + N sin(θ_k/2)`
/// with `N² = -I` fixed, unwrapping `θ_k/2` across branch cuts.
#[derive(Debug, Default)]
struct AngleTracker {
    axis: Option<Mat2>,
    half_angle: f64,
}

impl AngleTracker {
    fn observe(&mut self, xi: &Mat2) {
        let cos_half = 0.5 * xi.trace().re;
        let traceless = *xi - Mat2::IDENTITY.scale_re(cos_half);
        let axis = match self.axis {
            Some(axis) => axis,
            None => {
                // N² = -I fixes the normalization of the first traceless part.
                let sin_half = (-(traceless * traceless).0[0][0].re).max(0.0).sqrt();
                if sin_half < 1e-300 {
                    return;
                }
                let axis = traceless.scale_re(1.0 / sin_half);
                self.axis = Some(axis);
                axis
            }
        };
        let sin_half = axis.inner(&traceless).re / axis.inner(&axis).re;
        let current = sin_half.atan2(cos_half);
        let previous = self.half_angle;
        let tau = std::f64::consts::TAU;
        let delta = (current - previous).rem_euclid(tau);
        let delta = if delta > std::f64::consts::PI { delta - tau } else { delta };
        self.half_angle = previous + delta;
    }

    fn angle(&self) -> f64 {
        2.0 * self.half_angle
    }
}

/// Result of transporting a vector along the orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorTransport {
    /// Final coordinate components.
    pub vector: Vector4,
    /// Angle by which the vector turned, against the sense of motion, relative
    /// to the comoving radial/tangential axes.
    pub rotation_angle: f64,
}

/// Integrates `DV/dτ = (1/c²)(U a·V - a U·V)` along the orbit with classical
/// RK4 in the swept azimuth.
pub fn fermi_walker_vector_transport(
    params: &SchwarzschildParams,
    w: &CircularWorldline,
    v0: Vector4,
    n_steps: usize,
) -> Result<VectorTransport> {
    if n_steps == 0 {
        return Err(Error::NonPositiveSteps);
    }
    let kin = circular_kinematics(params, w)?;
    let start = w.point(0.0, 0.0);
    let g = metric_at(params, &start)?;
    let dot = |u: &Vector4, v: &Vector4| -> f64 { (0..4).map(|i| g[i][i] * u[i] * v[i]).sum() };

    let u = kin.velocity;
    let residual = dot(&v0, &u).abs();
    if residual > 1e-9 {
        return Err(Error::NonOrthogonalSeed { residual });
    }
    if w.rapidity == 0.0 {
        return Err(Error::StaticWorldline);
    }
    if w.azimuth == 0.0 {
        return Ok(VectorTransport { vector: v0, rotation_angle: 0.0 });
    }

    let gamma = christoffels_at(params, &start)?;
    let c2 = params.c * params.c;
    let a = kin.acceleration;
    let mut a_low = [0.0; 4];
    let mut u_low = [0.0; 4];
    for mu in 0..4 {
        a_low[mu] = g[mu][mu] * a[mu];
        u_low[mu] = g[mu][mu] * u[mu];
    }
    // dV^μ/dφ = M^μ_ν V^ν; the coefficients are constant on the orbit.
    let tau_per_phi = w.r / (params.c * w.rapidity.sinh());
    let mut m = [[0.0; 4]; 4];
    for mu in 0..4 {
        for nu in 0..4 {
            let parallel: f64 = -(0..4).map(|alpha| gamma.get(mu, alpha, nu) * u[alpha]).sum::<f64>();
            let fermi = (u[mu] * a_low[nu] - a[mu] * u_low[nu]) / c2;
            m[mu][nu] = tau_per_phi * (parallel + fermi);
        }
    }
    let apply = |v: &Vector4| -> Vector4 {
        let mut out = [0.0; 4];
        for mu in 0..4 {
            out[mu] = (0..4).map(|nu| m[mu][nu] * v[nu]).sum();
        }
        out
    };
    let axpy = |v: &Vector4, k: &Vector4, h: f64| -> Vector4 {
        let mut out = *v;
        for i in 0..4 {
            out[i] += h * k[i];
        }
        out
    };

    let (radial, tangential) = comoving_axes(params, w)?;
    let in_plane_angle = |v: &Vector4| dot(v, &tangential).atan2(dot(v, &radial));

    let h = w.azimuth / n_steps as f64;
    let mut v = v0;
    let initial = in_plane_angle(&v);
    let mut previous = initial;
    let mut turned = 0.0;
    for _ in 0..n_steps {
        let k1 = apply(&v);
        let k2 = apply(&axpy(&v, &k1, 0.5 * h));
        let k3 = apply(&axpy(&v, &k2, 0.5 * h));
        let k4 = apply(&axpy(&v, &k3, h));
        for i in 0..4 {
            v[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        let current = in_plane_angle(&v);
        let tau = std::f64::consts::TAU;
        let delta = (current - previous).rem_euclid(tau);
        turned += if delta > std::f64::consts::PI { delta - tau } else { delta };
        previous = current;
    }
    Ok(VectorTransport { vector: v, rotation_angle: -turned })
}

/// Radial and forward spatial axes of the comoving observer, in coordinate
/// components (constant along the orbit).
fn comoving_axes(params: &SchwarzschildParams, w: &CircularWorldline) -> Result<(Vector4, Vector4)> {
    let tetrad = tetrad_at(params, &w.point(0.0, 0.0))?;
    let mut radial = [0.0; 4];
    radial[frame::R] = 1.0;
    let mut forward = [0.0; 4];
    forward[frame::T] = w.rapidity.sinh();
    forward[frame::PHI] = w.orientation.sign() * w.rapidity.cosh();
    Ok((tetrad.to_coords(&radial), tetrad.to_coords(&forward)))
}
