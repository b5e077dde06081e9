//! Circular equatorial orbits: 4-velocity, 4-acceleration, proper time and
//! the force-free (geodesic) rapidity.

use crate::error::{Error, Result};
use crate::geometry::{coord, SchwarzschildParams, SpacetimePoint, Vector4};

/// Sense of motion along the azimuth, i.e. the sign of `dφ/dτ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Increasing,
    Decreasing,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Increasing => 1.0,
            Orientation::Decreasing => -1.0,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Increasing => Orientation::Decreasing,
            Orientation::Decreasing => Orientation::Increasing,
        }
    }
}

/// A circular orbit at fixed `r` in the plane `θ = π/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularWorldline {
    pub r: f64,
    /// Rapidity `ξ >= 0`, with `tanh ξ = v / c` measured by static observers.
    pub rapidity: f64,
    /// Azimuth swept, `Φ >= 0`.
    pub azimuth: f64,
    pub orientation: Orientation,
}

impl CircularWorldline {
    pub fn new(r: f64, rapidity: f64, azimuth: f64, orientation: Orientation) -> Result<Self> {
        if !(rapidity.is_finite() && rapidity >= 0.0) {
            return Err(Error::InvalidParams(format!("rapidity must be finite and >= 0, got {rapidity}")));
        }
        if !(azimuth.is_finite() && azimuth >= 0.0) {
            return Err(Error::InvalidParams(format!("azimuth must be finite and >= 0, got {azimuth}")));
        }
        if !r.is_finite() {
            return Err(Error::InvalidParams(format!("radius must be finite, got {r}")));
        }
        Ok(Self { r, rapidity, azimuth, orientation })
    }

    pub fn with_orientation(self, orientation: Orientation) -> Self {
        Self { orientation, ..self }
    }

    pub fn with_azimuth(self, azimuth: f64) -> Self {
        Self { azimuth, ..self }
    }

    /// Orbital speed `c tanh ξ`.
    pub fn speed(&self, params: &SchwarzschildParams) -> f64 {
        params.c * self.rapidity.tanh()
    }

    /// Point on the orbit at coordinate time `t` and azimuth `phi`.
    pub fn point(&self, t: f64, phi: f64) -> SpacetimePoint {
        SpacetimePoint::equatorial(t, self.r, phi)
    }

    /// `dt/dφ` along the orbit (taken positive), `None` for a static worldline.
    pub fn time_per_azimuth(&self, params: &SchwarzschildParams) -> Option<f64> {
        if self.rapidity == 0.0 {
            return None;
        }
        let sqrt_b = params.lapse(self.r).sqrt();
        Some(self.r / (params.c * sqrt_b * self.rapidity.tanh()))
    }
}

/// Kinematic state on a circular orbit (constant along it).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kinematics {
    /// Coordinate 4-velocity `dx^μ/dτ`.
    pub velocity: Vector4,
    /// Coordinate 4-acceleration; only the radial component is nonzero.
    pub acceleration: Vector4,
    proper_time: Option<f64>,
}

impl Kinematics {
    /// Radial component `a^r`.
    pub fn radial_acceleration(&self) -> f64 {
        self.acceleration[coord::R]
    }

    /// Proper time needed to sweep the orbit's azimuth.
    pub fn proper_time(&self) -> Result<f64> {
        self.proper_time.ok_or(Error::StaticProperTime)
    }
}

pub fn circular_kinematics(params: &SchwarzschildParams, w: &CircularWorldline) -> Result<Kinematics> {
    params.check_exterior(w.r)?;
    let c = params.c;
    let r = w.r;
    let b = params.lapse(r);
    let (sinh, cosh) = (w.rapidity.sinh(), w.rapidity.cosh());

    let mut velocity = [0.0; 4];
    velocity[coord::T] = cosh / b.sqrt();
    velocity[coord::PHI] = w.orientation.sign() * c / r * sinh;

    // sinh²ξ coth²ξ = cosh²ξ removes the ξ = 0 singularity.
    let mut acceleration = [0.0; 4];
    acceleration[coord::R] =
        -c * c * (sinh * sinh * b / r - params.r_s / (2.0 * r * r) * cosh * cosh);

    let proper_time = (w.rapidity > 0.0).then(|| r * w.azimuth / (c * sinh));
    Ok(Kinematics { velocity, acceleration, proper_time })
}

/// Rapidity of the force-free circular orbit, `tanh²ξ = r_s / (2 r B(r))`.
pub fn geodesic_rapidity(params: &SchwarzschildParams, r: f64) -> Result<f64> {
    params.check_exterior(r)?;
    let limit = 1.5 * params.r_s;
    if r <= limit {
        return Err(Error::NoGeodesic { r, limit });
    }
    let tanh2 = params.r_s / (2.0 * r * params.lapse(r));
    if tanh2 >= 1.0 {
        return Err(Error::NoGeodesic { r, limit });
    }
    Ok(tanh2.sqrt().atanh())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::metric_at;

    fn dot(g: &[[f64; 4]; 4], u: &Vector4, v: &Vector4) -> f64 {
        (0..4).map(|i| (0..4).map(|j| g[i][j] * u[i] * v[j]).sum::<f64>()).sum()
    }

    fn orbit(r: f64, xi: f64) -> CircularWorldline {
        CircularWorldline::new(r, xi, 1.0, Orientation::Increasing).unwrap()
    }

    #[test]
    fn static_observer() {
        let params = SchwarzschildParams::new(1.0, 2.0).unwrap();
        let r = 3.0;
        let kin = circular_kinematics(&params, &orbit(r, 0.0)).unwrap();
        let b = params.lapse(r);
        assert!((kin.velocity[coord::T] - 1.0 / b.sqrt()).abs() < 1e-15);
        assert_eq!(kin.velocity[coord::PHI], 0.0);
        assert!((kin.radial_acceleration() - 4.0 / (2.0 * r * r)).abs() < 1e-15);
        assert_eq!(kin.proper_time(), Err(Error::StaticProperTime));
    }

    #[test]
    fn flat_centripetal_acceleration() {
        let xi: f64 = 0.8;
        let kin = circular_kinematics(&SchwarzschildParams::flat(), &orbit(2.0, xi)).unwrap();
        assert!((kin.radial_acceleration() + xi.sinh().powi(2) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn velocity_normalized_and_orthogonal() {
        let params = SchwarzschildParams::with_radius(1.0).unwrap();
        let w = orbit(3.0, 0.3);
        let kin = circular_kinematics(&params, &w).unwrap();
        let g = metric_at(&params, &w.point(0.0, 0.0)).unwrap();
        assert!((dot(&g, &kin.velocity, &kin.velocity) + 1.0).abs() < 1e-12);
        assert!(dot(&g, &kin.acceleration, &kin.velocity).abs() < 1e-12);
    }

    #[test]
    fn proper_time_for_moving_orbit() {
        let params = SchwarzschildParams::new(1.0, 3.0).unwrap();
        let w = CircularWorldline::new(4.0, 0.5, 2.0, Orientation::Decreasing).unwrap();
        let tau = circular_kinematics(&params, &w).unwrap().proper_time().unwrap();
        assert!((tau - 4.0 * 2.0 / (3.0 * 0.5f64.sinh())).abs() < 1e-14);
    }

    #[test]
    fn geodesic_rapidity_values() {
        let params = SchwarzschildParams::with_radius(1.0).unwrap();
        let xi = geodesic_rapidity(&params, 3.0).unwrap();
        assert!((xi.tanh() - 0.5).abs() < 1e-12);

        let r = 1e6;
        let xi = geodesic_rapidity(&params, r).unwrap();
        let newtonian = 1.0 / (2.0 * r);
        assert!((xi.tanh().powi(2) / newtonian - 1.0).abs() < 1e-5);

        assert!(matches!(geodesic_rapidity(&params, 1.4), Err(Error::NoGeodesic { .. })));
        assert!(matches!(geodesic_rapidity(&params, 1.5), Err(Error::NoGeodesic { .. })));
        assert!(matches!(geodesic_rapidity(&params, 0.9), Err(Error::HorizonViolation { .. })));
    }

    #[test]
    fn geodesic_orbit_is_force_free() {
        let params = SchwarzschildParams::new(2.0, 1.7).unwrap();
        for ratio in [1.6, 2.0, 3.0, 10.0, 100.0] {
            let r = ratio * params.r_s;
            let xi = geodesic_rapidity(&params, r).unwrap();
            let kin = circular_kinematics(&params, &orbit(r, xi)).unwrap();
            let scale = params.c * params.c / r;
            assert!(kin.radial_acceleration().abs() <= 1e-10 * scale, "r/r_s = {ratio}");
        }
    }

    #[test]
    fn invalid_worldlines_rejected() {
        assert!(CircularWorldline::new(2.0, -0.1, 1.0, Orientation::Increasing).is_err());
        assert!(CircularWorldline::new(2.0, 0.1, -1.0, Orientation::Increasing).is_err());
        let params = SchwarzschildParams::with_radius(1.0).unwrap();
        assert!(matches!(
            circular_kinematics(&params, &orbit(1.0, 0.2)),
            Err(Error::HorizonViolation { .. })
        ));
    }
}
