//! Connection 1-forms in the static frame: the spin connection `ω`, the
//! acceleration form `τ` and their sum `Ω = ω + τ` that generates
//! Fermi-Walker transport.
//!
//! Coefficients are stored fully lowered, `Ω_{μab} = η_ac Ω_μ^c_b`, and
//! antisymmetric in `(a, b)`. Mixed components are recovered on demand.

use std::ops::Add;

use crate::error::Result;
use crate::geometry::{coord, frame, tetrad_at, SchwarzschildParams, SpacetimePoint, Vector4, ETA};
use crate::kinematics::Kinematics;

pub type Coefficients = [[[f64; 4]; 4]; 4];

/// Connection coefficients `Ω_{μab}` at a point (`μ` coordinate, `a, b` frame).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionForm {
    coefficients: Coefficients,
    pub point: SpacetimePoint,
}

impl ConnectionForm {
    /// Builds from mixed components `Ω_μ^a_b`, lowering with η and keeping
    /// the part antisymmetric in `(a, b)`.
    pub fn from_mixed(mixed: Coefficients, point: SpacetimePoint) -> Self {
        let mut coefficients = [[[0.0; 4]; 4]; 4];
        for mu in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    let ab = ETA[a] * mixed[mu][a][b];
                    let ba = ETA[b] * mixed[mu][b][a];
                    coefficients[mu][a][b] = 0.5 * (ab - ba);
                }
            }
        }
        Self { coefficients, point }
    }

    /// Builds from lowered components, which must already be antisymmetric.
    fn from_lowered(coefficients: Coefficients, point: SpacetimePoint) -> Self {
        Self { coefficients, point }
    }

    /// `Ω_{μab}`.
    pub fn lowered(&self, mu: usize, a: usize, b: usize) -> f64 {
        self.coefficients[mu][a][b]
    }

    /// `Ω_μ^a_b = η^aa Ω_{μab}`.
    pub fn mixed(&self, mu: usize, a: usize, b: usize) -> f64 {
        ETA[a] * self.coefficients[mu][a][b]
    }

    pub fn coefficients(&self) -> &Coefficients {
        &self.coefficients
    }

    /// Contraction `Ω_{μab} dx^μ` along a coordinate displacement.
    pub fn along(&self, dx: &Vector4) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for (mu, slab) in self.coefficients.iter().enumerate() {
            if dx[mu] == 0.0 {
                continue;
            }
            for a in 0..4 {
                for b in 0..4 {
                    out[a][b] += slab[a][b] * dx[mu];
                }
            }
        }
        out
    }

    /// Restriction to the equatorial `(t, r, φ)` problem: drops the `dθ`
    /// direction and every component carrying the frame index `θ`.
    pub fn equatorial(&self) -> Self {
        let mut coefficients = self.coefficients;
        for (mu, slab) in coefficients.iter_mut().enumerate() {
            for (a, row) in slab.iter_mut().enumerate() {
                for (b, value) in row.iter_mut().enumerate() {
                    if mu == coord::THETA || a == frame::THETA || b == frame::THETA {
                        *value = 0.0;
                    }
                }
            }
        }
        Self { coefficients, point: self.point }
    }
}

impl Add for ConnectionForm {
    type Output = ConnectionForm;

    fn add(self, rhs: ConnectionForm) -> ConnectionForm {
        let mut coefficients = self.coefficients;
        for mu in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    coefficients[mu][a][b] += rhs.coefficients[mu][a][b];
                }
            }
        }
        ConnectionForm { coefficients, point: self.point }
    }
}

/// Acceleration form
/// `τ_{μab} = (a^ν / c²) (e_{aν} e_{bμ} - e_{aμ} e_{bν})`, with `e_{aμ} = η_ab e^b_μ`.
pub fn tau_form_at(
    params: &SchwarzschildParams,
    p: &SpacetimePoint,
    kin: &Kinematics,
) -> Result<ConnectionForm> {
    let tetrad = tetrad_at(params, p)?;
    let c2 = params.c * params.c;
    let lowered = |a: usize, mu: usize| ETA[a] * tetrad.e[a][mu];

    let mut coefficients = [[[0.0; 4]; 4]; 4];
    for (mu, slab) in coefficients.iter_mut().enumerate() {
        for (a, row) in slab.iter_mut().enumerate() {
            for (b, value) in row.iter_mut().enumerate() {
                let mut acc = 0.0;
                for (nu, &acc_nu) in kin.acceleration.iter().enumerate() {
                    if acc_nu == 0.0 {
                        continue;
                    }
                    acc += acc_nu * (lowered(a, nu) * lowered(b, mu) - lowered(a, mu) * lowered(b, nu));
                }
                *value = acc / c2;
            }
        }
    }
    Ok(ConnectionForm::from_lowered(coefficients, *p))
}

/// Fermi-Walker connection `Ω = ω + τ`.
pub fn total_connection_at(
    params: &SchwarzschildParams,
    p: &SpacetimePoint,
    kin: &Kinematics,
) -> Result<ConnectionForm> {
    let omega = crate::geometry::spin_connection_at(params, p)?;
    let tau = tau_form_at(params, p, kin)?;
    Ok(omega + tau)
}
