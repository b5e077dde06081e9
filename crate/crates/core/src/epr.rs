//! EPR pairs carried along counter-propagating circular orbits: Bell states,
//! two-particle transport, CHSH values, the measurement-axis correction and
//! the slow-motion limit.
//!
//! Two-qubit amplitudes are ordered `(↑↑, ↑↓, ↓↑, ↓↓)`; the first factor is the
//! particle labelled `p₊`, which travels along [`REFERENCE_ORIENTATION`].

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::SchwarzschildParams;
use crate::kinematics::CircularWorldline;
use crate::matrix::Mat2;
use crate::spinor::{closed_form_operator, transport_generator, wigner_angle, REFERENCE_ORIENTATION};

/// Tsirelson bound `2√2`.
pub const TSIRELSON: f64 = 2.0 * SQRT_2;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PsiMinus,
    PsiPlus,
    PhiMinus,
    PhiPlus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PsiMinus,
        BellState::PsiPlus,
        BellState::PhiMinus,
        BellState::PhiPlus,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    pub amplitudes: [Complex64; 4],
    /// Set when the amplitudes are known to have unit norm.
    pub normalized: bool,
}

impl TwoQubitState {
    /// Unnormalized state from raw amplitudes.
    pub fn new(amplitudes: [Complex64; 4]) -> Self {
        Self { amplitudes, normalized: false }
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &TwoQubitState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// `(first ⊗ second)|self⟩`; the result is flagged unnormalized.
    pub fn apply(&self, first: &Mat2, second: &Mat2) -> TwoQubitState {
        let op = first.kron(second);
        let mut out = [ZERO; 4];
        for (i, row) in op.iter().enumerate() {
            out[i] = row.iter().zip(self.amplitudes.iter()).map(|(m, a)| m * a).sum();
        }
        TwoQubitState::new(out)
    }

    /// Raw `⟨self|A ⊗ B|self⟩`.
    pub fn expectation(&self, a: &Mat2, b: &Mat2) -> f64 {
        self.inner(&self.apply(a, b)).re
    }

    /// Coefficients on `(ψ⁻, ψ⁺, φ⁻, φ⁺)`.
    pub fn bell_decomposition(&self) -> [Complex64; 4] {
        BellState::ALL.map(|kind| bell_state(kind).inner(self))
    }
}

pub fn bell_state(kind: BellState) -> TwoQubitState {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let amplitudes = match kind {
        BellState::PsiMinus => [ZERO, h, -h, ZERO],
        BellState::PsiPlus => [ZERO, h, h, ZERO],
        BellState::PhiMinus => [h, ZERO, ZERO, -h],
        BellState::PhiPlus => [h, ZERO, ZERO, h],
    };
    TwoQubitState { amplitudes, normalized: true }
}

/// Two ±1-valued observables per observer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableSet {
    pub a: Mat2,
    pub a_prime: Mat2,
    pub b: Mat2,
    pub b_prime: Mat2,
}

impl ObservableSet {
    /// Checks that every observable is a Hermitian involution.
    pub fn new(a: Mat2, a_prime: Mat2, b: Mat2, b_prime: Mat2) -> Result<Self> {
        for m in [a, a_prime, b, b_prime] {
            let residual = (m * m - Mat2::IDENTITY).max_abs().max((m - m.adjoint()).max_abs());
            if residual > 1e-12 {
                return Err(Error::InvalidObservable { residual });
            }
        }
        Ok(Self { a, a_prime, b, b_prime })
    }

    /// `â = (σ¹+σ³)/√2`, `â' = (σ³-σ¹)/√2`, `b̂ = σ³`, `b̂' = σ¹`.
    pub fn standard() -> Self {
        let (x, z) = (Mat2::sigma_x(), Mat2::sigma_z());
        Self {
            a: (x + z).scale_re(FRAC_1_SQRT_2),
            a_prime: (z - x).scale_re(FRAC_1_SQRT_2),
            b: z,
            b_prime: x,
        }
    }

    /// Measurement axes turned by `first` for observer one and `second` for
    /// observer two: `X → R† X R`.
    pub fn rotated(&self, first: &Mat2, second: &Mat2) -> Self {
        let turn = |m: &Mat2, r: &Mat2| r.adjoint() * *m * *r;
        Self {
            a: turn(&self.a, first),
            a_prime: turn(&self.a_prime, first),
            b: turn(&self.b, second),
            b_prime: turn(&self.b_prime, second),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpectationMode {
    /// `⟨ζ|A⊗B|ζ⟩` on the amplitudes as given.
    Raw,
    /// Each expectation divided by `⟨ζ|ζ⟩`.
    Normalized,
}

/// Spin-½ rotation about the 3-axis, `exp(-iθσ³/2)`.
pub fn spin_rotation_z(theta: f64) -> Mat2 {
    let (sin, cos) = (0.5 * theta).sin_cos();
    Mat2::IDENTITY.scale_re(cos) - Mat2::sigma_z().scale(Complex64::new(0.0, sin))
}

/// Applies `Ξ₊ ⊗ Ξ₋` with `Ξ± = cos(α/2) ± i (Γ/α) sin(α/2)`.
///
/// `Ξ₊` is the transport operator of the `p₊` orbit and `Ξ₋ = Ξ₊⁻¹`. For the
/// singlet this yields
/// `cos α |ψ⁻⟩ - i cosh ξ sin α |ψ⁺⟩ + i sinh ξ sin α |φ⁺⟩`.
pub fn transport_pair(
    state: &TwoQubitState,
    params: &SchwarzschildParams,
    w: &CircularWorldline,
) -> Result<TwoQubitState> {
    let gen = transport_generator(params, &w.with_orientation(REFERENCE_ORIENTATION))?;
    let plus = closed_form_operator(&gen).matrix;
    let minus = closed_form_operator(&gen.inverse()).matrix;
    let mut out = state.apply(&plus, &minus);
    out.normalized = state.normalized && w.rapidity == 0.0;
    Ok(out)
}

/// Variant of [`transport_pair`] in which each particle receives the transport
/// operator of its own orbit: `p₊` along [`REFERENCE_ORIENTATION`], `p₋` along
/// the reversed orbit.
///
/// The two operators agree in their boost part and differ in the sense of
/// rotation, so the partner operator is `σ³ Ξ₋ σ³` rather than `Ξ₋`.
pub fn transport_pair_counter_rotating(
    state: &TwoQubitState,
    params: &SchwarzschildParams,
    w: &CircularWorldline,
) -> Result<TwoQubitState> {
    let forward = w.with_orientation(REFERENCE_ORIENTATION);
    let plus = closed_form_operator(&transport_generator(params, &forward)?).matrix;
    let backward = forward.with_orientation(REFERENCE_ORIENTATION.reversed());
    let minus = closed_form_operator(&transport_generator(params, &backward)?).matrix;
    let mut out = state.apply(&plus, &minus);
    out.normalized = state.normalized && w.rapidity == 0.0;
    Ok(out)
}

/// `|⟨âb̂⟩ + ⟨â'b̂⟩ + ⟨âb̂'⟩ - ⟨â'b̂'⟩|`.
pub fn chsh_value(state: &TwoQubitState, obs: &ObservableSet, mode: ExpectationMode) -> Result<f64> {
    let scale = match mode {
        ExpectationMode::Raw => 1.0,
        ExpectationMode::Normalized => {
            let norm = state.norm_sqr();
            if norm < 1e-30 {
                return Err(Error::ZeroNorm);
            }
            1.0 / norm
        }
    };
    let e = |a: &Mat2, b: &Mat2| state.expectation(a, b) * scale;
    let value = e(&obs.a, &obs.b) + e(&obs.a_prime, &obs.b) + e(&obs.a, &obs.b_prime)
        - e(&obs.a_prime, &obs.b_prime);
    Ok(value.abs())
}

/// CHSH value after turning the measurement axes about the 3-axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectedChsh {
    pub raw: f64,
    pub normalized: f64,
    /// Tsirelson bound, reported for comparison.
    pub bound: f64,
}

/// Turns observer one's axes through `-α` and observer two's through `+α`
/// before evaluating CHSH on the transported singlet.
///
/// Maximal violation is restored exactly for `ξ = 0`. For moving particles the
/// transported state keeps a `|φ⁺⟩` admixture that no 3-axis rotation removes,
/// and the returned values fall short of the bound.
pub fn corrected_chsh(params: &SchwarzschildParams, w: &CircularWorldline) -> Result<CorrectedChsh> {
    let alpha = wigner_angle(params, w)?;
    let state = transport_pair(&bell_state(BellState::PsiMinus), params, w)?;
    let obs = ObservableSet::standard().rotated(&spin_rotation_z(-alpha), &spin_rotation_z(alpha));
    Ok(CorrectedChsh {
        raw: chsh_value(&state, &obs, ExpectationMode::Raw)?,
        normalized: chsh_value(&state, &obs, ExpectationMode::Normalized)?,
        bound: TSIRELSON,
    })
}

/// Speeds at or above this fraction of `c` are flagged as outside the
/// slow-motion regime.
pub const SLOW_MOTION_LIMIT: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonrelativisticLimit {
    /// `ᾱ = Φ [1 - r_s/(2rB)] √B (1 + v²/2c²)`.
    pub angle: f64,
    /// `cos ᾱ |ψ⁻⟩ - i sin ᾱ |ψ⁺⟩`.
    pub state: TwoQubitState,
    /// `2√2 cos² ᾱ`.
    pub chsh: f64,
    pub speed_ratio: f64,
    /// `v/c >= SLOW_MOTION_LIMIT`.
    pub beyond_validity: bool,
}

pub fn nonrelativistic_limit(
    params: &SchwarzschildParams,
    w: &CircularWorldline,
) -> Result<NonrelativisticLimit> {
    params.check_exterior(w.r)?;
    let b = params.lapse(w.r);
    let beta = 1.0 - params.r_s / (2.0 * w.r * b);
    let speed_ratio = w.rapidity.tanh();
    let angle = w.azimuth * beta * b.sqrt() * (1.0 + 0.5 * speed_ratio * speed_ratio);

    let (sin, cos) = angle.sin_cos();
    let minus = bell_state(BellState::PsiMinus).amplitudes;
    let plus = bell_state(BellState::PsiPlus).amplitudes;
    let mut amplitudes = [ZERO; 4];
    for k in 0..4 {
        amplitudes[k] = minus[k] * cos - Complex64::new(0.0, sin) * plus[k];
    }
    Ok(NonrelativisticLimit {
        angle,
        state: TwoQubitState { amplitudes, normalized: true },
        chsh: TSIRELSON * cos * cos,
        speed_ratio,
        beyond_validity: speed_ratio >= SLOW_MOTION_LIMIT,
    })
}
