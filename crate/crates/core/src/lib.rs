//! Wigner rotation of spin-½ particles on circular orbits in the Schwarzschild
//! spacetime, computed by Fermi-Walker transport, and its effect on EPR
//! correlations.
//!
//! The crate is organized bottom-up:
//!
//! * [`geometry`]: metric, static tetrad, Christoffel symbols, spin connection.
//! * [`kinematics`]: circular orbits, 4-velocity and 4-acceleration, geodesic rapidity.
//! * [`connection`]: acceleration form `τ` and the Fermi-Walker connection `Ω = ω + τ`.
//! * [`spinor`]: Clifford algebra, transport generator, closed-form and
//!   ordered-exponential transport operators, vector Fermi-Walker transport.
//! * [`epr`]: Bell states, transported pairs, CHSH values, axis correction,
//!   slow-motion limit.
//! * [`sweep`]: parameter sweeps and CSV/JSON reports used by the CLI.
//!
//! ```
//! use fermi_walker::{wigner_angle, CircularWorldline, Orientation, SchwarzschildParams};
//!
//! let params = SchwarzschildParams::with_radius(1.0)?;
//! let orbit = CircularWorldline::new(3.0, 0.0, std::f64::consts::TAU, Orientation::Increasing)?;
//! let alpha = wigner_angle(&params, &orbit)?;
//! assert!((alpha - 3.847649).abs() < 1e-6);
//! # Ok::<(), fermi_walker::Error>(())
//! ```

// Tensor contractions read best with explicit index loops.
#![allow(clippy::needless_range_loop)]

pub mod connection;
pub mod epr;
mod error;
pub mod geometry;
pub mod kinematics;
pub mod matrix;
pub mod spinor;
pub mod sweep;

pub use connection::{tau_form_at, total_connection_at, ConnectionForm};
pub use epr::{
    bell_state, chsh_value, corrected_chsh, nonrelativistic_limit, transport_pair, BellState,
    ExpectationMode, ObservableSet, TwoQubitState, TSIRELSON,
};
pub use error::{Error, Result};
pub use geometry::{
    christoffels_at, metric_at, spin_connection_at, tetrad_at, Christoffels, SchwarzschildParams,
    SpacetimePoint, TetradFrame,
};
pub use kinematics::{circular_kinematics, geodesic_rapidity, CircularWorldline, Kinematics, Orientation};
pub use matrix::Mat2;
pub use spinor::{
    closed_form_operator, fermi_walker_vector_transport, ordered_exponential, spin_generators,
    transport_generator, wigner_angle, SpinGeneratorSet, TransportGenerator, TransportOperator,
};

// The guide's code listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/geometry.md")]
    mod geometry {}
    #[doc = include_str!("../../../book/src/kinematics.md")]
    mod kinematics {}
    #[doc = include_str!("../../../book/src/transport.md")]
    mod transport {}
    #[doc = include_str!("../../../book/src/epr.md")]
    mod epr {}
    #[doc = include_str!("../../../book/src/sweeps.md")]
    mod sweeps {}
}
