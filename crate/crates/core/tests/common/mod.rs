//! Independent reference computations used by the integration tests. Nothing
//! here calls the library's closed forms; geometry is differentiated
//! numerically and two-qubit algebra is contracted index by index.

#![allow(dead_code)]

use fermi_walker::geometry::{coord, Matrix4, ETA};
use fermi_walker::{metric_at, spin_connection_at, tetrad_at, SchwarzschildParams, SpacetimePoint};
use num_complex::Complex64;

pub type C2 = [[Complex64; 2]; 2];

/// `diag(-B c², 1/B, r², r² sin²θ)` written out directly.
pub fn metric_oracle(r_s: f64, c: f64, r: f64, theta: f64) -> Matrix4 {
    let b = 1.0 - r_s / r;
    let mut g = [[0.0; 4]; 4];
    g[0][0] = -b * c * c;
    g[1][1] = 1.0 / b;
    g[2][2] = r * r;
    g[3][3] = r * r * theta.sin().powi(2);
    g
}

fn shifted(p: &SpacetimePoint, mu: usize, h: f64) -> SpacetimePoint {
    let mut x = p.coords();
    x[mu] += h;
    SpacetimePoint::from_coords(x)
}

/// Central-difference step for coordinate `mu` at `p`.
fn step(p: &SpacetimePoint, mu: usize, h: f64) -> f64 {
    match mu {
        coord::R => h * p.r,
        _ => h,
    }
}

/// `∂_μ g_αβ` by central differences.
pub fn metric_gradient(params: &SchwarzschildParams, p: &SpacetimePoint, h: f64) -> [[[f64; 4]; 4]; 4] {
    let mut d = [[[0.0; 4]; 4]; 4];
    for (mu, slab) in d.iter_mut().enumerate() {
        let dh = step(p, mu, h);
        let plus = metric_at(params, &shifted(p, mu, dh)).unwrap();
        let minus = metric_at(params, &shifted(p, mu, -dh)).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                slab[a][b] = (plus[a][b] - minus[a][b]) / (2.0 * dh);
            }
        }
    }
    d
}

/// `Γ^λ_{μν} = ½ g^{λσ}(∂_μ g_σν + ∂_ν g_σμ - ∂_σ g_μν)` from a differenced metric.
pub fn christoffels_oracle(params: &SchwarzschildParams, p: &SpacetimePoint, h: f64) -> [[[f64; 4]; 4]; 4] {
    let g = metric_at(params, p).unwrap();
    let dg = metric_gradient(params, p, h);
    let mut out = [[[0.0; 4]; 4]; 4];
    for lambda in 0..4 {
        let g_inv = 1.0 / g[lambda][lambda];
        for mu in 0..4 {
            for nu in 0..4 {
                out[lambda][mu][nu] =
                    0.5 * g_inv * (dg[mu][lambda][nu] + dg[nu][lambda][mu] - dg[lambda][mu][nu]);
            }
        }
    }
    out
}

/// `∂_μ e^a_ν` by central differences, stored `[μ][a][ν]`.
pub fn tetrad_gradient(params: &SchwarzschildParams, p: &SpacetimePoint, h: f64) -> [[[f64; 4]; 4]; 4] {
    let mut d = [[[0.0; 4]; 4]; 4];
    for (mu, slab) in d.iter_mut().enumerate() {
        let dh = step(p, mu, h);
        let plus = tetrad_at(params, &shifted(p, mu, dh)).unwrap().e;
        let minus = tetrad_at(params, &shifted(p, mu, -dh)).unwrap().e;
        for a in 0..4 {
            for nu in 0..4 {
                slab[a][nu] = (plus[a][nu] - minus[a][nu]) / (2.0 * dh);
            }
        }
    }
    d
}

/// `max |(dΘ^a + ω^a_b ∧ Θ^b)_{μν}|`, with `(dΘ^a)_{μν} = ∂_μ e^a_ν - ∂_ν e^a_μ`.
pub fn maurer_cartan_residual(params: &SchwarzschildParams, p: &SpacetimePoint, h: f64) -> f64 {
    let e = tetrad_at(params, p).unwrap().e;
    let omega = spin_connection_at(params, p).unwrap();
    let de = tetrad_gradient(params, p, h);
    let mut worst = 0.0f64;
    for a in 0..4 {
        for mu in 0..4 {
            for nu in 0..4 {
                let mut value = de[mu][a][nu] - de[nu][a][mu];
                for b in 0..4 {
                    value += omega.mixed(mu, a, b) * e[b][nu] - omega.mixed(nu, a, b) * e[b][mu];
                }
                worst = worst.max(value.abs());
            }
        }
    }
    worst
}

/// `max |∂_μ e^a_ν - Γ^λ_{μν} e^a_λ + ω_μ^a_b e^b_ν|`, the vanishing covariant
/// derivative of the tetrad, with every derivative taken numerically.
pub fn tetrad_postulate_residual(params: &SchwarzschildParams, p: &SpacetimePoint, h: f64) -> f64 {
    let e = tetrad_at(params, p).unwrap().e;
    let omega = spin_connection_at(params, p).unwrap();
    let de = tetrad_gradient(params, p, h);
    let gamma = christoffels_oracle(params, p, h);
    let mut worst = 0.0f64;
    for mu in 0..4 {
        for a in 0..4 {
            for nu in 0..4 {
                let mut value = de[mu][a][nu];
                for lambda in 0..4 {
                    value -= gamma[lambda][mu][nu] * e[a][lambda];
                }
                for b in 0..4 {
                    value += omega.mixed(mu, a, b) * e[b][nu];
                }
                worst = worst.max(value.abs());
            }
        }
    }
    worst
}

/// Minkowski product of two frame vectors.
pub fn eta_dot(u: &[f64; 4], v: &[f64; 4]) -> f64 {
    (0..4).map(|a| ETA[a] * u[a] * v[a]).sum()
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn pauli() -> [C2; 3] {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    [[[o, l], [l, o]], [[o, -i], [i, o]], [[l, o], [o, -l]]]
}

pub fn mat_mul(a: &C2, b: &C2) -> C2 {
    let mut out = [[c(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat_add(a: &C2, b: &C2, s: Complex64) -> C2 {
    let mut out = *a;
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] += s * b[i][j];
        }
    }
    out
}

/// `exp(m)` by scaling and squaring a 30-term Taylor series.
pub fn expm_taylor(m: &C2) -> C2 {
    let norm: f64 = m.iter().flatten().map(|z| z.norm()).sum();
    let squarings = (norm.max(1.0).log2().ceil() as i32 + 4).max(0);
    let scale = 0.5f64.powi(squarings);
    let a = m.map(|row| row.map(|z| z * scale));
    let mut sum = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
    let mut term = sum;
    for k in 1..30 {
        term = mat_mul(&term, &a).map(|row| row.map(|z| z / k as f64));
        sum = mat_add(&sum, &term, c(1.0, 0.0));
    }
    for _ in 0..squarings {
        sum = mat_mul(&sum, &sum);
    }
    sum
}

/// `⟨ψ|A ⊗ B|ψ⟩` contracted over explicit indices `(i j), (k l)`.
pub fn expectation_oracle(psi: &[Complex64; 4], a: &C2, b: &C2) -> f64 {
    let mut acc = c(0.0, 0.0);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    acc += psi[2 * i + j].conj() * a[i][k] * b[j][l] * psi[2 * k + l];
                }
            }
        }
    }
    acc.re
}

/// CHSH combination with the standard observables, raw expectations.
pub fn chsh_oracle(psi: &[Complex64; 4]) -> f64 {
    let [x, _, z] = pauli();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let a = mat_add(&x, &z, c(1.0, 0.0)).map(|row| row.map(|v| v * h));
    let a_prime = mat_add(&z, &x, c(-1.0, 0.0)).map(|row| row.map(|v| v * h));
    let e = |p: &C2, q: &C2| expectation_oracle(psi, p, q);
    (e(&a, &z) + e(&a_prime, &z) + e(&a, &x) - e(&a_prime, &x)).abs()
}

/// `2√2 |cosh²ξ sin²α - 1|`.
pub fn chsh_closed(xi: f64, alpha: f64) -> f64 {
    2.0 * std::f64::consts::SQRT_2 * (xi.cosh().powi(2) * alpha.sin().powi(2) - 1.0).abs()
}

/// Bell-basis coefficients `(ψ⁻, ψ⁺, φ⁻, φ⁺)` of the transported singlet.
pub fn transported_singlet_coefficients(xi: f64, alpha: f64) -> [Complex64; 4] {
    [
        c(alpha.cos(), 0.0),
        c(0.0, -xi.cosh() * alpha.sin()),
        c(0.0, 0.0),
        c(0.0, xi.sinh() * alpha.sin()),
    ]
}

/// Wigner angle from the rotation and boost weights, `sign(β) √(η₂² - η₁²)`.
pub fn angle_from_weights(r_s: f64, r: f64, xi: f64, phi: f64) -> f64 {
    let b = 1.0 - r_s / r;
    let beta = 1.0 - r_s / (2.0 * r * b);
    let eta1 = beta * phi * xi.sinh() * xi.cosh() * b.sqrt();
    let eta2 = beta * phi * xi.cosh().powi(2) * b.sqrt();
    beta.signum() * (eta2 * eta2 - eta1 * eta1).sqrt()
}
