//! MIN, geometric discord and the maximal CHSH expectation.
//!
//! All three are read off the Bloch form with the `1/4` normalization of
//! [`BlochForm`]. For a state with `x = 0`, measuring A along `n` removes
//! the part of `T` outside `n n^T T`, so
//! `||rho - Pi(rho)||^2 = 1/4 (tr T T^t - n^T T T^t n)`.
//! [`min_variational`] maximizes that distance directly on the density
//! matrix and is the oracle for [`min_closed`].

use core::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::qmat::{hs_norm_sq, partial_trace, pauli, tensor, ComplexMatrix, DensityMatrix};
use crate::states::{BlochForm, Couplings};
use crate::unruh::UnruhPoint;
use crate::{Error, Result};

/// Below this `||x||` the marginal of A counts as maximally mixed.
pub const ZERO_MARGINAL_TOL: f64 = 1e-12;

/// Which branch of the closed-form MIN applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `x != 0`: the only admissible measurement is along `x`.
    NonzeroMarginal,
    /// `x = 0`: every direction is admissible.
    ZeroMarginal,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::NonzeroMarginal => "x_nonzero",
            Branch::ZeroMarginal => "x_zero",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Variational,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Variational => "variational",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationReport {
    /// Measurement-induced nonlocality.
    pub n: f64,
    /// Geometric discord.
    pub d: f64,
    /// Maximal CHSH expectation.
    pub bmax: f64,
    pub branch: Branch,
    pub method: Method,
}

/// Closed-form MIN.
pub fn min_closed(b: &BlochForm) -> (f64, Branch) {
    let ttt = b.ttt();
    let norm_sq = b.x_norm_sq();
    if norm_sq.sqrt() > ZERO_MARGINAL_TOL {
        (0.25 * (ttt.trace() - ttt.quadratic_form(&b.x) / norm_sq), Branch::NonzeroMarginal)
    } else {
        let lambda_min = ttt.eigenvalues()[0];
        (0.25 * (ttt.trace() - lambda_min), Branch::ZeroMarginal)
    }
}

/// `2 sqrt(mu1 + mu2)` over the two largest eigenvalues of `T T^t`.
pub fn chsh_bmax(b: &BlochForm) -> f64 {
    let e = b.ttt().eigenvalues();
    2.0 * (e[1] + e[2]).max(0.0).sqrt()
}

/// `1/4 (||x||^2 + ||T||^2 - k_max)` with `k_max` the top eigenvalue of
/// `x x^t + T T^t`.
pub fn geometric_discord(b: &BlochForm) -> f64 {
    let k = crate::qmat::Sym3::outer(&b.x) + b.ttt();
    let k_max = k.eigenvalues()[2];
    0.25 * (b.x_norm_sq() + b.t_frobenius_sq() - k_max)
}

/// All three measures from one Bloch form.
pub fn report(b: &BlochForm) -> CorrelationReport {
    let (n, branch) = min_closed(b);
    CorrelationReport { n, d: geometric_discord(b), bmax: chsh_bmax(b), branch, method: Method::ClosedForm }
}

/// The three bracketed terms of the explicit MIN formula for one side.
fn bracket_terms(c: &Couplings, denom: f64) -> [f64; 3] {
    [c.c1() * c.c1() / denom, c.c2() * c.c2() / denom, c.c3() * c.c3() / (denom * denom)]
}

fn quarter_sum_minus_min(t: [f64; 3]) -> f64 {
    let min = t[0].min(t[1]).min(t[2]);
    0.25 * (t[0] + t[1] + t[2] - min)
}

/// Bracketed terms for A-I: `c1^2/d, c2^2/d, c3^2/d^2` with `d = e^{-w/T} + 1`.
pub fn terms_ai(c: &Couplings, u: &UnruhPoint) -> [f64; 3] {
    bracket_terms(c, (-u.ratio()).exp() + 1.0)
}

/// Bracketed terms for A-II, `d = e^{w/T} + 1`.
pub fn terms_aii(c: &Couplings, u: &UnruhPoint) -> [f64; 3] {
    bracket_terms(c, u.ratio().exp() + 1.0)
}

/// MIN between A and region I, evaluated from the explicit formula.
pub fn min_ai(c: &Couplings, u: &UnruhPoint) -> f64 {
    quarter_sum_minus_min(terms_ai(c, u))
}

/// MIN between A and region II, evaluated from the explicit formula.
pub fn min_aii(c: &Couplings, u: &UnruhPoint) -> f64 {
    quarter_sum_minus_min(terms_aii(c, u))
}

/// Index (0-based) of the bracketed term attaining the minimum.
///
/// At an exact tie the smaller index wins and `degenerate` is set; the MIN
/// itself is continuous there.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinTerm {
    pub index: usize,
    pub degenerate: bool,
}

pub fn min_term(terms: [f64; 3]) -> MinTerm {
    let min = terms[0].min(terms[1]).min(terms[2]);
    let index = terms.iter().position(|&t| t == min).unwrap_or(0);
    let ties = terms.iter().filter(|&&t| t == min).count();
    MinTerm { index, degenerate: ties > 1 }
}

/// Grid and refinement settings for [`min_variational`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeasurementSearch {
    /// Fibonacci-lattice directions on the sphere.
    pub directions: usize,
    /// Alternating golden-section passes over the polar and azimuthal angle.
    pub refinements: usize,
}

impl Default for MeasurementSearch {
    fn default() -> Self {
        Self { directions: 4096, refinements: 40 }
    }
}

/// Smallest grid that still certifies a maximum.
pub const MIN_DIRECTIONS: usize = 64;

/// The qubit state `cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>` and its
/// orthogonal partner: the eigenvectors of `n . sigma` for
/// `n = (sin theta cos phi, sin theta sin phi, cos theta)`.
fn eigenbasis(theta: f64, phi: f64) -> [[C64; 2]; 2] {
    let (s, c) = (0.5 * theta).sin_cos();
    let e = C64::from_polar(1.0, phi);
    [[C64::new(c, 0.0), e * s], [-e.conj() * s, C64::new(c, 0.0)]]
}

/// `||rho - Pi(rho)||^2` for the projective measurement of A along
/// `(theta, phi)`.
///
/// Each outcome projector is `|psi><psi| (x) I`, so
/// `P rho P = |psi><psi| (x) <psi|rho|psi>` and the pinched state has
/// orthogonal blocks: `||rho - Pi(rho)||^2 = ||rho||^2 - sum ||<psi|rho|psi>||^2`.
fn disturbance(rho: &ComplexMatrix, rho_norm_sq: f64, theta: f64, phi: f64) -> f64 {
    let mut kept = 0.0;
    for psi in eigenbasis(theta, phi) {
        let mut block = [[C64::new(0.0, 0.0); 2]; 2];
        for (i, row) in block.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                let mut acc = C64::new(0.0, 0.0);
                for a in 0..2 {
                    for b in 0..2 {
                        acc += psi[a].conj() * rho[(2 * a + i, 2 * b + j)] * psi[b];
                    }
                }
                *out = acc;
            }
        }
        kept += block.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>();
    }
    rho_norm_sq - kept
}

/// Full post-measurement state `sum_pm (Pi_pm (x) I) rho (Pi_pm (x) I)` with
/// `Pi_pm = (I +- n . sigma) / 2`.
pub fn post_measurement(rho: &DensityMatrix, n: &[f64; 3]) -> ComplexMatrix {
    let ndots = (0..3).fold(ComplexMatrix::zeros(2, 2), |acc, i| {
        &acc + &pauli(i + 1).scale(C64::new(n[i], 0.0))
    });
    let half = C64::new(0.5, 0.0);
    let plus = tensor(&(&pauli(0) + &ndots).scale(half), &pauli(0));
    let minus = tensor(&(&pauli(0) - &ndots).scale(half), &pauli(0));
    let m = rho.matrix();
    &plus.conjugate(m) + &minus.conjugate(m)
}

fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// MIN by direct maximization of the measurement disturbance over local
/// von Neumann measurements on A that leave A's marginal unchanged.
///
/// With a nonzero marginal Bloch vector only the measurement along it
/// qualifies. Otherwise the sphere is scanned on a Fibonacci lattice and the
/// best direction is polished by alternating golden-section searches in the
/// polar and azimuthal angle.
pub fn min_variational(rho: &DensityMatrix, search: &MeasurementSearch) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    if search.directions < MIN_DIRECTIONS {
        return Err(Error::ResolutionTooCoarse(search.directions));
    }
    let m = rho.matrix();
    let norm_sq = hs_norm_sq(m);

    let marginal = partial_trace(rho, &[2, 2], &[0])?;
    let ma = marginal.matrix();
    // rho_A = (I + x . sigma) / 2
    let x = [2.0 * ma[(0, 1)].re, -2.0 * ma[(0, 1)].im, (ma[(0, 0)] - ma[(1, 1)]).re];
    let x_norm = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    if x_norm > ZERO_MARGINAL_TOL {
        let theta = (x[2] / x_norm).clamp(-1.0, 1.0).acos();
        let phi = x[1].atan2(x[0]);
        return Ok(disturbance(m, norm_sq, theta, phi));
    }

    let f = |theta: f64, phi: f64| disturbance(m, norm_sq, theta, phi);
    let n = search.directions;
    let golden_angle = PI * (3.0 - 5f64.sqrt());
    let (mut theta, mut phi, mut best) = (0.0, 0.0, f64::NEG_INFINITY);
    for k in 0..n {
        let z = 1.0 - (2 * k + 1) as f64 / n as f64;
        let t = z.acos();
        let p = (k as f64 * golden_angle) % (2.0 * PI);
        let v = f(t, p);
        if v > best {
            (theta, phi, best) = (t, p, v);
        }
    }

    let mut half_width = 2.0 * (4.0 * PI / n as f64).sqrt();
    for _ in 0..search.refinements {
        let mut moved = 0.0;
        let (t, vt) = golden_max(|t| f(t, phi), theta - half_width, theta + half_width, 1e-10);
        if vt > best {
            moved += (t - theta).abs();
            (theta, best) = (t, vt);
        }
        let (p, vp) = golden_max(|p| f(theta, p), phi - half_width, phi + half_width, 1e-10);
        if vp > best {
            moved += (p - phi).abs();
            (phi, best) = (p, vp);
        }
        if moved < 1e-12 {
            break;
        }
        half_width = (half_width * 0.7).max(1e-6);
    }
    Ok(best)
}
