//! The fermionic Unruh channel in the single-mode approximation.
//!
//! For a uniformly accelerated observer the Minkowski vacuum and one-particle
//! state of a Dirac mode of frequency `w` read, in the Rindler basis of
//! regions I and II,
//!
//! ```text
//! |0>_U = f0 |0>_I |0>_II + f1 |1>_I |1>_II,   f0 = (e^{-w/T} + 1)^{-1/2}
//! |1>_U = |1>_I |0>_II                         f1 = (e^{+w/T} + 1)^{-1/2}
//! ```
//!
//! with Unruh temperature `T = a / 2 pi`. Substituting this into Rob's qubit
//! of a Bell-diagonal state gives an 8-dimensional state over A, I and II.

use core::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::qmat::{partial_trace, tensor, ComplexMatrix, DensityMatrix};
use crate::states::{build_x_state, BlochForm, Couplings, XStateParams};
use crate::{Error, Result};

/// Above this value of `w/T` the thermal amplitudes are clamped to their
/// zero-temperature values.
pub const MAX_RATIO: f64 = 700.0;

/// Mode frequency and Unruh temperature (`k_B = 1`, same units).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnruhPoint {
    w: f64,
    temperature: f64,
}

impl UnruhPoint {
    /// `temperature` may be `0` or `f64::INFINITY`.
    pub fn new(w: f64, temperature: f64) -> Result<Self> {
        let ok_w = w.is_finite() && w > 0.0;
        let ok_t = !temperature.is_nan() && temperature >= 0.0;
        if !ok_w || !ok_t {
            return Err(Error::InvalidUnruhPoint { w, temperature });
        }
        Ok(Self { w, temperature })
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Proper acceleration `2 pi T`.
    pub fn acceleration(&self) -> f64 {
        2.0 * PI * self.temperature
    }

    /// `w / T`, with `T = inf` mapping to exactly 0 and `T = 0` to `inf`.
    pub fn ratio(&self) -> f64 {
        if self.temperature.is_infinite() {
            0.0
        } else {
            self.w / self.temperature
        }
    }
}

/// Bogoliubov amplitudes of the vacuum, stored through their squares.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThermalAmps {
    f0_sq: f64,
    f1_sq: f64,
}

impl ThermalAmps {
    pub fn f0(&self) -> f64 {
        self.f0_sq.sqrt()
    }

    pub fn f1(&self) -> f64 {
        self.f1_sq.sqrt()
    }

    /// `1 / (e^{-w/T} + 1)`.
    pub fn f0_sq(&self) -> f64 {
        self.f0_sq
    }

    /// `1 / (e^{w/T} + 1)`.
    pub fn f1_sq(&self) -> f64 {
        self.f1_sq
    }
}

pub fn thermal_amps(u: &UnruhPoint) -> ThermalAmps {
    let r = u.ratio();
    // e^{-r} never overflows; beyond MAX_RATIO it is below f64 resolution
    let e = if r > MAX_RATIO { 0.0 } else { (-r).exp() };
    ThermalAmps { f0_sq: 1.0 / (1.0 + e), f1_sq: e / (1.0 + e) }
}

/// The isometry Rob's qubit -> (I, II) as a 4x2 matrix.
fn rindler_isometry(amps: &ThermalAmps) -> ComplexMatrix {
    let mut v = ComplexMatrix::zeros(4, 2);
    // |0>_B -> f0 |00> + f1 |11>
    v[(0, 0)] = C64::new(amps.f0(), 0.0);
    v[(3, 0)] = C64::new(amps.f1(), 0.0);
    // |1>_B -> |10>
    v[(2, 1)] = C64::new(1.0, 0.0);
    v
}

/// The 8x8 state over `A (x) I (x) II`.
pub fn build_tripartite(p: &XStateParams, u: &UnruhPoint) -> DensityMatrix {
    let lift = tensor(&ComplexMatrix::identity(2), &rindler_isometry(&thermal_amps(u)));
    let rho = lift.conjugate(build_x_state(p).matrix());
    DensityMatrix::new(rho).expect("an isometry maps states to states")
}

/// Accessible reduction: trace out region II.
pub fn reduce_ai(tripartite: &DensityMatrix) -> Result<DensityMatrix> {
    partial_trace(tripartite, &[2, 2, 2], &[0, 1])
}

/// Inaccessible reduction: trace out region I.
pub fn reduce_aii(tripartite: &DensityMatrix) -> Result<DensityMatrix> {
    partial_trace(tripartite, &[2, 2, 2], &[0, 2])
}

/// Bloch form of the A-I reduction:
/// `y = (0, 0, -f1^2)`, `T = diag(c1 f0, c2 f0, c3 f0^2)`.
pub fn closed_form_ai(c: &Couplings, u: &UnruhPoint) -> BlochForm {
    let a = thermal_amps(u);
    let f0 = a.f0();
    BlochForm::diagonal([0.0, 0.0, -a.f1_sq()], [c.c1() * f0, c.c2() * f0, c.c3() * a.f0_sq()])
}

/// Bloch form of the A-II reduction:
/// `y = (0, 0, f0^2)`, `T = diag(c1 f1, -c2 f1, -c3 f1^2)`.
pub fn closed_form_aii(c: &Couplings, u: &UnruhPoint) -> BlochForm {
    let a = thermal_amps(u);
    let f1 = a.f1();
    BlochForm::diagonal([0.0, 0.0, a.f0_sq()], [c.c1() * f1, -c.c2() * f1, -c.c3() * a.f1_sq()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::bloch_decompose;

    fn point(w: f64, t: f64) -> UnruhPoint {
        UnruhPoint::new(w, t).unwrap()
    }

    #[test]
    fn rejects_bad_points() {
        assert!(UnruhPoint::new(0.0, 1.0).is_err());
        assert!(UnruhPoint::new(1.0, -1.0).is_err());
        assert!(UnruhPoint::new(1.0, f64::NAN).is_err());
        assert!(UnruhPoint::new(f64::INFINITY, 1.0).is_err());
        assert!(UnruhPoint::new(1.0, f64::INFINITY).is_ok());
    }

    #[test]
    fn amplitude_limits() {
        let zero = thermal_amps(&point(1.0, 0.0));
        assert_eq!((zero.f0(), zero.f1()), (1.0, 0.0));
        let inf = thermal_amps(&point(1.0, f64::INFINITY));
        assert_eq!((inf.f0_sq(), inf.f1_sq()), (0.5, 0.5));
        // e^{-ln 2} = 1/2
        let mid = thermal_amps(&point(1.0, 1.0 / core::f64::consts::LN_2));
        assert!((mid.f0_sq() - 2.0 / 3.0).abs() < 1e-15);
        assert!((mid.f1_sq() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn tiny_temperature_is_clamped() {
        let a = thermal_amps(&point(1.0, 1e-300));
        assert_eq!((a.f0_sq(), a.f1_sq()), (1.0, 0.0));
    }

    #[test]
    fn acceleration() {
        assert_eq!(point(1.0, 0.5).acceleration(), PI);
    }

    #[test]
    fn zero_temperature_is_identity_channel() {
        let p = XStateParams::new(0.5, -0.3, 0.2).unwrap();
        let u = point(1.0, 0.0);
        let ai = reduce_ai(&build_tripartite(&p, &u)).unwrap();
        assert!(ai.matrix().max_abs_diff(build_x_state(&p).matrix()) <= 1e-14);
        assert_eq!(closed_form_ai(&p, &u), BlochForm::diagonal([0.0; 3], [0.5, -0.3, 0.2]));
        let aii = closed_form_aii(&p, &u);
        assert_eq!(aii.y, [0.0, 0.0, 1.0]);
        assert!(aii.t.iter().flatten().all(|&v| v == 0.0));
    }

    #[test]
    fn maximally_mixed_keeps_a_marginal() {
        let p = XStateParams::new(0.0, 0.0, 0.0).unwrap();
        for t in [0.0, 0.3, 2.0, f64::INFINITY] {
            let tri = build_tripartite(&p, &point(1.0, t));
            let a = partial_trace(&tri, &[2, 2, 2], &[0]).unwrap();
            assert!(a.matrix().max_abs_diff(&ComplexMatrix::diag(&[0.5, 0.5])) < 1e-15);
        }
    }

    #[test]
    fn bell_state_oracle_cross_check() {
        let p = XStateParams::new(1.0, -1.0, 1.0).unwrap();
        let u = point(1.0, 1.0 / core::f64::consts::LN_2);
        let tri = build_tripartite(&p, &u);
        let ai = bloch_decompose(&reduce_ai(&tri).unwrap()).unwrap();
        let aii = bloch_decompose(&reduce_aii(&tri).unwrap()).unwrap();
        assert!(ai.max_abs_diff(&closed_form_ai(&p, &u)) <= 1e-13);
        assert!(aii.max_abs_diff(&closed_form_aii(&p, &u)) <= 1e-13);
    }

    #[test]
    fn infinite_temperature_closed_forms() {
        let c = Couplings::new(1.0, -0.9, 0.8).unwrap();
        let u = point(1.0, f64::INFINITY);
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let ai = closed_form_ai(&c, &u);
        let want = BlochForm::diagonal([0.0, 0.0, -0.5], [s, -0.9 * s, 0.4]);
        assert!(ai.max_abs_diff(&want) < 1e-15);
        let aii = closed_form_aii(&c, &u);
        let want = BlochForm::diagonal([0.0, 0.0, 0.5], [s, 0.9 * s, -0.4]);
        assert!(aii.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn only_the_ratio_matters() {
        let c = Couplings::new(0.7, 0.2, -0.4).unwrap();
        let base = closed_form_ai(&c, &point(1.0, 0.8));
        let scaled = closed_form_ai(&c, &point(3.0, 2.4));
        assert!(base.max_abs_diff(&scaled) <= 1e-15);
    }
}
