//! How the MIN of each reduction moves with the Unruh temperature.
//!
//! Both closed forms are `1/4 (sum - min)` over three bracketed terms. The
//! two transverse terms scale with `f^2` and the longitudinal one with `f^4`,
//! so the argmin can switch once as the temperature grows; the MIN then has
//! a kink ("sudden change") at `T_sc`.

use alloc::vec::Vec;
use core::fmt;

use crate::correlations::{min_ai, min_aii, terms_ai, terms_aii};
use crate::states::Couplings;
use crate::unruh::UnruhPoint;
use crate::{Error, Result};

/// `|ln(c3^2 / m^2 - 1)|` below this counts as the `m = |c3| / sqrt 2`
/// boundary, where `T_sc` diverges.
pub const BOUNDARY_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Alice and Rob (region I).
    AI,
    /// Alice and Anti-Rob (region II).
    AII,
}

impl Side {
    pub fn as_str(&self) -> &'static str {
        match self {
            Side::AI => "AI",
            Side::AII => "AII",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegimeCase {
    /// `|c1|, |c2| >= |c3|`: monotone in T.
    I,
    /// Kink at a finite `T_sc`.
    IISudden,
    /// `|c3| > min(|c1|, |c2|)` but no finite crossing: monotone.
    IISmooth,
    /// `c1 = c2 = 0`: monotone.
    III,
}

impl RegimeCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeCase::I => "i",
            RegimeCase::IISudden => "ii_sudden",
            RegimeCase::IISmooth => "ii_smooth",
            RegimeCase::III => "iii",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RegimeLabel {
    pub side: Side,
    pub case: RegimeCase,
    /// `T_sc / w`; present iff `case == IISudden`.
    pub t_sc_per_w: Option<f64>,
    /// Set exactly at `min(|c1|, |c2|) = |c3| / sqrt 2`.
    pub boundary: bool,
}

impl RegimeLabel {
    pub fn t_sc(&self, w: f64) -> Option<f64> {
        self.t_sc_per_w.map(|t| t * w)
    }
}

impl fmt::Display for RegimeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} case {}", self.side.as_str(), self.case.as_str())?;
        if self.boundary {
            write!(f, " (boundary)")?;
        }
        Ok(())
    }
}

/// `ln(c3^2 / min(c1^2, c2^2) - 1)`, the shared denominator of both `T_sc`.
fn crossing_log(c: &Couplings) -> f64 {
    let m = c.min_transverse();
    (c.c3() * c.c3() / (m * m) - 1.0).ln()
}

pub fn classify(c: &Couplings, side: Side) -> RegimeLabel {
    let label = |case, t_sc_per_w, boundary| RegimeLabel { side, case, t_sc_per_w, boundary };
    let m = c.min_transverse();
    if m >= c.c3().abs() {
        return label(RegimeCase::I, None, false);
    }
    if c.c1() == 0.0 && c.c2() == 0.0 {
        return label(RegimeCase::III, None, false);
    }
    if m == 0.0 {
        return label(RegimeCase::IISmooth, None, false);
    }
    let log = crossing_log(c);
    if log.abs() <= BOUNDARY_TOL {
        return label(RegimeCase::IISmooth, None, true);
    }
    match side {
        // crossing needs 1/2 < m^2/c3^2 < 1, i.e. log < 0
        Side::AI if log < 0.0 => label(RegimeCase::IISudden, Some(-1.0 / log), false),
        Side::AII if log > 0.0 => label(RegimeCase::IISudden, Some(1.0 / log), false),
        _ => label(RegimeCase::IISmooth, None, false),
    }
}

/// Sudden-change temperature of the A-I MIN, `-w / ln(c3^2/m^2 - 1)`.
pub fn t_sc_ai(c: &Couplings, w: f64) -> Result<f64> {
    let label = classify(c, Side::AI);
    label.t_sc(w).ok_or(Error::WrongRegime(label))
}

/// Sudden-change temperature of the A-II MIN, `w / ln(c3^2/m^2 - 1)`.
pub fn t_sc_aii(c: &Couplings, w: f64) -> Result<f64> {
    let label = classify(c, Side::AII);
    label.t_sc(w).ok_or(Error::WrongRegime(label))
}

/// Longitudinal term minus the smaller transverse term.
fn switch_gap(c: &Couplings, side: Side, w: f64, temperature: f64) -> f64 {
    let u = UnruhPoint::new(w, temperature).expect("grid temperatures are valid");
    let t = match side {
        Side::AI => terms_ai(c, &u),
        Side::AII => terms_aii(c, &u),
    };
    t[2] - t[0].min(t[1])
}

/// Locates the argmin switch numerically: scans `temperatures` (ascending)
/// for a sign change of the longitudinal-minus-transverse gap and bisects
/// the bracketing interval down to rounding.
pub fn t_sc_oracle(c: &Couplings, temperatures: &[f64], side: Side, w: f64) -> Result<f64> {
    let gaps: Vec<(f64, f64)> = temperatures.iter().map(|&t| (t, switch_gap(c, side, w, t))).collect();
    let (mut lo, mut hi) = gaps
        .windows(2)
        .find(|p| p[0].1 != 0.0 && p[1].1 != 0.0 && p[0].1.signum() != p[1].1.signum())
        .map(|p| (p[0], p[1]))
        .ok_or(Error::NoCrossing)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo.0 + hi.0);
        if mid <= lo.0 || mid >= hi.0 {
            break;
        }
        let g = switch_gap(c, side, w, mid);
        if g == 0.0 {
            return Ok(mid);
        }
        if g.signum() == lo.1.signum() {
            lo = (mid, g);
        } else {
            hi = (mid, g);
        }
    }
    Ok(0.5 * (lo.0 + hi.0))
}

/// Shared `T -> inf` limit of both MINs:
/// `(2 c1^2 + 2 c2^2 + c3^2 - min[2 c1^2, 2 c2^2, c3^2]) / 16`.
pub fn asymptote(c: &Couplings) -> f64 {
    let t = [2.0 * c.c1() * c.c1(), 2.0 * c.c2() * c.c2(), c.c3() * c.c3()];
    (t[0] + t[1] + t[2] - t[0].min(t[1]).min(t[2])) / 16.0
}

/// Temperature behavior of `N_AI + N_AII`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumRegime {
    /// `|c1|, |c2| >= |c3|`: constant `1/4 (c1^2 + c2^2)`.
    Constant,
    /// `|c3| > m >= |c3|/sqrt 2`: decreasing until the A-I `T_sc`, then
    /// constant.
    DecreasingThenConstant,
    /// `m < |c3|/sqrt 2`: fast decay until the A-II `T_sc`, then slow.
    FastThenSlow,
}

impl SumRegime {
    pub fn as_str(&self) -> &'static str {
        match self {
            SumRegime::Constant => "a",
            SumRegime::DecreasingThenConstant => "b",
            SumRegime::FastThenSlow => "c",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SumReport {
    pub value: f64,
    pub regime: SumRegime,
    pub t_sc: Option<f64>,
}

pub fn sum_regime(c: &Couplings, w: f64) -> (SumRegime, Option<f64>) {
    let m = c.min_transverse();
    if m >= c.c3().abs() {
        return (SumRegime::Constant, None);
    }
    if m > 0.0 && crossing_log(c) <= BOUNDARY_TOL {
        // includes the boundary, where the A-I crossing runs off to T = inf
        return (SumRegime::DecreasingThenConstant, classify(c, Side::AI).t_sc(w));
    }
    (SumRegime::FastThenSlow, classify(c, Side::AII).t_sc(w))
}

pub fn sum_min(c: &Couplings, u: &UnruhPoint) -> SumReport {
    let (regime, t_sc) = sum_regime(c, u.w());
    SumReport { value: min_ai(c, u) + min_aii(c, u), regime, t_sc }
}

/// `n` temperatures log-spaced over `[lo, hi]`, endpoints exact.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    grid(n, lo, hi, |a, b, s| (a.ln() + s * (b.ln() - a.ln())).exp())
}

/// `n` values linearly spaced over `[lo, hi]`, endpoints exact.
pub fn linear_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    grid(n, lo, hi, |a, b, s| a + s * (b - a))
}

fn grid(n: usize, lo: f64, hi: f64, at: impl Fn(f64, f64, f64) -> f64) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => alloc::vec![lo],
        _ => (0..n)
            .map(|k| match k {
                0 => lo,
                k if k == n - 1 => hi,
                k => at(lo, hi, k as f64 / (n - 1) as f64),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: f64, b: f64, d: f64) -> Couplings {
        Couplings::new(a, b, d).unwrap()
    }

    #[test]
    fn figure_one_labels() {
        assert_eq!(classify(&c(1.0, 0.9, 0.5), Side::AI).case, RegimeCase::I);
        assert_eq!(classify(&c(0.9, 0.85, 1.0), Side::AI).case, RegimeCase::IISudden);
        assert_eq!(classify(&c(0.0, 0.0, 0.9), Side::AI).case, RegimeCase::III);
        assert_eq!(classify(&c(0.9, 0.85, 1.0), Side::AII).case, RegimeCase::IISmooth);
        assert_eq!(classify(&c(0.9, 0.55, 1.0), Side::AII).case, RegimeCase::IISudden);
        assert_eq!(classify(&c(0.9, 0.55, 1.0), Side::AI).case, RegimeCase::IISmooth);
        assert_eq!(classify(&c(0.5, 0.0, 0.9), Side::AII).case, RegimeCase::IISmooth);
    }

    #[test]
    fn t_sc_anchor_values() {
        // -1 / ln(1/0.7225 - 1), confirmed by the bisection oracle below
        let ai = t_sc_ai(&c(0.9, 0.85, 1.0), 1.0).unwrap();
        assert!((ai - 1.045_045_115_95).abs() < 1e-10);
        // 1 / ln(1/0.3025 - 1)
        let aii = t_sc_aii(&c(0.9, 0.55, 1.0), 1.0).unwrap();
        assert!((aii - 1.197_000_933_95).abs() < 1e-10);
        assert_eq!(t_sc_aii(&c(0.9, 0.55, 1.0), 0.5).unwrap(), 0.5 * aii);
        assert_eq!(t_sc_ai(&c(0.8, 0.9, 1.0), 2.0).unwrap(), 2.0 * t_sc_ai(&c(0.8, 0.9, 1.0), 1.0).unwrap());
    }

    #[test]
    fn oracle_confirms_anchors() {
        let grid = log_grid(1e-3, 1e3, 200);
        let cases = [(c(0.9, 0.85, 1.0), Side::AI), (c(0.9, 0.55, 1.0), Side::AII)];
        for (p, side) in cases {
            let closed = classify(&p, side).t_sc(1.0).unwrap();
            let oracle = t_sc_oracle(&p, &grid, side, 1.0).unwrap();
            assert!(((closed - oracle) / closed).abs() < 1e-8, "{closed} vs {oracle}");
        }
    }

    #[test]
    fn wrong_regime_is_rejected() {
        let err = t_sc_aii(&c(1.0, 0.9, 0.5), 1.0).unwrap_err();
        assert!(matches!(err, Error::WrongRegime(RegimeLabel { case: RegimeCase::I, .. })));
        let grid = log_grid(1e-3, 1e3, 200);
        assert_eq!(t_sc_oracle(&c(1.0, 0.9, 0.5), &grid, Side::AI, 1.0), Err(Error::NoCrossing));
    }

    #[test]
    fn boundary_is_smooth_and_flagged() {
        let p = c(0.9 * core::f64::consts::FRAC_1_SQRT_2, 1.0, 0.9);
        for side in [Side::AI, Side::AII] {
            let label = classify(&p, side);
            assert_eq!(label.case, RegimeCase::IISmooth);
            assert!(label.boundary);
        }
        assert!(t_sc_ai(&p, 1.0).is_err());
        assert_eq!(sum_regime(&p, 1.0), (SumRegime::DecreasingThenConstant, None));
    }

    #[test]
    fn asymptote_values() {
        assert_eq!(asymptote(&c(1.0, 1.0, 1.0)), 0.25);
        assert_eq!(asymptote(&c(0.0, 0.0, 0.6)), 0.36 / 16.0);
        let p = c(0.9, 0.85, 1.0);
        let far = UnruhPoint::new(1.0, 1e6).unwrap();
        assert!((min_ai(&p, &far) - asymptote(&p)).abs() < 1e-5);
        assert!((min_aii(&p, &far) - asymptote(&p)).abs() < 1e-5);
    }

    #[test]
    fn sum_regime_a_is_flat() {
        let p = c(1.0, 0.9, 0.5);
        for t in log_grid(1e-2, 1e2, 50) {
            let s = sum_min(&p, &UnruhPoint::new(1.0, t).unwrap());
            assert_eq!(s.regime, SumRegime::Constant);
            assert!((s.value - 0.4525).abs() < 1e-12);
        }
    }

    #[test]
    fn sum_at_zero_temperature_is_the_ai_min() {
        let p = c(0.9, 0.5, 1.0);
        let u = UnruhPoint::new(1.0, 0.0).unwrap();
        assert_eq!(min_aii(&p, &u), 0.0);
        assert_eq!(sum_min(&p, &u).value, min_ai(&p, &u));
        let (regime, t_sc) = sum_regime(&p, 1.0);
        assert_eq!(regime, SumRegime::FastThenSlow);
        assert_eq!(t_sc, t_sc_aii(&p, 1.0).ok());
    }

    #[test]
    fn grids() {
        let g = log_grid(0.01, 100.0, 5);
        assert_eq!(g[0], 0.01);
        assert_eq!(g[4], 100.0);
        assert!((g[2] - 1.0).abs() < 1e-15);
        assert_eq!(linear_grid(0.0, 1.0, 3), alloc::vec![0.0, 0.5, 1.0]);
        assert_eq!(linear_grid(0.3, 1.0, 1), alloc::vec![0.3]);
    }
}
