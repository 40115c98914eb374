//! Bell-diagonal ("X-type") two-qubit states `1/4 (I + sum_i c_i s_i (x) s_i)`
//! and their Pauli-basis (Bloch) form.
//!
//! Basis ordering is `|00>, |01>, |10>, |11>` with subsystem A as the left
//! factor everywhere.

use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use num_complex::Complex64 as C64;

use crate::qmat::{pauli, tensor, ComplexMatrix, DensityMatrix, Sym3};
use crate::{Error, Result};

/// Tolerance on the four eigenvalue expressions `4 * lambda_k`.
pub const PHYSICALITY_TOL: f64 = 4e-12;

/// Correlation coefficients `(c1, c2, c3)`, each finite with `|c_i| <= 1`.
///
/// This is the only constraint the closed-form measures need: every one of
/// them depends on the `c_i` through their squares. Use [`XStateParams`]
/// when a density matrix has to exist.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Couplings {
    c: [f64; 3],
}

impl Couplings {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        let c = [c1, c2, c3];
        for (i, &v) in c.iter().enumerate() {
            if !v.is_finite() || v.abs() > 1.0 {
                return Err(Error::CouplingOutOfRange { index: i + 1, value: v });
            }
        }
        Ok(Self { c })
    }

    pub fn c1(&self) -> f64 {
        self.c[0]
    }

    pub fn c2(&self) -> f64 {
        self.c[1]
    }

    pub fn c3(&self) -> f64 {
        self.c[2]
    }

    pub fn as_array(&self) -> [f64; 3] {
        self.c
    }

    pub fn magnitudes(&self) -> [f64; 3] {
        self.c.map(f64::abs)
    }

    /// `min(|c1|, |c2|)`.
    pub fn min_transverse(&self) -> f64 {
        self.c[0].abs().min(self.c[1].abs())
    }

    /// `max(|c1|, |c2|)`.
    pub fn max_transverse(&self) -> f64 {
        self.c[0].abs().max(self.c[1].abs())
    }

    /// The four values `4 * lambda_k` paired with their printable expression.
    pub fn eigenvalue_expressions(&self) -> [(&'static str, f64); 4] {
        let [c1, c2, c3] = self.c;
        [
            ("1 - c1 - c2 - c3", 1.0 - c1 - c2 - c3),
            ("1 - c1 + c2 + c3", 1.0 - c1 + c2 + c3),
            ("1 + c1 - c2 + c3", 1.0 + c1 - c2 + c3),
            ("1 + c1 + c2 - c3", 1.0 + c1 + c2 - c3),
        ]
    }

    /// First violated eigenvalue expression, if any.
    pub fn physicality_violation(&self) -> Option<Error> {
        self.eigenvalue_expressions()
            .into_iter()
            .find(|&(_, v)| v < -PHYSICALITY_TOL)
            .map(|(expression, v)| Error::Unphysical { expression, value: v / 4.0 })
    }

    pub fn is_physical(&self) -> bool {
        self.physicality_violation().is_none()
    }

    /// A physical state with the same magnitudes, trying sign patterns in a
    /// fixed order starting with the identity.
    pub fn physical_sign_pattern(&self) -> Option<XStateParams> {
        let [a, b, c] = self.c;
        (0..8u8)
            .map(|mask| {
                let s = |bit: u8| if mask & bit == 0 { 1.0 } else { -1.0 };
                [a * s(1), b * s(2), c * s(4)]
            })
            .find_map(|[x, y, z]| XStateParams::new(x, y, z).ok())
    }
}

impl fmt::Display for Couplings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

/// Couplings of an actual quantum state: all four eigenvalues of the
/// Bell-diagonal matrix are non-negative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XStateParams(Couplings);

impl XStateParams {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        Self::try_from(Couplings::new(c1, c2, c3)?)
    }

    pub fn couplings(&self) -> Couplings {
        self.0
    }
}

impl TryFrom<Couplings> for XStateParams {
    type Error = Error;

    fn try_from(c: Couplings) -> Result<Self> {
        match c.physicality_violation() {
            Some(e) => Err(e),
            None => Ok(Self(c)),
        }
    }
}

impl core::ops::Deref for XStateParams {
    type Target = Couplings;

    fn deref(&self) -> &Couplings {
        &self.0
    }
}

/// Named members of the family.
///
/// `Werner(a)` uses the sign convention `(a, -a, a)`, so `Werner(1)` is
/// `|Phi+>`. The four Bell states are the only physical sign patterns with
/// `|c_i| = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NamedState {
    Werner(f64),
    BellPhiPlus,
    BellPhiMinus,
    BellPsiPlus,
    BellPsiMinus,
}

impl NamedState {
    pub fn params(&self) -> Result<XStateParams> {
        match *self {
            NamedState::Werner(a) => XStateParams::new(a, -a, a),
            NamedState::BellPhiPlus => XStateParams::new(1.0, -1.0, 1.0),
            NamedState::BellPhiMinus => XStateParams::new(-1.0, 1.0, 1.0),
            NamedState::BellPsiPlus => XStateParams::new(1.0, 1.0, -1.0),
            NamedState::BellPsiMinus => XStateParams::new(-1.0, -1.0, -1.0),
        }
    }
}

impl FromStr for NamedState {
    type Err = Error;

    /// Accepts `bell_phi_plus`, `bell_phi_minus`, `bell_psi_plus`,
    /// `bell_psi_minus` and `werner(<alpha>)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownState(s.to_string());
        match s {
            "bell_phi_plus" => Ok(NamedState::BellPhiPlus),
            "bell_phi_minus" => Ok(NamedState::BellPhiMinus),
            "bell_psi_plus" => Ok(NamedState::BellPsiPlus),
            "bell_psi_minus" => Ok(NamedState::BellPsiMinus),
            _ => {
                let alpha = s
                    .strip_prefix("werner(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(unknown)?
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| unknown())?;
                Ok(NamedState::Werner(alpha))
            }
        }
    }
}

/// Shorthand for [`NamedState::from_str`] followed by [`NamedState::params`].
pub fn named_state(name: &str) -> Result<XStateParams> {
    name.parse::<NamedState>()?.params()
}

/// Pauli-basis coordinates of a two-qubit state:
/// `rho = 1/4 (I + sum x_i s_i (x) I + sum y_j I (x) s_j + sum t_ij s_i (x) s_j)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochForm {
    /// Local Bloch vector of A.
    pub x: [f64; 3],
    /// Local Bloch vector of B.
    pub y: [f64; 3],
    /// Correlation matrix `t_ij = Tr[rho s_i (x) s_j]`.
    pub t: [[f64; 3]; 3],
}

impl BlochForm {
    pub fn zero() -> Self {
        Self { x: [0.0; 3], y: [0.0; 3], t: [[0.0; 3]; 3] }
    }

    /// Product of the maximally mixed marginal of A with correlations
    /// `diag(t)` and local vector `y` on B; the shape every Unruh-channel
    /// output has.
    pub fn diagonal(y: [f64; 3], t: [f64; 3]) -> Self {
        Self { x: [0.0; 3], y, t: [[t[0], 0.0, 0.0], [0.0, t[1], 0.0], [0.0, 0.0, t[2]]] }
    }

    pub fn x_norm_sq(&self) -> f64 {
        self.x.iter().map(|v| v * v).sum()
    }

    pub fn t_frobenius_sq(&self) -> f64 {
        self.t.iter().flatten().map(|v| v * v).sum()
    }

    /// `T T^t`.
    pub fn ttt(&self) -> Sym3 {
        Sym3::gram(&self.t)
    }

    /// Largest entrywise difference over `x`, `y` and `T`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let xs = self.x.iter().zip(&other.x);
        let ys = self.y.iter().zip(&other.y);
        let ts = self.t.iter().flatten().zip(other.t.iter().flatten());
        xs.chain(ys).chain(ts).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }
}

/// `1/4 (I + sum_i c_i s_i (x) s_i)`.
pub fn build_x_state(p: &XStateParams) -> DensityMatrix {
    let mut m = ComplexMatrix::identity(4);
    for (i, &c) in p.as_array().iter().enumerate() {
        let term = tensor(&pauli(i + 1), &pauli(i + 1)).scale(C64::new(c, 0.0));
        m = &m + &term;
    }
    DensityMatrix::new(m.scale(C64::new(0.25, 0.0))).expect("physical parameters give a valid state")
}

fn expectation(rho: &ComplexMatrix, op: &ComplexMatrix) -> C64 {
    // Tr[rho op] without forming the product
    let n = rho.rows();
    let mut acc = C64::new(0.0, 0.0);
    for a in 0..n {
        for b in 0..n {
            acc += rho[(a, b)] * op[(b, a)];
        }
    }
    acc
}

/// Pauli-basis coordinates of a 4x4 density matrix.
pub fn bloch_decompose(rho: &DensityMatrix) -> Result<BlochForm> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() });
    }
    let m = rho.matrix();
    let mut b = BlochForm::zero();
    for i in 0..3 {
        b.x[i] = expectation(m, &tensor(&pauli(i + 1), &pauli(0))).re;
        b.y[i] = expectation(m, &tensor(&pauli(0), &pauli(i + 1))).re;
        for j in 0..3 {
            let v = expectation(m, &tensor(&pauli(i + 1), &pauli(j + 1)));
            debug_assert!(v.im.abs() <= 1e-12);
            b.t[i][j] = v.re;
        }
    }
    Ok(b)
}

/// Inverse of [`bloch_decompose`]; fails if the result is not a state.
pub fn bloch_reconstruct(b: &BlochForm) -> Result<DensityMatrix> {
    let mut m = ComplexMatrix::identity(4);
    let add = |m: &mut ComplexMatrix, coeff: f64, i: usize, j: usize| {
        if coeff != 0.0 {
            *m = &*m + &tensor(&pauli(i), &pauli(j)).scale(C64::new(coeff, 0.0));
        }
    };
    for i in 0..3 {
        add(&mut m, b.x[i], i + 1, 0);
        add(&mut m, b.y[i], 0, i + 1);
        for j in 0..3 {
            add(&mut m, b.t[i][j], i + 1, j + 1);
        }
    }
    DensityMatrix::new(m.scale(C64::new(0.25, 0.0)))
}
