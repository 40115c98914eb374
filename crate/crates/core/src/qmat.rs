//! Small dense complex matrices: Kronecker products, partial traces,
//! Hilbert-Schmidt norms and eigenvalue kernels.
//!
//! Everything in this artifact lives in dimension 2, 3, 4 or 8, so the
//! kernels are plain loops over row-major storage.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64 as C64;

use crate::{Error, Result};

/// Hermiticity and unit-trace tolerance for density matrices.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Lowest admissible eigenvalue of a density matrix.
pub const PSD_TOL: f64 = -1e-10;

const C0: C64 = C64::new(0.0, 0.0);
const C1: C64 = C64::new(1.0, 0.0);
const CI: C64 = C64::new(0.0, 1.0);

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![C0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C1;
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_rows(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::from_rows(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn diag(entries: &[f64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = C64::new(x, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&z| z * s).collect() }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        out
    }

    /// `self * rho * self^dagger`.
    pub fn conjugate(&self, rho: &Self) -> Self {
        self.matmul(rho).matmul(&self.adjoint())
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from Hermiticity.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

/// Pauli matrix by index: 0 = identity, 1 = X, 2 = Y, 3 = Z.
pub fn pauli(index: usize) -> ComplexMatrix {
    let data = match index {
        0 => [C1, C0, C0, C1],
        1 => [C0, C1, C1, C0],
        2 => [C0, -CI, CI, C0],
        3 => [C1, C0, C0, -C1],
        _ => panic!("Pauli index {index} out of range"),
    };
    ComplexMatrix { rows: 2, cols: 2, data: data.to_vec() }
}

/// Kronecker product; `a` indexes the major (left) factor.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for ai in 0..a.rows {
        for aj in 0..a.cols {
            let s = a[(ai, aj)];
            for bi in 0..b.rows {
                for bj in 0..b.cols {
                    out[(ai * b.rows + bi, aj * b.cols + bj)] = s * b[(bi, bj)];
                }
            }
        }
    }
    out
}

/// Squared Hilbert-Schmidt (Frobenius) norm.
pub fn hs_norm_sq(a: &ComplexMatrix) -> f64 {
    a.data.iter().map(|z| z.norm_sqr()).sum()
}

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2, 4 or 8.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::DimensionMismatch { expected: mat.rows, found: mat.cols });
        }
        if !matches!(mat.rows, 2 | 4 | 8) {
            return Err(Error::DimensionMismatch { expected: 4, found: mat.rows });
        }
        if mat.data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let defect = mat.hermitian_defect();
        if defect > HERMITIAN_TOL {
            return Err(Error::NotHermitian(defect));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > HERMITIAN_TOL || tr.im.abs() > HERMITIAN_TOL {
            return Err(Error::InvalidTrace(tr.re));
        }
        let lowest = hermitian_eigenvalues(&mat)[0];
        if lowest < PSD_TOL {
            return Err(Error::NotPositive(lowest));
        }
        Ok(Self { mat })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.mat)
    }
}

/// Traces out every subsystem not listed in `keep`.
///
/// `dims` lists the subsystem dimensions with the first entry as the most
/// significant tensor factor. The kept subsystems stay in their original
/// order.
pub fn partial_trace(rho: &DensityMatrix, dims: &[usize], keep: &[usize]) -> Result<DensityMatrix> {
    let total: usize = dims.iter().product();
    if total != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), found: total });
    }
    if keep.is_empty() {
        return Err(Error::InvalidSubsystems("nothing kept"));
    }
    let mut kept = vec![false; dims.len()];
    for &k in keep {
        if k >= dims.len() {
            return Err(Error::InvalidSubsystems("index out of range"));
        }
        if kept[k] {
            return Err(Error::InvalidSubsystems("repeated index"));
        }
        kept[k] = true;
    }
    if kept.iter().all(|&k| k) {
        return Err(Error::InvalidSubsystems("nothing traced out"));
    }

    let kept_dims: Vec<usize> = (0..dims.len()).filter(|&s| kept[s]).map(|s| dims[s]).collect();
    let traced_dims: Vec<usize> = (0..dims.len()).filter(|&s| !kept[s]).map(|s| dims[s]).collect();
    let kept_total: usize = kept_dims.iter().product();
    let traced_total: usize = traced_dims.iter().product();

    // Reassemble a full flat index from (kept, traced) flat indices.
    let join = |k: usize, t: usize| -> usize {
        let mut k_digits = split_digits(k, &kept_dims);
        let mut t_digits = split_digits(t, &traced_dims);
        k_digits.reverse();
        t_digits.reverse();
        let mut flat = 0;
        for (s, &d) in dims.iter().enumerate() {
            let digit = if kept[s] { k_digits.pop() } else { t_digits.pop() };
            flat = flat * d + digit.unwrap_or(0);
        }
        flat
    };

    let m = rho.matrix();
    let mut out = ComplexMatrix::zeros(kept_total, kept_total);
    for i in 0..kept_total {
        for j in 0..kept_total {
            let mut acc = C0;
            for t in 0..traced_total {
                acc += m[(join(i, t), join(j, t))];
            }
            out[(i, j)] = acc;
        }
    }
    DensityMatrix::new(out)
}

fn split_digits(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for (slot, &d) in digits.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    digits
}

/// Real symmetric 3x3 matrix, mirrored from its upper triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sym3 {
    m: [[f64; 3]; 3],
}

impl Sym3 {
    /// Upper triangle in the order `a00, a01, a02, a11, a12, a22`.
    pub fn from_upper(u: [f64; 6]) -> Self {
        let [a00, a01, a02, a11, a12, a22] = u;
        Self { m: [[a00, a01, a02], [a01, a11, a12], [a02, a12, a22]] }
    }

    pub fn diagonal(d: [f64; 3]) -> Self {
        Self::from_upper([d[0], 0.0, 0.0, d[1], 0.0, d[2]])
    }

    pub fn zero() -> Self {
        Self::diagonal([0.0; 3])
    }

    /// `a a^T` for a general real 3x3 matrix `a`.
    pub fn gram(a: &[[f64; 3]; 3]) -> Self {
        let dot = |i: usize, j: usize| (0..3).map(|k| a[i][k] * a[j][k]).sum::<f64>();
        Self::from_upper([dot(0, 0), dot(0, 1), dot(0, 2), dot(1, 1), dot(1, 2), dot(2, 2)])
    }

    /// `v v^T`.
    pub fn outer(v: &[f64; 3]) -> Self {
        Self::from_upper([
            v[0] * v[0],
            v[0] * v[1],
            v[0] * v[2],
            v[1] * v[1],
            v[1] * v[2],
            v[2] * v[2],
        ])
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    pub fn rows(&self) -> &[[f64; 3]; 3] {
        &self.m
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// `v^T M v`.
    pub fn quadratic_form(&self, v: &[f64; 3]) -> f64 {
        (0..3).map(|i| (0..3).map(|j| v[i] * self.m[i][j] * v[j]).sum::<f64>()).sum()
    }

    pub fn eigenvalues(&self) -> [f64; 3] {
        eig_sym3(self)
    }
}

impl Add for Sym3 {
    type Output = Sym3;

    fn add(self, rhs: Sym3) -> Sym3 {
        let mut m = self.m;
        for (row, r) in m.iter_mut().zip(&rhs.m) {
            for (x, y) in row.iter_mut().zip(r) {
                *x += y;
            }
        }
        Sym3 { m }
    }
}

/// Eigenvalues of a real symmetric 3x3 matrix, ascending.
///
/// Uses the trigonometric solution of the characteristic cubic. When the
/// normalized discriminant `1 - r^2` is within 1e-12 of zero (two roots
/// nearly coincide and `acos` loses accuracy) it falls back to Jacobi
/// rotations.
pub fn eig_sym3(a: &Sym3) -> [f64; 3] {
    let m = &a.m;
    let off = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    if off == 0.0 {
        let mut d = [m[0][0], m[1][1], m[2][2]];
        d.sort_by(f64::total_cmp);
        return d;
    }
    let q = a.trace() / 3.0;
    let p2 = (m[0][0] - q).powi(2) + (m[1][1] - q).powi(2) + (m[2][2] - q).powi(2) + 2.0 * off;
    let p = (p2 / 6.0).sqrt();
    let mut b = *a;
    for (i, row) in b.m.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = (*x - if i == j { q } else { 0.0 }) / p;
        }
    }
    let r = b.det() / 2.0;
    if 1.0 - r * r <= 1e-12 {
        let v = jacobi_eigenvalues(&[m[0].to_vec(), m[1].to_vec(), m[2].to_vec()].concat(), 3);
        return [v[0], v[1], v[2]];
    }
    let phi = r.clamp(-1.0, 1.0).acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * PI / 3.0).cos();
    let mid = 3.0 * q - hi - lo;
    let mut out = [lo, mid, hi];
    out.sort_by(f64::total_cmp);
    out
}

/// Eigenvalues of a real symmetric `n x n` matrix (row-major) by cyclic
/// Jacobi rotations, ascending.
pub fn jacobi_eigenvalues(a: &[f64], n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    let mut m = a.to_vec();
    let scale = m.iter().map(|x| x.abs()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i * n + j] * m[i * n + j])
            .sum();
        if off.sqrt() <= 1e-18 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = m[k * n + p];
                    let akq = m[k * n + q];
                    m[k * n + p] = c * akp - s * akq;
                    m[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = m[p * n + k];
                    let aqk = m[q * n + k];
                    m[p * n + k] = c * apk - s * aqk;
                    m[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Works on the real symmetric embedding `[[Re, -Im], [Im, Re]]`, whose
/// spectrum is the Hermitian spectrum with every eigenvalue doubled.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Vec<f64> {
    assert!(h.is_square());
    let n = h.rows;
    let big = 2 * n;
    let mut emb = vec![0.0; big * big];
    for i in 0..n {
        for j in 0..n {
            // symmetrize so round-off in the input cannot leak in
            let z = (h[(i, j)] + h[(j, i)].conj()) * 0.5;
            emb[i * big + j] = z.re;
            emb[(i + n) * big + (j + n)] = z.re;
            emb[i * big + (j + n)] = -z.im;
            emb[(i + n) * big + j] = z.im;
        }
    }
    jacobi_eigenvalues(&emb, big).into_iter().step_by(2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        assert_eq!(tensor(&pauli(0), &pauli(0)), ComplexMatrix::identity(4));
    }

    #[test]
    fn tensor_zz_is_diagonal() {
        assert_eq!(tensor(&pauli(3), &pauli(3)), ComplexMatrix::diag(&[1.0, -1.0, -1.0, 1.0]));
    }

    #[test]
    fn tensor_xy_hand_multiplied() {
        // X (x) Y = [[0, Y], [Y, 0]] with Y = [[0, -i], [i, 0]]
        let mut expected = ComplexMatrix::zeros(4, 4);
        expected[(0, 3)] = c(0.0, -1.0);
        expected[(1, 2)] = c(0.0, 1.0);
        expected[(2, 1)] = c(0.0, -1.0);
        expected[(3, 0)] = c(0.0, 1.0);
        assert_eq!(tensor(&pauli(1), &pauli(2)), expected);
    }

    #[test]
    fn tensor_is_associative() {
        let a = &pauli(1) + &pauli(2).scale(c(0.5, 0.0));
        let b = pauli(2);
        let d = &pauli(3) + &pauli(0).scale(c(0.0, 0.25));
        assert_eq!(tensor(&tensor(&a, &b), &d), tensor(&a, &tensor(&b, &d)));
    }

    #[test]
    fn hs_norms() {
        assert_eq!(hs_norm_sq(&ComplexMatrix::zeros(4, 4)), 0.0);
        assert_eq!(hs_norm_sq(&ComplexMatrix::identity(4)), 4.0);
        assert_eq!(hs_norm_sq(&tensor(&pauli(1), &pauli(1))), 4.0);
    }

    #[test]
    fn eig_sym3_diagonal_is_exact() {
        assert_eq!(eig_sym3(&Sym3::diagonal([0.3, -1.0, 0.2])), [-1.0, 0.2, 0.3]);
        assert_eq!(eig_sym3(&Sym3::zero()), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn eig_sym3_matches_jacobi_and_invariants() {
        let m = Sym3::from_upper([2.0, -0.3, 0.7, 1.1, 0.05, -0.4]);
        let e = eig_sym3(&m);
        let flat: Vec<f64> = m.rows().iter().flatten().copied().collect();
        let j = jacobi_eigenvalues(&flat, 3);
        for k in 0..3 {
            assert!((e[k] - j[k]).abs() < 1e-12, "{e:?} vs {j:?}");
        }
        assert!((e.iter().sum::<f64>() - m.trace()).abs() < 1e-12);
        assert!((e.iter().product::<f64>() - m.det()).abs() < 1e-10);
    }

    #[test]
    fn eig_sym3_near_degenerate_uses_fallback() {
        // two equal eigenvalues after an orthogonal rotation
        let (cs, sn) = (0.6f64, 0.8f64);
        let d = [0.5, 0.5, 0.2];
        let rot = [[cs, -sn, 0.0], [sn, cs, 0.0], [0.0, 0.0, 1.0]];
        let mut full = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                full[i][j] = (0..3).map(|k| rot[i][k] * d[k] * rot[j][k]).sum();
            }
        }
        let m = Sym3::from_upper([full[0][0], full[0][1], full[0][2], full[1][1], full[1][2], full[2][2]]);
        let e = eig_sym3(&m);
        assert!((e[0] - 0.2).abs() < 1e-12 && (e[1] - 0.5).abs() < 1e-12 && (e[2] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn hermitian_eigenvalues_of_pauli_y() {
        let e = hermitian_eigenvalues(&pauli(2));
        assert!((e[0] + 1.0).abs() < 1e-14 && (e[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn density_matrix_rejections() {
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::identity(4)),
            Err(Error::InvalidTrace(_))
        ));
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::diag(&[1.5, -0.5])),
            Err(Error::NotPositive(_))
        ));
        let mut m = ComplexMatrix::diag(&[0.5, 0.5]);
        m[(0, 1)] = c(0.1, 0.0);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotHermitian(_))));
        assert!(matches!(
            DensityMatrix::new(ComplexMatrix::diag(&[1.0 / 3.0; 3])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn qubit(p0: f64, coherence: C64) -> ComplexMatrix {
        let mut m = ComplexMatrix::diag(&[p0, 1.0 - p0]);
        m[(0, 1)] = coherence;
        m[(1, 0)] = coherence.conj();
        m
    }

    #[test]
    fn partial_trace_of_product_state() {
        let a = qubit(0.7, c(0.1, -0.2));
        let b = qubit(0.4, c(-0.3, 0.1));
        let rho = DensityMatrix::new(tensor(&a, &b)).unwrap();
        let ra = partial_trace(&rho, &[2, 2], &[0]).unwrap();
        let rb = partial_trace(&rho, &[2, 2], &[1]).unwrap();
        assert!(ra.matrix().max_abs_diff(&a) < 1e-15);
        assert!(rb.matrix().max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn partial_trace_keeps_subsystem_order() {
        let a = qubit(0.9, c(0.05, 0.0));
        let b = qubit(0.6, c(0.0, 0.2));
        let d = qubit(0.3, c(0.1, 0.1));
        let rho = DensityMatrix::new(tensor(&tensor(&a, &b), &d)).unwrap();
        let ad = partial_trace(&rho, &[2, 2, 2], &[0, 2]).unwrap();
        assert!(ad.matrix().max_abs_diff(&tensor(&a, &d)) < 1e-15);
        // keep order in the argument is irrelevant
        let da = partial_trace(&rho, &[2, 2, 2], &[2, 0]).unwrap();
        assert_eq!(ad, da);
    }

    #[test]
    fn partial_trace_composes() {
        let a = qubit(0.9, c(0.05, 0.0));
        let b = qubit(0.6, c(0.0, 0.2));
        let d = qubit(0.3, c(0.1, 0.1));
        let rho = DensityMatrix::new(tensor(&tensor(&a, &b), &d)).unwrap();
        let two_step = partial_trace(&partial_trace(&rho, &[2, 2, 2], &[0, 1]).unwrap(), &[2, 2], &[0]).unwrap();
        let one_step = partial_trace(&rho, &[2, 2, 2], &[0]).unwrap();
        assert!(two_step.matrix().max_abs_diff(one_step.matrix()) <= 1e-14);
    }

    #[test]
    fn partial_trace_rejects_bad_selections() {
        let rho = DensityMatrix::new(ComplexMatrix::diag(&[0.25; 4])).unwrap();
        assert!(matches!(partial_trace(&rho, &[2, 4], &[0]), Err(Error::DimensionMismatch { .. })));
        assert!(partial_trace(&rho, &[2, 2], &[]).is_err());
        assert!(partial_trace(&rho, &[2, 2], &[0, 1]).is_err());
        assert!(partial_trace(&rho, &[2, 2], &[2]).is_err());
    }
}
