//! The `d`-dimensional system in conserved variables
//! `w = (w̄, w_{d+1})`, `w̄ = 4p ū sqrt(1 + |ū|²)`, `w_{d+1} = p(3 + 4|ū|²)`,
//! its fluxes and the eigensystem of the normal flux Jacobian.
//!
//! Eigenvectors are assembled in the frame `(n̄, t̄_2, .., t̄_d)`:
//! `r0_i = t_i - α_i (e + λ0 t_1)`, `r± = λ± t_1 + α± Σ w_{t_i} t_i + e`, with
//! `e` the energy unit vector and `λ± = -p̄/2 ± sqrt(p̄²/4 - q̄)`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};
use crate::math::sqrt;

/// Momentum `w̄` and energy `w_{d+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConservedVector<const D: usize> {
    pub momentum: [f64; D],
    pub energy: f64,
}

#[inline]
fn dot<const D: usize>(a: &[f64; D], b: &[f64; D]) -> f64 {
    let mut s = 0.0;
    for i in 0..D {
        s += a[i] * b[i];
    }
    s
}

impl<const D: usize> ConservedVector<D> {
    pub const ZERO: Self = Self { momentum: [0.0; D], energy: 0.0 };

    pub fn new(momentum: [f64; D], energy: f64) -> Result<Self> {
        let w = Self { momentum, energy };
        if w.is_admissible() {
            Ok(w)
        } else {
            Err(Error::StateSpaceViolation { energy, momentum: sqrt(dot(&momentum, &momentum)) })
        }
    }

    /// `(4p ū sqrt(1 + |ū|²), p(3 + 4|ū|²))`.
    pub fn from_primitive(p: f64, u: [f64; D]) -> Result<Self> {
        if !(p > 0.0) || !p.is_finite() || u.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidState { pressure: p });
        }
        let uu = dot(&u, &u);
        let g = sqrt(1.0 + uu);
        Ok(Self { momentum: u.map(|ui| 4.0 * p * ui * g), energy: p * (3.0 + 4.0 * uu) })
    }

    /// `|w̄| < w_{d+1}` with finite entries.
    #[inline]
    pub fn is_admissible(&self) -> bool {
        self.energy.is_finite()
            && self.momentum.iter().all(|x| x.is_finite())
            && dot(&self.momentum, &self.momentum) < self.energy * self.energy
    }

    /// Component `i` in the order `w_1, .., w_d, w_{d+1}`.
    #[inline]
    pub fn get(&self, i: usize) -> f64 {
        if i < D {
            self.momentum[i]
        } else {
            self.energy
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: f64) {
        if i < D {
            self.momentum[i] = value;
        } else {
            self.energy = value;
        }
    }

    pub fn to_vec(&self) -> Vec<f64> {
        (0..=D).map(|i| self.get(i)).collect()
    }

    pub fn from_slice(w: &[f64]) -> Result<Self> {
        if w.len() != D + 1 {
            return Err(Error::InvalidParameter("conserved vector length must be d + 1"));
        }
        let mut out = Self::ZERO;
        for (i, &x) in w.iter().enumerate() {
            out.set(i, x);
        }
        Ok(out)
    }

    #[inline]
    pub fn axpy(&self, s: f64, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..D {
            out.momentum[i] += s * other.momentum[i];
        }
        out.energy += s * other.energy;
        out
    }

    /// `p = (sqrt(4w_{d+1}² - 3|w̄|²) - w_{d+1})/3`, evaluated without cancellation.
    #[inline]
    pub(crate) fn pressure_unchecked(&self) -> f64 {
        let e = self.energy;
        let m2 = dot(&self.momentum, &self.momentum);
        let root = sqrt(4.0 * e * e - 3.0 * m2);
        (e * e - m2) / (root + e)
    }
}

/// Pressure and four-velocity of an admissible state.
pub fn primitive_from_conserved<const D: usize>(w: &ConservedVector<D>) -> Result<(f64, [f64; D])> {
    let p = pressure(w)?;
    let scale = sqrt(4.0 * p * (w.energy + p));
    Ok((p, w.momentum.map(|x| x / scale)))
}

pub fn pressure<const D: usize>(w: &ConservedVector<D>) -> Result<f64> {
    if !w.is_admissible() {
        return Err(Error::StateSpaceViolation {
            energy: w.energy,
            momentum: sqrt(dot(&w.momentum, &w.momentum)),
        });
    }
    let p = w.pressure_unchecked();
    if p > 0.0 {
        Ok(p)
    } else {
        Err(Error::InvalidState { pressure: p })
    }
}

/// `∂p/∂w_j = -w_j/(w_{d+1} + 3p)`, `∂p/∂w_{d+1} = (w_{d+1} - p)/(w_{d+1} + 3p)`.
pub fn pressure_gradient<const D: usize>(w: &ConservedVector<D>) -> Result<ConservedVector<D>> {
    let p = pressure(w)?;
    let den = w.energy + 3.0 * p;
    Ok(ConservedVector { momentum: w.momentum.map(|x| -x / den), energy: (w.energy - p) / den })
}

#[inline]
fn flux_with_pressure<const D: usize>(w: &ConservedVector<D>, p: f64, n: &[f64; D]) -> ConservedVector<D> {
    let wn = dot(&w.momentum, n);
    let k = wn / (w.energy + p);
    let mut momentum = [0.0; D];
    for i in 0..D {
        momentum[i] = p * n[i] + k * w.momentum[i];
    }
    ConservedVector { momentum, energy: wn }
}

/// Flux in coordinate direction `axis` (zero-based):
/// `p e_k + w̄ w_k/(w_{d+1} + p) + w_k e_{d+1}`.
pub fn flux<const D: usize>(w: &ConservedVector<D>, axis: usize) -> Result<ConservedVector<D>> {
    if axis >= D {
        return Err(Error::InvalidParameter("flux direction out of range"));
    }
    let mut n = [0.0; D];
    n[axis] = 1.0;
    normal_flux(w, &n)
}

/// `Σ_k n_k f_k(w)`.
pub fn normal_flux<const D: usize>(w: &ConservedVector<D>, n: &[f64; D]) -> Result<ConservedVector<D>> {
    let p = pressure(w)?;
    Ok(flux_with_pressure(w, p, n))
}

/// Normal flux and `max |λ|` for a state already known to be admissible
/// with pressure `p`.
#[inline]
pub(crate) fn flux_and_speed<const D: usize>(
    w: &ConservedVector<D>,
    p: f64,
    n: &[f64; D],
) -> (ConservedVector<D>, f64) {
    let f = flux_with_pressure(w, p, n);
    (f, max_speed_with_pressure(w, p, n))
}

#[inline]
fn max_speed_with_pressure<const D: usize>(w: &ConservedVector<D>, p: f64, n: &[f64; D]) -> f64 {
    let (lm, l0, lp) = speeds_with_pressure(w, p, n);
    lm.abs().max(l0.abs()).max(lp.abs())
}

/// `(λ-, λ0, λ+)` from the four-velocity:
/// `λ± = (2u_n sqrt(1+|ū|²) ± sqrt(3 + 2(|ū|² - u_n²)))/(3 + 2|ū|²)`, `λ0 = u_n/sqrt(1+|ū|²)`.
#[inline]
fn speeds_with_pressure<const D: usize>(w: &ConservedVector<D>, p: f64, n: &[f64; D]) -> (f64, f64, f64) {
    // ū = w̄ / sqrt(4p(E + p))
    let scale = 4.0 * p * (w.energy + p);
    let uu = dot(&w.momentum, &w.momentum) / scale;
    let un = dot(&w.momentum, n) / sqrt(scale);
    let g = sqrt(1.0 + uu);
    let den = 3.0 + 2.0 * uu;
    let tangential = (uu - un * un).max(0.0);
    let root = sqrt(3.0 + 2.0 * tangential);
    ((2.0 * un * g - root) / den, un / g, (2.0 * un * g + root) / den)
}

/// Characteristic speeds `(λ-, λ0, λ+)` in the unit direction `n`.
pub fn characteristic_speeds<const D: usize>(w: &ConservedVector<D>, n: &[f64; D]) -> Result<(f64, f64, f64)> {
    let p = pressure(w)?;
    Ok(speeds_with_pressure(w, p, n))
}

/// `max(|λ-|, |λ0|, |λ+|)`.
pub fn max_speed<const D: usize>(w: &ConservedVector<D>, n: &[f64; D]) -> Result<f64> {
    let p = pressure(w)?;
    Ok(max_speed_with_pressure(w, p, n))
}

/// Orthonormal completion `t̄_2, .., t̄_d` of the unit normal: coordinate
/// axes taken in order of increasing `|n_k|` (ties by index), then
/// Gram-Schmidt.
pub fn tangent_frame<const D: usize>(n: &[f64; D]) -> Result<Vec<[f64; D]>> {
    let norm = sqrt(dot(n, n));
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(Error::Domain("normal must be non-zero"));
    }
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::Domain("normal must have unit length"));
    }
    let mut order: Vec<usize> = (0..D).collect();
    order.sort_by(|&i, &j| n[i].abs().total_cmp(&n[j].abs()).then(i.cmp(&j)));
    let mut basis: Vec<[f64; D]> = vec![*n];
    for &k in order.iter().take(D - 1) {
        let mut t = [0.0; D];
        t[k] = 1.0;
        // two passes keep the frame orthonormal to round-off
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&t, b);
                for i in 0..D {
                    t[i] -= c * b[i];
                }
            }
        }
        let len = sqrt(dot(&t, &t));
        basis.push(t.map(|x| x / len));
    }
    basis.remove(0);
    Ok(basis)
}

/// Dense row-major matrix for the `(d+1) × (d+1)` eigensystem.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = 1.0;
        for c in 0..n {
            let pivot = (c..n).max_by(|&i, &j| a[i * n + c].abs().total_cmp(&a[j * n + c].abs())).unwrap();
            if a[pivot * n + c] == 0.0 {
                return 0.0;
            }
            if pivot != c {
                for k in 0..n {
                    a.swap(c * n + k, pivot * n + k);
                }
                det = -det;
            }
            let d = a[c * n + c];
            det *= d;
            for r in c + 1..n {
                let f = a[r * n + c] / d;
                for k in c..n {
                    a[r * n + k] -= f * a[c * n + k];
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

/// Eigensystem of `A_n = Σ n_k ∂f_k/∂w`.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition<const D: usize> {
    pub normal: [f64; D],
    pub tangents: Vec<[f64; D]>,
    /// `λ-, λ0 (d-1 times), λ+`.
    pub eigenvalues: Vec<f64>,
    /// Right eigenvectors as columns, in eigenvalue order.
    pub right: Matrix,
    /// Left eigenvectors as rows, normalised so that `L R = I`.
    pub left: Matrix,
}

impl<const D: usize> EigenDecomposition<D> {
    pub fn lambda_minus(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_plus(&self) -> f64 {
        self.eigenvalues[D]
    }

    /// `λ0`; `None` for `d = 1`.
    pub fn lambda_zero(&self) -> Option<f64> {
        (D > 1).then(|| self.eigenvalues[1])
    }

    pub fn eigenvalue_matrix(&self) -> Matrix {
        Matrix::diagonal(&self.eigenvalues)
    }
}

/// Relative gap below which the eigenvector normalisation is refused.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

pub fn eigen<const D: usize>(w: &ConservedVector<D>, n: &[f64; D]) -> Result<EigenDecomposition<D>> {
    let p = pressure(w)?;
    let tangents = tangent_frame(n)?;
    let e = w.energy;
    let h = e + p;
    let den = e + 3.0 * p;

    // momentum and pressure derivatives in the frame (n̄, t̄_2, ..)
    let wn = dot(&w.momentum, n);
    let wt: Vec<f64> = tangents.iter().map(|t| dot(&w.momentum, t)).collect();
    let dp_e = (e - p) / den;
    let dp_n = -wn / den;
    let dp_t: Vec<f64> = wt.iter().map(|x| -x / den).collect();

    let tangential: f64 = wt.iter().zip(&dp_t).map(|(a, b)| a * b).sum();
    let p_bar = wn / (h * h) * (wn * dp_n + tangential) - dp_n - 2.0 * wn / h;
    let q_bar = (1.0 + dp_e) * wn * wn / (h * h) - dp_e - tangential / h;
    let disc = 0.25 * p_bar * p_bar - q_bar;
    if !(disc > 0.0) {
        return Err(Error::DegenerateFrame { determinant: disc });
    }
    let root = sqrt(disc);
    let lm = -0.5 * p_bar - root;
    let lp = -0.5 * p_bar + root;
    let l0 = wn / h;
    if D > 1 && ((lp - l0) < DEGENERACY_TOLERANCE || (l0 - lm) < DEGENERACY_TOLERANCE) {
        return Err(Error::DegenerateFrame { determinant: (lp - l0).min(l0 - lm) });
    }

    let alpha: Vec<f64> = dp_t.iter().map(|x| x / (dp_e + l0 * dp_n)).collect();
    let alpha_pm = |lam: f64| h / (h * h - wn * wn) * (1.0 - wn / h * lam);
    let (am, ap) = (alpha_pm(lm), alpha_pm(lp));
    let s: f64 = alpha.iter().zip(&wt).map(|(a, b)| a * b).sum();
    let d_norm = (lm + am * l0 * s) * (1.0 + ap * s) - (lp + ap * l0 * s) * (1.0 + am * s);
    if !(d_norm.abs() > DEGENERACY_TOLERANCE) {
        return Err(Error::DegenerateFrame { determinant: d_norm });
    }
    let beta = ap * (lm - l0) + am * (l0 - lp);

    // embed frame vectors into R^{d+1}
    let lift = |v: &[f64; D]| -> Vec<f64> {
        let mut out = vec![0.0; D + 1];
        out[..D].copy_from_slice(v);
        out
    };
    let t1 = lift(n);
    let ts: Vec<Vec<f64>> = tangents.iter().map(lift).collect();
    let mut energy = vec![0.0; D + 1];
    energy[D] = 1.0;
    let combine = |terms: &[(f64, &[f64])]| -> Vec<f64> {
        let mut out = vec![0.0; D + 1];
        for (c, v) in terms {
            for i in 0..=D {
                out[i] += c * v[i];
            }
        }
        out
    };

    let m = D - 1;
    let mut right = Matrix::zeros(D + 1, D + 1);
    let mut left = Matrix::zeros(D + 1, D + 1);
    let mut set_col = |j: usize, v: &[f64]| {
        for i in 0..=D {
            right[(i, j)] = v[i];
        }
    };

    let tangential_sum = |c: f64| -> Vec<f64> {
        let mut out = vec![0.0; D + 1];
        for (t, wti) in ts.iter().zip(&wt) {
            for i in 0..=D {
                out[i] += c * wti * t[i];
            }
        }
        out
    };
    let r_minus = combine(&[(lm, &t1), (1.0, &tangential_sum(am)), (1.0, &energy)]);
    let r_plus = combine(&[(lp, &t1), (1.0, &tangential_sum(ap)), (1.0, &energy)]);
    set_col(0, &r_minus);
    for i in 0..m {
        let r0 = combine(&[(1.0, &ts[i]), (-alpha[i], &energy), (-alpha[i] * l0, &t1)]);
        set_col(1 + i, &r0);
    }
    set_col(D, &r_plus);

    let inv = 1.0 / d_norm;
    let mut set_row = |i: usize, v: &[f64]| {
        for j in 0..=D {
            left[(i, j)] = v[j];
        }
    };
    let alpha_sum = |c: f64| -> Vec<f64> {
        let mut out = vec![0.0; D + 1];
        for (t, a) in ts.iter().zip(&alpha) {
            for i in 0..=D {
                out[i] += c * a * t[i];
            }
        }
        out
    };
    let l_minus = combine(&[
        (inv * (1.0 + ap * s), &t1),
        (inv, &alpha_sum(l0 - lp)),
        (-inv * (ap * l0 * s + lp), &energy),
    ]);
    let l_plus = combine(&[
        (-inv * (1.0 + am * s), &t1),
        (-inv, &alpha_sum(l0 - lm)),
        (inv * (am * l0 * s + lm), &energy),
    ]);
    set_row(0, &l_minus);
    for i in 0..m {
        let mut terms: Vec<(f64, &[f64])> = vec![
            (inv * wt[i] * (ap - am), &t1),
            (-inv * wt[i] * (ap * lm - am * lp), &energy),
        ];
        for j in 0..m {
            let kron = if i == j { d_norm } else { 0.0 };
            terms.push((inv * (kron - alpha[j] * wt[i] * beta), &ts[j]));
        }
        set_row(1 + i, &combine(&terms));
    }
    set_row(D, &l_plus);

    let mut eigenvalues = Vec::with_capacity(D + 1);
    eigenvalues.push(lm);
    eigenvalues.extend(core::iter::repeat_n(l0, m));
    eigenvalues.push(lp);

    Ok(EigenDecomposition { normal: *n, tangents, eigenvalues, right, left })
}

/// Central-difference Jacobian of the normal flux with steps
/// `rel_step · max(1, |w_j|)`.
pub fn flux_jacobian_fd<const D: usize>(w: &ConservedVector<D>, n: &[f64; D], rel_step: f64) -> Result<Matrix> {
    let mut a = Matrix::zeros(D + 1, D + 1);
    for j in 0..=D {
        let h = rel_step * w.get(j).abs().max(1.0);
        let mut plus = *w;
        let mut minus = *w;
        plus.set(j, w.get(j) + h);
        minus.set(j, w.get(j) - h);
        let fp = normal_flux(&plus, n)?;
        let fm = normal_flux(&minus, n)?;
        for i in 0..=D {
            a[(i, j)] = (fp.get(i) - fm.get(i)) / (2.0 * h);
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    const R3: f64 = 1.7320508075688772;

    #[test]
    fn primitive_examples() {
        let w = ConservedVector::new([0.0, 0.0], 3.0).unwrap();
        assert_eq!(primitive_from_conserved(&w).unwrap(), (1.0, [0.0, 0.0]));
        let w = ConservedVector::from_primitive(1.0, [1.0, 0.0]).unwrap();
        assert!((w.momentum[0] - 4.0 * 2f64.sqrt()).abs() < 1e-14 && w.energy == 7.0);
        let (p, u) = primitive_from_conserved(&w).unwrap();
        assert!((p - 1.0).abs() < 1e-15 && (u[0] - 1.0).abs() < 1e-15 && u[1] == 0.0);
        assert!(ConservedVector::new([3.0, 0.0], 3.0).is_err());
    }

    #[test]
    fn gradient_at_rest() {
        let w = ConservedVector::new([0.0, 0.0], 3.0).unwrap();
        let g = pressure_gradient(&w).unwrap();
        assert_eq!(g.momentum, [0.0, 0.0]);
        assert!((g.energy - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn flux_examples() {
        let rest = ConservedVector::new([0.0, 0.0], 3.0).unwrap();
        assert_eq!(flux(&rest, 0).unwrap().to_vec(), [1.0, 0.0, 0.0]);
        assert_eq!(flux(&rest, 1).unwrap().to_vec(), [0.0, 1.0, 0.0]);
        let w = ConservedVector::from_primitive(1.0, [1.0, 0.0]).unwrap();
        let f = flux(&w, 0).unwrap();
        assert!((f.momentum[0] - 5.0).abs() < 1e-14);
        assert_eq!(f.momentum[1], 0.0);
        assert_eq!(f.energy, w.momentum[0]);
        assert!(flux(&w, 2).is_err());
    }

    #[test]
    fn rest_eigenvalues() {
        let w = ConservedVector::new([0.0, 0.0], 3.0).unwrap();
        let e = eigen(&w, &[0.6, 0.8]).unwrap();
        assert!((e.lambda_minus() + 1.0 / R3).abs() < 1e-15);
        assert_eq!(e.lambda_zero(), Some(0.0));
        assert!((e.lambda_plus() - 1.0 / R3).abs() < 1e-15);
    }

    #[test]
    fn normal_flow_eigenvalues() {
        let w = ConservedVector::from_primitive(1.0, [1.0, 0.0]).unwrap();
        let e = eigen(&w, &[1.0, 0.0]).unwrap();
        let s2 = 2f64.sqrt();
        assert!((e.lambda_zero().unwrap() - 1.0 / s2).abs() < 1e-14);
        assert!((e.lambda_minus() - (2.0 * s2 - R3) / 5.0).abs() < 1e-14);
        assert!((e.lambda_plus() - (2.0 * s2 + R3) / 5.0).abs() < 1e-14);
        let (lm, l0, lp) = characteristic_speeds(&w, &[1.0, 0.0]).unwrap();
        assert!((lm - e.lambda_minus()).abs() < 1e-14 && (lp - e.lambda_plus()).abs() < 1e-14);
        assert!((l0 - 1.0 / s2).abs() < 1e-14);
    }

    #[test]
    fn frames() {
        assert_eq!(tangent_frame(&[1.0, 0.0]).unwrap(), [[0.0, 1.0]]);
        assert_eq!(tangent_frame(&[0.0, 0.0, 1.0]).unwrap(), [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]);
        assert!(tangent_frame(&[1.0]).unwrap().is_empty());
        assert!(tangent_frame(&[0.0, 0.0]).is_err());
    }

    #[test]
    fn radial_speeds_in_one_dimension() {
        let w = ConservedVector::from_primitive(2.0, [-0.5]).unwrap();
        let e = eigen(&w, &[1.0]).unwrap();
        let l = (&e.left) * (&e.right);
        assert!(l.sub(&Matrix::identity(2)).max_abs() < 1e-13);
        assert!(e.lambda_zero().is_none());
        let a = flux_jacobian_fd(&w, &[1.0], 1e-6).unwrap();
        assert!(((&a) * (&e.right)).sub(&(&e.right * &e.eigenvalue_matrix())).max_abs() < 1e-7 * a.norm_inf());
    }

    #[test]
    fn determinant() {
        let mut m = Matrix::identity(3);
        m[(0, 1)] = 2.0;
        m[(2, 0)] = 1.0;
        assert!((m.determinant() - 1.0).abs() < 1e-15);
        assert_eq!(Matrix::zeros(2, 2).determinant(), 0.0);
    }
}
