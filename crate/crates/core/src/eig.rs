//! Floating-point spectral kernel: cyclic Jacobi diagonalization for complex
//! Hermitian matrices. Deterministic sweep order and a fixed sweep cap keep
//! spectra reproducible across runs without external numeric dependencies.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use num_complex::Complex64;

pub const DEFAULT_EIG_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a Hermitian matrix, sorted ascending, plus the largest
/// off-diagonal magnitude left after diagonalization.
#[derive(Debug, Clone)]
pub struct FloatSpectrum {
    pub eigenvalues: Vec<f64>,
    pub residual: f64,
}

impl FloatSpectrum {
    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// Eigenvalues strictly below -tol, ascending.
    pub fn negatives(&self, tol: f64) -> Vec<f64> {
        self.eigenvalues.iter().copied().filter(|&v| v < -tol).collect()
    }
}

pub(crate) struct JacobiOutcome {
    pub values: Vec<f64>,
    /// Column-major eigenvectors aligned with `values`, if requested.
    pub vectors: Option<Vec<Complex64>>,
    pub residual: f64,
    pub converged: bool,
}

fn off_diag_max(a: &[Complex64], n: usize) -> f64 {
    let mut m: f64 = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            m = m.max(a[p * n + q].norm());
        }
    }
    m
}

/// Cyclic Jacobi on a Hermitian matrix given as a dense row-major buffer.
/// Rotations run over pairs (p,q), p<q, in row-major order every sweep.
pub(crate) fn jacobi_hermitian(
    matrix: &[Complex64],
    n: usize,
    tol_abs: f64,
    want_vectors: bool,
) -> JacobiOutcome {
    assert_eq!(matrix.len(), n * n);
    let mut a = matrix.to_vec();
    let mut v = if want_vectors {
        let mut id = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            id[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Some(id)
    } else {
        None
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diag_max(&a, n) <= tol_abs {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let beta = a[p * n + q];
                let b = beta.norm();
                if b == 0.0 {
                    continue;
                }
                // Phase that makes the 2x2 pivot block real, then a classic
                // real Jacobi rotation on it.
                let w = beta / b; // e^{i phi}
                let alpha = a[p * n + p].re;
                let gamma = a[q * n + q].re;
                let tau = (gamma - alpha) / (2.0 * b);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Unitary: R[p][p]=c, R[p][q]=s, R[q][p]=-s*conj(w), R[q][q]=c*conj(w).
                let rqp = -s * w.conj();
                let rqq = c * w.conj();
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * c + akq * rqp;
                    a[k * n + q] = akp * s + akq * rqq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * c + aqk * rqp.conj();
                    a[q * n + k] = apk * s + aqk * rqq.conj();
                }
                // Pin the pivot block to its exact rotated form.
                a[p * n + p] = Complex64::new(alpha - t * b, 0.0);
                a[q * n + q] = Complex64::new(gamma + t * b, 0.0);
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                if let Some(ref mut vm) = v {
                    for k in 0..n {
                        let vkp = vm[k * n + p];
                        let vkq = vm[k * n + q];
                        vm[k * n + p] = vkp * c + vkq * rqp;
                        vm[k * n + q] = vkp * s + vkq * rqq;
                    }
                }
            }
        }
    }
    let residual = off_diag_max(&a, n);
    if !converged && residual <= tol_abs {
        converged = true;
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = v.map(|vm| {
        let mut sorted = vec![Complex64::new(0.0, 0.0); n * n];
        for (new_col, &old_col) in order.iter().enumerate() {
            for k in 0..n {
                sorted[k * n + new_col] = vm[k * n + old_col];
            }
        }
        sorted
    });

    JacobiOutcome {
        values,
        vectors,
        residual,
        converged,
    }
}

/// Eigenvalues of an exactly Hermitian matrix, ascending, each within
/// tol·‖M‖∞ of a true eigenvalue. Errors on non-Hermitian input and on
/// failure to converge within the sweep cap.
pub fn hermitian_eigenvalues(m: &Matrix, tol: f64) -> Result<FloatSpectrum> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = m.rows();
    let buf: Vec<Complex64> = m.entries().iter().map(|z| z.to_complex64()).collect();
    let scale = m.norm_inf_f64().max(1.0);
    let outcome = jacobi_hermitian(&buf, n, tol * scale, false);
    if !outcome.converged {
        return Err(Error::NonConvergence {
            residual: outcome.residual,
        });
    }
    Ok(FloatSpectrum {
        eigenvalues: outcome.values,
        residual: outcome.residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{kron, Matrix};
    use crate::scalar::Scalar;

    fn assert_spectrum(m: &Matrix, expected: &[f64], tol: f64) {
        let spec = hermitian_eigenvalues(m, DEFAULT_EIG_TOL).unwrap();
        assert_eq!(spec.eigenvalues.len(), expected.len());
        for (got, want) in spec.eigenvalues.iter().zip(expected) {
            assert!(
                (got - want).abs() < tol,
                "eigenvalue {got} != expected {want} (spectrum {:?})",
                spec.eigenvalues
            );
        }
    }

    #[test]
    fn identity_spectrum() {
        assert_spectrum(&Matrix::identity(3), &[1.0, 1.0, 1.0], 1e-12);
    }

    #[test]
    fn reduction_choi_spectrum_d2() {
        // I4 - 2 P+: the rank-1 projector forces spectrum {-1, 1, 1, 1}.
        let mut p = Matrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                p.set(i * 2 + i, j * 2 + j, Scalar::from_ratio(1, 2));
            }
        }
        let w = &Matrix::identity(4) - &p.scale(&Scalar::from_int(2));
        assert_spectrum(&w, &[-1.0, 1.0, 1.0, 1.0], 1e-10);
    }

    #[test]
    fn complex_pauli_y_like() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::i()],
            vec![-Scalar::i(), Scalar::zero()],
        ]);
        assert_spectrum(&m, &[-1.0, 1.0], 1e-12);
    }

    #[test]
    fn known_rational_spectrum_under_rotation() {
        // diag(1/3, 2, 5) conjugated by a rational rotation built from J blocks
        // keeps its spectrum.
        let d = Matrix::diagonal(vec![
            Scalar::from_ratio(1, 3),
            Scalar::from_int(2),
            Scalar::from_int(5),
        ]);
        // 3-5-4 rational rotation in the (0,1) plane.
        let mut u = Matrix::identity(3);
        u.set(0, 0, Scalar::from_ratio(3, 5));
        u.set(0, 1, Scalar::from_ratio(4, 5));
        u.set(1, 0, Scalar::from_ratio(-4, 5));
        u.set(1, 1, Scalar::from_ratio(3, 5));
        let m = &(&u * &d) * &u.adjoint();
        assert_spectrum(&m, &[1.0 / 3.0, 2.0, 5.0], 1e-10);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(matches!(
            hermitian_eigenvalues(&m, DEFAULT_EIG_TOL),
            Err(Error::NotHermitian)
        ));
    }

    #[test]
    fn degenerate_blocks() {
        let j = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        // i(J ⊗ J) is Hermitian with eigenvalues ±1 doubly degenerate.
        let m = kron(&j, &j).scale(&Scalar::i());
        assert!(m.is_hermitian());
        assert_spectrum(&m, &[-1.0, -1.0, 1.0, 1.0], 1e-10);
    }
}
