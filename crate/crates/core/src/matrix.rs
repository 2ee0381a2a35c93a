//! Dense matrices over the Gaussian rationals. Matrices are immutable
//! values: every operation returns a fresh matrix, so results can be shared
//! freely across threads and frozen into test oracles.

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

/// Subsystem dimensions of a bipartite operator on C^dA ⊗ C^dB.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteDims {
    pub d_a: usize,
    pub d_b: usize,
}

impl BipartiteDims {
    pub fn new(d_a: usize, d_b: usize) -> Self {
        BipartiteDims { d_a, d_b }
    }

    /// Equal subsystem dimensions d ⊗ d.
    pub fn square(d: usize) -> Self {
        BipartiteDims { d_a: d, d_b: d }
    }

    pub fn total(&self) -> usize {
        self.d_a * self.d_b
    }
}

/// Which tensor factor an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Row-major dense matrix of exact scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Column vector over the Gaussian rationals.
pub type Vector = Vec<Scalar>;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Matrix unit e_ij: single 1 at (i, j), 0-indexed.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        m.set(i, j, Scalar::one());
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "matrix dimensions must be positive");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Square matrix from integer literals; handy for frozen oracles.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: Vec<Scalar>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.set(i, i, e);
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conjugate(&self) -> Matrix {
        self.map(|z| z.conj())
    }

    /// Conjugate transpose M†.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        self.map(|z| z * s)
    }

    pub fn scale_rational(&self, r: &Rational) -> Matrix {
        self.scale(&Scalar::from_rational(r.clone()))
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t = &t + self.get(i, i);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_hermitian(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in i..self.cols {
                if *self.get(i, j) != self.get(j, i).conj() {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    let w = self.get(i, j);
                    if !w.is_zero() && !v[j].is_zero() {
                        acc = &acc + &(w * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// v† M v, exact.
    pub fn quadratic_form(&self, v: &[Scalar]) -> Scalar {
        let mv = self.mul_vec(v);
        inner(v, &mv)
    }

    /// Induced infinity norm (max absolute row sum) as f64; scales the
    /// eigensolver tolerance.
    pub fn norm_inf_f64(&self) -> f64 {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).to_complex64().norm())
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        self.get(i, j)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + &(a * b);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|z| -z)
    }
}

/// Kronecker product: (A⊗B)[(i·rB+k),(j·cB+l)] = A[i,j]·B[k,l].
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let aij = a.get(i, j);
            if aij.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    let bkl = b.get(k, l);
                    if bkl.is_zero() {
                        continue;
                    }
                    out.set(i * b.rows() + k, j * b.cols() + l, aij * bkl);
                }
            }
        }
    }
    out
}

/// Kronecker product of column vectors.
pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// ⟨a|b⟩ = Σ conj(a_i)·b_i.
pub fn inner(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "inner product dimension mismatch");
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x.conj() * y);
        }
    }
    acc
}

/// |a⟩⟨b| as a matrix.
pub fn outer(a: &[Scalar], b: &[Scalar]) -> Matrix {
    Matrix::from_fn(a.len(), b.len(), |i, j| &a[i] * b[j].conj())
}

/// Tr(A·B), exact, without forming the product.
pub fn trace_product(a: &Matrix, b: &Matrix) -> Scalar {
    assert_eq!(a.cols(), b.rows(), "trace product dimension mismatch");
    assert_eq!(a.rows(), b.cols(), "trace product dimension mismatch");
    let mut t = Scalar::zero();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let y = b.get(j, i);
            if y.is_zero() {
                continue;
            }
            t = &t + &(x * y);
        }
    }
    t
}

/// Partial transposition of a bipartite operator on the chosen subsystem.
/// Exact and involutive; transposing both subsystems equals full transpose.
pub fn partial_transpose(x: &Matrix, dims: BipartiteDims, subsystem: Subsystem) -> Result<Matrix> {
    let n = dims.total();
    if !x.is_square() || x.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected {n}x{n} operator for dims {}x{}, got {}x{}",
            dims.d_a,
            dims.d_b,
            x.rows(),
            x.cols()
        )));
    }
    let (da, db) = (dims.d_a, dims.d_b);
    let mut out = Matrix::zeros(n, n);
    for a in 0..da {
        for b in 0..db {
            for ap in 0..da {
                for bp in 0..db {
                    let v = x.get(a * db + b, ap * db + bp).clone();
                    match subsystem {
                        Subsystem::B => out.set(a * db + bp, ap * db + b, v),
                        Subsystem::A => out.set(ap * db + b, a * db + bp, v),
                    }
                }
            }
        }
    }
    Ok(out)
}

/// SWAP operator on C^d ⊗ C^d: SWAP(a⊗b) = b⊗a.
pub fn swap_operator(d: usize) -> Matrix {
    let mut s = Matrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            s.set(i * d + j, j * d + i, Scalar::one());
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn symplectic_j() -> Matrix {
        Matrix::from_ints(&[&[0, 1], &[-1, 0]])
    }

    #[test]
    fn kron_identity_case() {
        let i2 = Matrix::identity(2);
        assert_eq!(kron(&i2, &i2), Matrix::identity(4));
    }

    #[test]
    fn kron_single_entry_case() {
        let e12 = Matrix::unit(2, 0, 1);
        let e21 = Matrix::unit(2, 1, 0);
        let k = kron(&e12, &e21);
        let expected = Matrix::unit(4, 1, 2);
        assert_eq!(k, expected);
    }

    #[test]
    fn kron_j_with_j() {
        // Expanded entrywise from the definition: +1 at (0,3),(3,0); -1 at (1,2),(2,1).
        let j = symplectic_j();
        let k = kron(&j, &j);
        let expected = Matrix::from_ints(&[
            &[0, 0, 0, 1],
            &[0, 0, -1, 0],
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
        ]);
        assert_eq!(k, expected);
    }

    #[test]
    fn kron_is_bilinear() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[5, -1], &[0, 2]]);
        let c = Matrix::from_ints(&[&[-2, 7], &[1, 1]]);
        let lhs = kron(&(&a + &b), &c);
        let rhs = &kron(&a, &c) + &kron(&b, &c);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_transpose_of_max_entangled_is_swap_over_d() {
        // P+ = (1/d) Σ |ii><jj|; its B-transpose is SWAP/d.
        for d in 2..=4 {
            let mut p = Matrix::zeros(d * d, d * d);
            for i in 0..d {
                for j in 0..d {
                    p.set(i * d + i, j * d + j, Scalar::from_ratio(1, d as i64));
                }
            }
            let pt = partial_transpose(&p, BipartiteDims::square(d), Subsystem::B).unwrap();
            let swap = swap_operator(d).scale(&Scalar::from_ratio(1, d as i64));
            assert_eq!(pt, swap);
        }
    }

    #[test]
    fn partial_transpose_of_product_is_product_of_transpose() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 5], &[6, 7]]);
        let x = kron(&a, &b);
        let dims = BipartiteDims::square(2);
        assert_eq!(
            partial_transpose(&x, dims, Subsystem::B).unwrap(),
            kron(&a, &b.transpose())
        );
        assert_eq!(
            partial_transpose(&x, dims, Subsystem::A).unwrap(),
            kron(&a.transpose(), &b)
        );
    }

    #[test]
    fn partial_transpose_is_involutive() {
        let x = Matrix::from_fn(6, 6, |i, j| {
            Scalar::new(rational((i * 7 + j) as i64, 3), rational(i as i64 - j as i64, 5))
        });
        let dims = BipartiteDims::new(2, 3);
        let once = partial_transpose(&x, dims, Subsystem::B).unwrap();
        let twice = partial_transpose(&once, dims, Subsystem::B).unwrap();
        assert_eq!(twice, x);
        // Transposing both subsystems equals the full transpose.
        let pa = partial_transpose(&once, dims, Subsystem::A).unwrap();
        assert_eq!(pa, x.transpose());
    }

    #[test]
    fn partial_transpose_rejects_bad_dims() {
        let x = Matrix::identity(5);
        assert!(partial_transpose(&x, BipartiteDims::square(2), Subsystem::B).is_err());
    }

    #[test]
    fn trace_product_matches_full_product() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[5, -1], &[2, 0]]);
        assert_eq!(trace_product(&a, &b), (&a * &b).trace());
        assert_eq!(trace_product(&a, &b), trace_product(&b, &a));
    }

    #[test]
    fn hermitian_detection() {
        let h = Matrix::from_rows(vec![
            vec![Scalar::from_int(1), Scalar::new(rational(0, 1), rational(2, 1))],
            vec![Scalar::new(rational(0, 1), rational(-2, 1)), Scalar::from_int(3)],
        ]);
        assert!(h.is_hermitian());
        let nh = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert!(!nh.is_hermitian());
    }

    #[test]
    fn adjoint_distributes_over_sum() {
        let a = Matrix::from_fn(3, 3, |i, j| Scalar::new(rational(i as i64, 2), rational(j as i64, 3)));
        let b = Matrix::from_fn(3, 3, |i, j| Scalar::new(rational(j as i64, 5), rational(i as i64, 7)));
        assert_eq!((&a + &b).adjoint(), &a.adjoint() + &b.adjoint());
    }
}
