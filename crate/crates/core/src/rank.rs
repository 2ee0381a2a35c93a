//! Exact rank computations: Gaussian elimination over the Gaussian
//! rationals, and Schmidt rank of bipartite pure states by reshaping.

use crate::error::{Error, Result};
use crate::matrix::{BipartiteDims, Matrix, Vector};
use crate::scalar::Scalar;

/// Exact rank of a family of vectors (all of equal dimension).
/// Empty input has rank 0.
pub fn exact_rank(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let dim = vectors[0].len();
    assert!(
        vectors.iter().all(|v| v.len() == dim),
        "rank of vectors with mixed dimensions"
    );
    let mut rows: Vec<Vector> = vectors.to_vec();
    let n = rows.len();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot_row) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in (rank + 1)..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot;
            for c in col..dim {
                if !rows[rank][c].is_zero() {
                    rows[r][c] = &rows[r][c] - &(&factor * &rows[rank][c]);
                }
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Exact rank of a matrix (as the rank of its rows).
pub fn exact_rank_matrix(m: &Matrix) -> usize {
    let rows: Vec<Vector> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect();
    exact_rank(&rows)
}

/// Schmidt rank of a bipartite pure state: the exact rank of the dA×dB
/// reshaping of v. Always in 1..=min(dA,dB) for v ≠ 0.
pub fn schmidt_rank(v: &[Scalar], dims: BipartiteDims) -> Result<usize> {
    if v.len() != dims.total() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} does not match dims {}x{}",
            v.len(),
            dims.d_a,
            dims.d_b
        )));
    }
    if v.iter().all(Scalar::is_zero) {
        return Err(Error::ZeroVector);
    }
    let reshaped = Matrix::from_fn(dims.d_a, dims.d_b, |a, b| v[a * dims.d_b + b].clone());
    Ok(exact_rank_matrix(&reshaped))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::kron_vec;

    fn basis(i: usize, d: usize) -> Vector {
        let mut v = vec![Scalar::zero(); d];
        v[i] = Scalar::one();
        v
    }

    #[test]
    fn standard_basis_has_full_rank() {
        for n in 1..=5 {
            let vs: Vec<Vector> = (0..n).map(|i| basis(i, n)).collect();
            assert_eq!(exact_rank(&vs), n);
        }
    }

    #[test]
    fn repeated_vector_has_rank_one() {
        let vs = vec![basis(0, 3), basis(0, 3)];
        assert_eq!(exact_rank(&vs), 1);
    }

    #[test]
    fn empty_input_has_rank_zero() {
        assert_eq!(exact_rank(&[]), 0);
    }

    #[test]
    fn rank_detects_rational_dependence() {
        // v3 = v1/2 - 3 v2 exactly.
        let v1 = vec![Scalar::from_int(2), Scalar::from_int(4), Scalar::zero()];
        let v2 = vec![Scalar::zero(), Scalar::from_ratio(1, 3), Scalar::from_int(1)];
        let v3 = vec![Scalar::from_int(1), Scalar::from_int(1), Scalar::from_int(-3)];
        assert_eq!(exact_rank(&[v1, v2, v3]), 2);
    }

    #[test]
    fn product_vector_has_schmidt_rank_one() {
        let v = kron_vec(&basis(0, 2), &basis(0, 2));
        assert_eq!(schmidt_rank(&v, BipartiteDims::square(2)).unwrap(), 1);
    }

    #[test]
    fn singlet_has_schmidt_rank_two() {
        // |01> - |10>
        let mut v = vec![Scalar::zero(); 4];
        v[1] = Scalar::one();
        v[2] = Scalar::from_int(-1);
        assert_eq!(schmidt_rank(&v, BipartiteDims::square(2)).unwrap(), 2);
    }

    #[test]
    fn diagonal_pair_has_schmidt_rank_two() {
        // e1⊗e1 + e_{k+1}⊗e_{k+1} in C^{2k}⊗C^{2k}, k=2.
        let d = 4;
        let a = kron_vec(&basis(0, d), &basis(0, d));
        let b = kron_vec(&basis(2, d), &basis(2, d));
        let v: Vector = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        assert_eq!(schmidt_rank(&v, BipartiteDims::square(d)).unwrap(), 2);
    }

    #[test]
    fn zero_vector_is_an_error() {
        let v = vec![Scalar::zero(); 4];
        assert!(schmidt_rank(&v, BipartiteDims::square(2)).is_err());
    }
}
