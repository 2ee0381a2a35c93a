//! Exact positive-semidefiniteness certification over the Gaussian rationals
//! via pivoted LDL† (Schur-complement) elimination. A failed certificate
//! comes with a rational vector v such that v†Mv < 0, so boundary spectra
//! (eigenvalue exactly 0) never turn into tolerance disputes.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::scalar::{Rational, Scalar};
use num_traits::{Signed, Zero};

/// Outcome of exact PSD certification.
#[derive(Debug, Clone, PartialEq)]
pub enum PsdOutcome {
    Psd,
    /// Rational witness v with v†Mv < 0.
    NotPsd(Vector),
}

impl PsdOutcome {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdOutcome::Psd)
    }
}

struct Elimination {
    /// Original index of the pivot.
    pivot: usize,
    /// Pivot value d > 0.
    d: Rational,
    /// Pivot row entries S[p][j] keyed by original index j (pivot excluded).
    row: Vec<(usize, Scalar)>,
}

/// Certify M ⪰ 0 exactly. Requires an exactly Hermitian input.
pub fn psd_certify_exact(m: &Matrix) -> Result<PsdOutcome> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = m.rows();
    // Active submatrix, indexed by original coordinates.
    let mut active: Vec<usize> = (0..n).collect();
    let mut s: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut eliminations: Vec<Elimination> = Vec::new();

    let witness = loop {
        if active.is_empty() {
            return Ok(PsdOutcome::Psd);
        }
        // Diagonal of a Hermitian matrix is real; a negative entry is an
        // immediate witness.
        if let Some(&i) = active
            .iter()
            .find(|&&i| s[i][i].re.is_negative())
        {
            let mut w = vec![Scalar::zero(); n];
            w[i] = Scalar::one();
            break w;
        }
        // Pivot on the largest diagonal entry; ties resolve to the lowest
        // index for determinism.
        let mut pivot = active[0];
        for &i in &active {
            if s[i][i].re > s[pivot][pivot].re {
                pivot = i;
            }
        }
        if s[pivot][pivot].re.is_zero() {
            // All remaining diagonal entries are zero. PSD forces the whole
            // block to vanish; any surviving off-diagonal entry yields a
            // negative 2x2 form.
            let mut offender = None;
            'scan: for &i in &active {
                for &j in &active {
                    if i != j && !s[i][j].is_zero() {
                        offender = Some((i, j));
                        break 'scan;
                    }
                }
            }
            match offender {
                None => return Ok(PsdOutcome::Psd),
                Some((i, j)) => {
                    // v = -S[i][j]·e_i + e_j gives v†Sv = -2|S[i][j]|².
                    let mut w = vec![Scalar::zero(); n];
                    w[i] = -s[i][j].clone();
                    w[j] = Scalar::one();
                    break w;
                }
            }
        }
        let d = s[pivot][pivot].re.clone();
        let rest: Vec<usize> = active.iter().copied().filter(|&i| i != pivot).collect();
        let row: Vec<(usize, Scalar)> = rest.iter().map(|&j| (j, s[pivot][j].clone())).collect();
        // Schur complement: S'[i][j] = S[i][j] - S[i][p]·S[p][j]/d.
        for &i in &rest {
            if s[i][pivot].is_zero() {
                continue;
            }
            let li = s[i][pivot].clone();
            for &j in &rest {
                if s[pivot][j].is_zero() {
                    continue;
                }
                let delta = &(&li * &s[pivot][j]) / &Scalar::from_rational(d.clone());
                s[i][j] = &s[i][j] - &delta;
            }
        }
        eliminations.push(Elimination { pivot, d, row });
        active = rest;
    };

    // Lift the witness back through the eliminations: with M = [[d, b†],[b, C]]
    // and w a witness for the Schur complement C - b b†/d, setting
    // v_p = -(b†w)/d = -(Σ_j S[p][j] w_j)/d makes v†Mv = w†(C - b b†/d)w < 0.
    let mut w = witness;
    for elim in eliminations.iter().rev() {
        let mut dot = Scalar::zero();
        for (j, spj) in &elim.row {
            if !w[*j].is_zero() {
                dot = &dot + &(spj * &w[*j]);
            }
        }
        w[elim.pivot] = -&dot / &Scalar::from_rational(elim.d.clone());
    }
    debug_assert!(m.quadratic_form(&w).re.is_negative());
    Ok(PsdOutcome::NotPsd(w))
}

/// Convenience predicate; panics on non-Hermitian input.
pub fn is_psd(m: &Matrix) -> bool {
    psd_certify_exact(m).expect("psd check requires a hermitian matrix").is_psd()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{outer, Matrix};
    use crate::scalar::{rational, Scalar};
    use num_traits::Signed;

    #[test]
    fn identity_is_psd() {
        for n in 1..=5 {
            assert!(psd_certify_exact(&Matrix::identity(n)).unwrap().is_psd());
        }
    }

    #[test]
    fn explicit_negative_diagonal() {
        let m = Matrix::diagonal(vec![Scalar::one(), Scalar::from_ratio(-1, 24)]);
        match psd_certify_exact(&m).unwrap() {
            PsdOutcome::NotPsd(w) => {
                assert_eq!(w, vec![Scalar::zero(), Scalar::one()]);
                assert!(m.quadratic_form(&w).re.is_negative());
            }
            PsdOutcome::Psd => panic!("diag(1, -1/24) certified PSD"),
        }
    }

    #[test]
    fn zero_diagonal_with_off_diagonal_entry() {
        // [[0, 1], [1, 0]] has eigenvalues ±1.
        let m = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        match psd_certify_exact(&m).unwrap() {
            PsdOutcome::NotPsd(w) => {
                assert!(m.quadratic_form(&w).re.is_negative());
            }
            PsdOutcome::Psd => panic!("swap block certified PSD"),
        }
    }

    #[test]
    fn boundary_rank_deficient_is_psd() {
        // |v><v| with v = (1, -2/3, 1/5) is PSD with two zero eigenvalues.
        let v = vec![
            Scalar::one(),
            Scalar::from_ratio(-2, 3),
            Scalar::from_ratio(1, 5),
        ];
        let p = outer(&v, &v);
        assert!(psd_certify_exact(&p).unwrap().is_psd());
    }

    #[test]
    fn complex_witness_is_negative() {
        // Indefinite Hermitian matrix with complex off-diagonals.
        let m = Matrix::from_rows(vec![
            vec![Scalar::from_ratio(1, 2), Scalar::new(rational(1, 1), rational(3, 2))],
            vec![Scalar::new(rational(1, 1), rational(-3, 2)), Scalar::from_int(1)],
        ]);
        match psd_certify_exact(&m).unwrap() {
            PsdOutcome::NotPsd(w) => assert!(m.quadratic_form(&w).re.is_negative()),
            PsdOutcome::Psd => panic!("indefinite matrix certified PSD"),
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = Matrix::from_ints(&[&[1, 2], &[0, 1]]);
        assert!(psd_certify_exact(&m).is_err());
    }

    #[test]
    fn psd_with_zero_rows_mixed_in() {
        let mut m = Matrix::zeros(3, 3);
        m.set(1, 1, Scalar::from_ratio(7, 3));
        assert!(psd_certify_exact(&m).unwrap().is_psd());
    }
}
