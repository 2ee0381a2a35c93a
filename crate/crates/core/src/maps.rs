//! Positive maps on matrix algebras and their Choi matrices.
//!
//! The family: the reduction map Rₙ(X) = Iₙ·TrX − X, the Breuer–Hall maps
//! Φ^U(X) = (R(X) − U·Xᵀ·U†)/(2(k−1)) for antisymmetric unitary U, the
//! 2×2-block map Ψ⁰₂ₖ built from R_k, plain transposition, and unitary
//! conjugations Λ^{U₁U₂}(X) = U₁·Λ(U₂†XU₂)·U₁†. Map evaluation uses the
//! closed-form block formulas; the Choi matrix is derived from them, so a
//! Choi-contraction round trip is an independent cross-check.

use crate::error::{Error, Result};
use crate::matrix::{kron, BipartiteDims, Matrix, Vector};
use crate::psd::{psd_certify_exact, PsdOutcome};
use crate::sample::RationalSampler;
use crate::scalar::Scalar;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Closed description of a linear map on square matrices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "kebab-case")]
pub enum MapSpec {
    Reduction {
        n: usize,
    },
    BreuerHall {
        k: usize,
        u: Matrix,
    },
    Psi {
        k: usize,
    },
    Transpose {
        n: usize,
    },
    Conjugated {
        inner: Box<MapSpec>,
        u1: Matrix,
        u2: Matrix,
    },
}

impl MapSpec {
    /// Breuer–Hall map with the canonical antisymmetric unitary U₀ = I_k ⊗ J.
    pub fn breuer_hall_canonical(k: usize) -> MapSpec {
        MapSpec::BreuerHall {
            k,
            u: canonical_antisymmetric_unitary(k),
        }
    }

    /// Input/output matrix size.
    pub fn dim(&self) -> usize {
        match self {
            MapSpec::Reduction { n } | MapSpec::Transpose { n } => *n,
            MapSpec::BreuerHall { k, .. } | MapSpec::Psi { k } => 2 * k,
            MapSpec::Conjugated { inner, .. } => inner.dim(),
        }
    }

    /// Validates structural invariants: unitarity/antisymmetry of the
    /// Breuer–Hall U, unitarity and shape of conjugating factors.
    pub fn validate(&self) -> Result<()> {
        match self {
            MapSpec::Reduction { n } | MapSpec::Transpose { n } => {
                if *n == 0 {
                    return Err(Error::InvalidMap("dimension must be positive".into()));
                }
            }
            MapSpec::Psi { k } => {
                if *k < 2 {
                    return Err(Error::InvalidMap("block map needs k >= 2".into()));
                }
            }
            MapSpec::BreuerHall { k, u } => {
                if *k < 2 {
                    return Err(Error::InvalidMap(
                        "breuer-hall needs k >= 2 (normalization 1/(2(k-1)))".into(),
                    ));
                }
                let d = 2 * k;
                if u.rows() != d || u.cols() != d {
                    return Err(Error::InvalidMap(format!(
                        "U must be {d}x{d}, got {}x{}",
                        u.rows(),
                        u.cols()
                    )));
                }
                if !is_unitary(u) {
                    return Err(Error::InvalidMap("U is not exactly unitary".into()));
                }
                if u.transpose() != -u {
                    return Err(Error::InvalidMap("U is not exactly antisymmetric".into()));
                }
            }
            MapSpec::Conjugated { inner, u1, u2 } => {
                inner.validate()?;
                let d = inner.dim();
                for (name, u) in [("U1", u1), ("U2", u2)] {
                    if u.rows() != d || u.cols() != d {
                        return Err(Error::InvalidMap(format!(
                            "{name} must be {d}x{d}, got {}x{}",
                            u.rows(),
                            u.cols()
                        )));
                    }
                    if !is_unitary(u) {
                        return Err(Error::InvalidMap(format!("{name} is not exactly unitary")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Evaluates the map on X by its closed-form block formula, exactly.
    pub fn apply(&self, x: &Matrix) -> Result<Matrix> {
        let d = self.dim();
        if !x.is_square() || x.rows() != d {
            return Err(Error::DimensionMismatch(format!(
                "map of dimension {d} applied to {}x{} matrix",
                x.rows(),
                x.cols()
            )));
        }
        Ok(match self {
            MapSpec::Reduction { .. } => reduction(x),
            MapSpec::Transpose { .. } => x.transpose(),
            MapSpec::Psi { k } => psi_block_formula(x, *k).scale(&Scalar::from_ratio(1, *k as i64)),
            MapSpec::BreuerHall { k, u } => {
                let r = reduction(x);
                let twisted = &(u * &x.transpose()) * &u.adjoint();
                (&r - &twisted).scale(&Scalar::from_ratio(1, 2 * (*k as i64 - 1)))
            }
            MapSpec::Conjugated { inner, u1, u2 } => {
                let sandwiched = &(&u2.adjoint() * x) * u2;
                let mapped = inner.apply(&sandwiched)?;
                &(u1 * &mapped) * &u1.adjoint()
            }
        })
    }

    /// Choi matrix W = Σ_ij e_ij ⊗ Λ(e_ij); Hermitian for every variant
    /// (all are Hermiticity-preserving).
    pub fn choi(&self) -> Result<Witness> {
        self.validate()?;
        let d = self.dim();
        let mut w = Matrix::zeros(d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                let block = self.apply(&Matrix::unit(d, i, j))?;
                for a in 0..d {
                    for b in 0..d {
                        let v = block.get(a, b);
                        if !v.is_zero() {
                            w.set(i * d + a, j * d + b, v.clone());
                        }
                    }
                }
            }
        }
        debug_assert!(w.is_hermitian());
        Ok(Witness {
            matrix: w,
            dims: BipartiteDims::square(d),
            source: self.clone(),
        })
    }

    /// Exact check of Tr(e_kl·Λ(e_mn)) = Tr(Λ(e_kl)·e_mn) over all d⁴
    /// basis pairs.
    pub fn check_self_dual(&self) -> Result<bool> {
        let d = self.dim();
        let mut images = Vec::with_capacity(d * d);
        for m in 0..d {
            for n in 0..d {
                images.push(self.apply(&Matrix::unit(d, m, n))?);
            }
        }
        // Tr(e_kl·Y) = Y[l][k], so the identity reads
        // images[m,n][l][k] == images[k,l][n][m].
        for k in 0..d {
            for l in 0..d {
                for m in 0..d {
                    for n in 0..d {
                        if images[m * d + n].get(l, k) != images[k * d + l].get(n, m) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Exact check of Λ(I) = I.
    pub fn check_unital(&self) -> Result<bool> {
        let d = self.dim();
        Ok(self.apply(&Matrix::identity(d))? == Matrix::identity(d))
    }
}

/// Rₙ(X) = Iₙ·TrX − X.
fn reduction(x: &Matrix) -> Matrix {
    let n = x.rows();
    &Matrix::identity(n).scale(&x.trace()) - x
}

/// The 2×2-block pattern with k×k blocks, before the 1/k prefactor:
/// [[I_k·TrX₂₂, −(X₁₂ + R_k(X₂₁))], [−(X₂₁ + R_k(X₁₂)), I_k·TrX₁₁]].
fn psi_block_formula(x: &Matrix, k: usize) -> Matrix {
    let block = |r0: usize, c0: usize| {
        Matrix::from_fn(k, k, |i, j| x.get(r0 + i, c0 + j).clone())
    };
    let x11 = block(0, 0);
    let x12 = block(0, k);
    let x21 = block(k, 0);
    let x22 = block(k, k);
    let top_left = Matrix::identity(k).scale(&x22.trace());
    let bottom_right = Matrix::identity(k).scale(&x11.trace());
    let top_right = -&(&x12 + &reduction(&x21));
    let bottom_left = -&(&x21 + &reduction(&x12));
    assemble_blocks(&top_left, &top_right, &bottom_left, &bottom_right)
}

fn assemble_blocks(tl: &Matrix, tr: &Matrix, bl: &Matrix, br: &Matrix) -> Matrix {
    let k = tl.rows();
    Matrix::from_fn(2 * k, 2 * k, |i, j| {
        match (i < k, j < k) {
            (true, true) => tl.get(i, j).clone(),
            (true, false) => tr.get(i, j - k).clone(),
            (false, true) => bl.get(i - k, j).clone(),
            (false, false) => br.get(i - k, j - k).clone(),
        }
    })
}

fn is_unitary(u: &Matrix) -> bool {
    u.is_square() && &u.adjoint() * u == Matrix::identity(u.rows())
}

/// U₀ = I_k ⊗ J with J the 2×2 symplectic matrix; exactly unitary and
/// antisymmetric.
pub fn canonical_antisymmetric_unitary(k: usize) -> Matrix {
    let j = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
    kron(&Matrix::identity(k), &j)
}

/// V·U₀·Vᵀ for a signed permutation V (still antisymmetric unitary).
/// `signs[i]` flips the sign of the i-th column of the permutation matrix.
pub fn antisymmetric_unitary_from_signed_permutation(
    k: usize,
    perm: &[usize],
    signs: &[i8],
) -> Result<Matrix> {
    let d = 2 * k;
    if perm.len() != d || signs.len() != d {
        return Err(Error::DimensionMismatch(format!(
            "permutation and signs must have length {d}"
        )));
    }
    let mut seen = vec![false; d];
    for &p in perm {
        if p >= d || seen[p] {
            return Err(Error::InvalidMap("not a permutation".into()));
        }
        seen[p] = true;
    }
    let mut v = Matrix::zeros(d, d);
    for (i, &p) in perm.iter().enumerate() {
        v.set(p, i, Scalar::from_int(signs[i] as i64));
    }
    let u0 = canonical_antisymmetric_unitary(k);
    Ok(&(&v * &u0) * &v.transpose())
}

/// Hermitian bipartite operator obtained as the Choi matrix of a map.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub matrix: Matrix,
    pub dims: BipartiteDims,
    pub source: MapSpec,
}

impl Witness {
    pub fn total_dim(&self) -> usize {
        self.dims.total()
    }

    /// Local dimension d (the witnesses here all have dA = dB = d).
    pub fn local_dim(&self) -> usize {
        self.dims.d_a
    }
}

/// One failed positivity trial: the sampled vector whose projector image
/// was not PSD.
#[derive(Debug, Clone)]
pub struct ProbeViolation {
    pub trial: u32,
    pub psi: Vector,
    pub witness: Vector,
}

/// Result of the randomized rank-1 positivity probe.
#[derive(Debug, Clone)]
pub struct PositivityProbeReport {
    pub trials: u32,
    pub violations: Vec<ProbeViolation>,
    /// Trials where the direct-sum spectrum {1, 1, s², …, s²} was checked.
    pub spectra_checked: u32,
    /// Worst deviation of the computed ÃÃ† spectrum from {1, 1, s², …, s²}.
    pub max_spectrum_deviation: f64,
}

impl PositivityProbeReport {
    pub fn all_positive(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Samples rank-1 projectors P = |ψ⟩⟨ψ| with rational ψ and certifies
/// Λ(P) ⪰ 0 exactly. For the 2×2-block map the probe additionally rebuilds
/// Ã = |ψ̃₁⟩⟨ψ̃₂| − |ψ̃₂⟩⟨ψ̃₁| + ⟨ψ̃₁|ψ̃₂⟩·I from ψ = ψ₁ ⊕ ψ₂ and checks the
/// float spectrum of ÃÃ† against {1, 1, s², …, s²} with s² = |⟨ψ̃₁|ψ̃₂⟩|².
pub fn rank1_positivity_probe(
    map: &MapSpec,
    trials: u32,
    seed: u64,
) -> Result<PositivityProbeReport> {
    map.validate()?;
    let d = map.dim();
    let mut violations = Vec::new();
    let mut spectra_checked = 0;
    let mut max_dev: f64 = 0.0;
    for trial in 0..trials {
        let mut sampler = RationalSampler::for_trial(seed, trial as u64);
        let psi = sampler.vector(d);
        let projector = crate::matrix::outer(&psi, &psi);
        let image = map.apply(&projector)?;
        match psd_certify_exact(&image)? {
            PsdOutcome::Psd => {}
            PsdOutcome::NotPsd(w) => violations.push(ProbeViolation {
                trial,
                psi: psi.clone(),
                witness: w,
            }),
        }
        if let MapSpec::Psi { k } = map {
            if let Some(dev) = direct_sum_spectrum_deviation(&psi, *k) {
                spectra_checked += 1;
                max_dev = max_dev.max(dev);
            }
        }
    }
    Ok(PositivityProbeReport {
        trials,
        violations,
        spectra_checked,
        max_spectrum_deviation: max_dev,
    })
}

/// Deviation of spec(ÃÃ†) from {1, 1, s², …, s²}; None when ψ₁ or ψ₂
/// vanishes (the image is block diagonal and trivially PSD there).
pub(crate) fn direct_sum_spectrum_deviation(psi: &[Scalar], k: usize) -> Option<f64> {
    let psi1: Vec<Complex64> = psi[..k].iter().map(|z| z.to_complex64()).collect();
    let psi2: Vec<Complex64> = psi[k..].iter().map(|z| z.to_complex64()).collect();
    let n1 = psi1.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let n2 = psi2.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if n1 == 0.0 || n2 == 0.0 {
        return None;
    }
    let t1: Vec<Complex64> = psi1.iter().map(|z| z / n1).collect();
    let t2: Vec<Complex64> = psi2.iter().map(|z| z / n2).collect();
    let overlap: Complex64 = t1.iter().zip(&t2).map(|(a, b)| a.conj() * b).sum();
    // A~ = |t1><t2| - |t2><t1| + <t1|t2> I
    let mut a = vec![Complex64::new(0.0, 0.0); k * k];
    for i in 0..k {
        for j in 0..k {
            a[i * k + j] = t1[i] * t2[j].conj() - t2[i] * t1[j].conj();
        }
        a[i * k + i] += overlap;
    }
    // Gram matrix A~ A~† (Hermitian PSD).
    let mut g = vec![Complex64::new(0.0, 0.0); k * k];
    for i in 0..k {
        for j in 0..k {
            let mut acc = Complex64::new(0.0, 0.0);
            for l in 0..k {
                acc += a[i * k + l] * a[j * k + l].conj();
            }
            g[i * k + j] = acc;
        }
    }
    let outcome = crate::eig::jacobi_hermitian(&g, k, 1e-13, false);
    let s2 = overlap.norm_sqr();
    let mut expected = vec![s2; k.saturating_sub(2)];
    expected.push(1.0);
    expected.push(1.0);
    expected.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let dev = outcome
        .values
        .iter()
        .zip(&expected)
        .map(|(got, want)| (got - want).abs())
        .fold(0.0, f64::max);
    Some(dev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eig::{hermitian_eigenvalues, DEFAULT_EIG_TOL};
    use crate::matrix::kron_vec;

    fn max_entangled_projector(d: usize) -> Matrix {
        Matrix::from_fn(d * d, d * d, |r, c| {
            let (i, a) = (r / d, r % d);
            let (j, b) = (c / d, c % d);
            if i == a && j == b {
                Scalar::from_ratio(1, d as i64)
            } else {
                Scalar::zero()
            }
        })
    }

    #[test]
    fn reduction_on_two_by_two() {
        let map = MapSpec::Reduction { n: 2 };
        let x = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let expected = Matrix::from_ints(&[&[4, -2], &[-3, 1]]);
        assert_eq!(map.apply(&x).unwrap(), expected);
    }

    #[test]
    fn reduction_two_has_kraus_form() {
        // R₂(X) = J Xᵀ J†.
        let map = MapSpec::Reduction { n: 2 };
        let j = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let mut sampler = RationalSampler::new(3);
        for _ in 0..20 {
            let x = sampler.matrix(2, 2);
            let expected = &(&j * &x.transpose()) * &j.adjoint();
            assert_eq!(map.apply(&x).unwrap(), expected);
        }
    }

    #[test]
    fn block_map_is_unital() {
        for k in [2usize, 3, 4] {
            assert!(MapSpec::Psi { k }.check_unital().unwrap());
        }
    }

    #[test]
    fn breuer_hall_and_transpose_are_unital() {
        assert!(MapSpec::breuer_hall_canonical(2).check_unital().unwrap());
        assert!(MapSpec::breuer_hall_canonical(3).check_unital().unwrap());
        assert!(MapSpec::Transpose { n: 3 }.check_unital().unwrap());
    }

    #[test]
    fn block_map_coincides_with_breuer_hall_at_k2() {
        let psi = MapSpec::Psi { k: 2 };
        let bh = MapSpec::breuer_hall_canonical(2);
        let mut sampler = RationalSampler::new(11);
        for _ in 0..50 {
            let x = sampler.matrix(4, 4);
            assert_eq!(psi.apply(&x).unwrap(), bh.apply(&x).unwrap());
        }
        assert_eq!(psi.choi().unwrap().matrix, bh.choi().unwrap().matrix);
    }

    #[test]
    fn choi_of_reduction_two() {
        let w = MapSpec::Reduction { n: 2 }.choi().unwrap();
        let expected = &Matrix::identity(4) - &max_entangled_projector(2).scale(&Scalar::from_int(2));
        assert_eq!(w.matrix, expected);
        let spec = hermitian_eigenvalues(&w.matrix, DEFAULT_EIG_TOL).unwrap();
        for (got, want) in spec.eigenvalues.iter().zip([-1.0, 1.0, 1.0, 1.0]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn choi_spectra_of_block_maps() {
        // k=2: single negative eigenvalue -1 ((2-k)/k = 0 sits at zero).
        let w2 = MapSpec::Psi { k: 2 }.choi().unwrap();
        let s2 = hermitian_eigenvalues(&w2.matrix, DEFAULT_EIG_TOL).unwrap();
        let neg2 = s2.negatives(1e-9);
        assert_eq!(neg2.len(), 1);
        assert!((neg2[0] + 1.0).abs() < 1e-9);

        // k=3: negatives -1 and -1/3.
        let w3 = MapSpec::Psi { k: 3 }.choi().unwrap();
        let s3 = hermitian_eigenvalues(&w3.matrix, DEFAULT_EIG_TOL).unwrap();
        let neg3 = s3.negatives(1e-9);
        assert_eq!(neg3.len(), 2);
        assert!((neg3[0] + 1.0).abs() < 1e-9);
        assert!((neg3[1] + 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn canonical_unitary_properties() {
        let j = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
        assert_eq!(canonical_antisymmetric_unitary(1), j);
        for k in 1..=5 {
            let u0 = canonical_antisymmetric_unitary(k);
            assert_eq!(&u0.adjoint() * &u0, Matrix::identity(2 * k));
            assert_eq!(u0.transpose(), -&u0);
        }
    }

    #[test]
    fn signed_permutation_conjugates_stay_valid() {
        let u = antisymmetric_unitary_from_signed_permutation(
            2,
            &[2, 0, 3, 1],
            &[1, -1, 1, 1],
        )
        .unwrap();
        let spec = MapSpec::BreuerHall { k: 2, u };
        assert!(spec.validate().is_ok());
    }

    #[test]
    fn self_duality() {
        assert!(MapSpec::Psi { k: 2 }.check_self_dual().unwrap());
        assert!(MapSpec::Psi { k: 3 }.check_self_dual().unwrap());
        // Tr(A·R(B)) = TrA·TrB − Tr(AB) is symmetric in A, B.
        assert!(MapSpec::Reduction { n: 3 }.check_self_dual().unwrap());
    }

    #[test]
    fn conjugation_by_distinct_permutations_breaks_self_duality() {
        // U1 swaps basis vectors 0,1; U2 swaps 1,2.
        let mut u1 = Matrix::zeros(4, 4);
        u1.set(1, 0, Scalar::one());
        u1.set(0, 1, Scalar::one());
        u1.set(2, 2, Scalar::one());
        u1.set(3, 3, Scalar::one());
        let mut u2 = Matrix::zeros(4, 4);
        u2.set(0, 0, Scalar::one());
        u2.set(2, 1, Scalar::one());
        u2.set(1, 2, Scalar::one());
        u2.set(3, 3, Scalar::one());
        let spec = MapSpec::Conjugated {
            inner: Box::new(MapSpec::Psi { k: 2 }),
            u1,
            u2,
        };
        spec.validate().unwrap();
        assert!(!spec.check_self_dual().unwrap());
    }

    #[test]
    fn probe_finds_no_violations_for_block_map() {
        let report = rank1_positivity_probe(&MapSpec::Psi { k: 3 }, 100, 7).unwrap();
        assert!(report.all_positive(), "violations: {:?}", report.violations);
        assert!(report.spectra_checked > 0);
        assert!(
            report.max_spectrum_deviation < 1e-9,
            "spectrum deviation {}",
            report.max_spectrum_deviation
        );
    }

    #[test]
    fn probe_with_vanishing_second_component() {
        // ψ₂ = 0 gives a block-diagonal PSD image.
        let k = 3;
        let map = MapSpec::Psi { k };
        let mut psi = vec![Scalar::zero(); 2 * k];
        psi[0] = Scalar::from_ratio(2, 3);
        psi[1] = Scalar::i();
        let image = map.apply(&crate::matrix::outer(&psi, &psi)).unwrap();
        assert!(psd_certify_exact(&image).unwrap().is_psd());
        for i in 0..k {
            for j in k..2 * k {
                assert!(image.get(i, j).is_zero());
            }
        }
        assert!(direct_sum_spectrum_deviation(&psi, k).is_none());
    }

    #[test]
    fn orthogonal_components_give_rank_two_gram() {
        // ψ₁ ⊥ ψ₂ means s = 0 and spectrum {1, 1, 0, …}.
        let k = 4;
        let mut psi = vec![Scalar::zero(); 2 * k];
        psi[0] = Scalar::one();
        psi[k + 1] = Scalar::one();
        let dev = direct_sum_spectrum_deviation(&psi, k).unwrap();
        assert!(dev < 1e-12, "deviation {dev}");
    }

    #[test]
    fn invalid_maps_are_rejected() {
        assert!(MapSpec::Psi { k: 1 }.validate().is_err());
        let bad_u = Matrix::identity(4); // unitary but symmetric
        assert!(MapSpec::BreuerHall { k: 2, u: bad_u }.validate().is_err());
        let not_unitary = Matrix::from_ints(&[&[0, 2], &[-2, 0]]);
        assert!(MapSpec::BreuerHall { k: 1, u: not_unitary.clone() }.validate().is_err());
        assert!(matches!(
            MapSpec::Psi { k: 2 }.apply(&Matrix::identity(3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn unital_maps_fix_max_entangled_trace() {
        // Tr(W·P⁺) = -1 for the block-map witness: the §V sum divided by 2k.
        for k in [2usize, 3] {
            let d = 2 * k;
            let w = MapSpec::Psi { k }.choi().unwrap();
            let p = max_entangled_projector(d);
            assert_eq!(
                crate::matrix::trace_product(&w.matrix, &p),
                Scalar::from_int(-1)
            );
        }
    }

    #[test]
    fn conjugated_map_matches_direct_formula() {
        let u1 = canonical_antisymmetric_unitary(2);
        let u2 = Matrix::identity(4);
        let spec = MapSpec::Conjugated {
            inner: Box::new(MapSpec::Psi { k: 2 }),
            u1: u1.clone(),
            u2,
        };
        let mut sampler = RationalSampler::new(5);
        let x = sampler.matrix(4, 4);
        let inner = MapSpec::Psi { k: 2 }.apply(&x).unwrap();
        let expected = &(&u1 * &inner) * &u1.adjoint();
        assert_eq!(spec.apply(&x).unwrap(), expected);
    }

    #[test]
    fn product_vector_kron_shape() {
        let a = vec![Scalar::one(), Scalar::zero()];
        let b = vec![Scalar::zero(), Scalar::i()];
        let v = kron_vec(&a, &b);
        assert_eq!(v.len(), 4);
        assert_eq!(v[1], Scalar::i());
    }
}
