//! State families: the maximally entangled projector, isotropic mixtures,
//! the PPT state ρ₂ₖ detected by the 2×2-block witness, the Schmidt-number-2
//! state D₂ₖ, the symmetric-projector λ-family, and the spanning family of
//! product vectors that certifies witness optimality.

use crate::error::{Error, Result};
use crate::maps::{canonical_antisymmetric_unitary, MapSpec};
use crate::matrix::{
    inner, kron, kron_vec, outer, partial_transpose, swap_operator, BipartiteDims, Matrix,
    Subsystem, Vector,
};
use crate::psd::psd_certify_exact;
use crate::rank::schmidt_rank;
use crate::scalar::{rational, Rational, Scalar};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Re-verifiable facts attached to a constructed state.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    UnitTrace,
    Psd,
    Ppt,
    SchmidtNumberBound(u32),
}

/// Explicit pure-state decompositions of a state and of its partial
/// transpose: state = weight · Σ |v⟩⟨v| over unnormalized vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct PureDecomposition {
    pub weight: Rational,
    pub state_vectors: Vec<Vector>,
    pub transposed_vectors: Vec<Vector>,
}

/// Density matrix with subsystem dimensions and optional certificates.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState {
    pub matrix: Matrix,
    pub dims: BipartiteDims,
    pub certificates: BTreeSet<Certificate>,
    pub decomposition: Option<PureDecomposition>,
}

impl BipartiteState {
    pub fn new(matrix: Matrix, dims: BipartiteDims) -> Self {
        BipartiteState {
            matrix,
            dims,
            certificates: BTreeSet::new(),
            decomposition: None,
        }
    }

    pub fn has_certificate(&self, c: &Certificate) -> bool {
        self.certificates.contains(c)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total()
    }
}

/// Maximally entangled projector P⁺_d = (1/d) Σ_ij |ii⟩⟨jj|.
pub fn max_entangled(d: usize) -> BipartiteState {
    assert!(d >= 2, "maximally entangled state needs d >= 2");
    let mut m = Matrix::zeros(d * d, d * d);
    let w = Scalar::from_ratio(1, d as i64);
    for i in 0..d {
        for j in 0..d {
            m.set(i * d + i, j * d + j, w.clone());
        }
    }
    let mut state = BipartiteState::new(m, BipartiteDims::square(d));
    state.certificates.insert(Certificate::UnitTrace);
    state.certificates.insert(Certificate::Psd);
    state
}

/// Isotropic state ρ_p = (p/d²)·I⊗I + (1−p)·P⁺_d, exact in p.
pub fn isotropic(d: usize, p: &Rational) -> Result<BipartiteState> {
    if p.is_negative() || p > &Rational::one() {
        return Err(Error::OutOfRange(format!("mixing parameter p = {p} not in [0,1]")));
    }
    let noise = Matrix::identity(d * d).scale_rational(&(p / rational(d as i64 * d as i64, 1)));
    let pure = max_entangled(d)
        .matrix
        .scale_rational(&(Rational::one() - p));
    let mut state = BipartiteState::new(&noise + &pure, BipartiteDims::square(d));
    state.certificates.insert(Certificate::UnitTrace);
    state.certificates.insert(Certificate::Psd);
    Ok(state)
}

/// Normalization constant Nₖ with 1/Nₖ = 2k²(k+1).
pub fn rho_normalization(k: usize) -> Rational {
    rational(1, 2 * (k as i64) * (k as i64) * (k as i64 + 1))
}

/// The PPT entangled state ρ₂ₖ assembled from its block rules:
/// diagonal blocks Nₖ·diag(kI,I) (first k) and Nₖ·diag(I,kI) (last k),
/// blocks (i, i+k) equal to −Nₖ·k·Ψ⁰₂ₖ(e_{i,i+k}), unit blocks Nₖ·e_ij for
/// the remaining i ≤ k < j, zero elsewhere, Hermitian completion below the
/// diagonal. Certificates {unit-trace, PSD, PPT} are verified exactly
/// before returning; a failure signals a construction bug.
pub fn ppt_witness_state(k: usize) -> Result<BipartiteState> {
    if k < 2 {
        return Err(Error::OutOfRange("ppt witness state needs k >= 2".into()));
    }
    let d = 2 * k;
    let n_k = rho_normalization(k);
    let psi_map = MapSpec::Psi { k };
    let mut rho = Matrix::zeros(d * d, d * d);
    let mut set_block = |rho: &mut Matrix, i: usize, j: usize, block: &Matrix| {
        for a in 0..d {
            for b in 0..d {
                let v = block.get(a, b);
                if !v.is_zero() {
                    rho.set(i * d + a, j * d + b, v.clone());
                }
            }
        }
    };
    for i in 0..d {
        let mut diag = Matrix::zeros(d, d);
        for a in 0..d {
            let inflated = if i < k { a < k } else { a >= k };
            let v = if inflated {
                Scalar::from_rational(&n_k * rational(k as i64, 1))
            } else {
                Scalar::from_rational(n_k.clone())
            };
            diag.set(a, a, v);
        }
        set_block(&mut rho, i, i, &diag);
    }
    for i in 0..k {
        let choi_block = psi_map.apply(&Matrix::unit(d, i, i + k))?;
        let scaled = choi_block.scale_rational(&(-&n_k * rational(k as i64, 1)));
        set_block(&mut rho, i, i + k, &scaled);
        set_block(&mut rho, i + k, i, &scaled.adjoint());
    }
    for i in 0..k {
        for j in k..d {
            if j == i + k {
                continue;
            }
            let unit = Matrix::unit(d, i, j).scale_rational(&n_k);
            set_block(&mut rho, i, j, &unit);
            set_block(&mut rho, j, i, &unit.adjoint());
        }
    }

    if rho.trace() != Scalar::one() {
        return Err(Error::ConstructionInvariant(format!(
            "rho_{d} trace is {}, expected 1",
            rho.trace()
        )));
    }
    if !psd_certify_exact(&rho)?.is_psd() {
        return Err(Error::ConstructionInvariant(format!("rho_{d} is not PSD")));
    }
    let dims = BipartiteDims::square(d);
    let gamma = partial_transpose(&rho, dims, Subsystem::B)?;
    if !psd_certify_exact(&gamma)?.is_psd() {
        return Err(Error::ConstructionInvariant(format!("rho_{d} is not PPT")));
    }

    let mut state = BipartiteState::new(rho, dims);
    state.certificates.insert(Certificate::UnitTrace);
    state.certificates.insert(Certificate::Psd);
    state.certificates.insert(Certificate::Ppt);
    Ok(state)
}

/// Standard basis vector of C^d.
fn basis(i: usize, d: usize) -> Vector {
    let mut v = vec![Scalar::zero(); d];
    v[i] = Scalar::one();
    v
}

fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The seven product vectors behind D₂ₖ, in C^{2k} ⊗ C^{2k}.
fn atomic_product_vectors(k: usize) -> [Vector; 7] {
    let d = 2 * k;
    let pair = |a: usize, b: usize| kron_vec(&basis(a, d), &basis(b, d));
    [
        pair(0, 0),         // φ1 = e1 ⊗ e1
        pair(0, k),         // φ2 = e1 ⊗ e_{k+1}
        pair(k - 1, 0),     // φ3 = e_k ⊗ e1
        pair(k - 1, d - 1), // φ4 = e_k ⊗ e_{2k}
        pair(k, 0),         // φ5 = e_{k+1} ⊗ e1
        pair(k, k),         // φ6 = e_{k+1} ⊗ e_{k+1}
        pair(k, d - 1),     // φ7 = e_{k+1} ⊗ e_{2k}
    ]
}

fn sum_of_projectors(vectors: &[Vector], weight: &Rational, dim: usize) -> Matrix {
    let mut acc = Matrix::zeros(dim, dim);
    for v in vectors {
        acc = &acc + &outer(v, v);
    }
    acc.scale_rational(weight)
}

/// The PPT state D₂ₖ with Schmidt number ≤ 2 on both sides:
/// D = (|φ1+φ6⟩⟨φ1+φ6| + |φ5−φ4⟩⟨φ5−φ4| + |φ2⟩⟨φ2| + |φ3⟩⟨φ3| + |φ7⟩⟨φ7|)/7,
/// whose partial transpose is the analogous combination of
/// {φ2+φ5, φ3−φ7, φ1, φ4, φ6}. Both decompositions are attached; the
/// Schmidt-number bound is verified vector by vector before being claimed.
pub fn atomic_state(k: usize) -> Result<BipartiteState> {
    if k < 2 {
        return Err(Error::OutOfRange("atomic state needs k >= 2".into()));
    }
    let d = 2 * k;
    let dims = BipartiteDims::square(d);
    let [p1, p2, p3, p4, p5, p6, p7] = atomic_product_vectors(k);
    let state_vectors = vec![
        vec_add(&p1, &p6),
        vec_sub(&p5, &p4),
        p2.clone(),
        p3.clone(),
        p7.clone(),
    ];
    let transposed_vectors = vec![
        vec_add(&p2, &p5),
        vec_sub(&p3, &p7),
        p1.clone(),
        p4.clone(),
        p6.clone(),
    ];
    let weight = rational(1, 7);
    let matrix = sum_of_projectors(&state_vectors, &weight, d * d);
    let gamma_constructed = sum_of_projectors(&transposed_vectors, &weight, d * d);

    if matrix.trace() != Scalar::one() {
        return Err(Error::ConstructionInvariant(format!(
            "D_{d} trace is {}, expected 1",
            matrix.trace()
        )));
    }
    let gamma = partial_transpose(&matrix, dims, Subsystem::B)?;
    if gamma != gamma_constructed {
        return Err(Error::ConstructionInvariant(format!(
            "partial transpose of D_{d} does not match its stated decomposition"
        )));
    }
    for v in state_vectors.iter().chain(&transposed_vectors) {
        let sr = schmidt_rank(v, dims)?;
        if sr > 2 {
            return Err(Error::ConstructionInvariant(format!(
                "decomposition vector has Schmidt rank {sr} > 2"
            )));
        }
    }

    let mut state = BipartiteState::new(matrix, dims);
    state.certificates.insert(Certificate::UnitTrace);
    state.certificates.insert(Certificate::Psd);
    state.certificates.insert(Certificate::Ppt);
    state.certificates.insert(Certificate::SchmidtNumberBound(2));
    state.decomposition = Some(PureDecomposition {
        weight,
        state_vectors,
        transposed_vectors,
    });
    Ok(state)
}

/// ρ₀ = (2/(d(d+1)))·(I⊗U₀)·P_S·(I⊗U₀)† with P_S = (I + SWAP)/2, d = 2k.
pub fn breuer_base_state(k: usize) -> Result<BipartiteState> {
    if k < 1 {
        return Err(Error::OutOfRange("base state needs k >= 1".into()));
    }
    let d = 2 * k;
    let p_s = (&Matrix::identity(d * d) + &swap_operator(d)).scale(&Scalar::from_ratio(1, 2));
    let u = kron(&Matrix::identity(d), &canonical_antisymmetric_unitary(k));
    let conjugated = &(&u * &p_s) * &u.adjoint();
    let rho0 = conjugated.scale_rational(&rational(2, (d * (d + 1)) as i64));
    let mut state = BipartiteState::new(rho0, BipartiteDims::square(d));
    state.certificates.insert(Certificate::UnitTrace);
    state.certificates.insert(Certificate::Psd);
    Ok(state)
}

/// λ-family ρ(λ) = λ·P⁺_d + (1−λ)·ρ₀ on C^{2k} ⊗ C^{2k}. Attaches a PPT
/// certificate exactly when the partial transpose certifies PSD (which
/// happens for λ ≤ 1/(d+2), boundary included).
pub fn breuer_family(k: usize, lambda: &Rational) -> Result<BipartiteState> {
    if lambda.is_negative() || lambda > &Rational::one() {
        return Err(Error::OutOfRange(format!("lambda = {lambda} not in [0,1]")));
    }
    let d = 2 * k;
    let rho0 = breuer_base_state(k)?;
    let pure = max_entangled(d).matrix.scale_rational(lambda);
    let base = rho0.matrix.scale_rational(&(Rational::one() - lambda));
    let matrix = &pure + &base;
    let dims = BipartiteDims::square(d);
    let gamma = partial_transpose(&matrix, dims, Subsystem::B)?;
    let mut state = BipartiteState::new(matrix, dims);
    state.certificates.insert(Certificate::UnitTrace);
    state.certificates.insert(Certificate::Psd);
    if psd_certify_exact(&gamma)?.is_psd() {
        state.certificates.insert(Certificate::Ppt);
    }
    Ok(state)
}

/// Product vectors paired with their entrywise conjugates.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductVectorFamily {
    /// (left, right) pairs in C^d × C^d; right = conj(left) for the
    /// spanning family.
    pub pairs: Vec<(Vector, Vector)>,
}

impl ProductVectorFamily {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Flattened bipartite vectors left ⊗ right.
    pub fn flattened(&self) -> Vec<Vector> {
        self.pairs.iter().map(|(l, r)| kron_vec(l, r)).collect()
    }
}

/// The (2k)² product vectors {e_l} ∪ {e_m+e_n} ∪ {e_m+i·e_n} (m<n), each
/// paired with its conjugate. They span C^{2k} ⊗ C^{2k} and lie in the zero
/// set of the block-map witness, which certifies its optimality.
pub fn spanning_family(k: usize) -> ProductVectorFamily {
    let d = 2 * k;
    let mut pairs = Vec::with_capacity(d * d);
    for l in 0..d {
        let v = basis(l, d);
        pairs.push((v.clone(), v));
    }
    for m in 0..d {
        for n in (m + 1)..d {
            let f = vec_add(&basis(m, d), &basis(n, d));
            pairs.push((f.clone(), f));
        }
    }
    for m in 0..d {
        for n in (m + 1)..d {
            let mut g = basis(m, d);
            g[n] = Scalar::i();
            let conj: Vector = g.iter().map(Scalar::conj).collect();
            pairs.push((g, conj));
        }
    }
    ProductVectorFamily { pairs }
}

/// Fidelity ⟨P⁺|ρ|P⁺⟩ with the maximally entangled projector, exact.
pub fn max_entangled_fidelity(state: &BipartiteState) -> Scalar {
    let d = state.dims.d_a;
    let p = max_entangled(d);
    // Tr(P⁺ ρ) for the rank-1 projector P⁺.
    crate::matrix::trace_product(&p.matrix, &state.matrix)
}

/// Re-checks an attached certificate against the matrix, exactly.
pub fn verify_certificate(state: &BipartiteState, cert: &Certificate) -> Result<bool> {
    match cert {
        Certificate::UnitTrace => Ok(state.matrix.trace() == Scalar::one()),
        Certificate::Psd => Ok(psd_certify_exact(&state.matrix)?.is_psd()),
        Certificate::Ppt => {
            let gamma = partial_transpose(&state.matrix, state.dims, Subsystem::B)?;
            Ok(psd_certify_exact(&gamma)?.is_psd())
        }
        Certificate::SchmidtNumberBound(bound) => {
            let Some(dec) = &state.decomposition else {
                return Ok(false);
            };
            let reconstructed =
                sum_of_projectors(&dec.state_vectors, &dec.weight, state.total_dim());
            if reconstructed != state.matrix {
                return Ok(false);
            }
            for v in &dec.state_vectors {
                if schmidt_rank(v, state.dims)? > *bound as usize {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}
