//! JSON interchange. The matrix schema is bit-exact:
//! {"rows":n,"cols":m,"entries":[[{"re":"p/q","im":"r/s"},…],…]} with
//! rationals as canonical reduced strings; the float export variant stores
//! {"re":x,"im":y} doubles. Witnesses add {"dA","dB","source"}, states add
//! {"dA","dB","certificates"}.

use crate::error::{Error, Result};
use crate::maps::{MapSpec, Witness};
use crate::matrix::{BipartiteDims, Matrix};
use crate::scalar::{Rational, Scalar};
use crate::states::{BipartiteState, Certificate};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EntryRepr {
    Exact { re: String, im: String },
    Float { re: f64, im: f64 },
}

impl EntryRepr {
    fn to_scalar(&self) -> Result<Scalar> {
        match self {
            EntryRepr::Exact { re, im } => Ok(Scalar::new(parse_rational(re)?, parse_rational(im)?)),
            EntryRepr::Float { re, im } => {
                let to_rat = |x: f64| {
                    Rational::from_float(x)
                        .ok_or_else(|| Error::Parse(format!("non-finite float entry {x}")))
                };
                Ok(Scalar::new(to_rat(*re)?, to_rat(*im)?))
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<EntryRepr>>,
}

impl MatrixRepr {
    fn exact(m: &Matrix) -> Self {
        MatrixRepr {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| {
                    (0..m.cols())
                        .map(|j| {
                            let z = m.get(i, j);
                            EntryRepr::Exact {
                                re: z.re.to_string(),
                                im: z.im.to_string(),
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    fn float(m: &Matrix) -> Self {
        MatrixRepr {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| {
                    (0..m.cols())
                        .map(|j| {
                            let z = m.get(i, j).to_complex64();
                            EntryRepr::Float { re: z.re, im: z.im }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    fn into_matrix(self) -> Result<Matrix> {
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::Parse("matrix dimensions must be positive".into()));
        }
        if self.entries.len() != self.rows
            || self.entries.iter().any(|row| row.len() != self.cols)
        {
            return Err(Error::Parse(format!(
                "entry grid does not match {}x{}",
                self.rows, self.cols
            )));
        }
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                m.set(i, j, e.to_scalar()?);
            }
        }
        Ok(m)
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr::exact(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        MatrixRepr::deserialize(deserializer)?
            .into_matrix()
            .map_err(D::Error::custom)
    }
}

/// Exact matrix JSON (the canonical interchange form).
pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string(&MatrixRepr::exact(m)).expect("matrix serialization")
}

/// Float export variant of the matrix JSON.
pub fn matrix_to_float_json(m: &Matrix) -> String {
    serde_json::to_string(&MatrixRepr::float(m)).expect("matrix serialization")
}

/// Reads either the exact or the float variant.
pub fn matrix_from_json(s: &str) -> Result<Matrix> {
    let repr: MatrixRepr = serde_json::from_str(s)?;
    repr.into_matrix()
}

#[derive(Serialize, Deserialize)]
struct WitnessRepr {
    #[serde(flatten)]
    matrix: MatrixRepr,
    #[serde(rename = "dA")]
    d_a: usize,
    #[serde(rename = "dB")]
    d_b: usize,
    source: MapSpec,
}

pub fn witness_to_json(w: &Witness) -> String {
    let repr = WitnessRepr {
        matrix: MatrixRepr::exact(&w.matrix),
        d_a: w.dims.d_a,
        d_b: w.dims.d_b,
        source: w.source.clone(),
    };
    serde_json::to_string(&repr).expect("witness serialization")
}

pub fn witness_from_json(s: &str) -> Result<Witness> {
    let repr: WitnessRepr = serde_json::from_str(s)?;
    let matrix = repr.matrix.into_matrix()?;
    let dims = BipartiteDims::new(repr.d_a, repr.d_b);
    if matrix.rows() != dims.total() {
        return Err(Error::DimensionMismatch(format!(
            "witness matrix is {}x{} but dims give {}",
            matrix.rows(),
            matrix.cols(),
            dims.total()
        )));
    }
    if !matrix.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    Ok(Witness {
        matrix,
        dims,
        source: repr.source,
    })
}

#[derive(Serialize, Deserialize)]
struct StateRepr {
    #[serde(flatten)]
    matrix: MatrixRepr,
    #[serde(rename = "dA")]
    d_a: usize,
    #[serde(rename = "dB")]
    d_b: usize,
    certificates: Vec<Certificate>,
}

pub fn state_to_json(state: &BipartiteState) -> String {
    let repr = StateRepr {
        matrix: MatrixRepr::exact(&state.matrix),
        d_a: state.dims.d_a,
        d_b: state.dims.d_b,
        certificates: state.certificates.iter().cloned().collect(),
    };
    serde_json::to_string(&repr).expect("state serialization")
}

pub fn state_from_json(s: &str) -> Result<BipartiteState> {
    let repr: StateRepr = serde_json::from_str(s)?;
    let matrix = repr.matrix.into_matrix()?;
    let dims = BipartiteDims::new(repr.d_a, repr.d_b);
    if matrix.rows() != dims.total() {
        return Err(Error::DimensionMismatch(format!(
            "state matrix is {}x{} but dims give {}",
            matrix.rows(),
            matrix.cols(),
            dims.total()
        )));
    }
    Ok(BipartiteState {
        matrix,
        dims,
        certificates: repr.certificates.into_iter().collect::<BTreeSet<_>>(),
        decomposition: None,
    })
}

/// Directory holding the golden fixtures; WITNESSFORGE_FIXTURES overrides
/// the in-repo default.
pub fn fixtures_dir() -> std::path::PathBuf {
    match std::env::var_os("WITNESSFORGE_FIXTURES") {
        Some(dir) => std::path::PathBuf::from(dir),
        None => std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::RationalSampler;
    use crate::scalar::rational;

    #[test]
    fn matrix_round_trip_exact() {
        let mut sampler = RationalSampler::new(17);
        let m = sampler.matrix(3, 2);
        let s = matrix_to_json(&m);
        let back = matrix_from_json(&s).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn canonical_strings() {
        let m = Matrix::from_rows(vec![vec![Scalar::new(rational(-1, 2), rational(3, 1))]]);
        let s = matrix_to_json(&m);
        assert_eq!(
            s,
            r#"{"rows":1,"cols":1,"entries":[[{"re":"-1/2","im":"3"}]]}"#
        );
    }

    #[test]
    fn float_variant_reads_back() {
        let m = Matrix::from_rows(vec![vec![
            Scalar::from_ratio(1, 2),
            Scalar::new(rational(0, 1), rational(-3, 4)),
        ]]);
        let s = matrix_to_float_json(&m);
        let back = matrix_from_json(&s).unwrap();
        // 1/2 and -3/4 are dyadic, so the float round trip is exact.
        assert_eq!(back, m);
    }

    #[test]
    fn witness_round_trip() {
        let w = MapSpec::Psi { k: 2 }.choi().unwrap();
        let s = witness_to_json(&w);
        let back = witness_from_json(&s).unwrap();
        assert_eq!(back.matrix, w.matrix);
        assert_eq!(back.dims, w.dims);
        assert_eq!(back.source, w.source);
    }

    #[test]
    fn map_spec_json_shape() {
        let spec = MapSpec::Psi { k: 3 };
        assert_eq!(serde_json::to_string(&spec).unwrap(), r#"{"variant":"psi","k":3}"#);
        let back: MapSpec = serde_json::from_str(r#"{"variant":"reduction","n":4}"#).unwrap();
        assert_eq!(back, MapSpec::Reduction { n: 4 });
    }

    #[test]
    fn state_round_trip_keeps_certificates() {
        let state = crate::states::ppt_witness_state(2).unwrap();
        let s = state_to_json(&state);
        let back = state_from_json(&s).unwrap();
        assert_eq!(back.matrix, state.matrix);
        assert_eq!(back.certificates, state.certificates);
    }

    #[test]
    fn bad_grid_is_rejected() {
        let s = r#"{"rows":2,"cols":2,"entries":[[{"re":"1","im":"0"}]]}"#;
        assert!(matrix_from_json(s).is_err());
    }
}
