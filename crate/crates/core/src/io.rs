//! JSON wire forms for complexes and certificates.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::collapse::{verify_sequence, CollapseSequence};
use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::geometry::Nerve;
use crate::matroid::MatroidSpec;
use crate::theorems::{verify_witness, Conclusion, Witness};
use crate::tverberg::{
    verify_center, verify_tolerance, PointConfig, ToleranceCertificate, TverbergBudget,
    TverbergCertificate,
};

pub const SCHEMA_VERSION: u64 = 1;

/// Adds `"helly_schema": 1` to a JSON object.
pub fn with_schema(mut value: Value) -> Value {
    if let Value::Object(map) = &mut value {
        map.insert("helly_schema".into(), SCHEMA_VERSION.into());
    }
    value
}

/// `{"vertices": n, "facets": [[..], ..], "labels": [..]?,
/// "empty_vertices": [..]?}`. Facets are normalized to a sorted antichain
/// on read. `[]` is the void complex and `[[]]` the complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSpec {
    pub vertices: usize,
    pub facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub empty_vertices: Vec<usize>,
}

impl ComplexSpec {
    pub fn build(&self) -> Result<SimplicialComplex> {
        if self.vertices > crate::complex::MAX_VERTICES {
            return Err(Error::InvalidVertex(self.vertices - 1));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.vertices {
                return Err(Error::Malformed(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    self.vertices
                )));
            }
        }
        let mut facets = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            facets.push(Simplex::new(f.iter().copied())?);
        }
        let x = SimplicialComplex::new(Simplex::range(self.vertices), facets)?;
        if let Some(&v) = self
            .empty_vertices
            .iter()
            .find(|&&v| x.contains(Simplex::of(&[v])))
        {
            return Err(Error::Malformed(format!(
                "empty vertex {v} appears in a face"
            )));
        }
        Ok(x)
    }

    pub fn from_complex(x: &SimplicialComplex) -> Self {
        Self {
            vertices: x.vertex_set().max_vertex().map_or(0, |v| v + 1),
            facets: x.facets().iter().map(|f| f.to_vec()).collect(),
            labels: None,
            empty_vertices: Vec::new(),
        }
    }

    pub fn from_nerve(n: &Nerve) -> Self {
        Self {
            empty_vertices: n.empty_vertices.to_vec(),
            ..Self::from_complex(&n.complex)
        }
    }
}

pub fn read_complex(text: &str) -> Result<SimplicialComplex> {
    serde_json::from_str::<ComplexSpec>(text)
        .map_err(|e| Error::Malformed(e.to_string()))?
        .build()
}

/// Every certificate kind the toolkit emits, tagged by `"kind"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Collapse {
        complex: ComplexSpec,
        sequence: CollapseSequence,
    },
    TverbergCenter {
        points: PointConfig,
        certificate: TverbergCertificate,
    },
    Tolerance {
        points: PointConfig,
        certificate: ToleranceCertificate,
    },
    Witness {
        complex: ComplexSpec,
        matroid: MatroidSpec,
        m: usize,
        k: usize,
        conclusion: Conclusion,
        witness: Witness,
    },
}

/// Re-runs the verifier matching the certificate kind.
pub fn verify_certificate(cert: &Certificate, budget: TverbergBudget) -> Result<bool> {
    match cert {
        Certificate::Collapse { complex, sequence } => {
            Ok(verify_sequence(&complex.build()?, sequence).valid)
        }
        Certificate::TverbergCenter {
            points,
            certificate,
        } => {
            points.validate()?;
            let d = points.dim;
            let size_ok = certificate.center.len() == (certificate.r - 1) * (d + 1);
            Ok(size_ok
                && verify_center(
                    &points.points,
                    &certificate.labels,
                    certificate.r,
                    certificate.center,
                )?
                .valid)
        }
        Certificate::Tolerance {
            points,
            certificate,
        } => {
            points.validate()?;
            Ok(verify_tolerance(
                &points.points,
                &certificate.labels,
                certificate.r,
                certificate.t,
                budget.max_removals,
            )?
            .valid)
        }
        Certificate::Witness {
            complex,
            matroid,
            m,
            k,
            conclusion,
            witness,
        } => {
            let x = complex.build()?;
            let mat = matroid.clone().build()?;
            Ok(verify_witness(&x, &mat, *m, *k, *conclusion, witness))
        }
    }
}
