//! JSON wire formats. Scalars are strings in the text form of their field.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{Field, FieldTag};
use crate::frame::Frame;
use crate::limit::LimitElement;
use crate::matrix::Matrix;
use crate::subspace::Subspace;
use crate::testset::{RefutationCertificate, TestSet, Verdict};

pub type MatrixJson = Vec<Vec<String>>;

pub fn matrix_to_json<F: Field>(m: &Matrix<F>) -> MatrixJson {
    m.row_vecs().iter().map(|r| r.iter().map(F::to_string).collect()).collect()
}

/// Reads an array of rows. `cols` is needed only when there are no rows.
pub fn matrix_from_json<F: Field>(rows: &MatrixJson, cols: Option<usize>) -> Result<Matrix<F>> {
    let width = rows.first().map(Vec::len).or(cols).unwrap_or(0);
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| F::parse(s)).collect::<Result<Vec<F>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(width, parsed)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient: usize,
    pub field: FieldTag,
    pub basis: MatrixJson,
}

impl SubspaceJson {
    pub fn from_subspace<F: Field>(u: &Subspace<F>) -> Self {
        SubspaceJson { ambient: u.ambient(), field: F::TAG, basis: matrix_to_json(u.basis()) }
    }

    /// The subspace spanned by the basis rows, and whether canonicalization
    /// changed the given basis.
    pub fn to_subspace<F: Field>(&self) -> Result<(Subspace<F>, bool)> {
        if self.field != F::TAG {
            return Err(Error::FieldMismatch { expected: F::TAG.to_string(), found: self.field.to_string() });
        }
        if let Some(r) = self.basis.iter().find(|r| r.len() != self.ambient) {
            return Err(Error::Shape(format!(
                "basis row of length {} in ambient {}",
                r.len(),
                self.ambient
            )));
        }
        let rows = matrix_from_json::<F>(&self.basis, Some(self.ambient))?;
        let u = Subspace::span(self.ambient, &rows);
        let changed = *u.basis() != rows;
        Ok((u, changed))
    }
}

pub fn subspace_to_value<F: Field>(u: &Subspace<F>) -> Value {
    serde_json::to_value(SubspaceJson::from_subspace(u)).expect("plain data")
}

pub fn subspace_from_value<F: Field>(v: &Value) -> Result<(Subspace<F>, bool)> {
    serde_json::from_value::<SubspaceJson>(v.clone())?.to_subspace()
}

/// Reads the field tag of a subspace document without parsing scalars.
pub fn peek_field(v: &Value) -> Option<FieldTag> {
    v.get("field").and_then(|f| serde_json::from_value(f.clone()).ok())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameJson {
    pub d: usize,
    pub a: Vec<SubspaceJson>,
    pub bot: SubspaceJson,
    pub top: SubspaceJson,
}

impl FrameJson {
    pub fn from_frame<F: Field>(f: &Frame<F>) -> Self {
        FrameJson {
            d: f.d,
            a: f.a.iter().map(SubspaceJson::from_subspace).collect(),
            bot: SubspaceJson::from_subspace(&f.bot),
            top: SubspaceJson::from_subspace(&f.top),
        }
    }

    pub fn to_frame<F: Field>(&self) -> Result<Frame<F>> {
        let a = self.a.iter().map(|s| s.to_subspace().map(|x| x.0)).collect::<Result<Vec<_>>>()?;
        Ok(Frame { d: self.d, a, bot: self.bot.to_subspace()?.0, top: self.top.to_subspace()?.0 })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitElementJson {
    pub level: u32,
    pub space: SubspaceJson,
}

impl LimitElementJson {
    pub fn from_element<F: Field>(x: &LimitElement<F>) -> Self {
        LimitElementJson { level: x.level(), space: SubspaceJson::from_subspace(x.space()) }
    }

    pub fn to_element<F: Field>(&self) -> Result<LimitElement<F>> {
        LimitElement::new(self.level, self.space.to_subspace()?.0)
    }
}

/// A test set is either an array of subspaces or `{"elements": [...]}`.
pub fn testset_from_value<F: Field>(v: &Value) -> Result<TestSet<F>> {
    let items = match v {
        Value::Array(items) => items,
        Value::Object(o) => match o.get("elements") {
            Some(Value::Array(items)) => items,
            _ => return Err(Error::Json("test set object needs an `elements` array".into())),
        },
        _ => return Err(Error::Json("test set must be an array of subspaces".into())),
    };
    let elements = items.iter().map(|x| subspace_from_value(x).map(|s| s.0)).collect::<Result<Vec<_>>>()?;
    TestSet::new(elements)
}

pub fn testset_to_value<F: Field>(t: &TestSet<F>) -> Value {
    Value::Array(t.elements().iter().map(subspace_to_value).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub holds: bool,
    pub count: u64,
    pub total: u64,
    pub elapsed_ms: f64,
}

impl SearchStats {
    pub fn from_verdict<F: Field>(v: &Verdict<F>) -> Self {
        SearchStats {
            holds: v.holds,
            count: v.examined,
            total: v.total,
            elapsed_ms: v.elapsed.as_secs_f64() * 1e3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub d: usize,
    pub n: usize,
    pub term: String,
    pub variables: Vec<String>,
    pub witness: BTreeMap<String, SubspaceJson>,
    pub witness_value: SubspaceJson,
    pub witness_value_dim: usize,
    pub testset: SearchStats,
}

impl CertificateJson {
    pub fn from_certificate<F: Field>(c: &RefutationCertificate<F>) -> Self {
        CertificateJson {
            d: c.d,
            n: c.n,
            term: c.term.to_string(),
            variables: c.vars.clone(),
            witness: c.witness.iter().map(|(k, v)| (k.clone(), SubspaceJson::from_subspace(v))).collect(),
            witness_value: SubspaceJson::from_subspace(&c.witness_value),
            witness_value_dim: c.witness_value.dim(),
            testset: SearchStats::from_verdict(&c.testset_verdict),
        }
    }
}
