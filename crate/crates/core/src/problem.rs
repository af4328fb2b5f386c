//! JSON problem documents.
//!
//! ```json
//! {
//!   "n": 15, "ell": 1, "e": 3, "theta": [0], "kappa": [0],
//!   "multipartitions": {"lambda": [[5,4,3,2,1]], "mu": [[4,4,4,1,1,1]]},
//!   "cut": {"a": "1/2", "mode": "lenient"},
//!   "polys": {"dL": {"1": 1}},
//!   "ext": {"left": {"0": {"1": 1}}}
//! }
//! ```
//!
//! `e` is an integer or `"infinity"`; every field after `kappa` is optional.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Characteristic, Multipartition, Params, ParamsViolation};
use crate::cut::CutSpec;
use crate::error::{Error, Result};
use crate::graded::{ExtTable, GradedPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub params: Params,
    pub multipartitions: BTreeMap<String, Multipartition>,
    pub cut: Option<CutSpec>,
    pub polys: BTreeMap<String, GradedPoly>,
    pub ext: BTreeMap<String, ExtTable>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    n: usize,
    ell: usize,
    e: Characteristic,
    theta: Vec<i64>,
    kappa: Vec<i64>,
    #[serde(default)]
    multipartitions: BTreeMap<String, Multipartition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cut: Option<CutSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    polys: BTreeMap<String, GradedPoly>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    ext: BTreeMap<String, ExtTable>,
}

fn at(path: impl Into<String>, message: impl ToString) -> Error {
    Error::Problem { path: path.into(), message: message.to_string() }
}

fn violation_path(v: &ParamsViolation) -> String {
    match v {
        ParamsViolation::ZeroLevel => "ell".into(),
        ParamsViolation::CharacteristicTooSmall { .. } => "e".into(),
        ParamsViolation::ThetaLength { .. } => "theta".into(),
        ParamsViolation::KappaLength { .. } => "kappa".into(),
        ParamsViolation::NotIncreasing { index } => format!("theta[{index}]"),
        ParamsViolation::DifferenceInEllZ { j, .. } => format!("theta[{j}]"),
        ParamsViolation::ResidueOutOfRange { index, .. } => format!("kappa[{index}]"),
    }
}

/// Parse and validate a problem document. Errors name the offending field.
pub fn load_problem(text: &str) -> Result<Problem> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: Document = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        at(if path == "." { "document".into() } else { path }, e.into_inner())
    })?;

    let params = Params { n: doc.n, ell: doc.ell, e: doc.e, theta: doc.theta, kappa: doc.kappa };
    params.validate().map_err(|v| at(violation_path(&v), v))?;

    for (name, lambda) in &doc.multipartitions {
        let path = format!("multipartitions.{name}");
        if lambda.level() != params.ell {
            return Err(at(path, format!("has {} components, expected ell = {}", lambda.level(), params.ell)));
        }
        if lambda.size() != params.n {
            return Err(at(path, format!("has size {}, expected n = {}", lambda.size(), params.n)));
        }
    }
    if let Some(cut) = &doc.cut {
        cut.validate(params.n, &params).map_err(|e| at("cut.a", e))?;
    }

    Ok(Problem { params, multipartitions: doc.multipartitions, cut: doc.cut, polys: doc.polys, ext: doc.ext })
}

impl Problem {
    pub fn to_json(&self) -> String {
        let doc = Document {
            n: self.params.n,
            ell: self.params.ell,
            e: self.params.e,
            theta: self.params.theta.clone(),
            kappa: self.params.kappa.clone(),
            multipartitions: self.multipartitions.clone(),
            cut: self.cut.clone(),
            polys: self.polys.clone(),
            ext: self.ext.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("problem documents always serialize")
    }

    pub fn multipartition(&self, name: &str) -> Result<&Multipartition> {
        self.multipartitions.get(name).ok_or_else(|| at(format!("multipartitions.{name}"), "no such multipartition"))
    }
}
