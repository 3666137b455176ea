//! Wire formats shared by the command-line front end and the schema documents.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::Fq;
use crate::divisor::{DivModP, Divisor, FactoredFunction, Point};
use crate::error::{Error, Result};
use crate::galois::{linalg, CyclicExtension, FqAlgebra};
use crate::harrison::{AdeleClass, CurveCtx, SigmaClass};
use crate::rotation::SuperellipticData;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffJson {
    pub point: String,
    pub c: i64,
}

/// `{"coeffs": [{"point": "a", "c": 1}]}`; a bare map `{"a": 1}` is also accepted on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DivisorJson {
    Coeffs { coeffs: Vec<CoeffJson> },
    Map(BTreeMap<String, i64>),
}

impl DivisorJson {
    fn pairs(&self) -> Vec<(Point, i64)> {
        match self {
            DivisorJson::Coeffs { coeffs } => coeffs
                .iter()
                .map(|c| (Point::new(c.point.clone()), c.c))
                .collect(),
            DivisorJson::Map(m) => m.iter().map(|(k, &v)| (Point::new(k.clone()), v)).collect(),
        }
    }

    pub fn to_divisor(&self) -> Result<Divisor> {
        Divisor::from_pairs(self.pairs())
    }

    pub fn to_mod_p(&self, p: u64) -> Result<DivModP> {
        DivModP::from_pairs(p, self.pairs())
    }

    pub fn from_divisor(d: &Divisor) -> Self {
        DivisorJson::Coeffs {
            coeffs: d
                .iter()
                .map(|(pt, c)| CoeffJson {
                    point: pt.label().to_string(),
                    c,
                })
                .collect(),
        }
    }

    pub fn from_mod_p(d: &DivModP) -> Self {
        DivisorJson::Coeffs {
            coeffs: d
                .iter()
                .map(|(pt, c)| CoeffJson {
                    point: pt.label().to_string(),
                    c: c as i64,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub root: String,
    pub e: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionJson {
    pub factors: Vec<FactorJson>,
}

impl FunctionJson {
    pub fn to_function(&self) -> Result<FactoredFunction> {
        FactoredFunction::from_factors(
            self.factors
                .iter()
                .map(|f| (Point::new(f.root.clone()), f.e)),
        )
    }

    pub fn from_function(f: &FactoredFunction) -> Self {
        FunctionJson {
            factors: f
                .iter()
                .map(|(pt, e)| FactorJson {
                    root: pt.label().to_string(),
                    e,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SigmaJson {
    pub vv: DivisorJson,
    #[serde(default)]
    pub jac: Vec<i64>,
}

impl SigmaJson {
    pub fn to_class(&self, ctx: &CurveCtx) -> Result<SigmaClass> {
        ctx.sigma_class(self.vv.to_mod_p(ctx.p())?, ctx.jac(&self.jac)?)
    }

    pub fn from_class(s: &SigmaClass) -> Self {
        SigmaJson {
            vv: DivisorJson::from_mod_p(s.vv()),
            jac: s.jac().coords().iter().map(|&c| c as i64).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdeleJson {
    pub vv: DivisorJson,
}

impl AdeleJson {
    pub fn to_class(&self, ctx: &CurveCtx) -> Result<AdeleClass> {
        ctx.adele_class(self.vv.to_mod_p(ctx.p())?)
    }

    pub fn from_class(a: &AdeleClass) -> Self {
        AdeleJson {
            vv: DivisorJson::from_mod_p(a.vv()),
        }
    }
}

/// `{"p": 5, "branch": ["a", "b"], "exps": [2, 3]}`; `branch` defaults to `x1..xr`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuperellipticJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<Vec<String>>,
    pub exps: Vec<u64>,
}

impl SuperellipticJson {
    /// Resolves `p` from the payload or `fallback`; both present must agree.
    pub fn to_data(&self, fallback: Option<u64>) -> Result<SuperellipticData> {
        let p = match (self.p, fallback) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::ContextMismatch(format!("payload p={a} but --p {b}")))
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => return Err(Error::invalid("p is required")),
        };
        match &self.branch {
            Some(labels) => SuperellipticData::new(
                p,
                labels.iter().map(|l| Point::new(l.clone())).collect(),
                self.exps.clone(),
            ),
            None => SuperellipticData::with_default_branch(p, self.exps.clone()),
        }
    }
}

/// `{"q", "dim", "mul", "gen"}` with `gen[j]` the coordinates of `gen(e_j)`;
/// `one` is optional and solved for when absent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub q: u64,
    pub dim: usize,
    pub mul: Vec<Vec<Vec<u64>>>,
    pub gen: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<Vec<u64>>,
}

impl AlgebraJson {
    pub fn to_extension(&self, p: u64) -> Result<CyclicExtension> {
        if self.mul.len() != self.dim || self.gen.len() != self.dim {
            return Err(Error::invalid(format!(
                "dim = {} but the tables have {} and {} rows",
                self.dim,
                self.mul.len(),
                self.gen.len()
            )));
        }
        let field = Fq::new(self.q)?;
        let algebra = match &self.one {
            Some(one) => FqAlgebra::new(field, self.mul.clone(), one.clone())?,
            None => FqAlgebra::from_table(field, self.mul.clone())?,
        };
        CyclicExtension::new(algebra, linalg::transpose(&self.gen), p)
    }

    pub fn from_extension(ext: &CyclicExtension) -> Self {
        AlgebraJson {
            q: ext.algebra.field().q(),
            dim: ext.dim(),
            mul: ext.algebra.structure_constants().to_vec(),
            gen: linalg::transpose(ext.action.matrix()),
            one: Some(ext.algebra.one().to_vec()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Sandbox;

    #[test]
    fn divisor_forms_agree() {
        let a: DivisorJson =
            serde_json::from_str(r#"{"coeffs":[{"point":"a","c":1},{"point":"b","c":-1}]}"#)
                .unwrap();
        let b: DivisorJson = serde_json::from_str(r#"{"a":1,"b":-1}"#).unwrap();
        assert_eq!(a.to_divisor().unwrap(), b.to_divisor().unwrap());
        let dup: DivisorJson =
            serde_json::from_str(r#"{"coeffs":[{"point":"a","c":1},{"point":"a","c":2}]}"#)
                .unwrap();
        assert!(dup.to_divisor().is_err());
    }

    #[test]
    fn algebra_round_trip() {
        let s = Sandbox::new(3, 7).unwrap();
        let ext = s.kummer_extension(3, s.chi()).unwrap();
        let wire = AlgebraJson::from_extension(&ext);
        let text = serde_json::to_string(&wire).unwrap();
        let back: AlgebraJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_extension(3).unwrap(), ext);
    }

    #[test]
    fn superelliptic_p_resolution() {
        let j: SuperellipticJson = serde_json::from_str(r#"{"exps":[2,3]}"#).unwrap();
        assert_eq!(j.to_data(Some(5)).unwrap().p(), 5);
        assert!(j.to_data(None).is_err());
        let j: SuperellipticJson = serde_json::from_str(r#"{"p":5,"exps":[2,3]}"#).unwrap();
        assert!(j.to_data(Some(7)).is_err());
    }
}
