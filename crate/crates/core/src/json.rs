//! JSON instance documents.
//!
//! Scalars are strings like `"1/2-3*i"`, matrices are row-major nested arrays, and graphs
//! and bases are lists of column vectors.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::green::GreensBoundaryRelation;
use crate::matrix::{Matrix, Vector};
use crate::relation::LinearRelation;
use crate::scalar::Scalar;
use crate::space::{KreinSpace, Space};
use crate::subspace::Subspace;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub dim: usize,
    pub gram: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubspaceDoc {
    pub space: SpaceDoc,
    pub basis: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub from: SpaceDoc,
    pub to: SpaceDoc,
    pub graph: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GbrDoc {
    #[serde(rename = "K")]
    pub k: SpaceDoc,
    #[serde(rename = "H")]
    pub h: SpaceDoc,
    /// Columns in block order `(f, f′, h, h′)`.
    pub graph: Vec<Vector>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceDocument {
    pub kind: String,
    pub schema_version: u32,
    pub payload: Value,
}

/// A loaded, validated instance.
#[derive(Clone, Debug)]
pub enum Instance {
    Space(Space),
    Subspace(Space, Subspace),
    Relation(LinearRelation),
    Gbr(GreensBoundaryRelation),
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

impl SpaceDoc {
    pub fn of(space: &KreinSpace) -> Self {
        let label = (!space.label().is_empty()).then(|| space.label().to_string());
        SpaceDoc { dim: space.dim(), gram: space.gram().to_rows(), label }
    }

    pub fn load(&self) -> Result<Space> {
        let gram = Matrix::try_from_rows(self.gram.clone()).ok_or_else(|| parse_err("ragged gram matrix"))?;
        if gram.rows() != self.dim || gram.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: gram.rows() });
        }
        KreinSpace::new(gram, self.label.clone().unwrap_or_default())
    }
}

impl RelationDoc {
    pub fn of(r: &LinearRelation) -> Self {
        RelationDoc {
            from: SpaceDoc::of(r.from_space()),
            to: SpaceDoc::of(r.to_space()),
            graph: r.graph().basis().to_vec(),
        }
    }

    /// Structurally identical `from` and `to` documents load as one shared space.
    pub fn load(&self) -> Result<LinearRelation> {
        let from = self.from.load()?;
        let to = if self.to == self.from { from.clone() } else { self.to.load()? };
        LinearRelation::from_columns(from, to, self.graph.clone())
    }
}

impl GbrDoc {
    pub fn of(g: &GreensBoundaryRelation) -> Self {
        GbrDoc { k: SpaceDoc::of(g.k()), h: SpaceDoc::of(g.h()), graph: g.graph().basis().to_vec() }
    }

    pub fn load(&self) -> Result<GreensBoundaryRelation> {
        GreensBoundaryRelation::from_columns(self.k.load()?, self.h.load()?, self.graph.clone())
    }
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Space(_) => "space",
            Instance::Subspace(..) => "subspace",
            Instance::Relation(_) => "relation",
            Instance::Gbr(_) => "gbr",
        }
    }

    pub fn to_document(&self) -> InstanceDocument {
        let payload = match self {
            Instance::Space(s) => serde_json::to_value(SpaceDoc::of(s)),
            Instance::Subspace(s, a) => {
                serde_json::to_value(SubspaceDoc { space: SpaceDoc::of(s), basis: a.basis().to_vec() })
            }
            Instance::Relation(r) => serde_json::to_value(RelationDoc::of(r)),
            Instance::Gbr(g) => serde_json::to_value(GbrDoc::of(g)),
        }
        .expect("documents serialize");
        InstanceDocument { kind: self.kind().into(), schema_version: SCHEMA_VERSION, payload }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self.to_document()).expect("documents serialize")
    }
}

impl InstanceDocument {
    pub fn load(&self) -> Result<Instance> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(parse_err(format!("unsupported schemaVersion {}", self.schema_version)));
        }
        let p = self.payload.clone();
        match self.kind.as_str() {
            "space" => Ok(Instance::Space(serde_json::from_value::<SpaceDoc>(p).map_err(parse_err)?.load()?)),
            "subspace" => {
                let d: SubspaceDoc = serde_json::from_value(p).map_err(parse_err)?;
                let space = d.space.load()?;
                let a = Subspace::try_span(space.dim(), d.basis)?;
                Ok(Instance::Subspace(space, a))
            }
            "relation" => Ok(Instance::Relation(serde_json::from_value::<RelationDoc>(p).map_err(parse_err)?.load()?)),
            "gbr" => Ok(Instance::Gbr(serde_json::from_value::<GbrDoc>(p).map_err(parse_err)?.load()?)),
            other => Err(parse_err(format!("unknown kind {other:?}"))),
        }
    }
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let doc: InstanceDocument = serde_json::from_str(text).map_err(parse_err)?;
    doc.load()
}

/// Reads a list of scalars, e.g. `["0+1*i", "2-3*i"]`.
pub fn parse_scalars(items: &[String]) -> Result<Vec<Scalar>> {
    items.iter().map(|s| s.parse::<Scalar>().map_err(parse_err)).collect()
}
