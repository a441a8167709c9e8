use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Which roles a pre-assignment may fix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Include,
    Exclude,
    Mixed,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::Include, Model::Exclude, Model::Mixed];

    pub fn as_str(self) -> &'static str {
        match self {
            Model::Include => "include",
            Model::Exclude => "exclude",
            Model::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "include" | "in" => Ok(Model::Include),
            "exclude" | "ex" => Ok(Model::Exclude),
            "mixed" | "mix" => Ok(Model::Mixed),
            other => Err(Error::InvalidInput(format!("unknown model `{other}`"))),
        }
    }
}

/// Vertices fixed inside (`include`) and outside (`exclude`) the target cover.
///
/// The model restricts which side may be non-empty. Overlapping sides are
/// representable and simply never feasible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreAssignment {
    model: Model,
    include: VertexSet,
    exclude: VertexSet,
}

impl PreAssignment {
    pub fn new(model: Model, include: VertexSet, exclude: VertexSet) -> Result<Self> {
        if include.universe() != exclude.universe() {
            return Err(Error::InvalidInput("include and exclude sets over different universes".into()));
        }
        match model {
            Model::Include if !exclude.is_empty() => {
                Err(Error::InvalidInput("include model with a non-empty exclude set".into()))
            }
            Model::Exclude if !include.is_empty() => {
                Err(Error::InvalidInput("exclude model with a non-empty include set".into()))
            }
            _ => Ok(PreAssignment { model, include, exclude }),
        }
    }

    pub fn empty(model: Model, n: usize) -> Self {
        PreAssignment { model, include: VertexSet::new(n), exclude: VertexSet::new(n) }
    }

    pub fn including(include: VertexSet) -> Self {
        let n = include.universe();
        PreAssignment { model: Model::Include, include, exclude: VertexSet::new(n) }
    }

    pub fn excluding(exclude: VertexSet) -> Self {
        let n = exclude.universe();
        PreAssignment { model: Model::Exclude, include: VertexSet::new(n), exclude }
    }

    pub fn mixed(include: VertexSet, exclude: VertexSet) -> Result<Self> {
        Self::new(Model::Mixed, include, exclude)
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn include(&self) -> &VertexSet {
        &self.include
    }

    pub fn exclude(&self) -> &VertexSet {
        &self.exclude
    }

    pub fn universe(&self) -> usize {
        self.include.universe()
    }

    /// `|include| + |exclude|`.
    pub fn size(&self) -> usize {
        self.include.len() + self.exclude.len()
    }

    pub fn is_disjoint(&self) -> bool {
        self.include.is_disjoint(&self.exclude)
    }

    /// Same sets reported under another model tag (checked against the model rules).
    pub fn with_model(&self, model: Model) -> Result<Self> {
        Self::new(model, self.include.clone(), self.exclude.clone())
    }

    /// Include list first, then exclude list, both ascending.
    pub fn cmp_lex(&self, other: &Self) -> std::cmp::Ordering {
        self.include.cmp_lex(&other.include).then_with(|| self.exclude.cmp_lex(&other.exclude))
    }

    pub fn to_json(&self) -> PreAssignmentJson {
        PreAssignmentJson {
            model: self.model,
            include: self.include.to_vec(),
            exclude: self.exclude.to_vec(),
        }
    }

    /// Reads the JSON form against a graph on `n` vertices.
    pub fn from_json(json: &PreAssignmentJson, n: usize) -> Result<Self> {
        let set = |ids: &[usize]| {
            VertexSet::try_from_vertices(n, ids.iter().copied())
                .map_err(|vertex| Error::VertexOutOfRange { vertex, n })
        };
        Self::new(json.model, set(&json.include)?, set(&json.exclude)?)
    }
}

/// `{"model":"include"|"exclude"|"mixed","include":[ids],"exclude":[ids]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreAssignmentJson {
    pub model: Model,
    #[serde(default)]
    pub include: Vec<usize>,
    #[serde(default)]
    pub exclude: Vec<usize>,
}
