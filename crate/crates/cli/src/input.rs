//! Input documents and their translation into core objects.

use serde::Deserialize;

use smoothwm::rootdata::{parse_type_string, BasedRootDatum, Family, SimpleType};
use smoothwm::weightmonoid::{MonoidError, WeightMonoid};

use crate::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub group: GroupSpec,
    #[serde(default)]
    pub generators: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub factors: Vec<FactorSpec>,
    pub isogeny: Isogeny,
    #[serde(default)]
    pub torus_rank: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSpec {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
    Custom(CustomDatum),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomDatum {
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    /// Rank of the character lattice.
    pub torus_rank: usize,
}

/// Isogeny selector for the type-string subcommands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsogenyKind {
    SimplyConnected,
    Adjoint,
}

impl IsogenyKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            IsogenyKind::SimplyConnected => "simply_connected",
            IsogenyKind::Adjoint => "adjoint",
        }
    }
}

impl std::str::FromStr for IsogenyKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "simply_connected" | "sc" => Ok(IsogenyKind::SimplyConnected),
            "adjoint" | "ad" => Ok(IsogenyKind::Adjoint),
            other => Err(format!("unknown isogeny '{other}'")),
        }
    }
}

fn factor_types(factors: &[FactorSpec]) -> Result<Vec<SimpleType>, CliError> {
    factors
        .iter()
        .map(|f| {
            let family: Family = f.family.parse().map_err(|e| CliError::validation(format!("{e}")))?;
            SimpleType::new(family, f.rank).map_err(|e| CliError::validation(format!("{e}")))
        })
        .collect()
}

pub fn datum_from_types(types: &[SimpleType], isogeny: IsogenyKind, torus_rank: usize) -> Result<BasedRootDatum, CliError> {
    let d = match isogeny {
        IsogenyKind::SimplyConnected => BasedRootDatum::simply_connected(types, torus_rank),
        IsogenyKind::Adjoint => BasedRootDatum::adjoint(types).map(|d| d.with_central_torus(torus_rank)),
    };
    d.map_err(|e| CliError::validation(format!("{e}")))
}

pub fn datum_from_type_string(s: &str, isogeny: IsogenyKind, torus_rank: usize) -> Result<BasedRootDatum, CliError> {
    let types = parse_type_string(s).map_err(|e| CliError::validation(format!("{e}")))?;
    datum_from_types(&types, isogeny, torus_rank)
}

fn sorted(mut v: Vec<SimpleType>) -> Vec<SimpleType> {
    v.sort();
    v
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::parse(e.to_string()))
    }

    pub fn datum(&self) -> Result<BasedRootDatum, CliError> {
        let types = factor_types(&self.group.factors)?;
        match &self.group.isogeny {
            Isogeny::SimplyConnected => datum_from_types(&types, IsogenyKind::SimplyConnected, self.group.torus_rank),
            Isogeny::Adjoint => datum_from_types(&types, IsogenyKind::Adjoint, self.group.torus_rank),
            Isogeny::Custom(c) => {
                let d = BasedRootDatum::from_vectors(c.simple_roots.clone(), c.simple_coroots.clone(), c.torus_rank)
                    .map_err(|e| CliError::validation(format!("{e}")))?;
                if !types.is_empty() && sorted(types) != sorted(d.component_types()) {
                    return Err(CliError::validation("declared factors do not match the custom root datum".into()));
                }
                Ok(d)
            }
        }
    }

    pub fn monoid(&self) -> Result<WeightMonoid, CliError> {
        WeightMonoid::new(self.datum()?, self.generators.clone()).map_err(monoid_error)
    }
}

pub fn monoid_error(e: MonoidError) -> CliError {
    match e {
        MonoidError::NotPointed => CliError::unsupported(e.to_string()),
        _ => CliError::validation(e.to_string()),
    }
}
