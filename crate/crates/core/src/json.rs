//! JSON file formats.
//!
//! All tables use the carrier convention: index `0` is zero, index `1` is the
//! unit. Tables over `B₁` (`mul` rows and columns, `inv`, `L`) are positioned
//! by `index - 1` and hold carrier indices. `add` and `sub` have one row per
//! `x ∈ B` and one column per `y ∈ B₁`.
//!
//! ```text
//! group        { "n", "mul", "inv" }
//! phi-system   { "n", "mul", "inv", "phi" }
//! near-domain  { "n", "mul", "inv", "add", "sub", "L" }
//! permutations { "degree", "perms", "base": [e1, e2] }
//! pair group   { "n", "pairs": [[x1, x2]], "perms"? }
//! ```

use serde::{Deserialize, Serialize};

use crate::algebra::GroupTable;
use crate::error::{Error, Result};
use crate::near_domain::NearDomain;
use crate::phi::PhiSystem;
use crate::two_transitive::{PairGroup, PermutationAction};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub n: usize,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiJson {
    pub n: usize,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub phi: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearDomainJson {
    pub n: usize,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub add: Vec<Vec<usize>>,
    pub sub: Vec<Vec<usize>>,
    #[serde(rename = "L")]
    pub l: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermJson {
    pub degree: usize,
    pub perms: Vec<Vec<usize>>,
    pub base: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairGroupJson {
    pub n: usize,
    pub pairs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perms: Option<Vec<Vec<usize>>>,
}

impl From<&GroupTable> for GroupJson {
    fn from(g: &GroupTable) -> Self {
        GroupJson {
            n: g.n(),
            mul: g.mul_rows(),
            inv: g.inv_map().to_vec(),
        }
    }
}

impl TryFrom<GroupJson> for GroupTable {
    type Error = Error;
    fn try_from(j: GroupJson) -> Result<Self> {
        GroupTable::new(j.n, j.mul, j.inv)
    }
}

impl From<&PhiSystem> for PhiJson {
    fn from(s: &PhiSystem) -> Self {
        let g = GroupJson::from(s.group());
        PhiJson {
            n: g.n,
            mul: g.mul,
            inv: g.inv,
            phi: s.phi_map().to_vec(),
        }
    }
}

impl TryFrom<PhiJson> for PhiSystem {
    type Error = Error;
    fn try_from(j: PhiJson) -> Result<Self> {
        PhiSystem::new(GroupTable::new(j.n, j.mul, j.inv)?, j.phi)
    }
}

impl From<&NearDomain> for NearDomainJson {
    fn from(d: &NearDomain) -> Self {
        let g = GroupJson::from(d.group());
        NearDomainJson {
            n: g.n,
            mul: g.mul,
            inv: g.inv,
            add: d.add_rows(),
            sub: d.sub_rows(),
            l: d.l_map().to_vec(),
        }
    }
}

impl TryFrom<NearDomainJson> for NearDomain {
    type Error = Error;
    fn try_from(j: NearDomainJson) -> Result<Self> {
        NearDomain::new(GroupTable::new(j.n, j.mul, j.inv)?, j.add, j.sub, j.l)
    }
}

impl From<&PermutationAction> for PermJson {
    fn from(p: &PermutationAction) -> Self {
        let (e1, e2) = p.base();
        PermJson {
            degree: p.degree(),
            perms: p.perms().to_vec(),
            base: [e1, e2],
        }
    }
}

impl TryFrom<PermJson> for PermutationAction {
    type Error = Error;
    fn try_from(j: PermJson) -> Result<Self> {
        PermutationAction::new(j.degree, j.perms, (j.base[0], j.base[1]))
    }
}

impl PairGroupJson {
    pub fn export(g: &PairGroup, with_perms: bool) -> Self {
        PairGroupJson {
            n: g.base().n(),
            pairs: g.elements().iter().map(|p| [p.x1, p.x2]).collect(),
            perms: with_perms.then(|| (0..g.order()).map(|i| g.permutation(i)).collect()),
        }
    }
}

impl Serialize for GroupTable {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        GroupJson::from(self).serialize(ser)
    }
}

impl Serialize for PhiSystem {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PhiJson::from(self).serialize(ser)
    }
}

impl Serialize for NearDomain {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        NearDomainJson::from(self).serialize(ser)
    }
}

/// Any of the input formats, told apart by their keys.
#[derive(Debug, Clone)]
pub enum Document {
    Group(GroupTable),
    Phi(PhiSystem),
    NearDomain(NearDomain),
    Permutations(PermutationAction),
}

fn schema(e: serde_json::Error) -> Error {
    Error::structure("JSON document", e.to_string())
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(schema)?;
    let has = |k: &str| value.get(k).is_some();
    if has("perms") && has("degree") {
        let j: PermJson = serde_json::from_value(value).map_err(schema)?;
        Ok(Document::Permutations(j.try_into()?))
    } else if has("add") || has("sub") || has("L") {
        let j: NearDomainJson = serde_json::from_value(value).map_err(schema)?;
        Ok(Document::NearDomain(j.try_into()?))
    } else if has("phi") {
        let j: PhiJson = serde_json::from_value(value).map_err(schema)?;
        Ok(Document::Phi(j.try_into()?))
    } else {
        let j: GroupJson = serde_json::from_value(value).map_err(schema)?;
        Ok(Document::Group(j.try_into()?))
    }
}
