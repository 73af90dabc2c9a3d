use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::FinitePoset;
use crate::space::FiniteSpace;
use crate::zoo::ZooSpaceId;

/// Input format for `--space` files.
///
/// ```json
/// {"kind": "finite-poset", "elements": ["bot", "a"], "order": [["bot", "a"]]}
/// {"kind": "finite-space", "carrier": ["x", "y"], "opens": [[], ["y"], ["x", "y"]]}
/// {"kind": "zoo", "space": "JOHNSTONE_SCOTT"}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SpaceDescriptor {
    FinitePoset { elements: Vec<String>, order: Vec<(String, String)> },
    FiniteSpace { carrier: Vec<String>, opens: Vec<Vec<String>> },
    Zoo { space: ZooSpaceId },
}

pub enum Space {
    Finite(FiniteSpace),
    Zoo(ZooSpaceId),
}

impl SpaceDescriptor {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("space descriptor: {e}")))
    }

    pub fn build(&self) -> Result<Space> {
        Ok(match self {
            SpaceDescriptor::FinitePoset { elements, order } => {
                let p = FinitePoset::new(elements, order.iter().map(|(a, b)| (a, b)))?;
                Space::Finite(FiniteSpace::alexandroff(&p)?)
            }
            SpaceDescriptor::FiniteSpace { carrier, opens } => Space::Finite(FiniteSpace::new(carrier, opens)?),
            SpaceDescriptor::Zoo { space } => Space::Zoo(*space),
        })
    }
}
