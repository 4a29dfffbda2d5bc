//! Deliberate semantic faults for checking that the claim harness can tell a
//! broken implementation from a correct one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mutation {
    #[default]
    None,
    /// The extension takes the supremum of `mu(x alpha s gamma y)` instead of the infimum.
    ExtensionSupremum,
    /// h-reachability ignores the padding element: `x + u = v` instead of `x + u + z = v + z`.
    DroppedZ,
    /// The quasi-ideal containment uses the single-term h-product instead of the generalized one.
    QuasiGammaProduct,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [Mutation::ExtensionSupremum, Mutation::DroppedZ, Mutation::QuasiGammaProduct];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::None => "none",
            Mutation::ExtensionSupremum => "extension-sup",
            Mutation::DroppedZ => "dropped-z",
            Mutation::QuasiGammaProduct => "quasi-gamma-h",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Mutation::None]
            .into_iter()
            .chain(Mutation::ALL)
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mutation {s:?}"))
    }
}
