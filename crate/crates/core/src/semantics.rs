use std::fmt;
use std::str::FromStr;

/// Extension-based semantics supported by the evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semantics {
    ConflictFree,
    Admissible,
    Complete,
    Grounded,
    Preferred,
}

impl Semantics {
    pub const ALL: [Semantics; 5] = [
        Semantics::ConflictFree,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::ConflictFree => "conflict-free",
            Semantics::Admissible => "admissible",
            Semantics::Complete => "complete",
            Semantics::Grounded => "grounded",
            Semantics::Preferred => "preferred",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Semantics::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown semantics `{s}`"))
    }
}

/// How a family of extensions is collapsed into a set of accepted arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InferenceMode {
    /// Accepted in some extension.
    Credulous,
    /// Accepted in every extension.
    Sceptical,
}

impl InferenceMode {
    pub const ALL: [InferenceMode; 2] = [InferenceMode::Credulous, InferenceMode::Sceptical];

    pub fn name(self) -> &'static str {
        match self {
            InferenceMode::Credulous => "credulous",
            InferenceMode::Sceptical => "sceptical",
        }
    }
}

impl fmt::Display for InferenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InferenceMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "credulous" => Ok(InferenceMode::Credulous),
            "sceptical" | "skeptical" => Ok(InferenceMode::Sceptical),
            _ => Err(format!("unknown inference mode `{s}`")),
        }
    }
}
