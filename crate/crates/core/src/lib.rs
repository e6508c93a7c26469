//! Value-of-information analysis over Dung and probabilistic argumentation
//! frameworks.
//!
//! The crate evaluates frameworks under the conflict-free, admissible,
//! complete, grounded and preferred semantics with credulous or sceptical
//! inference, extends the evaluation to frameworks whose arguments and attacks
//! exist only with some probability, and scores arguments by how much their
//! removal (value of observed) or the addition of new material (value of
//! observation) moves an objective.
//!
//! ```
//! use argvoi::{DungFramework, InferenceMode, Semantics};
//!
//! let af = DungFramework::new(
//!     ["a1", "a2", "a3", "a4"],
//!     [("a1", "a2"), ("a2", "a3"), ("a2", "a4"), ("a4", "a3")],
//! )
//! .unwrap();
//! let accepted = af.accepted_arguments(Semantics::Grounded, InferenceMode::Sceptical);
//! let ids: Vec<&str> = accepted.iter().map(|a| a.as_str()).collect();
//! assert_eq!(ids, ["a1", "a4"]);
//! ```
//!
//! The guide under `book/` walks through each part with runnable snippets.

pub mod ach;
mod error;
pub mod framework;
mod graph;
pub mod io;
pub mod praf;
mod probability;
pub mod semantics;
mod sum;
pub mod voi;

pub use ach::{AchMatrix, CellLabel, ProbabilityMapping};
pub use error::{Error, Result};
pub use framework::{
    argument_set, ArgumentId, ArgumentSet, DungFramework, Extension, ObservationBundle,
};
pub use praf::{
    AcceptanceProbabilities, Estimate, InducedFramework, Method, MonteCarloConfig,
    ProbabilisticFramework, DEFAULT_EXACT_LIMIT,
};
pub use probability::Probability;
pub use semantics::{InferenceMode, Semantics};
pub use voi::{DifferenceKind, Framework, Objective, UtilityKind, Value};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/dung-frameworks.md")]
    mod dung_frameworks {}
    #[doc = include_str!("../../../book/src/probabilistic-frameworks.md")]
    mod probabilistic_frameworks {}
    #[doc = include_str!("../../../book/src/value-of-information.md")]
    mod value_of_information {}
    #[doc = include_str!("../../../book/src/ach.md")]
    mod ach {}
    #[doc = include_str!("../../../book/src/file-formats.md")]
    mod file_formats {}
}
