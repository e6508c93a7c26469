//! Probabilistic argumentation frameworks.
//!
//! Every argument and attack carries an independent existence probability in
//! `(0, 1]`. Evaluation ranges over the inducible sub-frameworks, either
//! exhaustively ([`ProbabilisticFramework::acceptance_exact`]) or by sampling
//! ([`ProbabilisticFramework::acceptance_monte_carlo`]).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::framework::{ArgumentId, DungFramework, ObservationBundle};
use crate::probability::Probability;
use crate::semantics::{InferenceMode, Semantics};

mod exact;
mod monte_carlo;

pub use exact::InducedFramework;
pub use monte_carlo::MonteCarloConfig;

/// Default cap on the number of uncertain elements for exact enumeration
/// (about a million induced frameworks).
pub const DEFAULT_EXACT_LIMIT: usize = 20;

/// How acceptance probabilities are computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    /// Enumerate every inducible framework. `limit` bounds the number of
    /// elements with probability below one.
    Exact {
        limit: usize,
    },
    MonteCarlo(MonteCarloConfig),
}

impl Default for Method {
    fn default() -> Self {
        Method::Exact {
            limit: DEFAULT_EXACT_LIMIT,
        }
    }
}

/// Sampling metadata attached to an estimate.
#[derive(Debug, Clone, PartialEq)]
pub enum Estimate {
    Exact,
    MonteCarlo {
        samples: usize,
        seed: u64,
        std_error: BTreeMap<ArgumentId, f64>,
    },
}

/// Per-argument acceptance probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct AcceptanceProbabilities {
    per_argument: BTreeMap<ArgumentId, f64>,
    estimate: Estimate,
}

impl AcceptanceProbabilities {
    pub(crate) fn new(per_argument: BTreeMap<ArgumentId, f64>, estimate: Estimate) -> Self {
        AcceptanceProbabilities {
            per_argument,
            estimate,
        }
    }

    pub fn get(&self, id: &str) -> Option<f64> {
        self.per_argument.get(id).copied()
    }

    pub fn per_argument(&self) -> &BTreeMap<ArgumentId, f64> {
        &self.per_argument
    }

    pub fn estimate(&self) -> &Estimate {
        &self.estimate
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.estimate, Estimate::Exact)
    }

    /// Binomial standard error; `None` for exact results.
    pub fn std_error(&self, id: &str) -> Option<f64> {
        match &self.estimate {
            Estimate::Exact => None,
            Estimate::MonteCarlo { std_error, .. } => std_error.get(id).copied(),
        }
    }
}

/// A Dung framework with existence probabilities on arguments and attacks.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilisticFramework {
    base: DungFramework,
    // aligned with `base.arguments()` and `base.indexed_attacks()`
    arg_prob: Vec<Probability>,
    att_prob: Vec<Probability>,
}

impl ProbabilisticFramework {
    /// Builds a framework from `(id, probability)` and
    /// `(source, target, probability)` entries.
    ///
    /// ```
    /// use argvoi::ProbabilisticFramework;
    ///
    /// let pf = ProbabilisticFramework::new([("a", 0.8), ("b", 1.0)], [("a", "b", 0.5)]).unwrap();
    /// assert_eq!(pf.uncertain_count(), 2);
    /// assert!(ProbabilisticFramework::new([("a", 0.0)], [] as [(&str, &str, f64); 0]).is_err());
    /// ```
    pub fn new<I, S, J, T>(arguments: I, attacks: J) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: AsRef<str>,
        J: IntoIterator<Item = (T, T, f64)>,
        T: AsRef<str>,
    {
        let arguments = arguments
            .into_iter()
            .map(|(a, p)| Ok((ArgumentId::new(a.as_ref())?, Probability::new(p)?)))
            .collect::<Result<Vec<_>>>()?;
        let attacks = attacks
            .into_iter()
            .map(|(s, t, p)| {
                Ok((
                    ArgumentId::new(s.as_ref())?,
                    ArgumentId::new(t.as_ref())?,
                    Probability::new(p)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(arguments, attacks)
    }

    /// Like [`ProbabilisticFramework::new`] for validated entries. Unlike
    /// Dung frameworks, a repeated attack is an error since the copies could
    /// disagree on probability.
    pub fn from_entries(
        mut arguments: Vec<(ArgumentId, Probability)>,
        attacks: Vec<(ArgumentId, ArgumentId, Probability)>,
    ) -> Result<Self> {
        arguments.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = arguments.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateArgument(w[0].0.to_string()));
        }
        let ids: Vec<ArgumentId> = arguments.iter().map(|(a, _)| a.clone()).collect();
        let index = |s: &ArgumentId, t: &ArgumentId, end: &ArgumentId| {
            ids.binary_search(end)
                .map_err(|_| Error::DanglingAttack(s.to_string(), t.to_string(), end.to_string()))
        };
        let mut edges = attacks
            .iter()
            .map(|(s, t, p)| Ok(((index(s, t, s)?, index(s, t, t)?), *p)))
            .collect::<Result<Vec<_>>>()?;
        edges.sort_by_key(|&(e, _)| e);
        if let Some(w) = edges.windows(2).find(|w| w[0].0 == w[1].0) {
            let (s, t) = w[0].0;
            return Err(Error::DuplicateAttack(
                ids[s].to_string(),
                ids[t].to_string(),
            ));
        }
        let arg_prob = arguments.iter().map(|&(_, p)| p).collect();
        let att_prob = edges.iter().map(|&(_, p)| p).collect();
        let base = DungFramework::from_indexed(ids, edges.into_iter().map(|(e, _)| e).collect());
        Ok(ProbabilisticFramework {
            base,
            arg_prob,
            att_prob,
        })
    }

    /// Every argument and attack certain.
    pub fn certain(base: DungFramework) -> Self {
        ProbabilisticFramework {
            arg_prob: vec![Probability::ONE; base.len()],
            att_prob: vec![Probability::ONE; base.attack_count()],
            base,
        }
    }

    pub fn base(&self) -> &DungFramework {
        &self.base
    }

    pub fn argument_probability(&self, id: &str) -> Option<Probability> {
        self.base.index_of(id).map(|i| self.arg_prob[i])
    }

    pub fn attack_probability(&self, source: &str, target: &str) -> Option<Probability> {
        let s = self.base.index_of(source)?;
        let t = self.base.index_of(target)?;
        self.base
            .indexed_attacks()
            .binary_search(&(s, t))
            .ok()
            .map(|i| self.att_prob[i])
    }

    pub fn arguments(&self) -> impl Iterator<Item = (&ArgumentId, Probability)> + '_ {
        self.base
            .arguments()
            .iter()
            .zip(self.arg_prob.iter().copied())
    }

    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId, Probability)> + '_ {
        self.base
            .attacks()
            .zip(self.att_prob.iter().copied())
            .map(|((s, t), p)| (s, t, p))
    }

    /// Number of arguments and attacks with probability below one.
    pub fn uncertain_count(&self) -> usize {
        self.arg_prob
            .iter()
            .chain(&self.att_prob)
            .filter(|p| !p.is_certain())
            .count()
    }

    pub fn is_certain(&self) -> bool {
        self.uncertain_count() == 0
    }

    pub(crate) fn arg_prob(&self) -> &[Probability] {
        &self.arg_prob
    }

    pub(crate) fn att_prob(&self) -> &[Probability] {
        &self.att_prob
    }

    /// Acceptance probabilities by the chosen method.
    pub fn acceptance(
        &self,
        semantics: Semantics,
        mode: InferenceMode,
        method: &Method,
    ) -> Result<AcceptanceProbabilities> {
        match method {
            Method::Exact { limit } => self.acceptance_exact(semantics, mode, *limit),
            Method::MonteCarlo(cfg) => self.acceptance_monte_carlo(semantics, mode, cfg),
        }
    }

    /// Removes arguments and their attacks along with their probabilities.
    pub fn remove_arguments<I, S>(&self, removed: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut drop = vec![false; self.base.len()];
        for id in removed {
            let id = id.as_ref();
            let i = self
                .base
                .index_of(id)
                .ok_or_else(|| Error::UnknownArgument(id.to_string()))?;
            drop[i] = true;
        }
        let arg_prob = self
            .arg_prob
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(&p, _)| p)
            .collect();
        let att_prob = self
            .base
            .indexed_attacks()
            .iter()
            .zip(&self.att_prob)
            .filter(|(&(s, t), _)| !drop[s] && !drop[t])
            .map(|(_, &p)| p)
            .collect();
        Ok(ProbabilisticFramework {
            base: self.base.retain(&drop),
            arg_prob,
            att_prob,
        })
    }

    /// Adds a bundle; every new argument and attack must carry a probability.
    pub fn extend(&self, bundle: &ObservationBundle) -> Result<Self> {
        bundle.validate(&self.base)?;
        let mut arguments: Vec<(ArgumentId, Probability)> =
            self.arguments().map(|(a, p)| (a.clone(), p)).collect();
        for (a, p) in bundle.arguments() {
            let p = p.ok_or_else(|| Error::MissingProbability(format!("argument `{a}`")))?;
            arguments.push((a.clone(), p));
        }
        let mut attacks: Vec<(ArgumentId, ArgumentId, Probability)> = self
            .attacks()
            .map(|(s, t, p)| (s.clone(), t.clone(), p))
            .collect();
        for (s, t, p) in bundle.attacks() {
            let p = p.ok_or_else(|| Error::MissingProbability(format!("attack ({s},{t})")))?;
            attacks.push((s.clone(), t.clone(), p));
        }
        Self::from_entries(arguments, attacks)
    }
}
