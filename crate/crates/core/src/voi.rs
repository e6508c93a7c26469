//! Value of information against an objective.
//!
//! An [`Objective`] names a set of arguments `O`, a utility that scores each
//! member of `O` from an evaluation of the framework, and a difference
//! function. The value of removing existing arguments (value of observed) and
//! of adding new ones (value of observation) is the sum over `O` of the
//! difference between utilities before and after the edit.
//!
//! ```
//! use argvoi::voi::{Analysis, DifferenceKind, Objective, UtilityKind};
//! use argvoi::{argument_set, DungFramework, Framework, Method};
//!
//! let af = DungFramework::new(
//!     ["a1", "a2", "a3", "a4"],
//!     [("a1", "a2"), ("a2", "a3"), ("a2", "a4"), ("a4", "a3")],
//! )
//! .unwrap();
//! let framework = Framework::from(af);
//! let objective = Objective::new(
//!     argument_set(["a3", "a4"]).unwrap(),
//!     UtilityKind::DafTargetOutput,
//!     DifferenceKind::Signed,
//! )
//! .with_target(argument_set(["a3"]).unwrap());
//! let analysis = Analysis::new(&framework, &objective, Method::default()).unwrap();
//! let v = analysis.value_of_observed(&argument_set(["a1"]).unwrap()).unwrap();
//! assert_eq!(v.get(), -1.0);
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::framework::{ArgumentId, ArgumentSet, DungFramework, ObservationBundle};
use crate::praf::{AcceptanceProbabilities, Method, ProbabilisticFramework};
use crate::probability::Probability;
use crate::semantics::{InferenceMode, Semantics};

/// Either kind of framework.
#[derive(Debug, Clone, PartialEq)]
pub enum Framework {
    Dung(DungFramework),
    Probabilistic(ProbabilisticFramework),
}

impl From<DungFramework> for Framework {
    fn from(f: DungFramework) -> Self {
        Framework::Dung(f)
    }
}

impl From<ProbabilisticFramework> for Framework {
    fn from(f: ProbabilisticFramework) -> Self {
        Framework::Probabilistic(f)
    }
}

impl Framework {
    pub fn base(&self) -> &DungFramework {
        match self {
            Framework::Dung(f) => f,
            Framework::Probabilistic(pf) => pf.base(),
        }
    }

    pub fn is_probabilistic(&self) -> bool {
        matches!(self, Framework::Probabilistic(_))
    }

    fn kind_name(&self) -> &'static str {
        match self {
            Framework::Dung(_) => "Dung",
            Framework::Probabilistic(_) => "probabilistic",
        }
    }

    pub fn remove_arguments<I, S>(&self, removed: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Ok(match self {
            Framework::Dung(f) => Framework::Dung(f.remove_arguments(removed)?),
            Framework::Probabilistic(pf) => Framework::Probabilistic(pf.remove_arguments(removed)?),
        })
    }

    pub fn extend(&self, bundle: &ObservationBundle) -> Result<Self> {
        Ok(match self {
            Framework::Dung(f) => Framework::Dung(f.extend(bundle)?),
            Framework::Probabilistic(pf) => Framework::Probabilistic(pf.extend(bundle)?),
        })
    }

    /// Accepted set for a Dung framework, acceptance probabilities for a
    /// probabilistic one. `method` is ignored for Dung frameworks.
    pub fn evaluate(
        &self,
        semantics: Semantics,
        inference: InferenceMode,
        method: &Method,
    ) -> Result<Evaluation> {
        Ok(match self {
            Framework::Dung(f) => Evaluation::Accepted(f.accepted_arguments(semantics, inference)),
            Framework::Probabilistic(pf) => {
                Evaluation::Probabilities(pf.acceptance(semantics, inference, method)?)
            }
        })
    }
}

/// Output of evaluating a framework.
#[derive(Debug, Clone, PartialEq)]
pub enum Evaluation {
    Accepted(ArgumentSet),
    Probabilities(AcceptanceProbabilities),
}

impl Evaluation {
    /// Acceptance of `id` as 0/1 or a probability. Arguments missing from the
    /// evaluated framework count as not accepted.
    pub fn degree(&self, id: &str) -> f64 {
        match self {
            Evaluation::Accepted(set) => f64::from(u8::from(set.contains(id))),
            Evaluation::Probabilities(p) => p.get(id).unwrap_or(0.0),
        }
    }
}

macro_rules! named_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn name(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> std::result::Result<Self, String> {
                $name::ALL
                    .iter()
                    .copied()
                    .find(|k| k.name() == s)
                    .ok_or_else(|| format!("unknown {} `{s}`", stringify!($name)))
            }
        }
    };
}

named_enum! {
    /// Utility of an objective argument given an evaluation.
    ///
    /// The `daf-*` kinds read an accepted set and apply to Dung frameworks;
    /// the `praf-*` kinds read acceptance probabilities.
    UtilityKind {
        DafTargetOutput => "daf-target-output",
        DafMaximisingChange => "daf-maximising-change",
        PrafTargetOutput => "praf-target-output",
        PrafEntropy => "praf-entropy",
        PrafMaximisingChange => "praf-maximising-change",
        PrafProbability => "praf-probability",
    }
}

impl UtilityKind {
    pub fn is_probabilistic(self) -> bool {
        !matches!(
            self,
            UtilityKind::DafTargetOutput | UtilityKind::DafMaximisingChange
        )
    }

    pub fn needs_target(self) -> bool {
        matches!(
            self,
            UtilityKind::DafTargetOutput | UtilityKind::PrafTargetOutput
        )
    }
}

named_enum! {
    /// Difference `d(x, y)` between two utilities.
    DifferenceKind {
        Signed => "signed",
        Absolute => "absolute",
        Kl => "kl",
    }
}

/// A value of information: finite, or `+inf` when a KL term diverges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Value(f64);

impl Value {
    pub const INFINITY: Value = Value(f64::INFINITY);

    pub fn new(v: f64) -> Self {
        Value(v)
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0 == f64::INFINITY
    }

    /// Total order with `+inf` greatest.
    pub fn total_cmp(&self, other: &Value) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            self.0.fmt(f)
        }
    }
}

/// What the analysis values.
#[derive(Debug, Clone, PartialEq)]
pub struct Objective {
    extension: ArgumentSet,
    target: Option<ArgumentSet>,
    utility: UtilityKind,
    difference: DifferenceKind,
    semantics: Semantics,
    inference: InferenceMode,
    allow_objective_removal: bool,
}

impl Objective {
    /// Grounded semantics with sceptical inference unless overridden.
    pub fn new(extension: ArgumentSet, utility: UtilityKind, difference: DifferenceKind) -> Self {
        Objective {
            extension,
            target: None,
            utility,
            difference,
            semantics: Semantics::Grounded,
            inference: InferenceMode::Sceptical,
            allow_objective_removal: false,
        }
    }

    pub fn with_target(mut self, target: ArgumentSet) -> Self {
        self.target = Some(target);
        self
    }

    pub fn with_semantics(mut self, semantics: Semantics) -> Self {
        self.semantics = semantics;
        self
    }

    pub fn with_inference(mut self, inference: InferenceMode) -> Self {
        self.inference = inference;
        self
    }

    /// Lets removal candidates include objective arguments. A removed
    /// objective argument is scored as not accepted (probability 0).
    pub fn allowing_objective_removal(mut self, allow: bool) -> Self {
        self.allow_objective_removal = allow;
        self
    }

    pub fn extension(&self) -> &ArgumentSet {
        &self.extension
    }

    pub fn target(&self) -> Option<&ArgumentSet> {
        self.target.as_ref()
    }

    pub fn utility(&self) -> UtilityKind {
        self.utility
    }

    pub fn difference(&self) -> DifferenceKind {
        self.difference
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn inference(&self) -> InferenceMode {
        self.inference
    }

    pub fn allows_objective_removal(&self) -> bool {
        self.allow_objective_removal
    }

    fn check_target(&self) -> Result<()> {
        if let Some(target) = &self.target {
            if let Some(e) = target.iter().find(|e| !self.extension.contains(*e)) {
                return Err(Error::NotInObjective(e.to_string()));
            }
        } else if self.utility.needs_target() {
            return Err(Error::MissingTarget(self.utility.name()));
        }
        Ok(())
    }

    /// Checks the objective against a framework.
    pub fn validate(&self, framework: &Framework) -> Result<()> {
        if self.utility.is_probabilistic() != framework.is_probabilistic() {
            return Err(Error::IncompatibleUtility {
                utility: self.utility.name(),
                framework: framework.kind_name(),
            });
        }
        if let Some(e) = self
            .extension
            .iter()
            .find(|e| !framework.base().contains(e.as_str()))
        {
            return Err(Error::UnknownArgument(e.to_string()));
        }
        self.check_target()
    }
}

fn x_log_x(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Utility of objective argument `e` under `evaluation`.
pub fn utility(e: &str, objective: &Objective, evaluation: &Evaluation) -> Result<f64> {
    if !objective.extension.contains(e) {
        return Err(Error::NotInObjective(e.to_string()));
    }
    objective.check_target()?;
    let kind = objective.utility;
    let probabilistic = matches!(evaluation, Evaluation::Probabilities(_));
    if kind.is_probabilistic() != probabilistic {
        return Err(Error::IncompatibleUtility {
            utility: kind.name(),
            framework: if probabilistic {
                "probabilistic"
            } else {
                "Dung"
            },
        });
    }
    let in_target = || objective.target.as_ref().is_some_and(|t| t.contains(e));
    let p = evaluation.degree(e);
    Ok(match kind {
        UtilityKind::DafTargetOutput => {
            let accepted = p == 1.0;
            f64::from(u8::from(accepted == in_target()))
        }
        UtilityKind::PrafTargetOutput => {
            if in_target() {
                p
            } else {
                1.0 - p
            }
        }
        UtilityKind::PrafEntropy => x_log_x(p) + x_log_x(1.0 - p),
        UtilityKind::DafMaximisingChange
        | UtilityKind::PrafMaximisingChange
        | UtilityKind::PrafProbability => p,
    })
}

/// `d(x, y)`. The KL form uses natural logarithms, `0 log(0/y) = 0`, and is
/// `+inf` when positive mass meets a zero denominator.
pub fn difference(kind: DifferenceKind, x: f64, y: f64) -> Result<Value> {
    Ok(Value(match kind {
        DifferenceKind::Signed => x - y,
        DifferenceKind::Absolute => (x - y).abs(),
        DifferenceKind::Kl => {
            let unit = 0.0..=1.0;
            if !unit.contains(&x) || !unit.contains(&y) {
                return Err(Error::KlDomain(x, y));
            }
            let term = |a: f64, b: f64| {
                if a == 0.0 {
                    0.0
                } else if b == 0.0 {
                    f64::INFINITY
                } else {
                    a * (a / b).ln()
                }
            };
            (term(x, y) + term(1.0 - x, 1.0 - y)).max(0.0)
        }
    }))
}

/// A scored candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranked<K> {
    pub candidate: K,
    pub value: Value,
}

fn rank<K: Ord>(mut items: Vec<Ranked<K>>) -> Vec<Ranked<K>> {
    items.sort_by(|a, b| {
        b.value
            .total_cmp(&a.value)
            .then_with(|| a.candidate.cmp(&b.candidate))
    });
    items
}

/// Value-of-information queries over one framework and objective.
#[derive(Debug, Clone)]
pub struct Analysis<'a> {
    framework: &'a Framework,
    objective: &'a Objective,
    method: Method,
    baseline: Evaluation,
}

impl<'a> Analysis<'a> {
    pub fn new(framework: &'a Framework, objective: &'a Objective, method: Method) -> Result<Self> {
        objective.validate(framework)?;
        let baseline = framework.evaluate(objective.semantics, objective.inference, &method)?;
        Ok(Analysis {
            framework,
            objective,
            method,
            baseline,
        })
    }

    /// Evaluation of the unedited framework.
    pub fn baseline(&self) -> &Evaluation {
        &self.baseline
    }

    fn evaluate(&self, framework: &Framework) -> Result<Evaluation> {
        framework.evaluate(
            self.objective.semantics,
            self.objective.inference,
            &self.method,
        )
    }

    /// `sum over e in O of d(U(e, first), U(e, second))`.
    fn total(&self, first: &Evaluation, second: &Evaluation) -> Result<Value> {
        let mut sum = 0.0;
        for e in &self.objective.extension {
            let x = utility(e.as_str(), self.objective, first)?;
            let y = utility(e.as_str(), self.objective, second)?;
            sum += difference(self.objective.difference, x, y)?.get();
        }
        Ok(Value(sum))
    }

    /// Value of the existing arguments `removed`, measured by deleting them.
    pub fn value_of_observed(&self, removed: &ArgumentSet) -> Result<Value> {
        if !self.objective.allow_objective_removal {
            if let Some(e) = removed
                .iter()
                .find(|e| self.objective.extension.contains(*e))
            {
                return Err(Error::ObjectiveRemoval(e.to_string()));
            }
        }
        let reduced = self.framework.remove_arguments(removed)?;
        let after = self.evaluate(&reduced)?;
        self.total(&self.baseline, &after)
    }

    /// Value of adding `bundle` to the framework.
    pub fn value_of_observation(&self, bundle: &ObservationBundle) -> Result<Value> {
        let extended = self.framework.extend(bundle)?;
        let after = self.evaluate(&extended)?;
        self.total(&after, &self.baseline)
    }

    /// Every removal candidate of size `1..=max_size`, highest value first,
    /// ties broken by member ids. Objective arguments are only candidates when
    /// the objective allows their removal.
    pub fn rank_observed(&self, max_size: usize) -> Result<Vec<Ranked<ArgumentSet>>> {
        if max_size == 0 {
            return Err(Error::InvalidSizeBound);
        }
        let pool: Vec<&ArgumentId> = self
            .framework
            .base()
            .arguments()
            .iter()
            .filter(|a| {
                self.objective.allow_objective_removal || !self.objective.extension.contains(*a)
            })
            .collect();
        let mut subsets = Vec::new();
        for size in 1..=max_size.min(pool.len()) {
            combinations(&pool, size, &mut Vec::new(), &mut subsets);
        }
        let scored = subsets
            .into_par_iter()
            .map(|candidate| {
                let value = self.value_of_observed(&candidate)?;
                Ok(Ranked { candidate, value })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(rank(scored))
    }

    /// Scores, for every existing argument `t`, the bundle of one fresh
    /// argument attacking `t`. Probabilities only matter for probabilistic
    /// frameworks.
    pub fn rank_single_attacks(
        &self,
        new_argument_probability: Probability,
        attack_probability: Probability,
    ) -> Result<Vec<Ranked<ArgumentId>>> {
        let base = self.framework.base();
        let fresh = fresh_id(base);
        let scored = base
            .arguments()
            .par_iter()
            .map(|target| {
                let bundle = ObservationBundle::single_attack(
                    fresh.clone(),
                    target.clone(),
                    Some(new_argument_probability),
                    Some(attack_probability),
                );
                let value = self.value_of_observation(&bundle)?;
                Ok(Ranked {
                    candidate: target.clone(),
                    value,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(rank(scored))
    }
}

fn combinations(
    pool: &[&ArgumentId],
    size: usize,
    current: &mut Vec<ArgumentId>,
    out: &mut Vec<ArgumentSet>,
) {
    if current.len() == size {
        out.push(current.iter().cloned().collect());
        return;
    }
    let needed = size - current.len();
    for i in 0..=pool.len().saturating_sub(needed) {
        if pool.len() - i < needed {
            break;
        }
        current.push(pool[i].clone());
        combinations(&pool[i + 1..], size, current, out);
        current.pop();
    }
}

/// `b`, or `b_1`, `b_2`, ... if taken.
fn fresh_id(framework: &DungFramework) -> ArgumentId {
    let name = (0..)
        .map(|i| {
            if i == 0 {
                "b".to_string()
            } else {
                format!("b_{i}")
            }
        })
        .find(|n| !framework.contains(n))
        .expect("unbounded name supply");
    ArgumentId::new(name).expect("generated ids are valid")
}
