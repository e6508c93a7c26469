use std::fmt;

use crate::framework::{ArgumentId, ArgumentSet};
use crate::praf::Estimate;
use crate::semantics::{InferenceMode, Semantics};
use crate::voi::{Evaluation, Objective, Ranked, Value};

/// A machine-readable report: `key value` lines, then `[section]` blocks of
/// `key value` lines. Fields appear in the order they were added.
///
/// ```
/// use argvoi::io::Report;
/// use argvoi::voi::Evaluation;
/// use argvoi::{argument_set, InferenceMode, Semantics};
///
/// let eval = Evaluation::Accepted(argument_set(["a1", "a4"]).unwrap());
/// let text = Report::evaluation(Semantics::Grounded, InferenceMode::Sceptical, &eval).to_string();
/// assert_eq!(
///     text,
///     "framework dung\nmethod exact\nsemantics grounded\ninference sceptical\n[accepted]\na1\na4\n"
/// );
/// ```
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    fields: Vec<(String, String)>,
    sections: Vec<(String, Vec<(String, String)>)>,
}

/// Six decimals, `inf` for an infinite value, and no negative zero.
fn number(v: f64) -> String {
    if v == f64::INFINITY {
        return "inf".to_string();
    }
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn ids<'a>(set: impl IntoIterator<Item = &'a ArgumentId>) -> String {
    set.into_iter()
        .map(ArgumentId::as_str)
        .collect::<Vec<_>>()
        .join(",")
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    /// Appends a section; an empty value prints the key alone.
    pub fn section<K, V>(
        mut self,
        name: impl Into<String>,
        entries: impl IntoIterator<Item = (K, V)>,
    ) -> Self
    where
        K: Into<String>,
        V: Into<String>,
    {
        let entries = entries
            .into_iter()
            .map(|(k, v)| (k.into(), v.into()))
            .collect();
        self.sections.push((name.into(), entries));
        self
    }

    /// Framework kind, estimation method and evaluation settings.
    pub fn header(semantics: Semantics, inference: InferenceMode, evaluation: &Evaluation) -> Self {
        let mut r = Report::new();
        match evaluation {
            Evaluation::Accepted(_) => r = r.field("framework", "dung").field("method", "exact"),
            Evaluation::Probabilities(p) => {
                r = r.field("framework", "probabilistic");
                match p.estimate() {
                    Estimate::Exact => r = r.field("method", "exact"),
                    Estimate::MonteCarlo { samples, seed, .. } => {
                        r = r
                            .field("method", "monte-carlo")
                            .field("samples", samples)
                            .field("seed", seed)
                    }
                }
            }
        }
        r.field("semantics", semantics)
            .field("inference", inference)
    }

    /// Header plus the accepted set or the acceptance probabilities, with
    /// standard errors for Monte Carlo estimates.
    pub fn evaluation(
        semantics: Semantics,
        inference: InferenceMode,
        evaluation: &Evaluation,
    ) -> Self {
        let r = Self::header(semantics, inference, evaluation);
        match evaluation {
            Evaluation::Accepted(set) => {
                r.section("accepted", set.iter().map(|a| (a.to_string(), "")))
            }
            Evaluation::Probabilities(p) => {
                let r = r.section(
                    "probabilities",
                    p.per_argument()
                        .iter()
                        .map(|(a, &v)| (a.to_string(), number(v))),
                );
                match p.estimate() {
                    Estimate::Exact => r,
                    Estimate::MonteCarlo { std_error, .. } => r.section(
                        "std_error",
                        std_error.iter().map(|(a, &v)| (a.to_string(), number(v))),
                    ),
                }
            }
        }
    }

    pub fn with_objective(self, objective: &Objective) -> Self {
        let mut r = self.field("objective", ids(objective.extension()));
        if let Some(t) = objective.target() {
            r = r.field("target", ids(t));
        }
        r.field("utility", objective.utility())
            .field("difference", objective.difference())
    }

    pub fn with_value(self, value: Value) -> Self {
        self.field("value", number(value.get()))
    }

    /// Candidate sets as comma-separated ids, best first.
    pub fn with_observed_ranking(self, ranking: &[Ranked<ArgumentSet>]) -> Self {
        self.section(
            "ranking",
            ranking
                .iter()
                .map(|r| (ids(&r.candidate), number(r.value.get()))),
        )
    }

    /// Attack targets, best first.
    pub fn with_attack_ranking(self, ranking: &[Ranked<ArgumentId>]) -> Self {
        self.section(
            "ranking",
            ranking
                .iter()
                .map(|r| (r.candidate.to_string(), number(r.value.get()))),
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |f: &mut fmt::Formatter<'_>, k: &str, v: &str| {
            if v.is_empty() {
                writeln!(f, "{k}")
            } else {
                writeln!(f, "{k} {v}")
            }
        };
        for (k, v) in &self.fields {
            line(f, k, v)?;
        }
        for (name, entries) in &self.sections {
            writeln!(f, "[{name}]")?;
            for (k, v) in entries {
                line(f, k, v)?;
            }
        }
        Ok(())
    }
}

pub fn render_report(report: &Report) -> String {
    report.to_string()
}
