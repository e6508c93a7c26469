//! Analysis of Competing Hypotheses matrices and their translation into
//! argumentation frameworks.
//!
//! Evidence and hypotheses both become arguments. An evidence row attacks a
//! hypothesis when the cell is `I` (weakly inconsistent) or `II`
//! (inconsistent), and hypotheses attack each other pairwise since they are
//! taken to be mutually exclusive. Consistency labels produce no edges.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::{ArgumentId, DungFramework};
use crate::praf::ProbabilisticFramework;
use crate::probability::Probability;

/// Consistency of one piece of evidence with one hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellLabel {
    /// Inconsistent.
    II,
    /// Weakly inconsistent.
    I,
    NA,
    C,
    CC,
}

impl CellLabel {
    pub const ALL: [CellLabel; 5] = [
        CellLabel::II,
        CellLabel::I,
        CellLabel::NA,
        CellLabel::C,
        CellLabel::CC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CellLabel::II => "II",
            CellLabel::I => "I",
            CellLabel::NA => "NA",
            CellLabel::C => "C",
            CellLabel::CC => "CC",
        }
    }

    pub fn is_inconsistent(self) -> bool {
        matches!(self, CellLabel::I | CellLabel::II)
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CellLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CellLabel::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown cell label `{s}` (expected II, I, NA, C or CC)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub id: ArgumentId,
    pub text: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub id: ArgumentId,
    pub text: Option<String>,
    /// Free-form label such as `certain` or `likely`, resolved through a
    /// [`ProbabilityMapping`].
    pub uncertainty: String,
}

/// An ACH matrix with one cell per (evidence, hypothesis) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AchMatrix {
    hypotheses: Vec<Hypothesis>,
    evidence: Vec<Evidence>,
    // evidence-major
    cells: Vec<CellLabel>,
}

impl AchMatrix {
    /// `rows[i]` holds the cells of `evidence[i]`, one per hypothesis.
    pub fn new(
        hypotheses: Vec<Hypothesis>,
        evidence: Vec<Evidence>,
        rows: Vec<Vec<CellLabel>>,
    ) -> Result<Self> {
        if hypotheses.is_empty() {
            return Err(Error::NoHypotheses);
        }
        if rows.len() != evidence.len() {
            return Err(Error::MatrixShape(format!(
                "{} evidence items but {} rows of cells",
                evidence.len(),
                rows.len()
            )));
        }
        let mut seen = HashSet::new();
        let ids = hypotheses
            .iter()
            .map(|h| &h.id)
            .chain(evidence.iter().map(|e| &e.id));
        for id in ids {
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateArgument(id.to_string()));
            }
        }
        let mut cells = Vec::with_capacity(evidence.len() * hypotheses.len());
        for (e, row) in evidence.iter().zip(rows) {
            if row.len() != hypotheses.len() {
                return Err(Error::MatrixShape(format!(
                    "row `{}` has {} cells, expected {}",
                    e.id,
                    row.len(),
                    hypotheses.len()
                )));
            }
            cells.extend(row);
        }
        Ok(AchMatrix {
            hypotheses,
            evidence,
            cells,
        })
    }

    pub fn hypotheses(&self) -> &[Hypothesis] {
        &self.hypotheses
    }

    pub fn evidence(&self) -> &[Evidence] {
        &self.evidence
    }

    pub fn cell(&self, evidence: usize, hypothesis: usize) -> CellLabel {
        self.cells[evidence * self.hypotheses.len() + hypothesis]
    }

    pub fn row(&self, evidence: usize) -> &[CellLabel] {
        let h = self.hypotheses.len();
        &self.cells[evidence * h..(evidence + 1) * h]
    }

    /// Attacks with the cell that produced them; `None` marks a
    /// hypothesis-pair attack.
    fn attacks(&self) -> Vec<(&ArgumentId, &ArgumentId, Option<CellLabel>)> {
        let mut out = Vec::new();
        for (i, e) in self.evidence.iter().enumerate() {
            for (h, &label) in self.hypotheses.iter().zip(self.row(i)) {
                if label.is_inconsistent() {
                    out.push((&e.id, &h.id, Some(label)));
                }
            }
        }
        for a in &self.hypotheses {
            for b in &self.hypotheses {
                if a.id != b.id {
                    out.push((&a.id, &b.id, None));
                }
            }
        }
        out
    }

    fn argument_ids(&self) -> impl Iterator<Item = &ArgumentId> {
        self.evidence
            .iter()
            .map(|e| &e.id)
            .chain(self.hypotheses.iter().map(|h| &h.id))
    }

    pub fn to_daf(&self) -> DungFramework {
        let attacks = self
            .attacks()
            .into_iter()
            .map(|(s, t, _)| (s.clone(), t.clone()))
            .collect();
        DungFramework::from_ids(self.argument_ids().cloned().collect(), attacks)
            .expect("matrix ids are unique and attacks stay inside the matrix")
    }

    /// Evidence gets the probability of its uncertainty label, hypotheses and
    /// hypothesis-pair attacks get 1, evidence attacks get the probability of
    /// their inconsistency label.
    pub fn to_praf(&self, mapping: &ProbabilityMapping) -> Result<ProbabilisticFramework> {
        let mut arguments = Vec::new();
        for e in &self.evidence {
            arguments.push((e.id.clone(), mapping.uncertainty(&e.uncertainty)?));
        }
        arguments.extend(
            self.hypotheses
                .iter()
                .map(|h| (h.id.clone(), Probability::ONE)),
        );
        let attacks = self
            .attacks()
            .into_iter()
            .map(|(s, t, label)| {
                let p = label.map_or(Probability::ONE, |l| mapping.inconsistency(l));
                (s.clone(), t.clone(), p)
            })
            .collect();
        ProbabilisticFramework::from_entries(arguments, attacks)
    }
}

/// Numeric probabilities for uncertainty and inconsistency labels.
///
/// Defaults are `certain=1.0,likely=0.65,I=0.5,II=1.0`. Parsing a mapping
/// string overrides or extends those defaults:
///
/// ```
/// use argvoi::ProbabilityMapping;
///
/// let m: ProbabilityMapping = "likely=0.7,doubtful=0.2".parse().unwrap();
/// assert_eq!(m.uncertainty("likely").unwrap().value(), 0.7);
/// assert_eq!(m.uncertainty("certain").unwrap().value(), 1.0);
/// assert_eq!(m.uncertainty("doubtful").unwrap().value(), 0.2);
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityMapping {
    uncertainty: BTreeMap<String, Probability>,
    weak: Probability,
    strong: Probability,
}

impl Default for ProbabilityMapping {
    fn default() -> Self {
        let p = |v| Probability::new(v).expect("default probabilities are valid");
        ProbabilityMapping {
            uncertainty: [
                ("certain".to_string(), p(1.0)),
                ("likely".to_string(), p(0.65)),
            ]
            .into_iter()
            .collect(),
            weak: p(0.5),
            strong: p(1.0),
        }
    }
}

impl ProbabilityMapping {
    pub fn uncertainty(&self, label: &str) -> Result<Probability> {
        self.uncertainty
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnmappedLabel(label.to_string()))
    }

    /// Attack probability for an inconsistency label. Consistent labels
    /// produce no attack and map to `None`.
    pub fn inconsistency(&self, label: CellLabel) -> Probability {
        match label {
            CellLabel::II => self.strong,
            _ => self.weak,
        }
    }

    pub fn set(&mut self, label: &str, probability: Probability) {
        match label {
            "I" => self.weak = probability,
            "II" => self.strong = probability,
            _ => {
                self.uncertainty.insert(label.to_string(), probability);
            }
        }
    }
}

impl FromStr for ProbabilityMapping {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut mapping = ProbabilityMapping::default();
        for entry in s.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (label, value) = entry.split_once('=').ok_or_else(|| {
                Error::InvalidMapping(format!("`{entry}` is not label=probability"))
            })?;
            let label = label.trim();
            if label.is_empty() {
                return Err(Error::InvalidMapping(format!(
                    "`{entry}` has an empty label"
                )));
            }
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::InvalidMapping(format!("`{entry}` has no numeric probability"))
            })?;
            mapping.set(label, Probability::new(value)?);
        }
        Ok(mapping)
    }
}

impl fmt::Display for ProbabilityMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, p) in &self.uncertainty {
            write!(f, "{label}={p},")?;
        }
        write!(f, "I={},II={}", self.weak, self.strong)
    }
}
