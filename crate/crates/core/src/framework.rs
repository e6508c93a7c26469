//! Dung argumentation frameworks: arguments, attacks and extension semantics.

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::probability::Probability;
use crate::semantics::{InferenceMode, Semantics};

/// Identifier of an argument: a non-empty token of ASCII letters, digits and
/// underscores.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if !id.is_empty() && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            Ok(ArgumentId(id))
        } else {
            Err(Error::InvalidArgumentId(id))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for ArgumentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArgumentId::new(s)
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for ArgumentId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for ArgumentId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A set of arguments in canonical (id) order.
pub type ArgumentSet = BTreeSet<ArgumentId>;

/// Parses a list of ids into an [`ArgumentSet`].
pub fn argument_set<I, S>(ids: I) -> Result<ArgumentSet>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    ids.into_iter()
        .map(|s| ArgumentId::new(s.as_ref()))
        .collect()
}

/// A subset of a framework's arguments.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Extension(ArgumentSet);

impl Extension {
    pub fn new<I, S>(ids: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        argument_set(ids).map(Extension)
    }

    pub fn empty() -> Self {
        Extension::default()
    }

    pub fn members(&self) -> &ArgumentSet {
        &self.0
    }

    pub fn into_members(self) -> ArgumentSet {
        self.0
    }

    pub fn contains(&self, id: &str) -> bool {
        self.0.contains(id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentId> {
        self.0.iter()
    }
}

impl From<ArgumentSet> for Extension {
    fn from(set: ArgumentSet) -> Self {
        Extension(set)
    }
}

impl FromIterator<ArgumentId> for Extension {
    fn from_iter<T: IntoIterator<Item = ArgumentId>>(iter: T) -> Self {
        Extension(iter.into_iter().collect())
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(a.as_str())?;
        }
        f.write_str("}")
    }
}

/// New arguments and attacks to add to a framework.
///
/// Probabilities are only consulted when the bundle extends a probabilistic
/// framework, where every element must carry one.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ObservationBundle {
    arguments: Vec<(ArgumentId, Option<Probability>)>,
    attacks: Vec<(ArgumentId, ArgumentId, Option<Probability>)>,
}

impl ObservationBundle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_argument(mut self, id: ArgumentId, probability: Option<Probability>) -> Self {
        self.arguments.push((id, probability));
        self
    }

    pub fn with_attack(
        mut self,
        source: ArgumentId,
        target: ArgumentId,
        probability: Option<Probability>,
    ) -> Self {
        self.attacks.push((source, target, probability));
        self
    }

    /// One new argument attacking one target.
    pub fn single_attack(
        new_argument: ArgumentId,
        target: ArgumentId,
        argument_probability: Option<Probability>,
        attack_probability: Option<Probability>,
    ) -> Self {
        Self::new()
            .with_argument(new_argument.clone(), argument_probability)
            .with_attack(new_argument, target, attack_probability)
    }

    pub fn arguments(&self) -> &[(ArgumentId, Option<Probability>)] {
        &self.arguments
    }

    pub fn attacks(&self) -> &[(ArgumentId, ArgumentId, Option<Probability>)] {
        &self.attacks
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty() && self.attacks.is_empty()
    }

    /// Checks the bundle against the arguments of the framework it extends:
    /// new ids must be fresh and unique, and every attack must involve a new
    /// argument and resolve to known endpoints.
    pub(crate) fn validate(&self, existing: &DungFramework) -> Result<()> {
        let mut fresh = HashSet::new();
        for (id, _) in &self.arguments {
            if existing.contains(id.as_str()) {
                return Err(Error::ArgumentCollision(id.to_string()));
            }
            if !fresh.insert(id.as_str()) {
                return Err(Error::DuplicateArgument(id.to_string()));
            }
        }
        let mut seen = HashSet::new();
        for (s, t, _) in &self.attacks {
            for end in [s, t] {
                if !fresh.contains(end.as_str()) && !existing.contains(end.as_str()) {
                    return Err(Error::DanglingAttack(
                        s.to_string(),
                        t.to_string(),
                        end.to_string(),
                    ));
                }
            }
            if !fresh.contains(s.as_str()) && !fresh.contains(t.as_str()) {
                return Err(Error::BundleAttackBetweenExisting(
                    s.to_string(),
                    t.to_string(),
                ));
            }
            if !seen.insert((s.as_str(), t.as_str())) {
                return Err(Error::DuplicateAttack(s.to_string(), t.to_string()));
            }
        }
        Ok(())
    }
}

/// A Dung argumentation framework.
///
/// Arguments are kept sorted by id and attacks by `(source, target)`, so two
/// equal frameworks iterate (and serialize) identically.
#[derive(Debug, Clone)]
pub struct DungFramework {
    arguments: Vec<ArgumentId>,
    attacks: Vec<(usize, usize)>,
    graph: Graph,
}

impl PartialEq for DungFramework {
    fn eq(&self, other: &Self) -> bool {
        self.arguments == other.arguments && self.attacks == other.attacks
    }
}

impl Eq for DungFramework {}

impl Default for DungFramework {
    fn default() -> Self {
        DungFramework::empty()
    }
}

impl DungFramework {
    /// Builds a framework from argument ids and `(source, target)` pairs.
    ///
    /// ```
    /// use argvoi::DungFramework;
    ///
    /// let af = DungFramework::new(["a", "b"], [("a", "b")]).unwrap();
    /// assert_eq!(af.grounded_extension().to_string(), "{a}");
    /// assert!(DungFramework::new(["a"], [("a", "b")]).is_err());
    /// ```
    pub fn new<I, S, J, T>(arguments: I, attacks: J) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
        J: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let arguments = arguments
            .into_iter()
            .map(|a| ArgumentId::new(a.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let attacks = attacks
            .into_iter()
            .map(|(s, t)| Ok((ArgumentId::new(s.as_ref())?, ArgumentId::new(t.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_ids(arguments, attacks)
    }

    /// Like [`DungFramework::new`] for already-validated ids. Repeated
    /// attacks collapse into one.
    pub fn from_ids(
        arguments: Vec<ArgumentId>,
        attacks: Vec<(ArgumentId, ArgumentId)>,
    ) -> Result<Self> {
        let mut sorted = arguments;
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArgument(w[0].to_string()));
        }
        let index = |s: &ArgumentId, t: &ArgumentId, end: &ArgumentId| {
            sorted
                .binary_search(end)
                .map_err(|_| Error::DanglingAttack(s.to_string(), t.to_string(), end.to_string()))
        };
        let mut edges = attacks
            .iter()
            .map(|(s, t)| Ok((index(s, t, s)?, index(s, t, t)?)))
            .collect::<Result<Vec<_>>>()?;
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_indexed(sorted, edges))
    }

    /// `arguments` sorted and unique, `attacks` sorted and unique.
    pub(crate) fn from_indexed(arguments: Vec<ArgumentId>, attacks: Vec<(usize, usize)>) -> Self {
        let graph = Graph::new(vec![true; arguments.len()], attacks.iter().copied());
        DungFramework {
            arguments,
            attacks,
            graph,
        }
    }

    pub fn empty() -> Self {
        Self::from_indexed(Vec::new(), Vec::new())
    }

    pub fn arguments(&self) -> &[ArgumentId] {
        &self.arguments
    }

    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> + '_ {
        self.attacks
            .iter()
            .map(|&(s, t)| (&self.arguments[s], &self.arguments[t]))
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index_of(id).is_some()
    }

    pub fn has_attack(&self, source: &str, target: &str) -> bool {
        match (self.index_of(source), self.index_of(target)) {
            (Some(s), Some(t)) => self.attacks.binary_search(&(s, t)).is_ok(),
            _ => false,
        }
    }

    pub(crate) fn index_of(&self, id: &str) -> Option<usize> {
        self.arguments.binary_search_by(|a| a.as_str().cmp(id)).ok()
    }

    fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::UnknownArgument(id.to_string()))
    }

    pub(crate) fn indexed_attacks(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub(crate) fn mask(&self, ext: &Extension) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.len()];
        for a in ext.iter() {
            mask[self.require(a.as_str())?] = true;
        }
        Ok(mask)
    }

    pub(crate) fn ids(&self, mask: &[bool]) -> ArgumentSet {
        mask.iter()
            .zip(&self.arguments)
            .filter(|(&m, _)| m)
            .map(|(_, a)| a.clone())
            .collect()
    }

    /// Arguments attacking `id`.
    pub fn attackers(&self, id: &str) -> Result<ArgumentSet> {
        let a = self.require(id)?;
        Ok(self
            .graph
            .attackers(a)
            .iter()
            .map(|&b| self.arguments[b].clone())
            .collect())
    }

    pub fn is_conflict_free(&self, ext: &Extension) -> Result<bool> {
        Ok(self.graph.is_conflict_free(&self.mask(ext)?))
    }

    /// Whether every attacker of `id` is attacked by some member of `ext`.
    pub fn is_acceptable(&self, ext: &Extension, id: &str) -> Result<bool> {
        let a = self.require(id)?;
        Ok(self.graph.is_acceptable(&self.mask(ext)?, a))
    }

    pub fn is_admissible(&self, ext: &Extension) -> Result<bool> {
        Ok(self.graph.is_admissible(&self.mask(ext)?))
    }

    pub fn is_complete(&self, ext: &Extension) -> Result<bool> {
        Ok(self.graph.is_complete(&self.mask(ext)?))
    }

    pub fn is_extension(&self, semantics: Semantics, ext: &Extension) -> Result<bool> {
        Ok(self.graph.is_extension(semantics, &self.mask(ext)?))
    }

    pub fn grounded_extension(&self) -> Extension {
        Extension(self.ids(&self.graph.grounded()))
    }

    /// All extensions under `semantics`, in canonical order.
    pub fn extensions(&self, semantics: Semantics) -> BTreeSet<Extension> {
        self.graph
            .extensions(semantics)
            .iter()
            .map(|m| Extension(self.ids(m)))
            .collect()
    }

    /// Arguments accepted in some (credulous) or every (sceptical) extension.
    ///
    /// Sceptical acceptance over conflict-free or admissible semantics is
    /// always empty, since the empty set belongs to both families.
    pub fn accepted_arguments(&self, semantics: Semantics, mode: InferenceMode) -> ArgumentSet {
        self.ids(&self.graph.accepted(semantics, mode))
    }

    /// The framework with `removed` and every attack touching them deleted.
    pub fn remove_arguments<I, S>(&self, removed: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut drop = vec![false; self.len()];
        for id in removed {
            drop[self.require(id.as_ref())?] = true;
        }
        Ok(self.retain(&drop))
    }

    pub(crate) fn retain(&self, drop: &[bool]) -> Self {
        let mut remap = vec![usize::MAX; self.len()];
        let mut arguments = Vec::new();
        for (i, a) in self.arguments.iter().enumerate() {
            if !drop[i] {
                remap[i] = arguments.len();
                arguments.push(a.clone());
            }
        }
        let attacks = self
            .attacks
            .iter()
            .filter(|&&(s, t)| !drop[s] && !drop[t])
            .map(|&(s, t)| (remap[s], remap[t]))
            .collect();
        Self::from_indexed(arguments, attacks)
    }

    /// The framework with the bundle's arguments and attacks added.
    /// Probabilities in the bundle are ignored.
    pub fn extend(&self, bundle: &ObservationBundle) -> Result<Self> {
        bundle.validate(self)?;
        let arguments = self
            .arguments
            .iter()
            .cloned()
            .chain(bundle.arguments().iter().map(|(a, _)| a.clone()))
            .collect();
        let attacks = self
            .attacks()
            .map(|(s, t)| (s.clone(), t.clone()))
            .chain(
                bundle
                    .attacks()
                    .iter()
                    .map(|(s, t, _)| (s.clone(), t.clone())),
            )
            .collect();
        Self::from_ids(arguments, attacks)
    }
}
