use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{AcceptanceProbabilities, Estimate, ProbabilisticFramework};
use crate::error::{Error, Result};
use crate::framework::{DungFramework, Extension};
use crate::graph::Graph;
use crate::semantics::{InferenceMode, Semantics};
use crate::sum::CompensatedSum;

/// Largest enumerable number of uncertain elements (bit-mask width).
const MAX_ENUMERABLE: usize = 62;

/// One inducible Dung framework and its probability.
#[derive(Debug, Clone, PartialEq)]
pub struct InducedFramework {
    pub graph: DungFramework,
    pub weight: f64,
}

/// The attack layout of the worlds sharing one choice of present arguments.
struct ArgumentChoice {
    active: Vec<bool>,
    weight: f64,
    /// attack indices present in every such world
    fixed: Vec<usize>,
    /// uncertain attack indices between present arguments
    toggled: Vec<usize>,
}

impl ProbabilisticFramework {
    fn uncertain_arguments(&self) -> Vec<usize> {
        (0..self.arg_prob().len())
            .filter(|&i| !self.arg_prob()[i].is_certain())
            .collect()
    }

    fn check_limit(&self, limit: usize) -> Result<()> {
        let found = self.uncertain_count();
        let limit = limit.min(MAX_ENUMERABLE);
        if found > limit {
            return Err(Error::ExactLimitExceeded { found, limit });
        }
        Ok(())
    }

    /// Resolves bit `k` of `bits` to the `k`-th uncertain argument.
    fn argument_choice(&self, uncertain: &[usize], bits: u64) -> ArgumentChoice {
        let mut active: Vec<bool> = self.arg_prob().iter().map(|p| p.is_certain()).collect();
        let mut weight = 1.0;
        for (k, &a) in uncertain.iter().enumerate() {
            let p = self.arg_prob()[a].value();
            if bits >> k & 1 == 1 {
                active[a] = true;
                weight *= p;
            } else {
                weight *= 1.0 - p;
            }
        }
        let mut fixed = Vec::new();
        let mut toggled = Vec::new();
        for (i, &(s, t)) in self.base().indexed_attacks().iter().enumerate() {
            if active[s] && active[t] {
                if self.att_prob()[i].is_certain() {
                    fixed.push(i);
                } else {
                    toggled.push(i);
                }
            }
        }
        ArgumentChoice {
            active,
            weight,
            fixed,
            toggled,
        }
    }

    /// Calls `visit` once per world of `choice` with the present attack
    /// indices and the world's weight.
    fn for_each_world<F>(&self, choice: &ArgumentChoice, mut visit: F)
    where
        F: FnMut(&[usize], f64),
    {
        let mut present = Vec::with_capacity(choice.fixed.len() + choice.toggled.len());
        for bits in 0..1u64 << choice.toggled.len() {
            present.clear();
            present.extend_from_slice(&choice.fixed);
            let mut weight = choice.weight;
            for (k, &d) in choice.toggled.iter().enumerate() {
                let p = self.att_prob()[d].value();
                if bits >> k & 1 == 1 {
                    present.push(d);
                    weight *= p;
                } else {
                    weight *= 1.0 - p;
                }
            }
            visit(&present, weight);
        }
    }

    fn world_graph(&self, active: &[bool], attacks: &[usize]) -> Graph {
        let edges = self.base().indexed_attacks();
        Graph::new(active.to_vec(), attacks.iter().map(|&d| edges[d]))
    }

    pub(super) fn world_framework(&self, active: &[bool], attacks: &[usize]) -> DungFramework {
        let mut remap = vec![usize::MAX; active.len()];
        let mut arguments = Vec::new();
        for (i, a) in self.base().arguments().iter().enumerate() {
            if active[i] {
                remap[i] = arguments.len();
                arguments.push(a.clone());
            }
        }
        let edges = self.base().indexed_attacks();
        let mut attacks: Vec<(usize, usize)> = attacks
            .iter()
            .map(|&d| (remap[edges[d].0], remap[edges[d].1]))
            .collect();
        attacks.sort_unstable();
        DungFramework::from_indexed(arguments, attacks)
    }

    /// Probability of one inducible framework: the product of `P(a)` over
    /// present arguments, `1 - P(a)` over absent ones, `P(d)` over present
    /// attacks and `1 - P(d)` over attacks absent although both endpoints are
    /// present.
    pub fn induced_probability(&self, induced: &DungFramework) -> Result<f64> {
        let base = self.base();
        let mut active = vec![false; base.len()];
        for a in induced.arguments() {
            let i = base.index_of(a.as_str()).ok_or_else(|| {
                Error::NotInducible(format!("argument `{a}` is not in the framework"))
            })?;
            active[i] = true;
        }
        let mut present = vec![false; base.attack_count()];
        for (s, t) in induced.attacks() {
            let i = (
                base.index_of(s.as_str()).unwrap(),
                base.index_of(t.as_str()).unwrap(),
            );
            let d = base.indexed_attacks().binary_search(&i).map_err(|_| {
                Error::NotInducible(format!("attack ({s},{t}) is not in the framework"))
            })?;
            present[d] = true;
        }
        let mut weight = 1.0;
        for (i, p) in self.arg_prob().iter().enumerate() {
            if active[i] {
                weight *= p.value();
            } else if p.is_certain() {
                let a = &base.arguments()[i];
                return Err(Error::NotInducible(format!(
                    "certain argument `{a}` is missing"
                )));
            } else {
                weight *= 1.0 - p.value();
            }
        }
        for (d, &(s, t)) in base.indexed_attacks().iter().enumerate() {
            if !(active[s] && active[t]) {
                continue;
            }
            let p = self.att_prob()[d];
            if present[d] {
                weight *= p.value();
            } else {
                let pinned = p.is_certain()
                    && self.arg_prob()[s].is_certain()
                    && self.arg_prob()[t].is_certain();
                if pinned {
                    let (s, t) = (&base.arguments()[s], &base.arguments()[t]);
                    return Err(Error::NotInducible(format!(
                        "certain attack ({s},{t}) is missing"
                    )));
                }
                weight *= 1.0 - p.value();
            }
        }
        Ok(weight)
    }

    /// Every inducible framework with positive weight, each exactly once.
    ///
    /// Elements with probability one are pinned rather than toggled, so a
    /// framework with `k` uncertain elements yields at most `2^k` items.
    pub fn enumerate_induced(
        &self,
        limit: usize,
    ) -> Result<impl Iterator<Item = InducedFramework> + '_> {
        self.check_limit(limit)?;
        let uncertain = self.uncertain_arguments();
        let iter = (0..1u64 << uncertain.len()).flat_map(move |bits| {
            let choice = self.argument_choice(&uncertain, bits);
            let mut worlds = Vec::new();
            self.for_each_world(&choice, |attacks, weight| {
                if weight > 0.0 {
                    worlds.push(InducedFramework {
                        graph: self.world_framework(&choice.active, attacks),
                        weight,
                    });
                }
            });
            worlds
        });
        Ok(iter)
    }

    /// Sums `score(world) * weight` per argument over all worlds, with one
    /// parallel task per choice of present arguments and a fixed-order
    /// reduction.
    fn accumulate<F>(&self, limit: usize, n: usize, score: F) -> Result<Vec<f64>>
    where
        F: Fn(&Graph) -> Vec<bool> + Sync,
    {
        self.check_limit(limit)?;
        let uncertain = self.uncertain_arguments();
        let partials: Vec<Vec<f64>> = (0..1u64 << uncertain.len())
            .into_par_iter()
            .map(|bits| {
                let choice = self.argument_choice(&uncertain, bits);
                let mut acc = vec![CompensatedSum::default(); n];
                self.for_each_world(&choice, |attacks, weight| {
                    let g = self.world_graph(&choice.active, attacks);
                    for (a, hit) in score(&g).into_iter().enumerate() {
                        if hit {
                            acc[a].add(weight);
                        }
                    }
                });
                acc.into_iter().map(CompensatedSum::total).collect()
            })
            .collect();
        let mut totals = vec![CompensatedSum::default(); n];
        for part in partials {
            for (t, x) in totals.iter_mut().zip(part) {
                t.add(x);
            }
        }
        Ok(totals.into_iter().map(CompensatedSum::total).collect())
    }

    /// Probability that `ext` is an extension of the target framework under
    /// `semantics`.
    pub fn probabilistic_justification(
        &self,
        semantics: Semantics,
        ext: &Extension,
        limit: usize,
    ) -> Result<f64> {
        let mask = self.base().mask(ext)?;
        let totals = self.accumulate(limit, 1, |g| vec![g.is_extension(semantics, &mask)])?;
        Ok(totals[0].clamp(0.0, 1.0))
    }

    /// Exact per-argument acceptance probabilities.
    pub fn acceptance_exact(
        &self,
        semantics: Semantics,
        mode: InferenceMode,
        limit: usize,
    ) -> Result<AcceptanceProbabilities> {
        let n = self.base().len();
        let totals = self.accumulate(limit, n, |g| g.accepted(semantics, mode))?;
        let per_argument: BTreeMap<_, _> = self
            .base()
            .arguments()
            .iter()
            .cloned()
            .zip(totals.into_iter().map(|p| p.clamp(0.0, 1.0)))
            .collect();
        Ok(AcceptanceProbabilities::new(per_argument, Estimate::Exact))
    }
}
