use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{AcceptanceProbabilities, Estimate, ProbabilisticFramework};
use crate::error::{Error, Result};
use crate::framework::DungFramework;
use crate::graph::Graph;
use crate::semantics::{InferenceMode, Semantics};

/// Monte Carlo sample count and seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonteCarloConfig {
    samples: usize,
    seed: u64,
}

impl MonteCarloConfig {
    pub fn new(samples: usize, seed: u64) -> Result<Self> {
        if samples == 0 {
            return Err(Error::NoSamples);
        }
        Ok(MonteCarloConfig { samples, seed })
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// The generator for sample `index`: ChaCha8 keyed by the seed, one stream per
/// sample, so a sample never depends on how work is split across threads.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

impl ProbabilisticFramework {
    /// Draws arguments then attacks in canonical order. Certain elements
    /// consume no randomness; an attack is only drawn when both endpoints
    /// are present.
    fn sample_world<R: Rng + ?Sized>(&self, rng: &mut R) -> (Vec<bool>, Vec<usize>) {
        let active: Vec<bool> = self
            .arg_prob()
            .iter()
            .map(|p| p.is_certain() || rng.random::<f64>() < p.value())
            .collect();
        let attacks = self
            .base()
            .indexed_attacks()
            .iter()
            .zip(self.att_prob())
            .enumerate()
            .filter(|(_, (&(s, t), _))| active[s] && active[t])
            .filter(|(_, (_, p))| p.is_certain() || rng.random::<f64>() < p.value())
            .map(|(d, _)| d)
            .collect();
        (active, attacks)
    }

    /// One framework drawn from the induced distribution.
    pub fn sample_induced<R: Rng + ?Sized>(&self, rng: &mut R) -> DungFramework {
        let (active, attacks) = self.sample_world(rng);
        self.world_framework(&active, &attacks)
    }

    /// Frequency estimate of acceptance with binomial standard errors.
    pub fn acceptance_monte_carlo(
        &self,
        semantics: Semantics,
        mode: InferenceMode,
        cfg: &MonteCarloConfig,
    ) -> Result<AcceptanceProbabilities> {
        let n = self.base().len();
        let edges = self.base().indexed_attacks();
        let counts = (0..cfg.samples as u64)
            .into_par_iter()
            .fold(
                || vec![0u64; n],
                |mut counts, i| {
                    let mut rng = sample_rng(cfg.seed, i);
                    let (active, attacks) = self.sample_world(&mut rng);
                    let g = Graph::new(active, attacks.iter().map(|&d| edges[d]));
                    for (c, hit) in counts.iter_mut().zip(g.accepted(semantics, mode)) {
                        *c += hit as u64;
                    }
                    counts
                },
            )
            .reduce(
                || vec![0u64; n],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            );
        let total = cfg.samples as f64;
        let mut per_argument = BTreeMap::new();
        let mut std_error = BTreeMap::new();
        for (id, c) in self.base().arguments().iter().zip(counts) {
            let p = c as f64 / total;
            per_argument.insert(id.clone(), p);
            std_error.insert(id.clone(), (p * (1.0 - p) / total).sqrt());
        }
        Ok(AcceptanceProbabilities::new(
            per_argument,
            Estimate::MonteCarlo {
                samples: cfg.samples,
                seed: cfg.seed,
                std_error,
            },
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::example2;
    use super::*;

    #[test]
    fn zero_samples_rejected() {
        assert_eq!(MonteCarloConfig::new(0, 1), Err(Error::NoSamples));
    }

    #[test]
    fn certain_framework_always_samples_the_base() {
        let pf = ProbabilisticFramework::certain(example2().base().clone());
        let mut rng = sample_rng(7, 0);
        for _ in 0..20 {
            assert_eq!(&pf.sample_induced(&mut rng), example2().base());
        }
    }

    #[test]
    fn sampled_frameworks_are_inducible() {
        let pf = example2();
        let mut rng = sample_rng(3, 0);
        for _ in 0..200 {
            let g = pf.sample_induced(&mut rng);
            assert!(pf.induced_probability(&g).unwrap() > 0.0);
        }
    }

    #[test]
    fn inclusion_frequency_concentrates() {
        let pf =
            ProbabilisticFramework::new([("a", 0.8)], Vec::<(&str, &str, f64)>::new()).unwrap();
        let mut rng = sample_rng(11, 0);
        let n = 100_000;
        let hits = (0..n)
            .filter(|_| pf.sample_induced(&mut rng).contains("a"))
            .count();
        let freq = hits as f64 / n as f64;
        assert!((freq - 0.8).abs() < 0.01, "{freq}");
    }

    #[test]
    fn seeded_streams_repeat() {
        let pf = example2();
        let a: Vec<_> = (0..50)
            .map(|i| pf.sample_induced(&mut sample_rng(42, i)))
            .collect();
        let b: Vec<_> = (0..50)
            .map(|i| pf.sample_induced(&mut sample_rng(42, i)))
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn single_sample_gives_indicator_estimates() {
        let cfg = MonteCarloConfig::new(1, 5).unwrap();
        let r = example2()
            .acceptance_monte_carlo(Semantics::Grounded, InferenceMode::Sceptical, &cfg)
            .unwrap();
        for &p in r.per_argument().values() {
            assert!(p == 0.0 || p == 1.0);
        }
        assert!(!r.is_exact());
    }

    #[test]
    fn certain_framework_estimates_are_exact_indicators() {
        let pf = ProbabilisticFramework::certain(example2().base().clone());
        for seed in [0, 1, 99] {
            let cfg = MonteCarloConfig::new(50, seed).unwrap();
            let r = pf
                .acceptance_monte_carlo(Semantics::Grounded, InferenceMode::Sceptical, &cfg)
                .unwrap();
            let got: Vec<f64> = r.per_argument().values().copied().collect();
            assert_eq!(got, vec![1.0, 0.0, 0.0, 1.0]);
            assert!(r
                .per_argument()
                .keys()
                .all(|k| r.std_error(k.as_str()) == Some(0.0)));
        }
    }
}
