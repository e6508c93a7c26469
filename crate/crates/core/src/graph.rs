//! Index-based evaluation kernel shared by Dung frameworks and the induced
//! worlds of probabilistic frameworks.
//!
//! Nodes are indices into the owning framework's sorted argument list. A node
//! may be inactive (absent from an induced world); inactive nodes carry no
//! attacks and never appear in any extension. Sets are `Vec<bool>` masks of
//! full length.

use crate::semantics::{InferenceMode, Semantics};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    In,
    Out,
    Undec,
}

#[derive(Debug, Clone)]
pub(crate) struct Graph {
    active: Vec<bool>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl Graph {
    /// Attacks touching an inactive node must not be passed in.
    pub(crate) fn new<I>(active: Vec<bool>, attacks: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = active.len();
        let mut attackers = vec![Vec::new(); n];
        let mut targets = vec![Vec::new(); n];
        for (s, t) in attacks {
            debug_assert!(active[s] && active[t]);
            attackers[t].push(s);
            targets[s].push(t);
        }
        Graph {
            active,
            attackers,
            targets,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.active.len()
    }

    pub(crate) fn attackers(&self, a: usize) -> &[usize] {
        &self.attackers[a]
    }

    fn attacks(&self, s: usize, t: usize) -> bool {
        self.targets[s].contains(&t)
    }

    fn self_attacking(&self, a: usize) -> bool {
        self.attacks(a, a)
    }

    pub(crate) fn is_conflict_free(&self, set: &[bool]) -> bool {
        (0..self.len())
            .filter(|&a| set[a])
            .all(|a| self.active[a] && self.targets[a].iter().all(|&t| !set[t]))
    }

    pub(crate) fn is_acceptable(&self, set: &[bool], a: usize) -> bool {
        self.attackers[a]
            .iter()
            .all(|&b| self.attackers[b].iter().any(|&c| set[c]))
    }

    pub(crate) fn is_admissible(&self, set: &[bool]) -> bool {
        self.is_conflict_free(set)
            && (0..self.len())
                .filter(|&a| set[a])
                .all(|a| self.is_acceptable(set, a))
    }

    pub(crate) fn is_complete(&self, set: &[bool]) -> bool {
        self.is_admissible(set)
            && (0..self.len())
                .filter(|&a| self.active[a] && !set[a])
                .all(|a| !self.is_acceptable(set, a))
    }

    /// Least fixpoint of the characteristic function, computed by label
    /// propagation: a node goes IN once all its attackers are OUT and OUT once
    /// any attacker is IN.
    pub(crate) fn grounded(&self) -> Vec<bool> {
        let n = self.len();
        let mut label = vec![Label::Undec; n];
        let mut live: Vec<usize> = self.attackers.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&a| self.active[a] && live[a] == 0).collect();
        while let Some(a) = stack.pop() {
            if label[a] != Label::Undec {
                continue;
            }
            label[a] = Label::In;
            for &t in &self.targets[a] {
                if label[t] == Label::Out {
                    continue;
                }
                label[t] = Label::Out;
                for &u in &self.targets[t] {
                    live[u] -= 1;
                    if live[u] == 0 && label[u] == Label::Undec {
                        stack.push(u);
                    }
                }
            }
        }
        label.into_iter().map(|l| l == Label::In).collect()
    }

    /// Visits every conflict-free superset of `base` built from `candidates`.
    fn for_each_conflict_free<F>(&self, base: Vec<bool>, candidates: &[usize], visit: &mut F)
    where
        F: FnMut(&[bool]),
    {
        fn go<F: FnMut(&[bool])>(
            g: &Graph,
            set: &mut Vec<bool>,
            candidates: &[usize],
            visit: &mut F,
        ) {
            let Some((&c, rest)) = candidates.split_first() else {
                visit(set);
                return;
            };
            go(g, set, rest, visit);
            let clash =
                g.attackers[c].iter().any(|&b| set[b]) || g.targets[c].iter().any(|&t| set[t]);
            if !clash {
                set[c] = true;
                go(g, set, rest, visit);
                set[c] = false;
            }
        }
        let mut set = base;
        go(self, &mut set, candidates, visit);
    }

    fn candidates(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.active[a] && !self.self_attacking(a))
            .collect()
    }

    pub(crate) fn conflict_free_extensions(&self) -> Vec<Vec<bool>> {
        let mut out = Vec::new();
        self.for_each_conflict_free(vec![false; self.len()], &self.candidates(), &mut |s| {
            out.push(s.to_vec())
        });
        out
    }

    pub(crate) fn admissible_extensions(&self) -> Vec<Vec<bool>> {
        let mut out = Vec::new();
        self.for_each_conflict_free(vec![false; self.len()], &self.candidates(), &mut |s| {
            if self.is_admissible(s) {
                out.push(s.to_vec());
            }
        });
        out
    }

    /// Every complete extension contains the grounded one and avoids what it
    /// attacks, so the search only branches over the undecided nodes.
    pub(crate) fn complete_extensions(&self) -> Vec<Vec<bool>> {
        let grounded = self.grounded();
        let undecided: Vec<usize> = self
            .candidates()
            .into_iter()
            .filter(|&a| {
                !grounded[a]
                    && !self.attackers[a].iter().any(|&b| grounded[b])
                    && !self.targets[a].iter().any(|&t| grounded[t])
            })
            .collect();
        let mut out = Vec::new();
        self.for_each_conflict_free(grounded, &undecided, &mut |s| {
            if self.is_complete(s) {
                out.push(s.to_vec());
            }
        });
        out
    }

    pub(crate) fn preferred_extensions(&self) -> Vec<Vec<bool>> {
        let complete = self.complete_extensions();
        complete
            .iter()
            .filter(|s| !complete.iter().any(|t| strict_subset(s, t)))
            .cloned()
            .collect()
    }

    pub(crate) fn extensions(&self, semantics: Semantics) -> Vec<Vec<bool>> {
        match semantics {
            Semantics::ConflictFree => self.conflict_free_extensions(),
            Semantics::Admissible => self.admissible_extensions(),
            Semantics::Complete => self.complete_extensions(),
            Semantics::Grounded => vec![self.grounded()],
            Semantics::Preferred => self.preferred_extensions(),
        }
    }

    pub(crate) fn is_extension(&self, semantics: Semantics, set: &[bool]) -> bool {
        match semantics {
            Semantics::ConflictFree => self.is_conflict_free(set),
            Semantics::Admissible => self.is_admissible(set),
            Semantics::Complete => self.is_complete(set),
            Semantics::Grounded => self.grounded() == set,
            Semantics::Preferred => {
                self.is_complete(set) && self.preferred_extensions().iter().any(|p| p == set)
            }
        }
    }

    /// Accepted nodes under a semantics and inference mode.
    ///
    /// Uses the standard identities instead of enumerating where possible:
    /// the grounded extension is the intersection of the complete ones, every
    /// admissible set lies inside a complete one, and the empty set is always
    /// conflict-free and admissible.
    pub(crate) fn accepted(&self, semantics: Semantics, mode: InferenceMode) -> Vec<bool> {
        use InferenceMode::*;
        use Semantics::*;
        let n = self.len();
        match (semantics, mode) {
            (Grounded, _) | (Complete, Sceptical) => self.grounded(),
            (ConflictFree | Admissible, Sceptical) => vec![false; n],
            (ConflictFree, Credulous) => (0..n)
                .map(|a| self.active[a] && !self.self_attacking(a))
                .collect(),
            (Admissible | Complete | Preferred, Credulous) => {
                let mut union = vec![false; n];
                for ext in self.complete_extensions() {
                    for (u, m) in union.iter_mut().zip(ext) {
                        *u |= m;
                    }
                }
                union
            }
            (Preferred, Sceptical) => {
                let mut exts = self.preferred_extensions().into_iter();
                let Some(mut meet) = exts.next() else {
                    return vec![false; n];
                };
                for ext in exts {
                    for (m, e) in meet.iter_mut().zip(ext) {
                        *m &= e;
                    }
                }
                meet
            }
        }
    }
}

fn strict_subset(a: &[bool], b: &[bool]) -> bool {
    a != b && a.iter().zip(b).all(|(&x, &y)| !x || y)
}
