//! Brute-force reference implementations written straight from the
//! definitions, sharing no code with the library. Sets are bitmasks over
//! arguments `a0..a{n-1}`.
#![allow(dead_code)]

use argvoi::{DungFramework, InferenceMode, ProbabilisticFramework, Semantics};

pub const MAX_N: usize = 8;

#[derive(Debug, Clone)]
pub struct Af {
    pub n: usize,
    pub attacks: Vec<(usize, usize)>,
}

pub fn name(i: usize) -> String {
    format!("a{i}")
}

pub fn names(mask: u32) -> Vec<String> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(name).collect()
}

pub fn mask_of<'a>(ids: impl IntoIterator<Item = &'a str>) -> u32 {
    ids.into_iter()
        .map(|s| 1u32 << s[1..].parse::<u32>().expect("oracle ids are a<index>"))
        .fold(0, |m, b| m | b)
}

impl Af {
    pub fn to_lib(&self) -> DungFramework {
        DungFramework::new(
            (0..self.n).map(name),
            self.attacks.iter().map(|&(s, t)| (name(s), name(t))),
        )
        .unwrap()
    }

    fn attacks_set(&self, s: u32, target: usize) -> bool {
        self.attacks
            .iter()
            .any(|&(a, b)| b == target && s >> a & 1 == 1)
    }

    pub fn conflict_free(&self, s: u32) -> bool {
        self.attacks
            .iter()
            .all(|&(a, b)| !(s >> a & 1 == 1 && s >> b & 1 == 1))
    }

    /// Every attacker of `a` is attacked by a member of `s`.
    pub fn defends(&self, s: u32, a: usize) -> bool {
        self.attacks
            .iter()
            .filter(|&&(_, t)| t == a)
            .all(|&(b, _)| self.attacks_set(s, b))
    }

    pub fn characteristic(&self, s: u32) -> u32 {
        (0..self.n)
            .filter(|&a| self.defends(s, a))
            .fold(0, |m, a| m | 1 << a)
    }

    pub fn admissible(&self, s: u32) -> bool {
        self.conflict_free(s) && (0..self.n).all(|a| s >> a & 1 == 0 || self.defends(s, a))
    }

    pub fn complete(&self, s: u32) -> bool {
        self.admissible(s) && self.characteristic(s) == s
    }

    /// Least fixpoint of the characteristic function, iterated from the empty
    /// set.
    pub fn grounded(&self) -> u32 {
        let mut s = 0;
        loop {
            let next = self.characteristic(s);
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// Preferred extensions taken as maximal admissible sets.
    pub fn extensions(&self, sem: Semantics) -> Vec<u32> {
        let all = 0..1u32 << self.n;
        match sem {
            Semantics::ConflictFree => all.filter(|&s| self.conflict_free(s)).collect(),
            Semantics::Admissible => all.filter(|&s| self.admissible(s)).collect(),
            Semantics::Complete => all.filter(|&s| self.complete(s)).collect(),
            Semantics::Grounded => vec![self.grounded()],
            Semantics::Preferred => {
                let adm: Vec<u32> = all.filter(|&s| self.admissible(s)).collect();
                adm.iter()
                    .copied()
                    .filter(|&s| !adm.iter().any(|&t| t != s && t & s == s))
                    .collect()
            }
        }
    }

    pub fn accepted(&self, sem: Semantics, mode: InferenceMode) -> u32 {
        let exts = self.extensions(sem);
        match mode {
            InferenceMode::Credulous => exts.iter().fold(0, |m, &e| m | e),
            InferenceMode::Sceptical if exts.is_empty() => 0,
            InferenceMode::Sceptical => exts.iter().fold(u32::MAX, |m, &e| m & e),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Paf {
    pub n: usize,
    pub p_arg: Vec<f64>,
    pub attacks: Vec<(usize, usize, f64)>,
}

impl Paf {
    pub fn to_lib(&self) -> ProbabilisticFramework {
        ProbabilisticFramework::new(
            self.p_arg.iter().enumerate().map(|(i, &p)| (name(i), p)),
            self.attacks.iter().map(|&(s, t, p)| (name(s), name(t), p)),
        )
        .unwrap()
    }

    /// Every (argument subset, attack subset) pair with its weight under
    /// independent existence, attacks only where both endpoints survive.
    /// Zero-weight worlds are included.
    pub fn worlds(&self) -> Vec<(World, f64)> {
        let mut out = Vec::new();
        for args in 0..1u32 << self.n {
            let mut w_args = 1.0;
            for (i, &p) in self.p_arg.iter().enumerate() {
                w_args *= if args >> i & 1 == 1 { p } else { 1.0 - p };
            }
            let live: Vec<&(usize, usize, f64)> = self
                .attacks
                .iter()
                .filter(|&&(s, t, _)| args >> s & 1 == 1 && args >> t & 1 == 1)
                .collect();
            for atts in 0..1u64 << live.len() {
                let mut w = w_args;
                let mut edges = Vec::new();
                for (j, &&(s, t, p)) in live.iter().enumerate() {
                    if atts >> j & 1 == 1 {
                        w *= p;
                        edges.push((s, t));
                    } else {
                        w *= 1.0 - p;
                    }
                }
                out.push((World { args, edges }, w));
            }
        }
        out
    }

    pub fn acceptance(&self, sem: Semantics, mode: InferenceMode) -> Vec<f64> {
        let mut p = vec![0.0; self.n];
        for (world, w) in self.worlds() {
            if w == 0.0 {
                continue;
            }
            let acc = world.accepted(sem, mode);
            for (i, pi) in p.iter_mut().enumerate() {
                if acc >> i & 1 == 1 {
                    *pi += w;
                }
            }
        }
        p
    }
}

/// Surviving arguments (by original index) and the attacks among them.
#[derive(Debug, Clone)]
pub struct World {
    pub args: u32,
    pub edges: Vec<(usize, usize)>,
}

impl World {
    pub fn to_lib(&self) -> DungFramework {
        DungFramework::new(
            names(self.args),
            self.edges.iter().map(|&(s, t)| (name(s), name(t))),
        )
        .unwrap()
    }

    /// Accepted set, evaluated on the world with absent arguments dropped.
    pub fn accepted(&self, sem: Semantics, mode: InferenceMode) -> u32 {
        let idx: Vec<usize> = (0..32).filter(|&i| self.args >> i & 1 == 1).collect();
        let pos = |i: usize| idx.iter().position(|&j| j == i).unwrap();
        let sub = Af {
            n: idx.len(),
            attacks: self.edges.iter().map(|&(s, t)| (pos(s), pos(t))).collect(),
        };
        let acc = sub.accepted(sem, mode);
        idx.iter()
            .enumerate()
            .filter(|(k, _)| acc >> k & 1 == 1)
            .fold(0, |m, (_, &i)| m | 1 << i)
    }
}
