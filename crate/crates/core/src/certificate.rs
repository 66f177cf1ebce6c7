//! Vertex-set certificates and the definitional checkers behind them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Which definition a set is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Independent,
    Absorbing,
    Dominating,
    /// Independent and absorbing.
    Kernel,
    /// Independent and dominating.
    Solution,
}

impl Mode {
    pub fn properties(self) -> &'static [Property] {
        match self {
            Mode::Independent => &[Property::Independent],
            Mode::Absorbing => &[Property::Absorbing],
            Mode::Dominating => &[Property::Dominating],
            Mode::Kernel => &[Property::Independent, Property::Absorbing],
            Mode::Solution => &[Property::Independent, Property::Dominating],
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "independent" => Ok(Mode::Independent),
            "absorbing" => Ok(Mode::Absorbing),
            "dominating" => Ok(Mode::Dominating),
            "kernel" => Ok(Mode::Kernel),
            "solution" => Ok(Mode::Solution),
            other => Err(Error::InvalidCertificate(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Independent,
    Absorbing,
    Dominating,
    /// The set is a subset of part B covering every vertex of part A.
    RedBlueCover,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Property::Independent => "independent",
            Property::Absorbing => "absorbing",
            Property::Dominating => "dominating",
            Property::RedBlueCover => "red-blue-cover",
        };
        f.write_str(name)
    }
}

/// Minimize or maximize the size (or total weight) of the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    Min,
    Max,
}

impl Objective {
    /// True when `candidate` strictly beats `incumbent`.
    pub fn better(self, candidate: u64, incumbent: u64) -> bool {
        match self {
            Objective::Min => candidate < incumbent,
            Objective::Max => candidate > incumbent,
        }
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Objective::Min),
            "max" => Ok(Objective::Max),
            other => Err(Error::InvalidCertificate(format!("unknown objective {other:?}"))),
        }
    }
}

/// What the producing algorithm guarantees about the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Optimality {
    /// Only feasibility is claimed.
    Feasible,
    Minimum,
    Maximum,
}

impl From<Objective> for Optimality {
    fn from(o: Objective) -> Self {
        match o {
            Objective::Min => Optimality::Minimum,
            Objective::Max => Optimality::Maximum,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub algorithm: String,
    pub optimality: Optimality,
}

/// A vertex set together with the checks that were run on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    set: Vec<usize>,
    checks: BTreeMap<Property, bool>,
    provenance: Provenance,
}

impl Certificate {
    /// Only for checks computed by the caller on exactly this set.
    pub(crate) fn from_checks(
        set: Vec<usize>,
        checks: BTreeMap<Property, bool>,
        algorithm: &str,
        optimality: Optimality,
    ) -> Self {
        Certificate { set, checks, provenance: Provenance { algorithm: algorithm.to_string(), optimality } }
    }

    /// Runs the checks of `mode` on `set` and records the producer.
    pub fn checked(g: &Digraph, set: Vec<usize>, mode: Mode, algorithm: &str, optimality: Optimality) -> Result<Self> {
        let mut cert = verify_set(g, &set, mode)?;
        cert.provenance = Provenance { algorithm: algorithm.to_string(), optimality };
        Ok(cert)
    }

    pub fn set(&self) -> &[usize] {
        &self.set
    }

    pub fn into_set(self) -> Vec<usize> {
        self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn checks(&self) -> &BTreeMap<Property, bool> {
        &self.checks
    }

    pub fn check(&self, p: Property) -> Option<bool> {
        self.checks.get(&p).copied()
    }

    /// Every recorded check passed (and at least one was run).
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.values().all(|&ok| ok)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Sum of `weights` over the set, or its size when no weights are given.
    pub fn weight(&self, weights: Option<&[u64]>) -> u64 {
        set_weight(&self.set, weights)
    }
}

pub(crate) fn set_weight(set: &[usize], weights: Option<&[u64]>) -> u64 {
    match weights {
        Some(w) => set.iter().map(|&v| w[v]).sum(),
        None => set.len() as u64,
    }
}

pub(crate) fn check_weights(n: usize, weights: Option<&[u64]>) -> Result<()> {
    match weights {
        Some(w) if w.len() != n => Err(Error::WeightLength { expected: n, found: w.len() }),
        _ => Ok(()),
    }
}

/// Sorted, deduplicated copy of `s`, after range checks.
pub(crate) fn normalize_set(n: usize, s: &[usize]) -> Result<Vec<usize>> {
    let mut set = s.to_vec();
    for &v in &set {
        if v >= n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
    }
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

pub fn is_independent(g: &Digraph, member: &[bool]) -> bool {
    (0..g.n()).filter(|&u| member[u]).all(|u| g.out_neighbors(u).iter().all(|&v| !member[v]))
}

/// Every vertex outside the set has an out-neighbour inside it.
pub fn is_absorbing(g: &Digraph, member: &[bool]) -> bool {
    (0..g.n()).all(|v| member[v] || g.out_neighbors(v).iter().any(|&w| member[w]))
}

/// Every vertex outside the set has an in-neighbour inside it.
pub fn is_dominating(g: &Digraph, member: &[bool]) -> bool {
    (0..g.n()).all(|v| member[v] || g.in_neighbors(v).iter().any(|&w| member[w]))
}

/// Checks `s` against the definition selected by `mode`. Self-loops are
/// ignored by the independence test and never let a vertex outside `s`
/// absorb or dominate itself.
pub fn verify_set(g: &Digraph, s: &[usize], mode: Mode) -> Result<Certificate> {
    let set = normalize_set(g.n(), s)?;
    let mut member = vec![false; g.n()];
    for &v in &set {
        member[v] = true;
    }
    let checks = mode
        .properties()
        .iter()
        .map(|&p| {
            let ok = match p {
                Property::Independent => is_independent(g, &member),
                Property::Absorbing => is_absorbing(g, &member),
                Property::Dominating => is_dominating(g, &member),
                Property::RedBlueCover => unreachable!("not a digraph property"),
            };
            (p, ok)
        })
        .collect();
    Ok(Certificate::from_checks(set, checks, "verify", Optimality::Feasible))
}
