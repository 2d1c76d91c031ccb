//! JSON report schemas. Field names are stable; integers too large for a
//! JSON number are written as decimal strings.

use std::fmt;

use coprime_ap::crt::{Congruence, CrtOutcome};
use coprime_ap::decomposition::DeltaResult;
use coprime_ap::pillai::{ArithmeticProgression, CoprimeReport, RingCounterexample};
use coprime_ap::{Integer, Ring};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaSubject {
    Ring(Ring),
    Cyclotomic(u64),
}

impl fmt::Display for DeltaSubject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaSubject::Ring(r) => write!(f, "{r}"),
            DeltaSubject::Cyclotomic(m) => write!(f, "Z[zeta_{m}]"),
        }
    }
}

/// `delta`: one result per method; `agree` is false if they contradict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaReport {
    pub subject: DeltaSubject,
    pub results: Vec<DeltaResult>,
    pub agree: bool,
    /// Cyclotomic only: whether `Z[zeta_m]` is a known UFD.
    pub known_ufd: Option<bool>,
}

/// `find-coprime`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindReport {
    pub progression: ArithmeticProgression,
    pub report: CoprimeReport,
}

/// `counterexample`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CounterexampleReport {
    Ring(Box<RingCounterexample>),
    Consecutive { n: usize, limit: u64, start: Option<Integer> },
}

/// `crt-solve`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrtReport {
    pub ring: Ring,
    pub congruences: Vec<Congruence>,
    pub outcome: CrtOutcome,
}

/// `transfer`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferReport {
    pub progression: ArithmeticProgression,
    pub z: Integer,
    /// Index of a term coprime to the others, found through `z-1, ..., z-n`.
    pub coprime_index: Option<usize>,
}

/// `squares`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquaresReport {
    pub triples: Vec<(Integer, Integer, Integer)>,
}
