//! Three-valued outcomes carried by every probe, search and verifier.

use serde::{Deserialize, Serialize};

use crate::certificates::{FiltrationRecord, FlagRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    CertifiedYes,
    CertifiedNo,
    UndeterminedAtBound,
}

/// The property a verdict speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Quadratic,
    GQuadratic,
    LgQuadratic,
    Koszul,
    /// Validity of a supplied Koszul filtration (a "no" refutes the certificate only).
    KoszulFiltration,
    /// Validity of a supplied Gröbner flag (a "no" refutes the certificate only).
    GroebnerFlag,
    /// Every nonzero member of a space of quadrics has rank at least 3.
    NoLowRankQuadric,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    None,
    NonlinearBetti {
        i: usize,
        j: usize,
        beta: u64,
    },
    NegativeSeriesCoefficient {
        degree: usize,
        coefficient: String,
    },
    NonQuadraticGenerator {
        degree: u32,
        generator: String,
    },
    LinearStrand {
        ranks: Vec<u64>,
    },
    SeriesPrefix {
        coefficients: Vec<String>,
    },
    QuadraticGroebnerBasis {
        order: String,
        change: Option<Vec<Vec<String>>>,
        basis: Vec<String>,
    },
    CertificateFailure {
        member: usize,
        condition: String,
    },
    Filtration(FiltrationRecord),
    Flag(FlagRecord),
    Lift {
        basis: Vec<String>,
        hilbert_prefix: Vec<String>,
        quotient_numerator: Vec<String>,
    },
    Codimension {
        codim: usize,
        n: usize,
    },
    QuadricMembers {
        min_rank_found: Option<usize>,
        member: Option<String>,
        certified_degree: Option<u32>,
    },
    SearchExhausted {
        attempts: usize,
    },
    /// Linear forms `y, z` with `∂²f/∂y∂z = 0` and both first partials of
    /// rank `n−1`.
    LinearFormPair {
        y: String,
        z: String,
    },
}

/// Bounds a verdict was computed under; unset fields did not apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trunc: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attempts: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: Property,
    pub outcome: Outcome,
    pub witness: Witness,
    pub bounds: Bounds,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn new(property: Property, outcome: Outcome, witness: Witness) -> Self {
        Verdict {
            property,
            outcome,
            witness,
            bounds: Bounds::default(),
            notes: Vec::new(),
        }
    }

    pub fn yes(property: Property, witness: Witness) -> Self {
        Self::new(property, Outcome::CertifiedYes, witness)
    }

    pub fn no(property: Property, witness: Witness) -> Self {
        Self::new(property, Outcome::CertifiedNo, witness)
    }

    pub fn undetermined(property: Property, witness: Witness) -> Self {
        Self::new(property, Outcome::UndeterminedAtBound, witness)
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Self {
        self.bounds = bounds;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_yes(&self) -> bool {
        self.outcome == Outcome::CertifiedYes
    }

    pub fn is_no(&self) -> bool {
        self.outcome == Outcome::CertifiedNo
    }

    pub fn is_undetermined(&self) -> bool {
        self.outcome == Outcome::UndeterminedAtBound
    }
}
