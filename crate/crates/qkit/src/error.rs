//! Crate-wide error type.
//!
//! Every law or axiom failure carries a witness (rendered element or
//! subset names) so callers can print a machine-readable counterexample.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cycle: `{a}` and `{b}` are distinct but mutually below each other")]
    Cycle { a: String, b: String },

    #[error("unknown element `{name}`")]
    UnknownElement { name: String },

    #[error("duplicate element `{name}`")]
    DuplicateElement { name: String },

    #[error("not a lattice: {witness:?} has no {missing}")]
    NotALattice {
        missing: &'static str,
        witness: Vec<String>,
    },

    #[error("map does not preserve joins (witness subset {witness:?})")]
    NotJoinPreserving { witness: Vec<String> },

    #[error("map does not preserve meets (witness subset {witness:?})")]
    NotMeetPreserving { witness: Vec<String> },

    #[error("{what} has size {size}, above the cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("extensivity violated: {t} is not contained in its closure")]
    C1Violation { t: String },

    #[error("monotonicity violated: {t} ⊆ {t2} but closures are not ordered")]
    C2Violation { t: String, t2: String },

    #[error("idempotence violated at {t}")]
    C3Violation { t: String },

    #[error("closed family is not intersection-closed: {a} ∩ {b} is missing")]
    NotIntersectionClosed { a: String, b: String },

    #[error("closed family does not contain the universe")]
    MissingUniverse,

    #[error("monotonicity violated: {t} ⊆ {t2} but values are not ordered")]
    MonotonicityViolation { t: String, t2: String },

    #[error("join axiom violated: every member of {family:?} maps below the value of {t}, but their union does not")]
    JoinAxiomViolation { family: Vec<String>, t: String },

    #[error("empty-kernel axiom violated: {t} is nonempty but has the value of the empty set")]
    EmptyKernelViolation { t: String },

    #[error("not an order embedding: {reason}")]
    NotAnEmbedding { reason: String },

    #[error("morphisms are not composable (codomain/domain mismatch)")]
    NotComposable,

    #[error("domain mismatch: expected {expected}, found {found}")]
    DomainMismatch { expected: String, found: String },

    #[error("internal sentinel: image-compatibility and closure-continuity disagree on {detail}")]
    SharpStarMismatch { detail: String },

    #[error("image-compatibility fails: {t} and {t2} have equal values but their images do not")]
    ASharpFails { t: String, t2: String },

    #[error("value `{value}` lies outside the image lattice")]
    ValueOutsideImage { value: String },

    #[error("map is not continuous (witness {t})")]
    NotContinuous { t: String },

    #[error("not a closure-space morphism (continuity fails at {t})")]
    NotAClosMorphism { t: String },

    #[error("ortholattice law `{law}` violated at {witness:?}")]
    OrthoLawViolation {
        law: &'static str,
        witness: Vec<String>,
    },

    #[error("lattice is not orthomodular")]
    NotOrthomodular,

    #[error("lattice is not atomistic")]
    NotAtomistic,

    #[error("measurement outcome `{outcome}` of state `{state}` is neither bottom nor an atom")]
    NonAtomicOutcome { state: String, outcome: String },

    #[error("state set may not contain the bottom element")]
    StateSetContainsBottom,

    #[error("malformed input: {detail}")]
    Shape { detail: String },

    #[error("i/o error: {detail}")]
    Io { detail: String },

    #[error("json error: {detail}")]
    Json { detail: String },
}

impl Error {
    /// Machine-readable form used by the CLI when printing violations.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let witness = match self {
            Error::Cycle { a, b } => json!([a, b]),
            Error::UnknownElement { name } | Error::DuplicateElement { name } => json!(name),
            Error::NotALattice { witness, missing } => {
                json!({ "subset": witness, "missing": missing })
            }
            Error::NotJoinPreserving { witness } | Error::NotMeetPreserving { witness } => {
                json!(witness)
            }
            Error::SizeCapExceeded { what, size, cap } => {
                json!({ "what": what, "size": size, "cap": cap })
            }
            Error::C1Violation { t } | Error::C3Violation { t } => json!(t),
            Error::C2Violation { t, t2 } | Error::MonotonicityViolation { t, t2 } => {
                json!([t, t2])
            }
            Error::NotIntersectionClosed { a, b } => json!([a, b]),
            Error::JoinAxiomViolation { family, t } => json!({ "family": family, "t": t }),
            Error::EmptyKernelViolation { t } => json!(t),
            Error::NotAnEmbedding { reason } => json!(reason),
            Error::SharpStarMismatch { detail } => json!(detail),
            Error::ASharpFails { t, t2 } => json!([t, t2]),
            Error::ValueOutsideImage { value } => json!(value),
            Error::NotContinuous { t } | Error::NotAClosMorphism { t } => json!(t),
            Error::OrthoLawViolation { law, witness } => {
                json!({ "law": law, "witness": witness })
            }
            Error::NonAtomicOutcome { state, outcome } => {
                json!({ "state": state, "outcome": outcome })
            }
            Error::DomainMismatch { expected, found } => {
                json!({ "expected": expected, "found": found })
            }
            Error::Shape { detail } | Error::Io { detail } | Error::Json { detail } => {
                json!(detail)
            }
            _ => serde_json::Value::Null,
        };
        serde_json::json!({ "error": self.to_string(), "witness": witness })
    }

    /// `true` for failures of an order/closure/category law, `false` for
    /// plumbing problems (bad files, caps, i/o). The CLI maps the former
    /// to exit code 1 and the latter to exit code 2.
    pub fn is_law_violation(&self) -> bool {
        !matches!(
            self,
            Error::UnknownElement { .. }
                | Error::DuplicateElement { .. }
                | Error::SizeCapExceeded { .. }
                | Error::NotComposable
                | Error::DomainMismatch { .. }
                | Error::Shape { .. }
                | Error::Io { .. }
                | Error::Json { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io {
            detail: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json {
            detail: e.to_string(),
        }
    }
}
