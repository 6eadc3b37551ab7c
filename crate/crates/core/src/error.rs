use serde::Serialize;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("random generation gave up after {attempts} attempts")]
    RetryExhausted { attempts: usize },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    /// A caller handed in an object that breaks the operation's contract
    /// (for instance a "matching" with two edges at one vertex).
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("edge {0}-{1} does not cross the declared bipartition")]
    NotBipartite(usize, usize),

    #[error("not factor-critical: removing vertex {vertex} leaves no perfect matching")]
    NotFactorCritical { vertex: usize },

    #[error("graph is not regular (min degree {min}, max degree {max})")]
    NotRegular { min: u32, max: u32 },

    #[error("unsupported regime: {0}")]
    Unsupported(String),

    #[error("enumeration budget exceeded: {0}")]
    Budget(String),

    /// One of the structural facts the construction relies on did not hold.
    #[error("theory violation: {0}")]
    Theory(Box<TheoryViolation>),
}

impl Error {
    pub(crate) fn theory(fact: impl Into<String>, witness: Witness) -> Self {
        Error::Theory(Box::new(TheoryViolation {
            fact: fact.into(),
            witness,
        }))
    }

    /// True for the failures that mean "the construction could not be
    /// certified" rather than "the input was bad".
    pub fn is_theory_or_regime(&self) -> bool {
        matches!(
            self,
            Error::Theory(_) | Error::Unsupported(_) | Error::NotFactorCritical { .. }
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoryViolation {
    pub fact: String,
    pub witness: Witness,
}

impl std::fmt::Display for TheoryViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (witness: {:?})", self.fact, self.witness)
    }
}

/// Evidence attached to a [`TheoryViolation`].
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A subset of one bipartition side with fewer neighbours than members.
    HallViolator {
        set: Vec<usize>,
        neighbours: Vec<usize>,
    },
    /// Sides of the reachable set of a stalled packing search.
    Reachable {
        a_side: Vec<usize>,
        b_side: Vec<usize>,
        min_degree_w: u32,
        max_degree_a: u32,
    },
    /// Degree-class split of the reachable B-side when the exchange loop stalls.
    DegreeClasses {
        a_side: Vec<usize>,
        low: Vec<usize>,
        high: Vec<usize>,
    },
    Component {
        index: usize,
        vertices: Vec<usize>,
    },
    Parity {
        component: usize,
        edges_to_a: u32,
        k: u32,
    },
    Count {
        expected: usize,
        actual: usize,
    },
    Vertices {
        vertices: Vec<usize>,
    },
    Note {
        detail: String,
    },
}
