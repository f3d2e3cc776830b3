use thiserror::Error;

use crate::complex::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("no nonempty faces given")]
    EmptyInput,

    #[error("face {face:?} repeats vertex {vertex}")]
    DuplicateVertex {
        face: Vec<VertexId>,
        vertex: VertexId,
    },

    #[error("vertex {0} is not a vertex of the complex")]
    UnknownVertex(VertexId),

    #[error("vertex {0} already belongs to the complex")]
    VertexCollision(VertexId),

    #[error("dimension {requested} is out of range 0..={max}")]
    DimensionOutOfRange { requested: i64, max: i64 },

    #[error("{0:?} is not a facet")]
    NotAFacet(Vec<VertexId>),

    #[error("facets {0:?} and {1:?} have different dimensions")]
    DimensionMismatch(Vec<VertexId>, Vec<VertexId>),

    #[error("invalid vertex pairing: {0}")]
    InvalidPairing(String),

    #[error("links of {vertex} and {image} meet in a nonempty face")]
    LinkCondition { vertex: VertexId, image: VertexId },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("orbit closure exceeded {cap} facets")]
    OrbitTooLarge { cap: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unknown field '{0}' (expected 'q' or 'z<p>')")]
    UnknownField(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("complex is not a triangulated 2-sphere")]
    NotA2Sphere,

    #[error("complex is not a triangulated closed 3-manifold")]
    NotClosed3Manifold,

    #[error("{what} refuses complexes with {vertices} vertices (cap {cap}); {hint}")]
    CapExceeded {
        what: &'static str,
        vertices: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("subset enumeration supports at most 64 vertices, got {0}")]
    TooManyVertices(usize),

    #[error("{0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not an induced cycle: {0}")]
    NotInducedCycle(String),

    #[error("inconsistent data: {0}")]
    Corrupt(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("declared f-vector {declared:?} does not match computed {computed:?}")]
    FVectorMismatch {
        declared: Vec<usize>,
        computed: Vec<usize>,
    },

    #[error("fixture self-check failed for '{name}': {reason}")]
    FixtureCheck { name: String, reason: String },

    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for refusals caused by an enumeration cap rather than bad input.
    pub fn is_cap_refusal(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::TooManyVertices(_) | Error::OrbitTooLarge { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
