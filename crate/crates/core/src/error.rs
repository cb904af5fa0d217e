use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("series expansion needs a nonzero constant term in the denominator")]
    SeriesPole,
    #[error("series coefficient {index} is not an integer")]
    NonIntegralSeries { index: usize },
    #[error("elements {0} and {1} are not comparable")]
    Incomparable(usize, usize),
    #[error("element {0} is not in the poset")]
    NoSuchElement(usize),
    #[error("poset is not Eulerian")]
    NotEulerian,
    #[error("poset is not graded with a unique bottom and top")]
    NotGraded,
    #[error("empty input")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polyhedron is not bounded")]
    Unbounded,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("not a face of the polytope")]
    NotAFace,
    #[error("not a facet of the polytope")]
    NotAFacet,
    #[error("not a vertex of the polytope")]
    NotAVertex,
    #[error("apex lies on the facet")]
    ApexOnFacet,
    #[error("not an order ideal: {0}")]
    NotAnIdeal(String),
    #[error("facet {facet:?} is not a lattice pyramid base with apex at the chosen vertex")]
    PyramidConditionFails { facet: Vec<usize> },
    #[error("invalid monomial support: {0}")]
    InvalidSupport(String),
    #[error("negative component in weight vector")]
    NegativeWeight,
    #[error("first Varchenko subdivision is not crepant")]
    NotCrepant,
    #[error("singularity is not canonical: {0}")]
    NotCanonical(String),
    #[error("local contribution is not a polynomial")]
    NotPolynomial,
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
