use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("point index {0} out of range 0..19")]
    PointOutOfRange(usize),
    #[error("expected {expected} facets, got {got}")]
    FacetCount { expected: usize, got: usize },
    #[error("facet {0:?} is not a tetrahedron on four distinct points")]
    MalformedFacet(Vec<usize>),
    #[error("facet {0:?} is degenerate")]
    DegenerateFacet([usize; 4]),
    #[error("facet {facet:?} has normalized volume {volume}, not 1")]
    NotUnimodular { facet: [usize; 4], volume: i64 },
    #[error("facets overlap or leave a gap at triangle {0:?}")]
    Overlap([usize; 3]),
    #[error("total normalized volume {0} differs from 27")]
    Volume(i64),
    #[error("link of interior edge {0:?} is not a cycle")]
    OpenLink([usize; 2]),
    #[error("not a tropical Plücker vector")]
    NotPluecker,
    #[error("degenerate tropical line")]
    DegenerateLine,
    #[error("empty interval")]
    EmptyInterval,
    #[error("tetrahedron {0:?} is not a cell of the subdivision")]
    NotACell(Vec<usize>),
    #[error("occurrence is inconsistent with the triangulation: {0}")]
    BadOccurrence(String),
    #[error("height vector is not in the open secondary cone")]
    NotInterior,
    #[error("linear program is {0}")]
    Lp(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parse error on line {line}: {msg}")]
    ParseLine { line: usize, msg: String },
    #[error("unknown motif {0}")]
    UnknownMotif(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
