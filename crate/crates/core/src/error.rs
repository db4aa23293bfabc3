use thiserror::Error;

/// Every failure the calculator can report.
///
/// Variant names are part of the command-line contract: the CLI prints
/// them verbatim (see [`Error::name`]) so scripts can match on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed text: {0}")]
    Parse(String),

    #[error("generator {letter} is out of range for a braid on {strands} strands")]
    InvalidGenerator { letter: i64, strands: usize },

    #[error("the closure has {components} components, a knot is required")]
    NotAKnot { components: usize },

    #[error("generator sigma_{0} never occurs, the braid surface is disconnected")]
    DisconnectedSurface(usize),

    #[error("modulus polynomial must be monic of degree >= 1: {0}")]
    MalformedModulus(String),

    #[error("breadth of the zero polynomial is undefined")]
    UndefinedBreadth,

    #[error("the zero polynomial has no unit normalization")]
    UndefinedNormalization,

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("H1 presentation order {presentation} disagrees with resultant {resultant}")]
    PresentationInconsistent {
        presentation: String,
        resultant: String,
    },

    #[error("inconsistent orientation in PD code: {0}")]
    InconsistentOrientation(String),

    #[error("bad arc labels in PD code: {0}")]
    ArcCount(String),

    #[error("exact division failed: {0}")]
    DivisionFailed(String),

    #[error("links with {0} components are not supported (at most 2)")]
    UnsupportedComponentCount(usize),

    #[error("linking number {0} is not +-1")]
    LinkingNumberNotUnit(i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable identifier printed by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::InvalidGenerator { .. } => "InvalidGenerator",
            Error::NotAKnot { .. } => "NotAKnot",
            Error::DisconnectedSurface(_) => "DisconnectedSurface",
            Error::MalformedModulus(_) => "MalformedModulus",
            Error::UndefinedBreadth => "UndefinedBreadth",
            Error::UndefinedNormalization => "UndefinedNormalization",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::PresentationInconsistent { .. } => "PresentationInconsistent",
            Error::InconsistentOrientation(_) => "InconsistentOrientation",
            Error::ArcCount(_) => "ArcCountError",
            Error::DivisionFailed(_) => "DivisionFailed",
            Error::UnsupportedComponentCount(_) => "UnsupportedComponentCount",
            Error::LinkingNumberNotUnit(_) => "LinkingNumberNotUnit",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }

    /// Whether the error stems from unreadable input or a bad option rather
    /// than from the mathematics of a well-formed input.
    pub fn is_usage_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidArgument(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
