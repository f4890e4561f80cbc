use thiserror::Error;

/// Errors produced by the numeric pipeline.
///
/// Variants are split into two broad classes so that callers (notably the
/// CLI) can distinguish malformed input from genuine numerical failure:
/// [`Error::is_input_error`] returns `true` for the former.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("precision must be 53 or at least 64 bits, got {bits}")]
    InvalidPrecision { bits: u32 },

    #[error("realness tolerance must be positive and at least the unit roundoff")]
    InvalidRealnessTol,

    #[error("scalar type carries {type_bits} bits but the context requests {ctx_bits}")]
    PrecisionMismatch { type_bits: u32, ctx_bits: u32 },

    #[error("cannot parse {text:?} as a decimal number")]
    ParseNumber { text: String },

    #[error(
        "eigenvalue iteration did not converge for a matrix of order {order} at {bits} bits \
         (eigenvalue {index} still active after {iterations} sweeps); raise the working \
         precision or the iteration cap"
    )]
    NonConvergence {
        order: usize,
        bits: u32,
        index: usize,
        iterations: usize,
    },

    #[error(
        "spectrum of the order-{order} matrix at {bits} bits is not real: |Im| = {imag} at \
         eigenvalue {index} exceeds the realness tolerance {tol}; decrease n0 or alpha, or \
         raise the working precision"
    )]
    SpectrumNotReal {
        order: usize,
        bits: u32,
        index: usize,
        imag: String,
        tol: String,
    },

    #[error("singular system: pivot {index} fell below the elimination threshold")]
    SingularPivot { index: usize },

    #[error("symbol must have at least one nonzero coefficient")]
    EmptySymbol,

    #[error("symbol band [{min_k}, {max_k}] must contain index 0")]
    BandExcludesZero { min_k: i64, max_k: i64 },

    #[error("operation requires a tridiagonal symbol with band {{-1, 0, 1}}")]
    NotTridiagonal,

    #[error(
        "f1*f_minus1 = {product} is not positive: the symmetrized symbol would be \
         complex-valued, which is out of scope"
    )]
    ComplexSymmetrization { product: String },

    #[error("matrix order {0} overflows the nested size formula")]
    SizeOverflow(usize),

    #[error("grid sizes must be strictly decreasing in h; duplicate level spacing at {index}")]
    DuplicateSpacing { index: usize },

    #[error(
        "root finding failed for {count} spectrum entries (first at index {first_index}): \
             value not bracketed by the range of g on (0, pi)"
    )]
    RootNotBracketed { count: usize, first_index: usize },

    #[error("function evaluation returned a non-finite value at theta = {theta}")]
    NonFiniteEvaluation { theta: String },

    #[error("quadrature needs at least 8*K points, got {points} for K = {k}")]
    TooFewQuadPoints { points: usize, k: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True when the error stems from malformed input rather than a
    /// numerical failure; the CLI maps the two classes to different
    /// exit codes.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NotSquare { .. }
                | Error::DimensionMismatch { .. }
                | Error::NonFiniteEntry { .. }
                | Error::InvalidPrecision { .. }
                | Error::InvalidRealnessTol
                | Error::PrecisionMismatch { .. }
                | Error::ParseNumber { .. }
                | Error::EmptySymbol
                | Error::BandExcludesZero { .. }
                | Error::NotTridiagonal
                | Error::SizeOverflow(_)
                | Error::TooFewQuadPoints { .. }
                | Error::EmptyInput(_)
                | Error::MalformedTable(_)
                | Error::Io(_)
                | Error::Json(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
