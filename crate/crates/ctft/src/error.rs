//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building grids, transforming, or
/// shuttling data through CSV files.
#[derive(Debug, Error)]
pub enum Error {
    /// Convention constants must be finite and `b` must be nonzero.
    #[error("invalid convention: a={a}, b={b} (both must be finite, b nonzero)")]
    InvalidConvention { a: f64, b: f64 },

    /// Grid fields must be finite, spacing nonzero, count at least one.
    #[error("invalid grid: start={start}, spacing={spacing}, count={count}")]
    InvalidGrid {
        start: f64,
        spacing: f64,
        count: usize,
    },

    /// Sample/bin vector length does not match the grid point count.
    #[error("value count {values} does not match grid point count {count}")]
    LengthMismatch { values: usize, count: usize },

    /// Fewer than two points were supplied where a grid must be inferred.
    #[error("need at least 2 points to infer a grid, got {len}")]
    TooShort { len: usize },

    /// Consecutive gaps deviate from the inferred spacing beyond tolerance.
    #[error(
        "points are not uniformly spaced: gap at index {index} is {actual}, expected {expected}"
    )]
    NonUniformGrid {
        index: usize,
        expected: f64,
        actual: f64,
    },

    /// Requested output start does not sit on the natural-grid lattice.
    #[error(
        "requested start {requested} is not an integer multiple of the natural spacing {spacing}"
    )]
    OffGridStart { requested: f64, spacing: f64 },

    /// The fast transform path needs at least two samples.
    #[error("the fast transform path requires at least 2 samples")]
    GridTooShort,

    /// Round trips require the input origin on an integer multiple of the spacing.
    #[error("grid origin {start} is not an integer multiple of the spacing {spacing}")]
    MisalignedOrigin { start: f64, spacing: f64 },

    /// A direct-summation benchmark size exceeded the configured cap.
    #[error("size {n} exceeds the direct-summation cap of {cap}")]
    SizeTooLarge { n: usize, cap: usize },

    /// A benchmark size is missing one of the two methods needed for a ratio.
    #[error("no {missing} timing recorded for size {n}")]
    MissingPair { n: usize, missing: &'static str },

    /// Malformed CSV content, with the 1-based line number.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// Underlying file I/O failure.
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
