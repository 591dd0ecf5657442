use core::fmt;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// The smaller generator must be at least 2.
    AlphaTooSmall { alpha: u64 },
    /// The generators must satisfy `alpha < beta`.
    NotIncreasing { alpha: u64, beta: u64 },
    /// The generators must be coprime.
    NotCoprime { alpha: u64, beta: u64, gcd: u64 },
    /// `alpha * beta` must fit in a `u64`; it bounds every value handled.
    ProductOverflow { alpha: u64, beta: u64 },
    /// A semimodule needs at least one generator.
    EmptyGenerators,
    /// The value is not a gap of the semigroup, so it has no strict
    /// lattice-point coding.
    NotAGap { value: u64 },
    /// Lattice coordinates outside `[0, beta] x [0, alpha]`.
    PointOutOfRange { a: u64, b: u64 },
    /// The Apéry modulus must be a nonzero element of the semigroup.
    InvalidAperyModulus { modulus: u64 },
    /// The pairwise-intersection definition of the syzygy module is an
    /// empty union when the semimodule has a single generator.
    PrincipalSemimodule,
    /// The input set is not lean: some pairwise difference lies in the
    /// semigroup.
    NotLean { x: u64, y: u64 },
    /// A lean set must contain 0 (normalized representative).
    MissingZero,
    /// A step sequence that is not a staircase from `(0, alpha)` to
    /// `(beta, 0)` weakly below the diagonal.
    MalformedPath(PathDefect),
    /// The two closed forms for the conductor disagreed; this indicates a
    /// bug in the library, never expected on valid inputs.
    InternalInconsistency,
}

/// Why a step sequence was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathDefect {
    /// Wrong number of south steps (must be exactly `alpha`).
    SouthCount { got: u64, want: u64 },
    /// Wrong number of east steps (must be exactly `beta`).
    EastCount { got: u64, want: u64 },
    /// Some vertex lies strictly above the diagonal joining `(0, alpha)`
    /// and `(beta, 0)`.
    CrossesDiagonal { x: u64, y: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AlphaTooSmall { alpha } => {
                write!(f, "alpha = {alpha} is too small; the smaller generator must be >= 2")
            }
            Error::NotIncreasing { alpha, beta } => {
                write!(f, "generators must satisfy alpha < beta, got ({alpha}, {beta})")
            }
            Error::NotCoprime { alpha, beta, gcd } => {
                write!(f, "generators ({alpha}, {beta}) are not coprime: gcd = {gcd}")
            }
            Error::ProductOverflow { alpha, beta } => {
                write!(f, "alpha * beta overflows 64 bits for ({alpha}, {beta})")
            }
            Error::EmptyGenerators => write!(f, "a semimodule needs at least one generator"),
            Error::NotAGap { value } => {
                write!(f, "{value} is not a gap of the semigroup")
            }
            Error::PointOutOfRange { a, b } => {
                write!(f, "lattice point ({a}, {b}) is out of range")
            }
            Error::InvalidAperyModulus { modulus } => {
                write!(f, "Apéry modulus {modulus} is not a nonzero semigroup element")
            }
            Error::PrincipalSemimodule => {
                write!(f, "pairwise syzygy intersection degenerates for a principal semimodule")
            }
            Error::NotLean { x, y } => {
                write!(f, "set is not lean: |{x} - {y}| lies in the semigroup")
            }
            Error::MissingZero => write!(f, "a normalized lean set must contain 0"),
            Error::MalformedPath(defect) => write!(f, "malformed path: {defect}"),
            Error::InternalInconsistency => {
                write!(f, "conductor formulas disagree; this is a library bug")
            }
        }
    }
}

impl fmt::Display for PathDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathDefect::SouthCount { got, want } => {
                write!(f, "expected {want} south steps, got {got}")
            }
            PathDefect::EastCount { got, want } => {
                write!(f, "expected {want} east steps, got {got}")
            }
            PathDefect::CrossesDiagonal { x, y } => {
                write!(f, "vertex ({x}, {y}) lies above the diagonal")
            }
        }
    }
}

impl core::error::Error for Error {}
