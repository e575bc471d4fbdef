use std::fmt;

/// Errors raised across the library. All arithmetic is exact, so every
/// failure is a precondition violation rather than a numerical one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Denominator of zero.
    InvalidDenominator,
    /// Sequence or table order outside the supported range.
    InvalidOrder(u64),
    /// Rank outside 1..=f_max.
    RankOutOfRange { rank: u64, f_max: u64 },
    /// Fraction (or reduced vector component) not representable in the table.
    OutOfTable { num: u64, den: u64, order: u64 },
    /// Numerator exceeds denominator where a proper fraction is required.
    ImproperFraction { num: u64, den: u64 },
    /// The zero displacement has no direction.
    ZeroVector,
    /// Bitmap contains no foreground pixel.
    NoObject,
    /// Contour or polygon below the minimum point count.
    DegenerateObject,
    /// Shape descriptors are defined on closed polygons only.
    OpenPolygonUnsupported,
    /// Descriptors built over different direction tables cannot be compared.
    DescriptorMismatch { left: u64, right: u64 },
    /// Catch-all for invalid call arguments.
    InvalidArgument(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDenominator => write!(f, "denominator must be nonzero"),
            Error::InvalidOrder(n) => write!(f, "invalid order {n}"),
            Error::RankOutOfRange { rank, f_max } => {
                write!(f, "rank {rank} outside 1..={f_max}")
            }
            Error::OutOfTable { num, den, order } => {
                write!(f, "{num}/{den} not representable in a table of order {order}")
            }
            Error::ImproperFraction { num, den } => {
                write!(f, "{num}/{den} is not a proper fraction")
            }
            Error::ZeroVector => write!(f, "zero vector has no direction"),
            Error::NoObject => write!(f, "no foreground object in bitmap"),
            Error::DegenerateObject => write!(f, "object too small to form a contour"),
            Error::OpenPolygonUnsupported => {
                write!(f, "shape descriptors require a closed polygon")
            }
            Error::DescriptorMismatch { left, right } => {
                write!(f, "descriptors disagree on direction count: {left} vs {right}")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
