//! Error type shared by the whole crate.

use std::fmt;

#[derive(Debug)]
pub enum Error {
    /// A side length was zero, negative, or not finite.
    NonPositiveSide,
    /// The sides violate the strict triangle inequality.
    TriangleInequalityViolated,
    /// The three vertices are collinear (or coincident).
    CollinearVertices,
    /// A coordinate or input number was NaN or infinite.
    NonFinite,
    /// Homogeneous coordinates were all zero.
    ZeroHomogeneous,
    /// The operation needs a finite point but got one at infinity.
    PointAtInfinity,
    /// The operation is undefined when a coordinate is zero (point on a sideline).
    ZeroCoordinate,
    /// The directed distances do not satisfy the constraint plane.
    ConstraintPlaneViolated,
    /// Isogonal conjugation is undefined at a vertex.
    VertexUndefined,
    /// The weight triple was all zero.
    InvalidWeights,
    /// Weight scaling by zero is not allowed.
    ZeroScale,
    /// The weights do not sum to zero but the operation requires it.
    SumNotZero,
    /// The tangency system is singular (J within tolerance of zero).
    SingularSystem,
    /// The weights admit no extremum, so no inequality bound exists.
    NoBound,
    /// The requested triangle center is not one of the known names.
    UnknownCenter(String),
    /// Writing figure output failed.
    IoFailure(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveSide => write!(f, "side lengths must be finite and positive"),
            Error::TriangleInequalityViolated => {
                write!(f, "sides violate the strict triangle inequality")
            }
            Error::CollinearVertices => write!(f, "vertices are collinear or coincident"),
            Error::NonFinite => write!(f, "input must be finite"),
            Error::ZeroHomogeneous => {
                write!(f, "homogeneous coordinates must not be all zero")
            }
            Error::PointAtInfinity => write!(f, "operation undefined for a point at infinity"),
            Error::ZeroCoordinate => {
                write!(f, "operation undefined for a point on a sideline (zero coordinate)")
            }
            Error::ConstraintPlaneViolated => {
                write!(f, "directed distances do not satisfy ax + by + cz = 2S")
            }
            Error::VertexUndefined => {
                write!(f, "isogonal conjugate is undefined at a vertex")
            }
            Error::InvalidWeights => write!(f, "weights must not be all zero"),
            Error::ZeroScale => write!(f, "scale factor must be nonzero"),
            Error::SumNotZero => write!(f, "weights must sum to zero"),
            Error::SingularSystem => {
                write!(f, "tangency system is singular (J is zero within tolerance)")
            }
            Error::NoBound => {
                write!(f, "weights admit no extremum; no inequality bound exists")
            }
            Error::UnknownCenter(name) => write!(f, "unknown center name: {name}"),
            Error::IoFailure(e) => write!(f, "io failure: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::IoFailure(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::IoFailure(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
