use std::fmt;

/// Errors shared across the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A reduction produced a nonzero constant: the ideal contains a unit of
    /// the local ring and the quotient would be the zero ring.
    UnitInIdeal,
    /// Some variable has no pure power among the leading terms, so the
    /// quotient is infinite-dimensional. Positive-dimensional rings are out of
    /// range here: reduce modulo a maximal regular sequence first and supply
    /// the dimension-zero quotient (e.g. k[X,Y,Z]/(XY,XZ,YZ) modulo X+Y+Z
    /// becomes k[x,y]/(x^2,xy,y^2)).
    NotArtinian { variable: String },
    /// The quotient is finite-dimensional but not local: the image of
    /// (x_1..x_n) is not nilpotent, so the ideal is not primary to the
    /// maximal ideal (e.g. (x^2 - x)).
    NotLocal,
    /// A configured cap was exceeded: either the k-dimension cap of an
    /// algebra or the entry-operation budget of a linear-algebra pass.
    SizeCap { detail: String },
    /// A module constructor received data presenting the zero module.
    ZeroModule,
    /// A bound check whose vanishing window does not vanish; the bound is
    /// reported but must not be asserted. Carries the full report.
    HypothesisFails { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnitInIdeal => {
                write!(f, "ideal contains a unit: the quotient is the zero ring")
            }
            Error::NotArtinian { variable } => write!(
                f,
                "quotient is not finite-dimensional: no pure power of `{variable}` among the \
                 leading terms; reduce modulo a maximal regular sequence and pass the \
                 dimension-zero quotient"
            ),
            Error::NotLocal => write!(
                f,
                "quotient is finite-dimensional but not local: the maximal ideal image is not \
                 nilpotent"
            ),
            Error::SizeCap { detail } => write!(f, "size cap exceeded: {detail}"),
            Error::ZeroModule => write!(f, "the data presents the zero module"),
            Error::HypothesisFails { detail } => {
                write!(f, "vanishing hypothesis fails: {detail}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
