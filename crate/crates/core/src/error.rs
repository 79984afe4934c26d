use alloc::string::String;
use core::fmt;

/// Errors reported by the combinatorics engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The type label does not name a catalog system.
    UnknownType(String),
    /// An explicit Cartan matrix violates the structural rules.
    MalformedCartan(String),
    /// Root generation did not close within the cap, or a Coxeter bond order
    /// exceeds 6; the generated group cannot be finite crystallographic.
    NonFiniteType,
    /// Two elements from different Coxeter systems were combined.
    SystemMismatch,
    /// Group enumeration would exceed the configured element cap.
    CapExceeded { cap: usize },
    /// An operation was called outside its stated precondition.
    PreconditionViolated(&'static str),
    /// An exhaustive sweep found a counterexample to the simply laced
    /// involution equivalence, or a produced witness failed revalidation.
    /// This must never fire; it is the engine's strongest self-check.
    TheoremViolation { system: String, detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownType(label) => write!(f, "unknown type label: {label}"),
            Error::MalformedCartan(reason) => write!(f, "malformed Cartan matrix: {reason}"),
            Error::NonFiniteType => write!(f, "Cartan matrix is not of finite type"),
            Error::SystemMismatch => write!(f, "elements belong to different Coxeter systems"),
            Error::CapExceeded { cap } => {
                write!(f, "group enumeration exceeds the element cap of {cap}")
            }
            Error::PreconditionViolated(what) => write!(f, "precondition violated: {what}"),
            Error::TheoremViolation { system, detail } => {
                write!(f, "theorem violation in {system}: {detail}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
