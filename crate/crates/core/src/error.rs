use std::fmt;

/// Errors reported by graph construction, the exact toughness oracle, and the
/// spectral routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A vertex index was at or beyond the graph order.
    VertexOutOfRange { vertex: usize, order: usize },
    /// A self-loop or other malformed edge was supplied.
    InvalidEdge { u: usize, v: usize, reason: &'static str },
    /// A family description (hub size, part sizes) that does not describe a graph.
    InvalidSpec(String),
    /// A scalar parameter outside its admissible range.
    InvalidParameter(String),
    /// An operation that would leave no vertices behind.
    EmptyResult(&'static str),
    /// The operation requires a connected graph.
    Disconnected,
    /// The exact oracle refuses graphs beyond its configured order cap.
    CapacityExceeded { order: usize, cap: usize },
    /// The eigensolver ran out of iterations before meeting its tolerances.
    NonConvergence { iterations: usize, residual: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            Error::InvalidEdge { u, v, reason } => {
                write!(f, "invalid edge ({u}, {v}): {reason}")
            }
            Error::InvalidSpec(msg) => write!(f, "invalid family description: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::EmptyResult(what) => write!(f, "operation leaves an empty graph: {what}"),
            Error::Disconnected => write!(f, "graph is disconnected"),
            Error::CapacityExceeded { order, cap } => {
                write!(f, "order {order} exceeds the exact-oracle cap {cap}")
            }
            Error::NonConvergence { iterations, residual } => {
                write!(
                    f,
                    "eigensolver did not converge after {iterations} iterations \
                     (last residual {residual:e})"
                )
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
