use alloc::string::{String, ToString};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has no edges")]
    Edgeless,

    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("covering system has no classes")]
    EmptySystem,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A size cap or budget would be exceeded. `required` is the size the
    /// operation would need, in decimal, when it could be computed.
    #[error("{what}: required {required} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        required: String,
        cap: String,
    },

    /// A proven postcondition failed to hold.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, required: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded {
            what,
            required: required.to_string(),
            cap: cap.to_string(),
        }
    }

    /// True for cap/budget errors, which callers usually report differently
    /// from malformed input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
