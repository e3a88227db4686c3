use thiserror::Error;

/// Errors raised by the combinatorial kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge <{source_node}, {target_node}> is not preserved: <{image_source}, {image_target}> is not an edge of the target")]
    EdgeNotPreserved {
        source_node: String,
        target_node: String,
        image_source: String,
        image_target: String,
    },
    #[error("node index {index} is out of range for a graph with {len} nodes")]
    NodeOutOfRange { index: usize, len: usize },
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("node map has length {got}, expected {expected}")]
    NodeMapLength { got: usize, expected: usize },
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("cannot compose: codomain {left} does not match domain {right}")]
    DomainMismatch { left: String, right: String },
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("index {index} out of range (must be below {bound})")]
    IndexOutOfRange { index: u128, bound: u128 },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("not an edge: <{0}, {1}>")]
    NotAnEdge(String, String),
    #[error("graph has a cycle through node `{0}`")]
    Cyclic(String),
    #[error("point {point} lies outside the domain box")]
    OutsideBox { point: String },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("invalid shape family: {0}")]
    InvalidFamily(String),
    #[error("unsupported conversion from {from} to {to}")]
    UnsupportedConversion { from: String, to: String },
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Size limits for the enumeration kernels. Exceeding one is reported as
/// [`Error::BudgetExceeded`], never by silently truncating output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Upper bound on raw candidate node maps (`|target|^|source|`) for hom
    /// enumeration, and on search steps for isomorphism and path search.
    pub max_candidates: u128,
    /// Largest dimension for which shape graphs are generated.
    pub max_shape_dim: usize,
    /// Longest binary/ternary word handled by the word algorithms.
    pub max_word_len: usize,
    /// Largest node count accepted by random graph generation.
    pub max_random_nodes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_candidates: 100_000_000,
            max_shape_dim: 14,
            max_word_len: 20,
            max_random_nodes: 4096,
        }
    }
}

impl Budget {
    pub(crate) fn check(&self, what: &'static str, needed: u128, limit: u128) -> Result<()> {
        if needed > limit {
            Err(Error::BudgetExceeded {
                what,
                needed,
                limit,
            })
        } else {
            Ok(())
        }
    }
}
