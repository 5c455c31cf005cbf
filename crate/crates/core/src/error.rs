use core::fmt;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph must have at least one vertex and at most [`crate::MAX_ORDER`].
    InvalidOrder {
        order: usize,
        max: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        order: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    /// The operation only runs up to a fixed order (clique search,
    /// canonical labelling, enumeration).
    OrderTooLarge {
        order: usize,
        limit: usize,
    },
    /// A construction or formula was asked for parameters outside the domain
    /// on which it is defined.
    Domain(&'static str),
    /// A division that must be exact was not.
    NotDivisible {
        numerator: i128,
        denominator: i128,
    },
    Overflow,
    InvalidPermutation,
    InvalidShard {
        index: usize,
        count: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder { order, max } => {
                write!(f, "invalid order {order}: must lie in 1..={max}")
            }
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::OrderTooLarge { order, limit } => {
                write!(f, "order {order} exceeds the supported limit {limit}")
            }
            Error::Domain(msg) => write!(f, "parameter out of domain: {msg}"),
            Error::NotDivisible {
                numerator,
                denominator,
            } => write!(f, "{numerator} is not divisible by {denominator}"),
            Error::Overflow => f.write_str("integer overflow"),
            Error::InvalidPermutation => f.write_str("not a permutation of the vertex set"),
            Error::InvalidShard { index, count } => {
                write!(f, "shard {index} out of range for {count} shards")
            }
        }
    }
}

impl core::error::Error for Error {}
