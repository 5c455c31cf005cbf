//! Text formats: graph6/digraph6 lines and JSON edge lists.

pub mod graph6;
pub mod json;

pub use graph6::{
    encode, encode_digraph6, encode_graph6, parse, parse_digraph6, parse_graph6, read_stream,
    write_stream,
};
pub use json::{read_json_edges, write_json_edges, EdgeList, JsonGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodecError {
    #[error("empty encoding")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside 63..=126")]
    ByteOutOfRange { position: usize, byte: u8 },
    #[error("order field is truncated")]
    TruncatedOrder,
    #[error("expected {expected} adjacency bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("trailing data from position {position}")]
    TrailingData { position: usize },
    #[error("padding bits after the last adjacency bit are not zero")]
    Padding,
    #[error("digraph6 must start with '&'")]
    MissingAmpersand,
    #[error("not {expected}")]
    WrongKind { expected: &'static str },
    #[error("sparse6 is not supported")]
    Sparse6,
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<CodecError>,
    },
    #[error("unsupported schema version {found} (expected {expected})")]
    SchemaVersion { found: u32, expected: u32 },
    #[error("edge {u}-{v} listed twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("read failed: {0}")]
    Io(String),
    #[error(transparent)]
    Graph(#[from] totdist_core::Error),
}
