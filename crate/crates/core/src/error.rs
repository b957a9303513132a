use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation `{text}`: {reason}")]
    InvalidPerm { text: String, reason: String },

    #[error("malformed cycle notation at `{token}`: {reason}")]
    CycleSyntax { token: String, reason: String },

    #[error("invalid move letter `{0}` (expected one of L, R, V)")]
    InvalidLetter(char),

    #[error("invalid position `{text}`: {reason}")]
    InvalidPosition { text: String, reason: String },

    #[error("unsupported board {rows}x{cols}: only the 2x3 cylinder is modelled")]
    UnsupportedBoard { rows: usize, cols: usize },

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("no single-letter splice joins the cover cycles")]
    SpliceNotFound,

    #[error("splicing needs a cover with one or two cycles, got {0}")]
    UnsupportedCover(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
