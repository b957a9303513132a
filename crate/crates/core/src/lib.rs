//! Cylindrical 5-puzzle as a Cayley graph over `S5 × Z/2 × Z/3`.
//!
//! The crate builds the state graph, checks it against the Cayley graph of
//! the generators `L̂, R̂, V̂`, and finds Hamiltonian cycles by searching a
//! small quotient graph, lifting the result to a cycle cover and splicing
//! the cover into a Hamiltonian path.

pub mod certify;
pub mod error;
pub mod graph;
pub mod group;
pub mod hamilton;
pub mod puzzle;
pub mod quotient;

pub use certify::{certify, certify_all, CertReport, CertifyOptions, Claim};
pub use error::{Error, Result};
pub use graph::{build_cayley, build_state_graph, cayley_g, cayley_s5, LabeledDigraph, WalkTrace};
pub use group::{word_product, Group, GroupElem, MoveLetter, MoveWord, Perm, WordValue};
pub use hamilton::{
    build_theorem1_word, build_theorem2_word, canonicalize, find_ham_cycles, lift_cycle, splice_to_path, CycleCover,
    HamCycleWord, SearchOptions,
};
pub use puzzle::{build_cylinder, BoardGraph, CylCoord, Position};
pub use quotient::{build_quotient, make_subgroup, project, QuotientGraph, Subgroup};
