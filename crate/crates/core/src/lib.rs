//! Twisted cubes: graph families, face-map categories and exact-rational
//! directed embeddings, with brute-force checkers for their properties.

pub mod categories;
pub mod error;
pub mod export;
pub mod graph;
pub mod pospace;
pub mod shapes;
pub mod verify;
pub mod words;

pub use error::{Budget, Error, Result};
pub use graph::{Graph, GraphMorphism, GraphPath, Label};
pub use words::{Arrow, BinaryWord, TernaryWord, Trit};
