//! Decide and construct r-outerplanar supports for hypergraphs.
//!
//! A *support* of a hypergraph is a graph on the same vertices in which every
//! hyperedge induces a connected subgraph. Planar supports are exactly the
//! hypergraphs that admit subdivision drawings (Euler-like diagrams), and the
//! number of layers of a plane embedding bounds how deeply nested the drawing
//! becomes.
//!
//! The crate is organised as follows:
//!
//! * [`hypercore`]: the hypergraph model, twin classes, covering, removal.
//! * [`planegeom`]: simple graphs, planarity, rotation systems, face tracing,
//!   layer decompositions and outerplanarity numbers.
//! * [`supports`]: support checks, representative supports and exhaustive
//!   support search.
//! * [`kernel`]: the twin-class reduction rule and its threshold.
//! * [`glueing`]: boundaried graphs, middle sets, bipartition signatures and
//!   gluing of nested separators.
//! * [`instances`]: generators for the twin counterexamples and random inputs.
//! * [`cli`], [`io`], [`dot`]: the command-line front end and file formats.

pub mod cli;
pub mod dot;
pub mod error;
pub mod glueing;
pub mod hypercore;
pub mod instances;
pub mod io;
pub mod kernel;
pub mod planegeom;
pub mod supports;

mod budget;

pub use budget::{Budget, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use hypercore::{BuildReport, Hypergraph, TwinPartition, Vertex};
pub use planegeom::{Decision, Edge, LayerDecomposition, Outerplanarity, PlaneEmbedding, SimpleGraph};
pub use supports::{LayerBound, SearchOutcome, SupportCertificate};
