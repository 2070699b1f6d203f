//! Simple graphs, planarity, plane embeddings and layer decompositions.

mod embedding;
mod graph;
mod outerplanarity;
mod planarity;

pub use embedding::{layer_decomposition, trace_faces, LayerDecomposition, PlaneEmbedding};
pub use graph::{bridges_and_cut_vertices, Edge, SimpleGraph};
pub use outerplanarity::{
    is_r_outerplanar, is_r_outerplanar_with, outerplanarity_number, outerplanarity_number_with, Decision,
    Outerplanarity, SearchOptions,
};
pub use planarity::{is_planar, planar_embedding};

pub(crate) use embedding::Rotation;
pub(crate) use graph::{edge, IndexGraph};
pub(crate) use outerplanarity::decide_index;
pub(crate) use planarity::{embedding_with_best_outer_faces, is_planar_index, planar_rotation};
