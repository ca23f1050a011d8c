//! Shortest-path measures (distance, diameter, efficiency), betweenness and
//! the clustering coefficient.

mod betweenness;
mod clustering;
mod distance;

pub use betweenness::{
    betweenness, betweenness_with, check_betweenness_relations, Arithmetic, BetweennessResult, EndpointMode,
    ExactBetweenness, RelationReport, EXACT_BETWEENNESS_MAX_ORDER, FLOAT_TOLERANCE, RELATION_TOLERANCE,
};
pub use clustering::{clustering, neighbor_edges, ClusteringResult};
pub use distance::{all_pairs_distances, DistanceSummary};
