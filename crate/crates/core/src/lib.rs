//! Enumeration of all minimal edge dominating sets of a simple graph.
//!
//! The graph is split into levels by a greedy maximal matching. Minimal
//! transversals of each level are generated from those of the previous one
//! by a reverse search over the Berge parent, so the traversal keeps only one
//! root-to-leaf path in memory.
//!
//! ```
//! use mineds::{enumerate_all, Graph, Instance};
//!
//! let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
//! let inst = Instance::new(path);
//! let sets: Vec<Vec<usize>> = enumerate_all(&inst)
//!     .map(|ev| ev.unwrap().solution.to_vec())
//!     .collect();
//! assert_eq!(sets.len(), 2);
//! ```

pub mod cli;
pub mod decomposition;
pub mod enumerator;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod skip_children;
pub mod slide;
pub mod subset;
pub mod transversal;

pub use decomposition::{MatchedEdge, MatchingDecomposition};
pub use enumerator::{enumerate_all, EnumEvent, EnumOptions, EnumStats, Enumerator};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, VertexId};
pub use subset::EdgeSubset;
pub use transversal::{skip_parent, Instance, LevelContext};
