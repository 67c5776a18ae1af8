//! Combinatorial maps on the torus: closure bijections between balanced
//! precubic bipartite unicellular maps and essentially irreducible
//! 6-quadrangular maps, the hexagon decomposition of essentially
//! 3-connected maps, exact generating-function counting, and an
//! independent exhaustive enumeration oracle.

pub mod error;
pub mod fixtures;
pub mod classes;
pub mod homology;
pub mod iso;
pub mod region;
pub mod series;
pub mod map;
pub mod oracle;
pub mod tmap;
pub mod unicellular;
pub mod walks;

pub use error::{MapError, Result};
pub use map::{Color, CombMap, Dart, EdgeId, FaceId, Role, VertexId};
