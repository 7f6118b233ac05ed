//! Resolving shares and the resolving topological index of simple connected
//! graphs, computed in exact rational arithmetic.
//!
//! ```
//! use resolving_core::{families::FamilySpec, resolving::resolving_index, rational::ratio};
//!
//! let petersen = "petersen".parse::<FamilySpec>().unwrap().generate().unwrap();
//! let report = resolving_index(&petersen).unwrap();
//! assert_eq!(report.index, ratio(5, 3));
//! ```

pub mod closed_forms;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod metric_dim;
pub mod rational;
pub mod resolving;

pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{DistanceMatrix, DistancePartition, Graph, VertexId};
pub use rational::Rational;
pub use resolving::{IndexOptions, Pair, ShareReport};
