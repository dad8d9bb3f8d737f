//! Exact sparse linear algebra over [`Cyclotomic`](crate::scalar::Cyclotomic) on labeled spaces.

mod closure;
mod echelon;
mod maps;
mod space;
mod vect;

pub use closure::{quotient_space, span_closure, ClosureMode, Quotient};
pub use echelon::{echelonize, kernel, linear_map_inverse, rank, Coordinates, QuotientCoordinates, Subspace};
pub use maps::{apply_to_tensor, linearize, scalar_line, SparseBilinear, SparseColinear, SparseLinear};
pub use space::{BasisLabel, Space, SpaceId, SpaceRef};
pub use vect::{outer, split, Accumulator, Vect};
