//! Triangular partitions: integer partitions whose Young diagram can be cut
//! off from the rest of the quadrant by a straight line.

pub mod brute;
pub mod enumerate;
pub mod error;
pub mod fraction;
pub mod hull;
pub mod lattice;
pub mod partition;
pub mod words;

pub use enumerate::CountSeries;
pub use error::{Error, ParseError, Result};
pub use fraction::Fraction;
pub use hull::{is_triangular, is_triangular_reference, SlopeInterval, TriangularReport};
pub use partition::{Cell, Partition};
pub use words::BinaryWord;
