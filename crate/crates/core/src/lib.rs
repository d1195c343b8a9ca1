//! Saturability of homogeneous ideals, apolarity and limits of point configurations.

pub mod apolarity;
pub mod decide;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod series;
pub mod limits;
pub mod linalg;
pub mod obstruction;
pub mod oracle;
pub mod parse;
pub mod problem;
pub mod rank3;
pub mod replicate;
pub mod ring;
pub mod scalar;

pub use ring::{Polynomial, Ring, RingRef};
pub use scalar::{Field, Scalar};
