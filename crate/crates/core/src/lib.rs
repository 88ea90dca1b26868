//! Exact-arithmetic engine for singularity categories of path algebras:
//! algebra construction, module and complex homological algebra, Gorenstein
//! projectives, stable and singularity-category Hom computations, change of
//! rings along algebra morphisms, and approximation towers.

pub mod algebra;
pub mod approximation;
pub mod certified;
pub mod change_of_rings;
pub mod complex;
pub mod error;
pub mod gorenstein;
pub mod linalg;
pub mod module;
pub mod parse;
pub mod report;
pub mod singularity;
#[cfg(test)]
pub mod testutil;

pub use certified::Certified;
pub use error::{Error, Result};
