//! Exact verification of quasi-Turaev group coalgebras.

pub mod center;
pub mod error;
pub mod fingroup;
pub mod gqc;
pub mod instances;
pub mod io;
pub mod lemma;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod ydmod;

pub use error::{Error, Result};

/// The coalgebra over the cyclotomic scalars used by instance files.
pub type Coalgebra = gqc::QuasiTuraevCoalgebra<scalar::Cyclo>;
pub type Module = rep::RepModule<scalar::Cyclo>;
pub type YdModule = ydmod::YDModule<scalar::Cyclo>;
pub type Center = center::CenterObject<scalar::Cyclo>;
pub type Matrix = tensor::LinMap<scalar::Cyclo>;
