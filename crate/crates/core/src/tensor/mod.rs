//! Exact dense linear algebra and multi-leg tensors.

mod linmap;
mod multivec;

pub use linmap::{LinMap, SparseCols};
pub use multivec::MultiVec;

use crate::error::{Error, Result};
use crate::fingroup::Elem;
use crate::scalar::Field;

/// An element of `H_{a_1} (x) ... (x) H_{a_m}`, tagged with its grading.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement<F> {
    pub grading: Vec<Elem>,
    pub value: MultiVec<F>,
}

impl<F: Field> TensorElement<F> {
    pub fn new(grading: Vec<Elem>, value: MultiVec<F>) -> Result<Self> {
        if grading.len() != value.legs() {
            return Err(Error::GradingMismatch(format!(
                "{} grading labels for a tensor with {} legs",
                grading.len(),
                value.legs()
            )));
        }
        Ok(TensorElement { grading, value })
    }

    pub fn shape(&self) -> &[usize] {
        self.value.shape()
    }
}
