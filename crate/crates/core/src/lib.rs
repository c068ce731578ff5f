//! Isotropy testing for Gaussian random fields on the sphere.

pub mod error;
pub mod experiment;
pub mod grid;
pub mod harmonics;
pub mod io;
mod par;
pub mod pipeline;
pub mod randmat;
pub mod simulate;
pub mod transform;

pub use error::{Error, Result};
