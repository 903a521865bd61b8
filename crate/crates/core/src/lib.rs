pub mod algebra;
pub mod arborescence;
pub mod counting;
pub mod error;
pub mod poset;
pub mod report;
pub mod rowmotion;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
