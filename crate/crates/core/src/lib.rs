pub mod cli;
pub mod error;
pub mod family;
pub mod gfp;
pub mod intpoly;
pub mod irred;
pub mod verify;

pub use error::{Error, Result};
pub use gfp::{DegreeProfile, GFpPoly};
pub use intpoly::IntPoly;
