//! Cyclic codes over R = Z_p[u,v]/<u^2, v^2, uv - vu>.

pub mod code;
pub mod distance;
pub mod error;
pub mod expr;
pub mod gray;
pub mod linalg;
pub mod qpoly;
pub mod report;
pub mod ring;
pub mod tables;
pub mod zp;

pub use error::{Error, Result};
pub use qpoly::PolyR;
pub use ring::RElem;
pub use zp::{Degree, PolyZp, Prime};
