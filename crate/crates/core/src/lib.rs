pub mod autgrp;
pub mod chevalley;
pub mod cli;
pub mod cyclofield;
pub mod decomp;
pub mod error;
pub mod linalg;
pub mod localcheck;
pub mod poly;
pub mod rootsys;

pub use chevalley::{LieAlg, LieVec};
pub use cyclofield::{CycloField, Scalar};
pub use error::{Error, Result};
