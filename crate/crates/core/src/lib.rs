pub mod claim_audit;
pub mod config;
pub mod error;
pub mod quadrature;
pub mod special_functions;
pub mod strip_map;
pub mod zero_analysis;

pub use error::{Error, Result};
