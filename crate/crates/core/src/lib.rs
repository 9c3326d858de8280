// index loops mirror the tensor notation
#![allow(clippy::needless_range_loop)]

pub mod bialgebra;
pub mod cli;
pub mod chart;
pub mod error;
pub mod json;
pub mod lie;
pub mod matrix;
pub mod moduli;
pub mod poly;
pub mod preconnection;
pub mod rational;
pub mod report;
pub mod su2;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
