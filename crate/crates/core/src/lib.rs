//! Exact computer algebra around the Tutte census series
//! `g(x) = sum_{n>=1} 2(4n+1)!/((n+1)!(3n+2)!) x^n`: power-series ratios and
//! their closed forms, guessing of recurrences, rational functions and
//! algebraic equations, the algebraic-equation to ODE to recurrence
//! pipeline, and Gosper/Zeilberger creative telescoping with certificates.

pub mod arith;
pub mod cli;
pub mod domain;
mod error;
pub mod guess;
pub mod holonomic;
pub mod series;
pub mod telescope;

pub use error::{Error, Result};
