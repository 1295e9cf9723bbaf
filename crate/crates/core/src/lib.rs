//! Exact greedy beta expansions of 1 for regular Pisot numbers in `(1, 2)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`], [`cyclotomic`], [`interval`], [`ratfunc`]: integer polynomial
//!   arithmetic, cyclotomic factor detection and interval evaluation.
//! * [`realroot`]: real algebraic numbers with exact sign determination and a
//!   certified Pisot test.
//! * [`family`]: defining polynomials of the regular Pisot families.
//! * [`word`] and [`expander`]: eventually periodic digit words and the exact
//!   greedy expansion engine.
//! * [`companion`] and [`catalog`]: companion polynomials, co-factors, and the
//!   closed-form expansion catalogue with its FRG classification.
//! * [`verify`] and [`render`]: verification sweeps and raster output.

pub mod catalog;
pub mod companion;
pub mod cyclotomic;
pub mod error;
pub mod expander;
pub mod family;
pub mod interval;
pub mod poly;
pub mod ratfunc;
pub mod realroot;
pub mod render;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use ratfunc::RationalFunction;
pub use realroot::RealAlgebraic;
pub use word::ExpansionWord;
