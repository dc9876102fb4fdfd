//! Exact algebra for the Per₄(0)* deformation space.

pub mod error;
pub mod family;
pub mod field;
pub mod poly;
pub mod strata;
pub mod surface;

pub use error::{Error, Result};
pub use field::{Ext, Field, FieldElem, Rational};
pub use poly::{BiPoly, RatExpr, UniPoly, Var};
