//! Polynomial algebra: dense univariate, sparse bivariate over ℚ, and
//! rational functions in two variables.

mod bi;
mod gcd;
mod ratexpr;
mod resultant;
mod roots;
mod sqrt;
mod uni;

pub use bi::{BiPoly, Var};
pub use gcd::{content_in_y, gcd, primitive_part};
pub use ratexpr::RatExpr;
pub use resultant::{bareiss_determinant, resultant_bi};
pub use roots::{exact_roots, low_degree_factors, primitive_integer, rational_roots, Root};
pub use sqrt::sqrt_poly;
pub use uni::UniPoly;
