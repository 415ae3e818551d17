//! Exact algebra substrate: coefficient fields, monomials, term orders,
//! and multivariate polynomials.

pub mod field;
pub mod monomial;
pub mod order;
pub mod poly;

pub use field::{Coeff, CoefficientField};
pub use monomial::Monomial;
pub use order::{BaseOrder, TermOrder};
pub use poly::{PolyRing, Polynomial};
