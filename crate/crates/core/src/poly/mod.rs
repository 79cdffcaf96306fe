//! The symbolic kernel: monomials, `GF(2)` polynomials, monomial orders and
//! the division algorithm.

mod division;
mod monomial;
mod order;
mod poly2;
mod text;

pub use division::{divide, normal_form, s_polynomial, Division};
pub(crate) use division::s_polynomial_with_lms;
pub use monomial::{monomials_of_degree, Exponents, Monomial};
pub use order::{MonomialOrder, OrderKind};
pub use poly2::Poly2;
pub use text::VarNames;
