//! Exact arithmetic: rationals, cyclotomic numbers, Laurent polynomials with
//! fractional exponents, rational functions, matrices and brackets.

pub mod bracket;
pub mod cyclotomic;
pub mod laurent;
pub mod matrix;
pub mod ratfunc;
pub mod ring;
pub mod upoly;
pub mod xpoly;

pub use bracket::{bracket, bracket_limit_at_one, BracketProduct, BracketVar};
pub use cyclotomic::{cyclotomic_embed, Cyclotomic, RootOfUnity};
pub use laurent::LaurentPoly;
pub use matrix::{DetExact, RingMatrix};
pub use ratfunc::RatFunc;
pub use ring::{rat, ExactDiv, Field, Ring};
pub use upoly::{UFrac, UPoly};
pub use xpoly::{poly_divide_x, XPolynomial};
