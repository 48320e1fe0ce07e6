//! Exact arithmetic: integer polynomials, real algebraic numbers, and
//! finite towers of real algebraic extensions of the rationals.

mod algebraic;
mod charpoly;
mod interval;
mod poly;
mod tower;
mod value;

pub use algebraic::{isolate_real_roots, AlgebraicReal};
pub use charpoly::integer_charpoly;
pub use interval::Interval;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::IntPolynomial;
pub use tower::{Elem, Tower};
pub use value::{parse_polynomial, parse_rational, ExactValue};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics when `d` is zero.
pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
